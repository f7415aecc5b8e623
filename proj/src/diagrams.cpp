#include "oppo/diagrams.hpp"

#include <algorithm>
#include <sstream>

namespace oppo {

namespace {

using SK = StatementKind;
using RK = RelationKind;

bool involves_abs(StatementKind k) { return k == SK::U_abs || k == SK::Y_abs; }

bool exists_zero_strictly_below(const ClassCStructure& s, std::size_t x) {
  for (auto z : s.zero_indices()) {
    if (z != x && s.leq(z, x)) return true;
  }
  return false;
}

}  // namespace

std::string_view to_string(Shape s) {
  switch (s) {
    case Shape::Square: return "square";
    case Shape::Cube: return "cube";
    case Shape::Hexagon: return "hexagon";
  }
  return "?";
}

std::optional<Shape> shape_from_string(std::string_view tag) {
  if (tag == "square") return Shape::Square;
  if (tag == "cube") return Shape::Cube;
  if (tag == "hexagon") return Shape::Hexagon;
  return std::nullopt;
}

std::string_view to_string(RelationKind k) {
  switch (k) {
    case RK::Contrary: return "Contrary";
    case RK::Subcontrary: return "Subcontrary";
    case RK::Contradictory: return "Contradictory";
    case RK::SubImplication: return "SubImplication";
    case RK::SuperImplication: return "SuperImplication";
  }
  return "?";
}

std::optional<RelationKind> relation_from_string(std::string_view tag) {
  if (tag == "contrary" || tag == "Contrary") return RK::Contrary;
  if (tag == "subcontrary" || tag == "Subcontrary") return RK::Subcontrary;
  if (tag == "contradictory" || tag == "Contradictory") return RK::Contradictory;
  if (tag == "subimplication" || tag == "SubImplication") return RK::SubImplication;
  if (tag == "superimplication" || tag == "SuperImplication") return RK::SuperImplication;
  return std::nullopt;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Violated: return "violated";
    case Verdict::Vacuous: return "vacuous";
  }
  return "?";
}

bool relation_holds_at(bool v1, bool v2, RelationKind k) {
  switch (k) {
    case RK::Contrary: return !(v1 && v2);
    case RK::Subcontrary: return v1 || v2;
    case RK::Contradictory: return v1 != v2;
    case RK::SubImplication: return !v1 || v2;
    case RK::SuperImplication: return v1 || !v2;
  }
  return false;
}

bool Hypothesis::admits(const ClassCStructure& s, std::size_t p, std::size_t q) const {
  if (distinct && p == q) return false;
  if (nondual && p == s.neg(q)) return false;
  if (import_forward && !exists_zero_strictly_below(s, p)) return false;
  if (import_backward && !exists_zero_strictly_below(s, s.neg(p))) return false;
  return true;
}

std::string Hypothesis::to_string() const {
  std::string out;
  auto append = [&](const char* tag) {
    if (!out.empty()) out += "+";
    out += tag;
  };
  if (import_forward) append("fwd");
  if (import_backward) append("bwd");
  if (distinct) append("distinct");
  if (nondual) append("nondual");
  return out.empty() ? "none" : out;
}

std::string Claim::to_string() const {
  std::string out{oppo::to_string(kind)};
  out += "(";
  out += oppo::to_string(s1);
  out += kind == RK::SubImplication ? "->" : (kind == RK::SuperImplication ? "<-" : ",");
  out += oppo::to_string(s2);
  out += ")";
  return out;
}

PairClassification classify_pair(const ClassCStructure& s, StatementKind s1,
                                 StatementKind s2, const Hypothesis& h) {
  const bool need_abs = involves_abs(s1) || involves_abs(s2);
  const std::size_t n = s.size();

  bool survives[kRelationCount];
  std::fill(std::begin(survives), std::end(survives), true);
  std::size_t admissible = 0;

  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (!h.admits(s, p, q)) continue;
      if (need_abs && !abs_max(s, q)) continue;
      ++admissible;
      StatementContext ctx{&s, p, q};
      const bool v1 = eval_statement(ctx, s1);
      const bool v2 = eval_statement(ctx, s2);
      for (std::size_t k = 0; k < kRelationCount; ++k) {
        if (survives[k] && !relation_holds_at(v1, v2, static_cast<RelationKind>(k))) {
          survives[k] = false;
        }
      }
    }
  }

  PairClassification out;
  out.admissible_points = admissible;
  for (std::size_t k = 0; k < kRelationCount; ++k) {
    if (survives[k]) out.relations.push_back(static_cast<RelationKind>(k));
  }
  return out;
}

std::vector<Claim> expected_claims(Shape shape, const Hypothesis& h) {
  std::vector<Claim> out;
  auto add = [&](RK k, SK x, SK y, bool sensitive = false) {
    out.push_back({k, x, y, h, sensitive});
  };
  switch (shape) {
    case Shape::Square:
      add(RK::SubImplication, SK::A, SK::I);
      add(RK::SubImplication, SK::E, SK::O);
      add(RK::Contrary, SK::A, SK::E);
      add(RK::Subcontrary, SK::I, SK::O);
      add(RK::Contradictory, SK::A, SK::O);
      add(RK::Contradictory, SK::E, SK::I);
      break;
    case Shape::Cube:
      add(RK::SubImplication, SK::A, SK::e);
      add(RK::SubImplication, SK::E, SK::a);
      add(RK::SubImplication, SK::o, SK::I);
      add(RK::SubImplication, SK::i, SK::O);
      // stated for the rear face under the forward hypothesis only; the
      // sweep shows that is not sufficient (see counterexample tooling)
      add(RK::Contrary, SK::a, SK::e, true);
      add(RK::Subcontrary, SK::i, SK::o, true);
      add(RK::Contrary, SK::A, SK::E);
      add(RK::Subcontrary, SK::I, SK::O);
      add(RK::Subcontrary, SK::a, SK::I);
      add(RK::Subcontrary, SK::e, SK::O);
      add(RK::Contrary, SK::A, SK::i);
      add(RK::Contrary, SK::E, SK::o);
      add(RK::Contradictory, SK::a, SK::o);
      add(RK::Contradictory, SK::e, SK::i);
      add(RK::Contradictory, SK::A, SK::O);
      add(RK::Contradictory, SK::E, SK::I);
      if (h.distinct && h.nondual) {
        add(RK::Contrary, SK::A, SK::a);
        add(RK::Contrary, SK::E, SK::e);
        add(RK::Subcontrary, SK::I, SK::i);
        add(RK::Subcontrary, SK::O, SK::o);
        add(RK::SubImplication, SK::A, SK::o);
        add(RK::SubImplication, SK::E, SK::i);
        add(RK::SubImplication, SK::a, SK::O);
        add(RK::SubImplication, SK::e, SK::I);
      }
      break;
    case Shape::Hexagon:
      add(RK::SubImplication, SK::A, SK::I);
      add(RK::SubImplication, SK::E, SK::O);
      add(RK::Contrary, SK::A, SK::E);
      add(RK::Subcontrary, SK::I, SK::O);
      add(RK::Contradictory, SK::A, SK::O);
      add(RK::Contradictory, SK::E, SK::I);
      add(RK::SubImplication, SK::A, SK::U_compound);
      add(RK::SubImplication, SK::E, SK::U_compound);
      add(RK::SubImplication, SK::Y_compound, SK::I);
      add(RK::SubImplication, SK::Y_compound, SK::O);
      add(RK::Contrary, SK::A, SK::Y_compound);
      add(RK::Contrary, SK::E, SK::Y_compound);
      add(RK::Subcontrary, SK::I, SK::U_compound);
      add(RK::Subcontrary, SK::O, SK::U_compound);
      break;
  }
  return out;
}

VerificationReport verify_shape(const ClassCStructure& s, Shape shape,
                                const VerifyOptions& opts) {
  VerificationReport rep;
  rep.shape = shape;
  rep.structure_name = s.name();
  rep.hypothesis = opts.hypothesis;
  rep.abs_reduction = opts.abs_reduction;

  auto claims = expected_claims(shape, opts.hypothesis);
  if (opts.abs_reduction) {
    for (auto& c : claims) {
      if (c.s1 == SK::U_compound) c.s1 = SK::U_abs;
      if (c.s1 == SK::Y_compound) c.s1 = SK::Y_abs;
      if (c.s2 == SK::U_compound) c.s2 = SK::U_abs;
      if (c.s2 == SK::Y_compound) c.s2 = SK::Y_abs;
    }
  }

  const std::size_t n = s.size();
  auto in_domain = [&](std::size_t p, std::size_t q) {
    return !opts.at_point || (opts.at_point->first == p && opts.at_point->second == q);
  };

  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (in_domain(p, q) && opts.hypothesis.admits(s, p, q)) ++rep.admissible_point_count;
    }
  }

  for (const auto& c : claims) {
    ClaimResult res;
    res.claim = c;
    const bool need_abs = involves_abs(c.s1) || involves_abs(c.s2);
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        if (!in_domain(p, q)) continue;
        if (!c.given.admits(s, p, q)) continue;
        if (need_abs && !abs_max(s, q)) continue;
        ++res.admissible_points;
        StatementContext ctx{&s, p, q};
        const bool v1 = eval_statement(ctx, c.s1);
        const bool v2 = eval_statement(ctx, c.s2);
        if (!relation_holds_at(v1, v2, c.kind) && !res.witness) res.witness = {p, q};
      }
    }
    if (res.admissible_points == 0) {
      res.verdict = Verdict::Vacuous;
    } else {
      res.verdict = res.witness ? Verdict::Violated : Verdict::Holds;
    }
    rep.results.push_back(std::move(res));
  }
  return rep;
}

bool VerificationReport::all_hold() const {
  return std::all_of(results.begin(), results.end(),
                     [](const ClaimResult& r) { return r.verdict == Verdict::Holds; });
}

std::size_t VerificationReport::count(Verdict v) const {
  return static_cast<std::size_t>(std::count_if(
      results.begin(), results.end(),
      [v](const ClaimResult& r) { return r.verdict == v; }));
}

std::string VerificationReport::to_text(const ClassCStructure* s) const {
  std::ostringstream os;
  os << "VERIFY shape=" << oppo::to_string(shape) << " structure=" << structure_name
     << " hyp=" << hypothesis.to_string() << " abs=" << (abs_reduction ? "true" : "false")
     << " admissible=" << admissible_point_count << "\n";
  for (const auto& r : results) {
    os << "CLAIM " << oppo::to_string(shape) << " " << r.claim.to_string();
    if (r.claim.hypothesis_sensitive) os << " sensitive";
    os << " hyp=" << r.claim.given.to_string() << " verdict=" << oppo::to_string(r.verdict);
    if (r.witness) {
      os << " witness=(P=";
      if (s) {
        os << s->label(r.witness->first) << ",Q=" << s->label(r.witness->second);
      } else {
        os << r.witness->first << ",Q=" << r.witness->second;
      }
      os << ")";
    }
    os << "\n";
  }
  os << "RESULT holds=" << count(Verdict::Holds) << " violated=" << count(Verdict::Violated)
     << " vacuous=" << count(Verdict::Vacuous) << "\n";
  return os.str();
}

std::optional<std::pair<std::size_t, std::size_t>> counterexample_search(
    const ClassCStructure& s, const Claim& c, const Hypothesis& h) {
  const bool need_abs = involves_abs(c.s1) || involves_abs(c.s2);
  const std::size_t n = s.size();
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (!h.admits(s, p, q)) continue;
      if (need_abs && !abs_max(s, q)) continue;
      StatementContext ctx{&s, p, q};
      const bool v1 = eval_statement(ctx, c.s1);
      const bool v2 = eval_statement(ctx, c.s2);
      if (!relation_holds_at(v1, v2, c.kind)) return std::make_pair(p, q);
    }
  }
  return std::nullopt;
}

Diagram build_diagram(Shape shape) {
  Diagram d;
  d.shape = shape;
  std::vector<Claim> claims;
  switch (shape) {
    case Shape::Square:
      d.vertices = {SK::A, SK::E, SK::I, SK::O};
      claims = expected_claims(shape, Hypothesis::forward());
      break;
    case Shape::Cube: {
      d.vertices = {SK::A, SK::E, SK::I, SK::O, SK::a, SK::e, SK::i, SK::o};
      Hypothesis full = Hypothesis::forward();
      full.distinct = full.nondual = true;
      claims = expected_claims(shape, full);
      break;
    }
    case Shape::Hexagon:
      d.vertices = {SK::A, SK::E, SK::I, SK::O, SK::U_compound, SK::Y_compound};
      claims = expected_claims(shape, Hypothesis::forward());
      break;
  }
  for (const auto& c : claims) {
    d.edges.push_back({c.s1, c.s2, {c.kind}});
  }
  if (shape == Shape::Cube) {
    // face subalternations, so that any two vertices are linked (28 edges)
    d.edges.push_back({SK::A, SK::I, {RK::SubImplication}});
    d.edges.push_back({SK::E, SK::O, {RK::SubImplication}});
    d.edges.push_back({SK::a, SK::i, {RK::SubImplication}});
    d.edges.push_back({SK::e, SK::o, {RK::SubImplication}});
  }
  return d;
}

std::string render_dot(const Diagram& d, const VerificationReport* verdicts) {
  std::ostringstream os;
  os << "digraph " << to_string(d.shape) << " {\n";
  os << "  // implication: solid arrow; contrary: dashed; subcontrary: dotted;"
        " contradictory: bold\n";
  os << "  rankdir=TB;\n";
  os << "  node [shape=circle, fontsize=16, fixedsize=true, width=0.55];\n";
  for (auto v : d.vertices) os << "  \"" << to_string(v) << "\";\n";

  auto verdict_of = [&](StatementKind s1, StatementKind s2,
                        RelationKind rel) -> const ClaimResult* {
    if (!verdicts) return nullptr;
    for (const auto& r : verdicts->results) {
      if (r.claim.kind == rel && to_string(r.claim.s1) == to_string(s1) &&
          to_string(r.claim.s2) == to_string(s2)) {
        return &r;
      }
    }
    return nullptr;
  };

  for (const auto& e : d.edges) {
    for (auto rel : e.relations) {
      StatementKind from = e.s1;
      StatementKind to = e.s2;
      if (rel == RK::SuperImplication) std::swap(from, to);
      os << "  \"" << to_string(from) << "\" -> \"" << to_string(to) << "\" [";
      switch (rel) {
        case RK::SubImplication:
        case RK::SuperImplication: os << "style=solid"; break;
        case RK::Contrary: os << "dir=none, style=dashed"; break;
        case RK::Subcontrary: os << "dir=none, style=dotted"; break;
        case RK::Contradictory: os << "dir=none, style=bold"; break;
      }
      if (const ClaimResult* r = verdict_of(e.s1, e.s2, rel)) {
        if (r->verdict == Verdict::Violated) os << ", color=red";
        if (r->verdict == Verdict::Vacuous) os << ", color=gray";
      }
      os << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace oppo
