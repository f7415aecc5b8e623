#include "oppo/core.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace oppo {

std::optional<std::size_t> RawStructure::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return i;
  }
  return std::nullopt;
}

bool RawStructure::well_formed(std::string* reason) const {
  auto fail = [&](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };
  const std::size_t n = labels.size();
  if (n == 0) return fail("structure has no elements");
  if (leq.size() != n) {
    std::ostringstream os;
    os << "order table is " << leq.size() << "x" << leq.size() << " but there are "
       << n << " elements";
    return fail(os.str());
  }
  if (neg.size() != n) return fail("negation map is not total");
  for (std::size_t i = 0; i < n; ++i) {
    if (neg[i] >= n) return fail("negation maps element '" + labels[i] + "' out of range");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) return fail("duplicate element label '" + l + "'");
  }
  return true;
}

AxiomReport validate_axioms(const RawStructure& s) {
  std::string why;
  if (!s.well_formed(&why)) throw StructuralError(why);

  const std::size_t n = s.size();
  AxiomReport r;

  for (std::size_t x = 0; x < n; ++x) {
    if (s.neg[s.neg[x]] != x) r.involution_witnesses.push_back(x);
  }
  r.involution_ok = r.involution_witnesses.empty();

  for (std::size_t x = 0; x < n; ++x) {
    if (!s.leq.at(x, x)) r.reflexivity_witnesses.push_back(x);
  }
  r.reflexive_ok = r.reflexivity_witnesses.empty();

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (s.leq.at(a, b) && s.leq.at(b, a)) r.antisymmetry_witnesses.emplace_back(a, b);
    }
  }
  r.antisymmetric_ok = r.antisymmetry_witnesses.empty();

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!s.leq.at(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (s.leq.at(b, c) && !s.leq.at(a, c)) {
          r.transitivity_witnesses.push_back({a, b, c});
        }
      }
    }
  }
  r.transitive_ok = r.transitivity_witnesses.empty();

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (s.leq.at(a, b) != s.leq.at(s.neg[b], s.neg[a])) {
        r.antitone_witnesses.emplace_back(a, b);
      }
    }
  }
  r.antitone_ok = r.antitone_witnesses.empty();

  bool any_zero = false;
  for (std::size_t x = 0; x < n; ++x) {
    if (s.leq.at(s.neg[x], x)) {
      any_zero = true;
      break;
    }
  }
  r.zeros_nonempty_ok = any_zero;
  if (!any_zero) {
    for (std::size_t x = 0; x < n; ++x) r.zero_witnesses.push_back(x);
  }
  return r;
}

std::string AxiomReport::to_text(const RawStructure& s) const {
  std::ostringstream os;
  auto line = [&](const char* name, bool ok) { os << name << ": " << (ok ? "ok" : "FAILED"); };
  auto lbl = [&](std::size_t i) -> const std::string& { return s.labels[i]; };

  line("involution", involution_ok);
  for (auto x : involution_witnesses) os << "  witness " << lbl(x);
  os << "\n";
  line("reflexive", reflexive_ok);
  for (auto x : reflexivity_witnesses) os << "  witness " << lbl(x);
  os << "\n";
  line("antisymmetric", antisymmetric_ok);
  for (auto& [a, b] : antisymmetry_witnesses) os << "  witness (" << lbl(a) << "," << lbl(b) << ")";
  os << "\n";
  line("transitive", transitive_ok);
  for (auto& w : transitivity_witnesses)
    os << "  witness (" << lbl(w[0]) << "," << lbl(w[1]) << "," << lbl(w[2]) << ")";
  os << "\n";
  line("antitone", antitone_ok);
  for (auto& [a, b] : antitone_witnesses) os << "  witness (" << lbl(a) << "," << lbl(b) << ")";
  os << "\n";
  line("zeros nonempty", zeros_nonempty_ok);
  if (!zeros_nonempty_ok) os << "  (no element lies above its own negation)";
  os << "\n";
  return os.str();
}

ClassCStructure admit(RawStructure s) {
  AxiomReport report = validate_axioms(s);
  if (!report.all_ok()) {
    std::ostringstream os;
    os << "structure '" << s.name << "' rejected:";
    if (!report.involution_ok) os << " involution";
    if (!report.reflexive_ok) os << " reflexivity";
    if (!report.antisymmetric_ok) os << " antisymmetry";
    if (!report.transitive_ok) os << " transitivity";
    if (!report.antitone_ok) os << " antitone";
    if (!report.zeros_nonempty_ok) os << " zeros-nonempty";
    os << " failed";
    throw AdmissionError(std::move(report), os.str());
  }
  std::vector<std::size_t> zs;
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (s.leq.at(s.neg[x], x)) zs.push_back(x);
  }
  return ClassCStructure(std::move(s), std::move(zs));
}

std::vector<ElementId> zeros(const ClassCStructure& s) {
  std::vector<ElementId> out;
  out.reserve(s.zero_indices().size());
  for (auto i : s.zero_indices()) out.push_back({i, s.label(i)});
  return out;
}

ClassCStructure product(std::span<const ClassCStructure> parts) {
  if (parts.empty()) throw std::invalid_argument("product of zero structures");

  std::size_t n = 1;
  for (const auto& p : parts) n *= p.size();

  RawStructure out;
  out.labels.reserve(n);

  // mixed-radix decomposition, first factor most significant
  auto digits_of = [&](std::size_t idx) {
    std::vector<std::size_t> d(parts.size());
    for (std::size_t k = parts.size(); k-- > 0;) {
      d[k] = idx % parts[k].size();
      idx /= parts[k].size();
    }
    return d;
  };

  for (std::size_t idx = 0; idx < n; ++idx) {
    auto d = digits_of(idx);
    std::string label = "(";
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (k) label += ",";
      label += parts[k].label(d[k]);
    }
    label += ")";
    out.labels.push_back(std::move(label));
  }

  out.leq = OrderTable(n);
  out.neg.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto di = digits_of(i);
    std::size_t ni = 0;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      ni = ni * parts[k].size() + parts[k].neg(di[k]);
    }
    out.neg[i] = ni;
    for (std::size_t j = 0; j < n; ++j) {
      auto dj = digits_of(j);
      bool below = true;
      for (std::size_t k = 0; k < parts.size(); ++k) {
        if (!parts[k].leq(di[k], dj[k])) {
          below = false;
          break;
        }
      }
      out.leq.set(i, j, below);
    }
  }

  out.name = parts[0].name();
  for (std::size_t k = 1; k < parts.size(); ++k) out.name += "x" + parts[k].name();
  return admit(std::move(out));
}

OrderTable close_order(std::span<const std::pair<std::size_t, std::size_t>> pairs,
                       OrderInputKind kind, std::size_t n) {
  for (const auto& [a, b] : pairs) {
    if (a >= n || b >= n) {
      std::ostringstream os;
      os << "pair (" << a << "," << b << ") out of range for " << n << " elements";
      throw std::out_of_range(os.str());
    }
  }
  OrderTable t(n);
  for (std::size_t i = 0; i < n; ++i) t.set(i, i, true);
  for (const auto& [a, b] : pairs) t.set(a, b, true);

  if (kind == OrderInputKind::Cover) {
    // Floyd-Warshall style reachability closure
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!t.at(i, k)) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (t.at(k, j)) t.set(i, j, true);
        }
      }
    }
  }
  return t;
}

}  // namespace oppo
