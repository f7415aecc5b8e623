// Command line front end: validation, diagram verification, relation
// queries, counterexample probes, enumeration sweeps and instance demos.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "oppo/harness.hpp"
#include "oppo/io.hpp"

namespace {

using namespace oppo;

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct HypFlags {
  bool forward = false;
  bool backward = false;
  bool distinct = false;
  bool nondual = false;
  bool none = false;

  void attach(CLI::App* cmd) {
    cmd->add_flag("--forward", forward, "require a zero strictly below P");
    cmd->add_flag("--backward", backward, "require a zero strictly below neg P");
    cmd->add_flag("--distinct", distinct, "require P != Q");
    cmd->add_flag("--nondual", nondual, "require P != neg Q");
    cmd->add_flag("--no-hypothesis", none, "admit every point");
  }

  Hypothesis resolve() const {
    if (none) {
      if (forward || backward || distinct || nondual) {
        throw CLI::ValidationError("--no-hypothesis conflicts with other hypothesis flags");
      }
      return Hypothesis::none();
    }
    if (forward || backward || distinct || nondual) {
      return Hypothesis{forward, backward, distinct, nondual};
    }
    return Hypothesis::forward();  // the default reading of the theorems
  }
};

ClassCStructure load_admitted(const std::string& path) {
  return admit(load_structure_file(path));
}

std::size_t element_index(const ClassCStructure& s, const std::string& label) {
  auto idx = s.index_of(label);
  if (!idx) {
    throw LoadError("structure '" + s.name() + "' has no element named '" + label + "'");
  }
  return *idx;
}

StatementKind parse_statement(const std::string& tag, bool abs_mode) {
  auto k = statement_from_string(tag, abs_mode);
  if (!k) throw LoadError("unknown statement tag '" + tag + "' (use A,E,I,O,a,e,i,o,U,Y)");
  return *k;
}

// claim syntax: "A->I", "A<-I", or "contrary:A,E" style
Claim parse_claim(const std::string& spec, const Hypothesis& h, bool abs_mode) {
  auto make = [&](RelationKind kind, const std::string& x, const std::string& y) {
    return Claim{kind, parse_statement(x, abs_mode), parse_statement(y, abs_mode), h, false};
  };
  if (auto pos = spec.find("->"); pos != std::string::npos) {
    return make(RelationKind::SubImplication, spec.substr(0, pos), spec.substr(pos + 2));
  }
  if (auto pos = spec.find("<-"); pos != std::string::npos) {
    return make(RelationKind::SuperImplication, spec.substr(0, pos), spec.substr(pos + 2));
  }
  auto colon = spec.find(':');
  auto comma = spec.find(',', colon == std::string::npos ? 0 : colon);
  if (colon == std::string::npos || comma == std::string::npos) {
    throw LoadError("cannot parse claim '" + spec +
                    "' (expected A->I, A<-I or contrary:A,E)");
  }
  auto kind = relation_from_string(spec.substr(0, colon));
  if (!kind) throw LoadError("unknown relation '" + spec.substr(0, colon) + "'");
  return make(*kind, spec.substr(colon + 1, comma - colon - 1), spec.substr(comma + 1));
}

std::string zeros_text(const ClassCStructure& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& z : zeros(s)) {
    if (!first) out += ", ";
    first = false;
    out += z.label;
  }
  return out + "}";
}

int run_check(const std::string& path) {
  RawStructure raw = load_structure_file(path);
  AxiomReport report = validate_axioms(raw);
  std::cout << "structure: " << raw.name << " (" << raw.size() << " elements)\n";
  std::cout << report.to_text(raw);
  if (!report.all_ok()) {
    std::cout << "admitted: no\n";
    return kExitViolation;
  }
  ClassCStructure s = admit(std::move(raw));
  std::cout << "zeros: " << zeros_text(s) << "\n";
  std::cout << "admitted: yes\n";
  return kExitPass;
}

struct DiagramArgs {
  std::string structure;
  std::string shape = "square";
  std::string p_label;
  std::string q_label;
  std::string dot_path;
  bool abs_reduction = false;
  HypFlags hyp;
};

int run_diagram(const DiagramArgs& args) {
  auto shape = shape_from_string(args.shape);
  if (!shape) throw LoadError("unknown shape '" + args.shape + "'");
  ClassCStructure s = load_admitted(args.structure);

  VerifyOptions opts;
  opts.hypothesis = args.hyp.resolve();
  opts.abs_reduction = args.abs_reduction;
  if (!args.p_label.empty() || !args.q_label.empty()) {
    if (args.p_label.empty() || args.q_label.empty()) {
      throw LoadError("--p and --q must be given together");
    }
    opts.at_point = {element_index(s, args.p_label), element_index(s, args.q_label)};
  }

  VerificationReport rep = verify_shape(s, *shape, opts);
  std::cout << rep.to_text(&s);

  if (!args.dot_path.empty()) {
    std::ofstream out(args.dot_path, std::ios::binary);
    if (!out) throw LoadError("cannot write '" + args.dot_path + "'");
    out << render_dot(build_diagram(*shape), &rep);
    std::cout << "dot: " << args.dot_path << "\n";
  }
  return rep.count(Verdict::Violated) == 0 ? kExitPass : kExitViolation;
}

struct RelationsArgs {
  std::string structure;
  std::string s1;
  std::string s2;
  bool abs_reduction = false;
  HypFlags hyp;
};

int run_relations(const RelationsArgs& args) {
  ClassCStructure s = load_admitted(args.structure);
  const Hypothesis h = args.hyp.resolve();
  const StatementKind k1 = parse_statement(args.s1, args.abs_reduction);
  const StatementKind k2 = parse_statement(args.s2, args.abs_reduction);
  PairClassification c = classify_pair(s, k1, k2, h);
  std::cout << "CLASSIFY structure=" << s.name() << " pair=(" << to_string(k1) << ","
            << to_string(k2) << ") hyp=" << h.to_string()
            << " admissible=" << c.admissible_points << " relations=";
  if (c.relations.empty()) {
    std::cout << "none";
  } else {
    for (std::size_t k = 0; k < c.relations.size(); ++k) {
      if (k) std::cout << ",";
      std::cout << to_string(c.relations[k]);
    }
  }
  if (c.vacuous()) std::cout << " vacuous=true";
  std::cout << "\n";
  return kExitPass;
}

struct CounterexampleArgs {
  std::string structure;
  std::string claim;
  bool abs_reduction = false;
  HypFlags hyp;
};

int run_counterexample(const CounterexampleArgs& args) {
  ClassCStructure s = load_admitted(args.structure);
  const Hypothesis h = args.hyp.resolve();
  const Claim claim = parse_claim(args.claim, h, args.abs_reduction);
  auto witness = counterexample_search(s, claim, h);
  std::cout << "COUNTEREXAMPLE structure=" << s.name() << " claim=" << claim.to_string()
            << " hyp=" << h.to_string() << " found=";
  if (witness) {
    std::cout << "(P=" << s.label(witness->first) << ",Q=" << s.label(witness->second)
              << ")\n";
    return kExitViolation;
  }
  std::cout << "none\n";
  return kExitPass;
}

int run_enumerate(std::size_t max_size, bool iso) {
  std::cout << "ENUMERATE max_size=" << max_size << " iso=" << (iso ? "true" : "false")
            << "\n";
  std::size_t total = 0;
  for (std::size_t n = 1; n <= max_size; ++n) {
    const std::size_t count = count_structures(n, iso);
    total += count;
    std::cout << "COUNT n=" << n << " structures=" << count << "\n";
  }
  std::cout << "TOTAL structures=" << total << "\n";
  return kExitPass;
}

struct SweepArgs {
  std::size_t max_size = 4;
  bool iso = false;
  std::vector<std::string> shapes{"square"};
  std::size_t jobs = 1;
  HypFlags hyp;
};

int run_sweep(const SweepArgs& args) {
  EnumerationConfig cfg;
  cfg.max_size = args.max_size;
  cfg.up_to_isomorphism = args.iso;
  cfg.hypothesis = args.hyp.resolve();
  cfg.jobs = args.jobs;
  cfg.shapes.clear();
  for (const auto& tag : args.shapes) {
    auto shape = shape_from_string(tag);
    if (!shape) throw LoadError("unknown shape '" + tag + "'");
    cfg.shapes.push_back(*shape);
  }
  SweepReport rep = sweep_theorems(cfg);
  std::cout << rep.to_text();
  std::cerr << "# wall time: " << rep.wall_seconds << "s\n";
  return rep.total_violations() == 0 ? kExitPass : kExitViolation;
}

int demo_three_valued() {
  ClassCStructure t3 = three_valued();
  std::cout << "structure: " << t3.name() << " (" << t3.size() << " elements)\n";
  std::cout << validate_axioms(t3.raw()).to_text(t3.raw());
  std::cout << "zeros: " << zeros_text(t3) << "\n\n";

  VerificationReport square = verify_shape(t3, Shape::Square);
  std::cout << square.to_text(&t3) << "\n";
  VerificationReport cube = verify_shape(t3, Shape::Cube);
  std::cout << cube.to_text(&t3) << "\n";
  VerificationReport hexagon = verify_shape(t3, Shape::Hexagon);
  std::cout << hexagon.to_text(&t3) << "\n";

  std::cout << "note: the two violated rear-face claims are exactly the "
               "hypothesis-sensitive ones;\n"
               "      re-check them under backward import:\n";
  Hypothesis bwd;
  bwd.import_backward = true;
  for (auto [kind, x, y] : {std::tuple{RelationKind::Contrary, StatementKind::a,
                                       StatementKind::e},
                            std::tuple{RelationKind::Subcontrary, StatementKind::i,
                                       StatementKind::o}}) {
    Claim claim{kind, x, y, bwd, true};
    auto witness = counterexample_search(t3, claim, bwd);
    std::cout << "COUNTEREXAMPLE structure=T3 claim=" << claim.to_string()
              << " hyp=" << bwd.to_string() << " found="
              << (witness ? "(P=" + t3.label(witness->first) + ",Q=" +
                                t3.label(witness->second) + ")"
                          : std::string("none"))
              << "\n";
    if (witness) return kExitViolation;
  }

  const bool ok = square.all_hold() && cube.count(Verdict::Violated) == 2 &&
                  hexagon.all_hold();
  return ok ? kExitPass : kExitViolation;
}

int demo_multiset(const std::string& a_path, const std::string& b_path) {
  const auto m = integer_multiplicities();
  SignedMultiset a, b;
  if (a_path.empty()) {
    a.entries = {{"x", 2}, {"y", -1}};
  } else {
    a = load_multiset_file(a_path);
  }
  if (b_path.empty()) {
    b.entries = {{"x", 1}};
  } else {
    b = load_multiset_file(b_path);
  }
  a = canonicalize(std::move(a), m);
  b = canonicalize(std::move(b), m);

  std::cout << "A = " << a.to_string() << "\n";
  std::cout << "B = " << b.to_string() << "\n";
  std::cout << "A <= B: " << (multiset_leq(a, b, m) ? "true" : "false") << "\n";
  std::cout << "B <= A: " << (multiset_leq(b, a, m) ? "true" : "false") << "\n";
  std::cout << "neg A = " << multiset_neg(a, m).to_string() << "\n";
  std::cout << "A + B = " << multiset_union(a, b, m).to_string() << "\n";
  const SignedMultiset cancelled = multiset_union(a, multiset_neg(a, m), m);
  std::cout << "A + neg A = " << cancelled.to_string() << "\n";

  SignedMultiset singleton;
  singleton.entries = {{"x", 1}};
  SignedMultiset empty;
  std::cout << "\nnote: under the one-sided order rule (quantifying only over keys "
               "of the right operand),\n"
               "{x:1} <= {} and {} <= {x:1} both hold, breaking antisymmetry:\n";
  std::cout << "  literal {x:1} <= {}: "
            << (multiset_leq_literal(singleton, empty, m) ? "true" : "false") << "\n";
  std::cout << "  literal {} <= {x:1}: "
            << (multiset_leq_literal(empty, singleton, m) ? "true" : "false") << "\n";
  std::cout << "the pointwise order over the key union is used instead:\n";
  std::cout << "  pointwise {x:1} <= {}: "
            << (multiset_leq(singleton, empty, m) ? "true" : "false") << "\n";
  std::cout << "  pointwise {} <= {x:1}: "
            << (multiset_leq(empty, singleton, m) ? "true" : "false") << "\n";

  const bool ok = cancelled == SignedMultiset{} &&
                  multiset_leq_literal(singleton, empty, m) &&
                  multiset_leq_literal(empty, singleton, m) &&
                  !multiset_leq(singleton, empty, m);
  return ok ? kExitPass : kExitViolation;
}

int demo_sets() {
  const auto m = integer_multiplicities();
  SignedMultiset u;
  u.entries = {{"w", 1}, {"x", 1}, {"y", 1}, {"z", 1}};
  const std::string keys[] = {"w", "x", "y", "z"};
  std::cout << "U = " << u.to_string() << "\n";

  bool ok = true;
  for (unsigned mask = 0; mask < 16; ++mask) {
    SignedMultiset a;
    for (unsigned k = 0; k < 4; ++k) {
      if ((mask >> k) & 1u) a.entries[keys[k]] = 1;
    }
    const SignedMultiset comp = classical_complement(a, u);
    const bool round_trip =
        multiset_union(comp, multiset_neg(u, m), m) == multiset_neg(a, m);
    ok = ok && round_trip;
    std::cout << "complement " << a.to_string() << " = " << comp.to_string()
              << (round_trip ? "" : "  ROUND-TRIP FAILED") << "\n";
  }
  return ok ? kExitPass : kExitViolation;
}

int demo_prop_square() {
  const Formula p = Formula::var("P");
  const Formula q = Formula::var("Q");
  const std::vector<std::string> vars{"P", "Q"};
  auto show = [&](const char* name, const Formula& f) {
    const TruthVector t = truth_vector(f, vars);
    std::cout << name << " = [";
    for (std::size_t k = 0; k < t.bits.size(); ++k) {
      if (k) std::cout << ",";
      std::cout << int(t.bits[k]);
    }
    std::cout << "]\n";
  };
  show("T(P=>Q)     ", Formula::implication(p, q));
  show("T(P=>not Q) ", Formula::implication(p, Formula::negation(q)));
  show("T(P and Q)  ", Formula::conjunction(p, q));
  show("T(P and not Q)", Formula::conjunction(p, Formula::negation(q)));
  std::cout << "\n";

  VerificationReport rep = prop_square("P", "Q");
  std::cout << rep.to_text();
  std::cout << "note: the implications sit on top here; the sub-implications run "
               "from the conjunctions up to them\n";
  return rep.all_hold() ? kExitPass : kExitViolation;
}

int demo_matrix(const std::string& file) {
  const MatrixOrderConfig one{1, 1e-9};
  ComplexMatrix zero1(1);
  ComplexMatrix unit(1);
  unit.at(0, 0) = 1.0;
  ComplexMatrix imag(1);
  imag.at(0, 0) = {0.0, 1.0};

  std::cout << "[0] <= [1]: " << (matrix_leq(zero1, unit, one) ? "true" : "false") << "\n";
  std::cout << "[i] <= [0]: " << (matrix_leq(imag, zero1, one) ? "true" : "false") << "\n";
  std::cout << "[0] <= [i]: " << (matrix_leq(zero1, imag, one) ? "true" : "false") << "\n";
  std::cout << "antisymmetry fails: [i] and [0] sit below each other yet differ\n\n";

  std::cout << "zero-set readings on [1]:\n";
  std::cout << "  neg(A) <= A (semidefinite reading): "
            << (matrix_zero_member(unit, one) ? "true" : "false") << "\n";
  std::cout << "  A + A^H = 0 (vanishing reading):    "
            << (matrix_zero_member_strict(unit, one) ? "true" : "false") << "\n";
  std::cout << "DISCREPANCY: the two readings disagree on [1]\n\n";

  if (!file.empty()) {
    const ComplexMatrix m = load_matrix_file(file);
    const MatrixOrderConfig cfg{m.n, 1e-9};
    std::cout << "loaded " << m.n << "x" << m.n << " matrix from " << file << "\n";
    std::cout << "  zero member (semidefinite reading): "
              << (matrix_zero_member(m, cfg) ? "true" : "false") << "\n";
    std::cout << "  zero member (vanishing reading):    "
              << (matrix_zero_member_strict(m, cfg) ? "true" : "false") << "\n\n";
  }

  SampleConfig cfg;
  cfg.kind = InstanceKind::Matrix;
  cfg.samples = 1000;
  cfg.dimension = 2;
  SweepReport rep = sample_check_instance(cfg);
  std::cout << rep.to_text();
  const bool ok = rep.total_property_failures() == 0 && rep.total_violations() == 0 &&
                  matrix_zero_member(unit, one) && !matrix_zero_member_strict(unit, one);
  return ok ? kExitPass : kExitViolation;
}

int demo_negation(const std::string& phi_file) {
  NegationGenerator g =
      phi_file.empty() ? NegationGenerator::power(2.0) : load_phi_file(phi_file);
  std::cout << "phi: " << g.describe() << "\n";
  std::cout << "neg(0) = " << g.negate(0.0) << "\n";
  std::cout << "neg(1) = " << g.negate(1.0) << "\n";
  std::cout << "neg(0.6) = " << g.negate(0.6) << "\n";
  std::cout << "fixed point = " << g.fixed_point() << "  (zero set reaches from here to 1)\n\n";

  SampleConfig cfg;
  cfg.kind = InstanceKind::Negation;
  cfg.phi_power = 2.0;
  SweepReport rep = sample_check_instance(cfg);
  if (!phi_file.empty()) {
    // grid-check the loaded generator directly
    PropertyCheck inv{"involution", 0, 0, 0.0, ""};
    for (std::size_t k = 0; k <= 10000; ++k) {
      const double x = k / 10000.0;
      ++inv.checked;
      const double err = std::abs(g.negate(g.negate(x)) - x);
      inv.max_error = std::max(inv.max_error, err);
      if (err > 1e-9) ++inv.failures;
    }
    rep.properties.push_back(inv);
  }
  std::cout << rep.to_text();
  return rep.total_property_failures() == 0 ? kExitPass : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Opposition diagrams over ordered structures with antitone involution"};
  app.require_subcommand(1);

  // check
  std::string check_file;
  CLI::App* check = app.add_subcommand("check", "validate a structure file");
  check->add_option("file", check_file, "structure JSON file")->required();

  // diagram
  DiagramArgs dargs;
  CLI::App* diagram = app.add_subcommand("diagram", "verify a shape's claims");
  diagram->add_option("--shape", dargs.shape, "square|cube|hexagon")->required();
  diagram->add_option("--structure", dargs.structure, "structure JSON file")->required();
  diagram->add_option("--p", dargs.p_label, "pin P to this element");
  diagram->add_option("--q", dargs.q_label, "pin Q to this element");
  diagram->add_flag("--abs", dargs.abs_reduction, "use the |Q|-reduced U and Y");
  diagram->add_option("--dot", dargs.dot_path, "write the diagram as DOT");
  dargs.hyp.attach(diagram);

  // relations
  RelationsArgs rargs;
  CLI::App* relations = app.add_subcommand("relations", "classify a statement pair");
  relations->add_option("--structure", rargs.structure)->required();
  relations->add_option("--s1", rargs.s1, "first statement tag")->required();
  relations->add_option("--s2", rargs.s2, "second statement tag")->required();
  relations->add_flag("--abs", rargs.abs_reduction, "U/Y mean the reduced forms");
  rargs.hyp.attach(relations);

  // counterexample
  CounterexampleArgs cargs;
  CLI::App* counter = app.add_subcommand("counterexample", "search for a falsifying point");
  counter->add_option("--structure", cargs.structure)->required();
  counter->add_option("--claim", cargs.claim, "A->I, A<-I or contrary:A,E")->required();
  counter->add_flag("--abs", cargs.abs_reduction, "U/Y mean the reduced forms");
  cargs.hyp.attach(counter);

  // enumerate
  std::size_t enum_max = 4;
  bool enum_iso = false;
  CLI::App* enumerate = app.add_subcommand("enumerate", "count small structures");
  enumerate->add_option("--max-size", enum_max, "largest carrier size (<= 6)");
  enumerate->add_flag("--iso", enum_iso, "count up to isomorphism");

  // sweep
  SweepArgs sargs;
  CLI::App* sweep = app.add_subcommand("sweep", "check claims over all small structures");
  sweep->add_option("--max-size", sargs.max_size, "largest carrier size (<= 6)");
  sweep->add_flag("--iso", sargs.iso, "one representative per isomorphism class");
  sweep->add_option("--shape", sargs.shapes, "shapes to check")->delimiter(',');
  sweep->add_option("--jobs", sargs.jobs, "worker threads");
  sargs.hyp.attach(sweep);

  // instance-demo
  std::string demo_name;
  std::string demo_a, demo_b, demo_file, demo_phi;
  CLI::App* demo = app.add_subcommand("instance-demo", "run an example instantiation");
  demo->add_option("name", demo_name,
                   "three-valued|multiset|sets|prop-square|matrix|negation")
      ->required();
  demo->add_option("--a", demo_a, "multiset JSON file (multiset demo)");
  demo->add_option("--b", demo_b, "multiset JSON file (multiset demo)");
  demo->add_option("--file", demo_file, "matrix JSON file (matrix demo)");
  demo->add_option("--phi", demo_phi, "phi JSON file (negation demo)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*check) return run_check(check_file);
    if (*diagram) return run_diagram(dargs);
    if (*relations) return run_relations(rargs);
    if (*counter) return run_counterexample(cargs);
    if (*enumerate) return run_enumerate(enum_max, enum_iso);
    if (*sweep) return run_sweep(sargs);
    if (*demo) {
      if (demo_name == "three-valued") return demo_three_valued();
      if (demo_name == "multiset") return demo_multiset(demo_a, demo_b);
      if (demo_name == "sets") return demo_sets();
      if (demo_name == "prop-square") return demo_prop_square();
      if (demo_name == "matrix") return demo_matrix(demo_file);
      if (demo_name == "negation") return demo_negation(demo_phi);
      std::cerr << "error: unknown demo '" << demo_name << "'\n";
      return kExitUsage;
    }
  } catch (const AdmissionError& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    std::cerr << "(run 'check' on the file for the witness details)\n";
    return kExitViolation;
  } catch (const LoadError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
