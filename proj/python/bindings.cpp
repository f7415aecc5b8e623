// Python bindings for the core operations.
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "oppo/harness.hpp"
#include "oppo/io.hpp"

namespace py = pybind11;
using namespace oppo;

namespace {

ComplexMatrix matrix_from_rows(const std::vector<std::vector<std::complex<double>>>& rows) {
  const std::size_t n = rows.size();
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw std::invalid_argument("matrix rows must be square");
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::vector<std::vector<std::complex<double>>> matrix_to_rows(const ComplexMatrix& m) {
  std::vector<std::vector<std::complex<double>>> rows(m.n);
  for (std::size_t i = 0; i < m.n; ++i) {
    rows[i].resize(m.n);
    for (std::size_t j = 0; j < m.n; ++j) rows[i][j] = m.at(i, j);
  }
  return rows;
}

std::size_t index_for(const ClassCStructure& s, const std::string& label) {
  auto idx = s.index_of(label);
  if (!idx) throw std::invalid_argument("no element named '" + label + "'");
  return *idx;
}

StatementKind statement_for(const std::string& tag, bool abs_reduction) {
  auto k = statement_from_string(tag, abs_reduction);
  if (!k) throw std::invalid_argument("unknown statement tag '" + tag + "'");
  return *k;
}

SignedMultiset multiset_of(const std::map<std::string, Mult>& entries) {
  SignedMultiset out;
  out.entries = entries;
  return canonicalize(std::move(out), integer_multiplicities());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Opposition diagrams over ordered structures with antitone involution";

  py::enum_<Shape>(m, "Shape")
      .value("Square", Shape::Square)
      .value("Cube", Shape::Cube)
      .value("Hexagon", Shape::Hexagon);

  py::enum_<RelationKind>(m, "RelationKind")
      .value("Contrary", RelationKind::Contrary)
      .value("Subcontrary", RelationKind::Subcontrary)
      .value("Contradictory", RelationKind::Contradictory)
      .value("SubImplication", RelationKind::SubImplication)
      .value("SuperImplication", RelationKind::SuperImplication);

  py::enum_<Verdict>(m, "Verdict")
      .value("Holds", Verdict::Holds)
      .value("Violated", Verdict::Violated)
      .value("Vacuous", Verdict::Vacuous);

  py::enum_<StatementKind>(m, "StatementKind")
      .value("A", StatementKind::A)
      .value("E", StatementKind::E)
      .value("I", StatementKind::I)
      .value("O", StatementKind::O)
      .value("a", StatementKind::a)
      .value("e", StatementKind::e)
      .value("i", StatementKind::i)
      .value("o", StatementKind::o)
      .value("U_compound", StatementKind::U_compound)
      .value("Y_compound", StatementKind::Y_compound)
      .value("U_abs", StatementKind::U_abs)
      .value("Y_abs", StatementKind::Y_abs);

  py::class_<Hypothesis>(m, "Hypothesis")
      .def(py::init([](bool forward, bool backward, bool distinct, bool nondual) {
             return Hypothesis{forward, backward, distinct, nondual};
           }),
           py::arg("forward") = false, py::arg("backward") = false,
           py::arg("distinct") = false, py::arg("nondual") = false)
      .def_readwrite("forward", &Hypothesis::import_forward)
      .def_readwrite("backward", &Hypothesis::import_backward)
      .def_readwrite("distinct", &Hypothesis::distinct)
      .def_readwrite("nondual", &Hypothesis::nondual)
      .def("__repr__",
           [](const Hypothesis& h) { return "Hypothesis(" + h.to_string() + ")"; });
  m.def("forward_import", &Hypothesis::forward);

  py::class_<AxiomReport>(m, "AxiomReport")
      .def_readonly("involution_ok", &AxiomReport::involution_ok)
      .def_readonly("reflexive_ok", &AxiomReport::reflexive_ok)
      .def_readonly("antisymmetric_ok", &AxiomReport::antisymmetric_ok)
      .def_readonly("transitive_ok", &AxiomReport::transitive_ok)
      .def_readonly("antitone_ok", &AxiomReport::antitone_ok)
      .def_readonly("zeros_nonempty_ok", &AxiomReport::zeros_nonempty_ok)
      .def_readonly("antisymmetry_witnesses", &AxiomReport::antisymmetry_witnesses)
      .def_readonly("involution_witnesses", &AxiomReport::involution_witnesses)
      .def("all_ok", &AxiomReport::all_ok);

  py::class_<ClassCStructure>(m, "Structure")
      .def_property_readonly("name", &ClassCStructure::name)
      .def("__len__", &ClassCStructure::size)
      .def_property_readonly("labels", &ClassCStructure::labels)
      .def("leq",
           [](const ClassCStructure& s, const std::string& x, const std::string& y) {
             return s.leq(index_for(s, x), index_for(s, y));
           })
      .def("neg",
           [](const ClassCStructure& s, const std::string& x) {
             return s.label(s.neg(index_for(s, x)));
           })
      .def("zeros",
           [](const ClassCStructure& s) {
             std::vector<std::string> out;
             for (const auto& z : zeros(s)) out.push_back(z.label);
             return out;
           })
      .def("__repr__", [](const ClassCStructure& s) {
        return "Structure(" + s.name() + ", " + std::to_string(s.size()) + " elements)";
      });

  m.def("structure_from_json", [](const std::string& text) {
    return admit(structure_from_json_text(text));
  });
  m.def("load_structure", [](const std::string& path) {
    return admit(load_structure_file(path));
  });
  m.def("validate_json", [](const std::string& text) {
    return validate_axioms(structure_from_json_text(text));
  });
  m.def("three_valued", &three_valued);
  m.def("product", [](const std::vector<ClassCStructure>& parts) {
    return product(parts);
  });

  m.def(
      "eval_statement",
      [](const ClassCStructure& s, const std::string& p, const std::string& q,
         const std::string& tag, bool abs_reduction) {
        StatementContext ctx{&s, index_for(s, p), index_for(s, q)};
        return eval_statement(ctx, statement_for(tag, abs_reduction));
      },
      py::arg("structure"), py::arg("p"), py::arg("q"), py::arg("statement"),
      py::arg("abs") = false);

  m.def("abs_max", [](const ClassCStructure& s, const std::string& q) {
    auto r = abs_max(s, index_for(s, q));
    return r ? std::optional<std::string>(s.label(*r)) : std::nullopt;
  });

  m.def("compound_reduction_equivalent",
        [](const ClassCStructure& s, const std::string& p, const std::string& q) {
          return compound_reduction_equivalent(s, index_for(s, p), index_for(s, q));
        });

  py::class_<Claim>(m, "Claim")
      .def(py::init([](RelationKind kind, const std::string& s1, const std::string& s2,
                       const Hypothesis& given, bool abs_reduction) {
             return Claim{kind, statement_for(s1, abs_reduction),
                          statement_for(s2, abs_reduction), given, false};
           }),
           py::arg("relation"), py::arg("s1"), py::arg("s2"),
           py::arg("given") = Hypothesis::forward(), py::arg("abs") = false)
      .def_readonly("kind", &Claim::kind)
      .def_readonly("s1", &Claim::s1)
      .def_readonly("s2", &Claim::s2)
      .def_readonly("given", &Claim::given)
      .def_readonly("hypothesis_sensitive", &Claim::hypothesis_sensitive)
      .def("__repr__", &Claim::to_string);

  py::class_<ClaimResult>(m, "ClaimResult")
      .def_readonly("claim", &ClaimResult::claim)
      .def_readonly("verdict", &ClaimResult::verdict)
      .def_readonly("witness", &ClaimResult::witness)
      .def_readonly("admissible_points", &ClaimResult::admissible_points);

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("shape", &VerificationReport::shape)
      .def_readonly("structure_name", &VerificationReport::structure_name)
      .def_readonly("abs_reduction", &VerificationReport::abs_reduction)
      .def_readonly("admissible_point_count", &VerificationReport::admissible_point_count)
      .def_readonly("results", &VerificationReport::results)
      .def("all_hold", &VerificationReport::all_hold)
      .def("count", &VerificationReport::count)
      .def("to_text", [](const VerificationReport& r) { return r.to_text(); });

  py::class_<PairClassification>(m, "PairClassification")
      .def_readonly("relations", &PairClassification::relations)
      .def_readonly("admissible_points", &PairClassification::admissible_points)
      .def("vacuous", &PairClassification::vacuous);

  m.def(
      "classify_pair",
      [](const ClassCStructure& s, const std::string& s1, const std::string& s2,
         const Hypothesis& h, bool abs_reduction) {
        return classify_pair(s, statement_for(s1, abs_reduction),
                             statement_for(s2, abs_reduction), h);
      },
      py::arg("structure"), py::arg("s1"), py::arg("s2"),
      py::arg("hypothesis") = Hypothesis::forward(), py::arg("abs") = false);

  m.def("expected_claims", &expected_claims, py::arg("shape"),
        py::arg("hypothesis") = Hypothesis::forward());

  m.def(
      "verify_shape",
      [](const ClassCStructure& s, Shape shape, const Hypothesis& h, bool abs_reduction,
         const std::optional<std::pair<std::string, std::string>>& at) {
        VerifyOptions opts;
        opts.hypothesis = h;
        opts.abs_reduction = abs_reduction;
        if (at) opts.at_point = {index_for(s, at->first), index_for(s, at->second)};
        return verify_shape(s, shape, opts);
      },
      py::arg("structure"), py::arg("shape"),
      py::arg("hypothesis") = Hypothesis::forward(), py::arg("abs") = false,
      py::arg("at") = std::nullopt);

  m.def(
      "counterexample_search",
      [](const ClassCStructure& s, const Claim& c, const Hypothesis& h)
          -> std::optional<std::pair<std::string, std::string>> {
        auto w = counterexample_search(s, c, h);
        if (!w) return std::nullopt;
        return std::make_pair(s.label(w->first), s.label(w->second));
      },
      py::arg("structure"), py::arg("claim"),
      py::arg("hypothesis") = Hypothesis::forward());

  m.def(
      "render_dot",
      [](Shape shape, const VerificationReport* rep) {
        return render_dot(build_diagram(shape), rep);
      },
      py::arg("shape"), py::arg("report") = nullptr);

  // multisets over integer multiplicities
  m.def("multiset_leq", [](const std::map<std::string, Mult>& a,
                           const std::map<std::string, Mult>& b) {
    return multiset_leq(multiset_of(a), multiset_of(b), integer_multiplicities());
  });
  m.def("multiset_leq_literal", [](const std::map<std::string, Mult>& a,
                                   const std::map<std::string, Mult>& b) {
    return multiset_leq_literal(multiset_of(a), multiset_of(b), integer_multiplicities());
  });
  m.def("multiset_neg", [](const std::map<std::string, Mult>& a) {
    return multiset_neg(multiset_of(a), integer_multiplicities()).entries;
  });
  m.def("multiset_union", [](const std::map<std::string, Mult>& a,
                             const std::map<std::string, Mult>& b) {
    return multiset_union(multiset_of(a), multiset_of(b), integer_multiplicities())
        .entries;
  });
  m.def("classical_complement", [](const std::map<std::string, Mult>& a,
                                   const std::map<std::string, Mult>& u) {
    SignedMultiset sa;
    sa.entries = a;
    SignedMultiset su;
    su.entries = u;
    return classical_complement(sa, su).entries;
  });

  // propositional truth vectors
  py::class_<Formula>(m, "Formula")
      .def_static("var", &Formula::var)
      .def_static("negation", &Formula::negation)
      .def_static("conjunction", &Formula::conjunction)
      .def_static("disjunction", &Formula::disjunction)
      .def_static("implication", &Formula::implication);

  py::class_<TruthVector>(m, "TruthVector")
      .def_readonly("bits", &TruthVector::bits)
      .def_readonly("var_order", &TruthVector::var_order)
      .def("__eq__",
           [](const TruthVector& x, const TruthVector& y) { return x == y; });

  m.def("truth_vector", &truth_vector);
  m.def("tv_relation", &tv_relation);
  m.def("prop_square", &prop_square);

  // complex matrices under the Hermitian-part order
  m.def(
      "matrix_leq",
      [](const std::vector<std::vector<std::complex<double>>>& a,
         const std::vector<std::vector<std::complex<double>>>& b, double tolerance) {
        const ComplexMatrix ma = matrix_from_rows(a);
        const ComplexMatrix mb = matrix_from_rows(b);
        return matrix_leq(ma, mb, MatrixOrderConfig{ma.n, tolerance});
      },
      py::arg("a"), py::arg("b"), py::arg("tolerance") = 1e-9);
  m.def(
      "matrix_zero_member",
      [](const std::vector<std::vector<std::complex<double>>>& a, double tolerance) {
        const ComplexMatrix ma = matrix_from_rows(a);
        return matrix_zero_member(ma, MatrixOrderConfig{ma.n, tolerance});
      },
      py::arg("a"), py::arg("tolerance") = 1e-9);
  m.def(
      "matrix_zero_member_strict",
      [](const std::vector<std::vector<std::complex<double>>>& a, double tolerance) {
        const ComplexMatrix ma = matrix_from_rows(a);
        return matrix_zero_member_strict(ma, MatrixOrderConfig{ma.n, tolerance});
      },
      py::arg("a"), py::arg("tolerance") = 1e-9);
  m.def("matrix_antisymmetry_witness", [](std::size_t dim) {
    auto [a, b] = matrix_antisymmetry_witness(dim);
    return std::make_pair(matrix_to_rows(a), matrix_to_rows(b));
  });
  m.def("hermitian_eigenvalues",
        [](const std::vector<std::vector<std::complex<double>>>& h) {
          return hermitian_eigenvalues(matrix_from_rows(h));
        });

  // strong negations
  py::class_<NegationGenerator>(m, "NegationGenerator")
      .def_static("identity", &NegationGenerator::identity)
      .def_static("power", &NegationGenerator::power)
      .def_static("table", &NegationGenerator::table)
      .def("phi", &NegationGenerator::phi)
      .def("phi_inverse", &NegationGenerator::phi_inverse)
      .def("negate", &NegationGenerator::negate)
      .def("fixed_point", &NegationGenerator::fixed_point)
      .def("__repr__", [](const NegationGenerator& g) {
        return "NegationGenerator(" + g.describe() + ")";
      });
  m.def("strong_negation", &strong_negation);

  // enumeration and sweeps
  m.def("count_structures", &count_structures, py::arg("n"),
        py::arg("up_to_isomorphism") = false);
  m.def(
      "enumerate_structures",
      [](std::size_t n, bool up_to_isomorphism) { return enumerate_all(n, up_to_isomorphism); },
      py::arg("n"), py::arg("up_to_isomorphism") = false);

  py::class_<SweepViolation>(m, "SweepViolation")
      .def_readonly("size", &SweepViolation::size)
      .def_readonly("structure_index", &SweepViolation::structure_index)
      .def_readonly("structure_name", &SweepViolation::structure_name)
      .def_readonly("p_label", &SweepViolation::p_label)
      .def_readonly("q_label", &SweepViolation::q_label);

  py::class_<ClaimSweep>(m, "ClaimSweep")
      .def_readonly("shape", &ClaimSweep::shape)
      .def_readonly("claim", &ClaimSweep::claim)
      .def_readonly("structures_checked", &ClaimSweep::structures_checked)
      .def_readonly("admissible_points", &ClaimSweep::admissible_points)
      .def_readonly("violations", &ClaimSweep::violations)
      .def_readonly("witnesses", &ClaimSweep::witnesses);

  py::class_<PropertyCheck>(m, "PropertyCheck")
      .def_readonly("name", &PropertyCheck::name)
      .def_readonly("checked", &PropertyCheck::checked)
      .def_readonly("failures", &PropertyCheck::failures)
      .def_readonly("max_error", &PropertyCheck::max_error)
      .def_readonly("note", &PropertyCheck::note);

  py::class_<SweepReport>(m, "SweepReport")
      .def_readonly("structure_counts", &SweepReport::structure_counts)
      .def_readonly("claims", &SweepReport::claims)
      .def_readonly("properties", &SweepReport::properties)
      .def_readonly("wall_seconds", &SweepReport::wall_seconds)
      .def("total_violations", &SweepReport::total_violations)
      .def("total_property_failures", &SweepReport::total_property_failures)
      .def("to_text", &SweepReport::to_text);

  m.def(
      "sweep",
      [](std::size_t max_size, const std::vector<Shape>& shapes, const Hypothesis& h,
         bool up_to_isomorphism, std::size_t jobs) {
        EnumerationConfig cfg;
        cfg.max_size = max_size;
        cfg.shapes = shapes;
        cfg.hypothesis = h;
        cfg.up_to_isomorphism = up_to_isomorphism;
        cfg.jobs = jobs;
        return sweep_theorems(cfg);
      },
      py::arg("max_size") = 4, py::arg("shapes") = std::vector<Shape>{Shape::Square},
      py::arg("hypothesis") = Hypothesis::forward(),
      py::arg("up_to_isomorphism") = false, py::arg("jobs") = 1);

  m.def(
      "sample_check_matrix",
      [](std::size_t samples, std::uint64_t seed, std::size_t dimension) {
        SampleConfig cfg;
        cfg.kind = InstanceKind::Matrix;
        cfg.samples = samples;
        cfg.seed = seed;
        cfg.dimension = dimension;
        return sample_check_instance(cfg);
      },
      py::arg("samples") = 1000, py::arg("seed") = 20240731, py::arg("dimension") = 2);

  m.def(
      "sample_check_negation",
      [](double phi_power, std::size_t grid) {
        SampleConfig cfg;
        cfg.kind = InstanceKind::Negation;
        cfg.phi_power = phi_power;
        cfg.grid = grid;
        return sample_check_instance(cfg);
      },
      py::arg("phi_power") = 2.0, py::arg("grid") = 10000);

  py::register_exception<AdmissionError>(m, "AdmissionError");
  py::register_exception<LoadError>(m, "LoadError");
  py::register_exception<AbsUndefinedError>(m, "AbsUndefinedError");
}
