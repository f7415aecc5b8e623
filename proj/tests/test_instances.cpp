#include <doctest.h>

#include "oppo/instances.hpp"
#include "oppo/harness.hpp"  // SplitMix64

#include <cmath>
#include <set>

using namespace oppo;

namespace {

SignedMultiset ms(std::initializer_list<std::pair<const std::string, Mult>> init) {
  SignedMultiset out;
  out.entries = std::map<std::string, Mult>(init);
  return out;
}

SignedMultiset random_multiset(detail::SplitMix64& rng) {
  static const char* keys[] = {"a", "b", "c", "d", "e", "f"};
  SignedMultiset out;
  const std::size_t count = rng.below(5);
  for (std::size_t k = 0; k < count; ++k) {
    out.entries[keys[rng.below(6)]] = rng.int_range(-3, 3);
  }
  return out;
}

// small random formulas over up to three variables
Formula random_formula(detail::SplitMix64& rng, int depth) {
  static const char* vars[] = {"P", "Q", "R"};
  if (depth == 0 || rng.below(4) == 0) return Formula::var(vars[rng.below(3)]);
  switch (rng.below(4)) {
    case 0: return Formula::negation(random_formula(rng, depth - 1));
    case 1:
      return Formula::conjunction(random_formula(rng, depth - 1),
                                  random_formula(rng, depth - 1));
    case 2:
      return Formula::disjunction(random_formula(rng, depth - 1),
                                  random_formula(rng, depth - 1));
    default:
      return Formula::implication(random_formula(rng, depth - 1),
                                  random_formula(rng, depth - 1));
  }
}

// closed-form eigenvalues of a 2x2 Hermitian matrix
std::pair<double, double> herm2_eigs(const ComplexMatrix& h) {
  const double tr = h.at(0, 0).real() + h.at(1, 1).real();
  const double off = std::abs(h.at(0, 1));
  const double gap = h.at(0, 0).real() - h.at(1, 1).real();
  const double root = std::sqrt(gap * gap + 4.0 * off * off);
  return {(tr - root) / 2.0, (tr + root) / 2.0};
}

}  // namespace

TEST_CASE("the three-valued structure is admitted with zeros {1/2, 1}") {
  ClassCStructure t3 = three_valued();
  CHECK(t3.size() == 3);
  CHECK(t3.label(t3.neg(*t3.index_of("1/2"))) == "1/2");
  std::set<std::string> zs;
  for (const auto& z : zeros(t3)) zs.insert(z.label);
  CHECK(zs == std::set<std::string>{"1/2", "1"});
  CHECK(validate_axioms(t3.raw()).all_ok());
}

TEST_CASE("integer multiset order is pointwise over the key union") {
  const auto m = integer_multiplicities();
  CHECK(multiset_leq(ms({{"x", 1}}), ms({{"x", 2}}), m));
  CHECK(!multiset_leq(ms({{"x", 1}}), ms({}), m));
  CHECK(multiset_leq(ms({}), ms({{"x", 1}}), m));
  CHECK(!multiset_leq(ms({{"x", 2}}), ms({{"x", 1}, {"y", 5}}), m));
  CHECK(multiset_leq(ms({{"x", -1}}), ms({}), m));
}

TEST_CASE("the one-sided textbook order breaks antisymmetry; pointwise repairs it") {
  const auto m = integer_multiplicities();
  const SignedMultiset singleton = ms({{"x", 1}});
  const SignedMultiset empty = ms({});
  CHECK(multiset_leq_literal(singleton, empty, m));  // vacuous over keys of {}
  CHECK(multiset_leq_literal(empty, singleton, m));
  CHECK(!(singleton == empty));

  CHECK(!multiset_leq(singleton, empty, m));
  CHECK(multiset_leq(empty, singleton, m));
}

TEST_CASE("complement negates multiplicities and union cancels it") {
  const auto m = integer_multiplicities();
  CHECK(multiset_neg(ms({{"x", 2}, {"y", -1}}), m) == ms({{"x", -2}, {"y", 1}}));
  CHECK(multiset_union(ms({{"x", 2}, {"y", -1}}), ms({{"x", -2}, {"y", 1}}), m) == ms({}));
  CHECK(multiset_union(ms({{"x", 1}}), ms({{"x", 1}}), m) == ms({{"x", 2}}));

  // negated empty sets sit below empty sets, whatever the key dressing
  CHECK(multiset_leq(multiset_neg(ms({}), m), ms({}), m));
  const SignedMultiset dressed = canonicalize(ms({{"u", 0}, {"v", 0}}), m);
  CHECK(dressed == ms({}));
}

TEST_CASE("multiset properties hold over random integer multisets") {
  const auto m = integer_multiplicities();
  detail::SplitMix64 rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    const SignedMultiset a = canonicalize(random_multiset(rng), m);
    const SignedMultiset b = canonicalize(random_multiset(rng), m);

    CHECK(multiset_leq(a, a, m));
    if (multiset_leq(a, b, m) && multiset_leq(b, a, m)) CHECK(a == b);
    CHECK(multiset_leq(a, b, m) ==
          multiset_leq(multiset_neg(b, m), multiset_neg(a, m), m));
    CHECK(multiset_neg(multiset_neg(a, m), m) == a);
    CHECK(multiset_union(a, multiset_neg(a, m), m) == ms({}));

    // constructed chains exercise transitivity on related triples
    SignedMultiset up1 = random_multiset(rng);
    SignedMultiset up2 = random_multiset(rng);
    for (auto& [k, v] : up1.entries) v = v < 0 ? -v : v;
    for (auto& [k, v] : up2.entries) v = v < 0 ? -v : v;
    const SignedMultiset mid = multiset_union(a, up1, m);
    const SignedMultiset top = multiset_union(mid, up2, m);
    CHECK(multiset_leq(a, mid, m));
    CHECK(multiset_leq(mid, top, m));
    CHECK(multiset_leq(a, top, m));

    CHECK(multiset_union(a, b, m) == multiset_union(b, a, m));
  }
}

TEST_CASE("multiplicities can range over a finite structure") {
  auto t3 = std::make_shared<const ClassCStructure>(three_valued());
  const std::size_t half = *t3->index_of("1/2");
  const auto m = structure_multiplicities(t3, half);

  CHECK(multiset_leq(ms({{"k", 0}}), ms({{"k", 2}}), m));   // 0 <= 1 in T3
  CHECK(!multiset_leq(ms({{"k", 2}}), ms({{"k", 0}}), m));
  // absent keys read as the designated zero 1/2
  CHECK(multiset_leq(ms({{"k", 0}}), ms({}), m));
  CHECK(!multiset_leq(ms({{"k", 2}}), ms({}), m));

  CHECK_THROWS_AS(multiset_leq(ms({{"k", 7}}), ms({}), m), std::invalid_argument);
  CHECK_THROWS_AS(multiset_union(ms({}), ms({}), m), std::invalid_argument);

  // a designated zero that is not a fixed point cannot canonicalize
  const std::size_t one = *t3->index_of("1");
  CHECK_THROWS_AS(structure_multiplicities(t3, one), std::invalid_argument);
}

TEST_CASE("classical complement over a four-element universe") {
  const auto m = integer_multiplicities();
  const SignedMultiset u = ms({{"w", 1}, {"x", 1}, {"y", 1}, {"z", 1}});
  const std::string keys[] = {"w", "x", "y", "z"};

  for (unsigned mask = 0; mask < 16; ++mask) {
    SignedMultiset a;
    for (unsigned k = 0; k < 4; ++k) {
      if ((mask >> k) & 1u) a.entries[keys[k]] = 1;
    }
    const SignedMultiset comp = classical_complement(a, u);
    SignedMultiset expected;
    for (unsigned k = 0; k < 4; ++k) {
      if (!((mask >> k) & 1u)) expected.entries[keys[k]] = 1;
    }
    CHECK(comp == expected);
    CHECK(multiset_union(comp, multiset_neg(u, m), m) == multiset_neg(a, m));
  }

  const SignedMultiset small_u = ms({{"x", 1}, {"y", 1}});
  CHECK(classical_complement(ms({{"x", 1}}), small_u) == ms({{"y", 1}}));
  CHECK(classical_complement(small_u, small_u) == ms({}));
  CHECK(classical_complement(ms({}), small_u) == small_u);

  CHECK_THROWS_AS(classical_complement(ms({{"x", 2}}), small_u), std::invalid_argument);
  CHECK_THROWS_AS(classical_complement(ms({{"q", 1}}), small_u), std::invalid_argument);
}

TEST_CASE("truth vectors tabulate with the first variable as high bit") {
  const Formula p = Formula::var("P");
  const Formula q = Formula::var("Q");
  CHECK(truth_vector(Formula::conjunction(p, q), {"P", "Q"}).bits ==
        std::vector<std::uint8_t>{0, 0, 0, 1});
  CHECK(truth_vector(Formula::implication(p, q), {"P", "Q"}).bits ==
        std::vector<std::uint8_t>{1, 1, 0, 1});
  CHECK(truth_vector(Formula::negation(p), {"P"}).bits == std::vector<std::uint8_t>{1, 0});
  CHECK_THROWS_AS(truth_vector(Formula::var("R"), {"P", "Q"}), std::invalid_argument);
}

TEST_CASE("double negation and contradictories on random formulas") {
  detail::SplitMix64 rng(5);
  const std::vector<std::string> vars{"P", "Q", "R"};
  for (int trial = 0; trial < 200; ++trial) {
    const Formula f = random_formula(rng, 4);
    const TruthVector t = truth_vector(f, vars);
    CHECK(truth_vector(Formula::negation(Formula::negation(f)), vars) == t);
    CHECK(tv_relation(t, truth_vector(Formula::negation(f), vars),
                      RelationKind::Contradictory));
  }
}

TEST_CASE("truth vector relations follow the componentwise arithmetic") {
  const Formula p = Formula::var("P");
  const Formula q = Formula::var("Q");
  const std::vector<std::string> vars{"P", "Q"};
  const TruthVector and_pq = truth_vector(Formula::conjunction(p, q), vars);
  const TruthVector and_pnq =
      truth_vector(Formula::conjunction(p, Formula::negation(q)), vars);
  const TruthVector imp_pq = truth_vector(Formula::implication(p, q), vars);
  const TruthVector imp_pnq =
      truth_vector(Formula::implication(p, Formula::negation(q)), vars);

  CHECK(tv_relation(and_pq, and_pnq, RelationKind::Contrary));
  CHECK(tv_relation(and_pq, imp_pq, RelationKind::SubImplication));
  CHECK(tv_relation(imp_pq, imp_pnq, RelationKind::Subcontrary));
  CHECK(tv_relation(imp_pq, and_pq, RelationKind::SuperImplication));
  CHECK(!tv_relation(imp_pq, imp_pnq, RelationKind::Contrary));

  TruthVector shorter;
  shorter.bits = {0, 1};
  CHECK_THROWS_AS(tv_relation(and_pq, shorter, RelationKind::Contrary), std::invalid_argument);
}

TEST_CASE("the propositional square comes out swapped and fully verified") {
  VerificationReport rep = prop_square("P", "Q");
  CHECK(rep.results.size() == 6);
  CHECK(rep.all_hold());

  // subalternations point from the conjunctions up to the implications
  CHECK(rep.results[0].claim.kind == RelationKind::SubImplication);
  CHECK(rep.results[0].claim.s1 == StatementKind::I);
  CHECK(rep.results[0].claim.s2 == StatementKind::A);
  CHECK(rep.results[2].claim.kind == RelationKind::Contrary);
  CHECK(rep.results[2].claim.s1 == StatementKind::I);
  CHECK(rep.results[3].claim.kind == RelationKind::Subcontrary);
  CHECK(rep.results[3].claim.s1 == StatementKind::A);
}

TEST_CASE("matrix order compares Hermitian parts of differences") {
  const MatrixOrderConfig one{1, 1e-9};
  ComplexMatrix z(1);
  ComplexMatrix unit(1);
  unit.at(0, 0) = 1.0;
  ComplexMatrix imag(1);
  imag.at(0, 0) = {0.0, 1.0};

  CHECK(matrix_leq(z, unit, one));
  CHECK(!matrix_leq(unit, z, one));
  CHECK(matrix_leq(imag, z, one));
  CHECK(matrix_leq(z, imag, one));
  CHECK(!(imag == z));  // antisymmetry fails on a skew-Hermitian difference

  const MatrixOrderConfig two{2, 1e-9};
  CHECK(matrix_leq(ComplexMatrix::zero(2), ComplexMatrix::identity(2), two));
  CHECK_THROWS_AS(matrix_leq(ComplexMatrix::zero(3), ComplexMatrix::identity(3), two),
                  std::invalid_argument);
}

TEST_CASE("the two zero-set readings disagree on [1]") {
  const MatrixOrderConfig one{1, 1e-9};
  ComplexMatrix z(1);
  ComplexMatrix unit(1);
  unit.at(0, 0) = 1.0;
  ComplexMatrix imag(1);
  imag.at(0, 0) = {0.0, 1.0};

  CHECK(matrix_zero_member(z, one));
  CHECK(matrix_zero_member_strict(z, one));
  CHECK(matrix_zero_member(imag, one));
  CHECK(matrix_zero_member_strict(imag, one));
  CHECK(matrix_zero_member(unit, one));          // neg(A) <= A holds
  CHECK(!matrix_zero_member_strict(unit, one));  // but A + A^H != 0
}

TEST_CASE("the constructed antisymmetry witness is genuine") {
  for (std::size_t dim : {1u, 2u, 3u}) {
    const MatrixOrderConfig cfg{dim, 1e-9};
    auto [a, b] = matrix_antisymmetry_witness(dim);
    CHECK(matrix_leq(a, b, cfg));
    CHECK(matrix_leq(b, a, cfg));
    CHECK(!(a == b));
    const ComplexMatrix d = b - a;
    const ComplexMatrix herm = d + d.conjugate_transpose();
    CHECK(herm.max_abs_entry() == 0.0);
  }
}

TEST_CASE("hermitian eigenvalues match the closed form in dimension two") {
  detail::SplitMix64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    ComplexMatrix h(2);
    h.at(0, 0) = rng.range(-2, 2);
    h.at(1, 1) = rng.range(-2, 2);
    h.at(0, 1) = {rng.range(-2, 2), rng.range(-2, 2)};
    h.at(1, 0) = std::conj(h.at(0, 1));
    const auto eigs = hermitian_eigenvalues(h);
    const auto [lo, hi] = herm2_eigs(h);
    CHECK(eigs[0] == doctest::Approx(lo).epsilon(1e-10));
    CHECK(eigs[1] == doctest::Approx(hi).epsilon(1e-10));
  }
}

TEST_CASE("hermitian eigenvalues preserve trace and determinant in dimension three") {
  detail::SplitMix64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    ComplexMatrix h(3);
    for (std::size_t i = 0; i < 3; ++i) {
      h.at(i, i) = rng.range(-2, 2);
      for (std::size_t j = i + 1; j < 3; ++j) {
        h.at(i, j) = {rng.range(-2, 2), rng.range(-2, 2)};
        h.at(j, i) = std::conj(h.at(i, j));
      }
    }
    const auto eigs = hermitian_eigenvalues(h);
    const double trace = h.at(0, 0).real() + h.at(1, 1).real() + h.at(2, 2).real();
    const std::complex<double> det =
        h.at(0, 0) * (h.at(1, 1) * h.at(2, 2) - h.at(1, 2) * h.at(2, 1)) -
        h.at(0, 1) * (h.at(1, 0) * h.at(2, 2) - h.at(1, 2) * h.at(2, 0)) +
        h.at(0, 2) * (h.at(1, 0) * h.at(2, 1) - h.at(1, 1) * h.at(2, 0));
    CHECK(eigs[0] + eigs[1] + eigs[2] == doctest::Approx(trace).epsilon(1e-9));
    CHECK(eigs[0] * eigs[1] * eigs[2] == doctest::Approx(det.real()).epsilon(1e-8));
  }
}

TEST_CASE("generated negations evaluate their closed forms") {
  const NegationGenerator squared = NegationGenerator::power(2.0);
  CHECK(strong_negation(squared, 0.0) == 1.0);
  CHECK(strong_negation(squared, 1.0) == 0.0);
  CHECK(strong_negation(squared, 0.6) == doctest::Approx(0.8).epsilon(1e-12));

  const NegationGenerator id = NegationGenerator::identity();
  CHECK(strong_negation(id, 0.25) == 0.75);

  CHECK_THROWS_AS(strong_negation(id, 1.5), std::domain_error);
  CHECK_THROWS_AS(NegationGenerator::power(0.0), std::invalid_argument);
  CHECK_THROWS_AS(NegationGenerator::power(-2.0), std::invalid_argument);
}

TEST_CASE("generated negations are involutive and order the zero set") {
  for (double p : {0.5, 1.0, 2.0, 3.0}) {
    const NegationGenerator g =
        p == 1.0 ? NegationGenerator::identity() : NegationGenerator::power(p);
    const double xstar = g.fixed_point();
    CHECK(g.negate(xstar) == doctest::Approx(xstar).epsilon(1e-12));
    double prev = 2.0;
    for (int k = 0; k <= 1000; ++k) {
      const double x = k / 1000.0;
      const double nx = g.negate(x);
      CHECK(std::abs(g.negate(nx) - x) <= 1e-9);
      CHECK(nx < prev);
      prev = nx;
      if (std::abs(x - xstar) > 1e-9) {
        CHECK((nx <= x) == (x >= xstar));
      }
    }
  }
}

TEST_CASE("tabulated generators interpolate monotone grids") {
  std::vector<double> xs{0.0, 0.25, 0.5, 0.75, 1.0};
  const NegationGenerator g = NegationGenerator::table(xs, xs);  // identity grid
  CHECK(g.negate(0.25) == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(g.negate(0.1) == doctest::Approx(0.9).epsilon(1e-12));

  CHECK_THROWS_AS(NegationGenerator::table({0.0, 0.5, 0.4, 1.0}, {0.0, 0.3, 0.6, 1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(NegationGenerator::table({0.1, 1.0}, {0.0, 1.0}), std::invalid_argument);
}
