// The example instantiations: three-valued logic, signed multisets,
// classical sets, truth vectors, complex matrices and strong negations.
#pragma once

#include <complex>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "oppo/diagrams.hpp"

namespace oppo {

/// ({0, 1/2, 1}, x -> 1-x, usual total order); zeros are {1/2, 1}.
ClassCStructure three_valued();

// ---------------------------------------------------------------------------
// Signed multisets: finite key -> multiplicity maps where the multiplicities
// live in a structure of their own.

using Mult = long long;

/// Canonical form omits keys whose multiplicity equals the designated zero;
/// absent keys read as that zero.
struct SignedMultiset {
  std::map<std::string, Mult> entries;

  friend bool operator==(const SignedMultiset&, const SignedMultiset&) = default;
  std::string to_string() const;
};

/// The multiplicity structure: order, negation and a designated zero, with
/// an optional group addition whose unit is that zero.
struct MultiplicityConfig {
  std::string name;
  std::function<bool(Mult, Mult)> leq;
  std::function<Mult(Mult)> neg;
  Mult zero = 0;
  std::function<Mult(Mult, Mult)> plus;  // empty when no group op
  std::function<bool(Mult)> valid;       // domain membership

  bool has_group() const { return static_cast<bool>(plus); }
};

/// Integers with the usual order, negation and addition.
MultiplicityConfig integer_multiplicities();

/// Multiplicities ranging over a finite admitted structure; values are
/// element indices. The designated zero must be a fixed point of the
/// negation so that absent keys stay absent under complement.
MultiplicityConfig structure_multiplicities(std::shared_ptr<const ClassCStructure> m,
                                            std::size_t zero_index);

SignedMultiset canonicalize(SignedMultiset a, const MultiplicityConfig& m);

/// Pointwise order over the union of key sets, absent keys reading the
/// zero. (The one-sided textbook rule is kept as multiset_leq_literal;
/// it is not antisymmetric.)
bool multiset_leq(const SignedMultiset& a, const SignedMultiset& b,
                  const MultiplicityConfig& m);

/// The one-sided rule quantifying only over keys of b. {x:1} and {} end
/// up below each other under it, which breaks antisymmetry; kept so the
/// defect can be demonstrated.
bool multiset_leq_literal(const SignedMultiset& a, const SignedMultiset& b,
                          const MultiplicityConfig& m);

SignedMultiset multiset_neg(const SignedMultiset& a, const MultiplicityConfig& m);

/// Keywise group addition; requires the group op.
SignedMultiset multiset_union(const SignedMultiset& a, const SignedMultiset& b,
                              const MultiplicityConfig& m);

/// Classical set complement within universe u, computed as u + neg(a) over
/// integer multiplicities. a must be characteristic ({0,1}-valued) with
/// keys inside u; u must carry multiplicity 1 everywhere.
SignedMultiset classical_complement(const SignedMultiset& a, const SignedMultiset& u);

// ---------------------------------------------------------------------------
// Truth vectors of propositional formulas.

/// Immutable formula over variables, not, and, or, implies.
class Formula {
 public:
  enum class Op { Var, Not, And, Or, Implies };

  static Formula var(std::string name);
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);

  Op op() const { return node_->op; }
  const std::string& var_name() const { return node_->name; }
  const Formula& lhs() const { return *node_->lhs; }
  const Formula& rhs() const { return *node_->rhs; }

  bool evaluate(const std::function<bool(const std::string&)>& assignment) const;

 private:
  struct Node {
    Op op;
    std::string name;
    std::shared_ptr<const Formula> lhs;
    std::shared_ptr<const Formula> rhs;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Length 2^n bit vector; row r encodes the assignment with the first
/// variable as the most significant bit.
struct TruthVector {
  std::vector<std::uint8_t> bits;
  std::vector<std::string> var_order;

  friend bool operator==(const TruthVector&, const TruthVector&) = default;
};

/// Tabulates a formula over the given variable order. Unknown variables in
/// the formula raise std::invalid_argument.
TruthVector truth_vector(const Formula& f, std::vector<std::string> vars);

/// The arithmetic reading of each relation on truth vectors: contrary is
/// sum <= 1 everywhere, subcontrary sum >= 1, contradictory t1 = 1 - t2,
/// implications are componentwise order.
bool tv_relation(const TruthVector& t1, const TruthVector& t2, RelationKind kind);

/// Builds the four vectors (P=>Q, P=>not Q, P and Q, P and not Q) and checks
/// the swapped square: subalternations run upward and the contrary /
/// subcontrary rows trade places.
VerificationReport prop_square(const std::string& var_p, const std::string& var_q);

// ---------------------------------------------------------------------------
// Complex square matrices under the Hermitian-part semidefinite order.

struct ComplexMatrix {
  std::size_t n = 0;
  std::vector<std::complex<double>> a;  // row-major

  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim) : n(dim), a(dim * dim) {}

  static ComplexMatrix zero(std::size_t dim) { return ComplexMatrix(dim); }
  static ComplexMatrix identity(std::size_t dim);

  std::complex<double>& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
  const std::complex<double>& at(std::size_t i, std::size_t j) const { return a[i * n + j]; }

  ComplexMatrix conjugate_transpose() const;
  friend ComplexMatrix operator+(const ComplexMatrix& x, const ComplexMatrix& y);
  friend ComplexMatrix operator-(const ComplexMatrix& x, const ComplexMatrix& y);
  friend ComplexMatrix operator*(const ComplexMatrix& x, const ComplexMatrix& y);
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

  double max_abs_entry() const;
};

struct MatrixOrderConfig {
  std::size_t dimension = 2;
  double tolerance = 1e-9;  // scaled by the entry magnitude of the operands
};

/// Eigenvalues of a Hermitian matrix, ascending.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

/// A below B iff the smallest eigenvalue of (B-A)+(B-A)^H is >= -eps where
/// eps = tolerance * max(1, entry scale of A and B).
bool matrix_leq(const ComplexMatrix& a, const ComplexMatrix& b,
                const MatrixOrderConfig& cfg);

/// Entrywise sign flip.
ComplexMatrix matrix_neg(const ComplexMatrix& a);

/// Zero-set membership in the order-theoretic reading: neg(A) below A,
/// i.e. A + A^H positive semidefinite within tolerance.
bool matrix_zero_member(const ComplexMatrix& a, const MatrixOrderConfig& cfg);

/// The stricter reading that requires A + A^H to vanish. Disagrees with
/// matrix_zero_member on e.g. the 1x1 matrix [1]; both are exposed so the
/// discrepancy can be reported.
bool matrix_zero_member_strict(const ComplexMatrix& a, const MatrixOrderConfig& cfg);

/// A pair (A, B) with B-A skew-Hermitian and nonzero: both A below B and
/// B below A hold while A != B, so antisymmetry fails. The order is a
/// preorder, not a partial order, and this constructs the witness.
std::pair<ComplexMatrix, ComplexMatrix> matrix_antisymmetry_witness(std::size_t dim);

// ---------------------------------------------------------------------------
// Strong negations on [0,1] generated as phi^-1(1 - phi(x)).

class NegationGenerator {
 public:
  static NegationGenerator identity();
  static NegationGenerator power(double p);
  /// Tabulated strictly increasing grid with linear interpolation;
  /// xs and ys must start at 0 and end at 1.
  static NegationGenerator table(std::vector<double> xs, std::vector<double> ys);

  double phi(double x) const;
  double phi_inverse(double y) const;
  double negate(double x) const;  // phi^-1(1 - phi(x))
  double fixed_point() const;     // phi^-1(1/2)
  const std::string& describe() const { return description_; }

 private:
  NegationGenerator() = default;
  void validate() const;  // phi(0)=0, phi(1)=1, increasing on a grid
  std::function<double(double)> phi_;
  std::function<double(double)> phi_inverse_;
  std::string description_;
};

/// Range-checked evaluation; x must lie in [0,1].
double strong_negation(const NegationGenerator& g, double x);

}  // namespace oppo
