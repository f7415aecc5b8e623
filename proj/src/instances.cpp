#include "oppo/instances.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace oppo {

ClassCStructure three_valued() {
  RawStructure s;
  s.name = "T3";
  s.labels = {"0", "1/2", "1"};
  std::vector<std::pair<std::size_t, std::size_t>> covers{{0, 1}, {1, 2}};
  s.leq = close_order(covers, OrderInputKind::Cover, 3);
  s.neg = {2, 1, 0};
  return admit(std::move(s));
}

// ---------------------------------------------------------------------------
// Signed multisets

std::string SignedMultiset::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [k, v] : entries) {
    if (!first) os << ", ";
    first = false;
    os << k << ":" << v;
  }
  os << "}";
  return os.str();
}

MultiplicityConfig integer_multiplicities() {
  MultiplicityConfig m;
  m.name = "integers";
  m.leq = [](Mult x, Mult y) { return x <= y; };
  m.neg = [](Mult x) { return -x; };
  m.zero = 0;
  m.plus = [](Mult x, Mult y) { return x + y; };
  m.valid = [](Mult) { return true; };
  return m;
}

MultiplicityConfig structure_multiplicities(std::shared_ptr<const ClassCStructure> s,
                                            std::size_t zero_index) {
  if (!s) throw std::invalid_argument("multiplicity structure is null");
  if (zero_index >= s->size()) {
    throw std::invalid_argument("designated zero out of range");
  }
  if (s->neg(zero_index) != zero_index) {
    // absent keys read as the zero; their complement must stay absent
    throw std::invalid_argument("designated zero '" + s->label(zero_index) +
                                "' is not a fixed point of the negation");
  }
  MultiplicityConfig m;
  m.name = s->name() + "-valued";
  m.zero = static_cast<Mult>(zero_index);
  m.leq = [s](Mult x, Mult y) {
    return s->leq(static_cast<std::size_t>(x), static_cast<std::size_t>(y));
  };
  m.neg = [s](Mult x) { return static_cast<Mult>(s->neg(static_cast<std::size_t>(x))); };
  m.valid = [s](Mult x) { return x >= 0 && static_cast<std::size_t>(x) < s->size(); };
  return m;
}

namespace {

void check_mults(const SignedMultiset& a, const MultiplicityConfig& m) {
  if (!m.valid) return;
  for (const auto& [k, v] : a.entries) {
    if (!m.valid(v)) {
      throw std::invalid_argument("multiplicity " + std::to_string(v) + " of key '" + k +
                                  "' is not an element of " + m.name);
    }
  }
}

}  // namespace

SignedMultiset canonicalize(SignedMultiset a, const MultiplicityConfig& m) {
  check_mults(a, m);
  for (auto it = a.entries.begin(); it != a.entries.end();) {
    it = it->second == m.zero ? a.entries.erase(it) : std::next(it);
  }
  return a;
}

bool multiset_leq(const SignedMultiset& a, const SignedMultiset& b,
                  const MultiplicityConfig& m) {
  check_mults(a, m);
  check_mults(b, m);
  auto mult_of = [&](const SignedMultiset& s, const std::string& k) {
    auto it = s.entries.find(k);
    return it == s.entries.end() ? m.zero : it->second;
  };
  std::set<std::string> keys;
  for (const auto& [k, v] : a.entries) keys.insert(k);
  for (const auto& [k, v] : b.entries) keys.insert(k);
  for (const auto& k : keys) {
    if (!m.leq(mult_of(a, k), mult_of(b, k))) return false;
  }
  return true;
}

bool multiset_leq_literal(const SignedMultiset& a, const SignedMultiset& b,
                          const MultiplicityConfig& m) {
  check_mults(a, m);
  check_mults(b, m);
  for (const auto& [k, r] : b.entries) {
    auto it = a.entries.find(k);
    if (it == a.entries.end()) {
      if (!m.leq(m.zero, r)) return false;
    } else if (!m.leq(it->second, r)) {
      return false;
    }
  }
  return true;
}

SignedMultiset multiset_neg(const SignedMultiset& a, const MultiplicityConfig& m) {
  check_mults(a, m);
  SignedMultiset out;
  for (const auto& [k, v] : a.entries) out.entries.emplace(k, m.neg(v));
  return canonicalize(std::move(out), m);
}

SignedMultiset multiset_union(const SignedMultiset& a, const SignedMultiset& b,
                              const MultiplicityConfig& m) {
  if (!m.has_group()) {
    throw std::invalid_argument("multiplicity structure " + m.name +
                                " has no group operation; union is unsupported");
  }
  check_mults(a, m);
  check_mults(b, m);
  SignedMultiset out = a;
  for (const auto& [k, v] : b.entries) {
    auto [it, inserted] = out.entries.emplace(k, v);
    if (!inserted) it->second = m.plus(it->second, v);
  }
  return canonicalize(std::move(out), m);
}

SignedMultiset classical_complement(const SignedMultiset& a, const SignedMultiset& u) {
  for (const auto& [k, v] : u.entries) {
    if (v != 1) {
      throw std::invalid_argument("universe multiplicity of '" + k + "' is not 1");
    }
  }
  for (const auto& [k, v] : a.entries) {
    if (v != 0 && v != 1) {
      throw std::invalid_argument("set is not characteristic: key '" + k +
                                  "' has multiplicity " + std::to_string(v));
    }
    if (v == 1 && !u.entries.contains(k)) {
      throw std::invalid_argument("key '" + k + "' lies outside the universe");
    }
  }
  const auto m = integer_multiplicities();
  return multiset_union(u, multiset_neg(a, m), m);
}

// ---------------------------------------------------------------------------
// Truth vectors

Formula Formula::var(std::string name) {
  return Formula(std::make_shared<Node>(Node{Op::Var, std::move(name), nullptr, nullptr}));
}

namespace {
std::shared_ptr<const Formula> box(Formula f) {
  return std::make_shared<const Formula>(std::move(f));
}
}  // namespace

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<Node>(Node{Op::Not, "", box(std::move(f)), nullptr}));
}
Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return Formula(
      std::make_shared<Node>(Node{Op::And, "", box(std::move(lhs)), box(std::move(rhs))}));
}
Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return Formula(
      std::make_shared<Node>(Node{Op::Or, "", box(std::move(lhs)), box(std::move(rhs))}));
}
Formula Formula::implication(Formula lhs, Formula rhs) {
  return Formula(
      std::make_shared<Node>(Node{Op::Implies, "", box(std::move(lhs)), box(std::move(rhs))}));
}

bool Formula::evaluate(const std::function<bool(const std::string&)>& assignment) const {
  switch (node_->op) {
    case Op::Var: return assignment(node_->name);
    case Op::Not: return !lhs().evaluate(assignment);
    case Op::And: return lhs().evaluate(assignment) && rhs().evaluate(assignment);
    case Op::Or: return lhs().evaluate(assignment) || rhs().evaluate(assignment);
    case Op::Implies: return !lhs().evaluate(assignment) || rhs().evaluate(assignment);
  }
  return false;
}

TruthVector truth_vector(const Formula& f, std::vector<std::string> vars) {
  if (vars.size() >= 8 * sizeof(std::size_t)) {
    throw std::invalid_argument("too many variables");
  }
  TruthVector out;
  out.var_order = std::move(vars);
  const std::size_t n = out.var_order.size();
  const std::size_t rows = std::size_t{1} << n;
  out.bits.resize(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    auto assignment = [&](const std::string& name) -> bool {
      for (std::size_t k = 0; k < n; ++k) {
        if (out.var_order[k] == name) {
          return ((r >> (n - 1 - k)) & 1) != 0;  // first variable = msb
        }
      }
      throw std::invalid_argument("unknown variable '" + name + "'");
    };
    out.bits[r] = f.evaluate(assignment) ? 1 : 0;
  }
  return out;
}

bool tv_relation(const TruthVector& t1, const TruthVector& t2, RelationKind kind) {
  if (t1.bits.size() != t2.bits.size()) {
    throw std::invalid_argument("truth vector length mismatch");
  }
  for (std::size_t r = 0; r < t1.bits.size(); ++r) {
    const int x = t1.bits[r];
    const int y = t2.bits[r];
    bool ok = true;
    switch (kind) {
      case RelationKind::Contrary: ok = x + y <= 1; break;
      case RelationKind::Subcontrary: ok = x + y >= 1; break;
      case RelationKind::Contradictory: ok = x == 1 - y; break;
      case RelationKind::SubImplication: ok = x <= y; break;
      case RelationKind::SuperImplication: ok = x >= y; break;
    }
    if (!ok) return false;
  }
  return true;
}

VerificationReport prop_square(const std::string& var_p, const std::string& var_q) {
  using F = Formula;
  const F p = F::var(var_p);
  const F q = F::var(var_q);
  std::vector<std::string> vars{var_p, var_q};

  const TruthVector ta = truth_vector(F::implication(p, q), vars);
  const TruthVector te = truth_vector(F::implication(p, F::negation(q)), vars);
  const TruthVector ti = truth_vector(F::conjunction(p, q), vars);
  const TruthVector to = truth_vector(F::conjunction(p, F::negation(q)), vars);

  VerificationReport rep;
  rep.shape = Shape::Square;
  rep.structure_name = "prop(" + var_p + "," + var_q + ")";
  rep.hypothesis = Hypothesis::none();
  rep.admissible_point_count = ta.bits.size();

  auto add = [&](RelationKind k, StatementKind k1, const TruthVector& t1, StatementKind k2,
                 const TruthVector& t2) {
    ClaimResult r;
    r.claim = Claim{k, k1, k2, Hypothesis::none(), false};
    r.admissible_points = t1.bits.size();
    r.verdict = tv_relation(t1, t2, k) ? Verdict::Holds : Verdict::Violated;
    rep.results.push_back(std::move(r));
  };

  // the particulars imply the universals here, not the other way around
  add(RelationKind::SubImplication, StatementKind::I, ti, StatementKind::A, ta);
  add(RelationKind::SubImplication, StatementKind::O, to, StatementKind::E, te);
  add(RelationKind::Contrary, StatementKind::I, ti, StatementKind::O, to);
  add(RelationKind::Subcontrary, StatementKind::A, ta, StatementKind::E, te);
  add(RelationKind::Contradictory, StatementKind::A, ta, StatementKind::O, to);
  add(RelationKind::Contradictory, StatementKind::E, te, StatementKind::I, ti);
  return rep;
}

// ---------------------------------------------------------------------------
// Complex matrices

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::conjugate_transpose() const {
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.at(j, i) = std::conj(at(i, j));
  }
  return out;
}

ComplexMatrix operator+(const ComplexMatrix& x, const ComplexMatrix& y) {
  if (x.n != y.n) throw std::invalid_argument("matrix dimension mismatch");
  ComplexMatrix out(x.n);
  for (std::size_t k = 0; k < x.a.size(); ++k) out.a[k] = x.a[k] + y.a[k];
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& x, const ComplexMatrix& y) {
  if (x.n != y.n) throw std::invalid_argument("matrix dimension mismatch");
  ComplexMatrix out(x.n);
  for (std::size_t k = 0; k < x.a.size(); ++k) out.a[k] = x.a[k] - y.a[k];
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& x, const ComplexMatrix& y) {
  if (x.n != y.n) throw std::invalid_argument("matrix dimension mismatch");
  ComplexMatrix out(x.n);
  for (std::size_t i = 0; i < x.n; ++i) {
    for (std::size_t j = 0; j < x.n; ++j) {
      std::complex<double> acc = 0.0;
      for (std::size_t k = 0; k < x.n; ++k) acc += x.at(i, k) * y.at(k, j);
      out.at(i, j) = acc;
    }
  }
  return out;
}

double ComplexMatrix::max_abs_entry() const {
  double m = 0.0;
  for (const auto& z : a) m = std::max(m, std::abs(z));
  return m;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  Eigen::MatrixXcd m(h.n, h.n);
  for (std::size_t i = 0; i < h.n; ++i) {
    for (std::size_t j = 0; j < h.n; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = h.at(i, j);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigenvalue computation failed");
  }
  std::vector<double> out(h.n);
  for (std::size_t i = 0; i < h.n; ++i) out[i] = solver.eigenvalues()(static_cast<Eigen::Index>(i));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

double scaled_eps(const MatrixOrderConfig& cfg, double scale) {
  return cfg.tolerance * std::max(1.0, scale);
}

void check_dims(const ComplexMatrix& a, const MatrixOrderConfig& cfg) {
  if (a.n != cfg.dimension) {
    throw std::invalid_argument("matrix dimension mismatch: got " + std::to_string(a.n) +
                                ", configured " + std::to_string(cfg.dimension));
  }
}

}  // namespace

bool matrix_leq(const ComplexMatrix& a, const ComplexMatrix& b,
                const MatrixOrderConfig& cfg) {
  check_dims(a, cfg);
  check_dims(b, cfg);
  const ComplexMatrix d = b - a;
  const ComplexMatrix h = d + d.conjugate_transpose();
  const auto eigs = hermitian_eigenvalues(h);
  const double eps = scaled_eps(cfg, std::max(a.max_abs_entry(), b.max_abs_entry()));
  return eigs.front() >= -eps;
}

ComplexMatrix matrix_neg(const ComplexMatrix& a) {
  ComplexMatrix out(a.n);
  for (std::size_t k = 0; k < a.a.size(); ++k) out.a[k] = -a.a[k];
  return out;
}

bool matrix_zero_member(const ComplexMatrix& a, const MatrixOrderConfig& cfg) {
  check_dims(a, cfg);
  const ComplexMatrix h = a + a.conjugate_transpose();
  const auto eigs = hermitian_eigenvalues(h);
  return eigs.front() >= -scaled_eps(cfg, a.max_abs_entry());
}

bool matrix_zero_member_strict(const ComplexMatrix& a, const MatrixOrderConfig& cfg) {
  check_dims(a, cfg);
  const ComplexMatrix h = a + a.conjugate_transpose();
  return h.max_abs_entry() <= scaled_eps(cfg, a.max_abs_entry());
}

std::pair<ComplexMatrix, ComplexMatrix> matrix_antisymmetry_witness(std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("dimension must be positive");
  ComplexMatrix a(dim);
  ComplexMatrix b(dim);
  b.at(0, 0) = std::complex<double>(0.0, 1.0);
  if (dim > 1) {
    b.at(0, 1) = std::complex<double>(1.0, 0.5);
    b.at(1, 0) = -std::conj(b.at(0, 1));
  }
  return {a, b};
}

// ---------------------------------------------------------------------------
// Strong negations

void NegationGenerator::validate() const {
  constexpr int kGrid = 101;
  double prev = -1.0;
  for (int k = 0; k <= kGrid; ++k) {
    const double x = static_cast<double>(k) / kGrid;
    const double y = phi_(x);
    if (k == 0 && std::abs(y) > 1e-12) {
      throw std::invalid_argument("phi(0) must be 0");
    }
    if (k == kGrid && std::abs(y - 1.0) > 1e-12) {
      throw std::invalid_argument("phi(1) must be 1");
    }
    if (y <= prev) throw std::invalid_argument("phi is not strictly increasing");
    prev = y;
  }
}

NegationGenerator NegationGenerator::identity() {
  NegationGenerator g;
  g.phi_ = [](double x) { return x; };
  g.phi_inverse_ = [](double y) { return y; };
  g.description_ = "identity";
  g.validate();
  return g;
}

NegationGenerator NegationGenerator::power(double p) {
  if (!(p > 0.0)) throw std::invalid_argument("power exponent must be positive");
  NegationGenerator g;
  g.phi_ = [p](double x) { return std::pow(x, p); };
  g.phi_inverse_ = [p](double y) { return std::pow(y, 1.0 / p); };
  std::ostringstream os;
  os << "power(" << p << ")";
  g.description_ = os.str();
  g.validate();
  return g;
}

NegationGenerator NegationGenerator::table(std::vector<double> xs, std::vector<double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw std::invalid_argument("table grids must have equal size >= 2");
  }
  for (std::size_t k = 1; k < xs.size(); ++k) {
    if (xs[k] <= xs[k - 1] || ys[k] <= ys[k - 1]) {
      throw std::invalid_argument("table grids must be strictly increasing");
    }
  }
  if (xs.front() != 0.0 || xs.back() != 1.0 || ys.front() != 0.0 || ys.back() != 1.0) {
    throw std::invalid_argument("table grids must run from 0 to 1");
  }
  auto interp = [](const std::vector<double>& from, const std::vector<double>& to, double v) {
    auto it = std::lower_bound(from.begin(), from.end(), v);
    if (it == from.begin()) return to.front();
    if (it == from.end()) return to.back();
    const std::size_t hi = static_cast<std::size_t>(it - from.begin());
    const std::size_t lo = hi - 1;
    const double t = (v - from[lo]) / (from[hi] - from[lo]);
    return to[lo] + t * (to[hi] - to[lo]);
  };
  NegationGenerator g;
  auto xs_p = std::make_shared<std::vector<double>>(std::move(xs));
  auto ys_p = std::make_shared<std::vector<double>>(std::move(ys));
  g.phi_ = [=](double x) { return interp(*xs_p, *ys_p, x); };
  g.phi_inverse_ = [=](double y) { return interp(*ys_p, *xs_p, y); };
  g.description_ = "table(" + std::to_string(xs_p->size()) + " points)";
  g.validate();
  return g;
}

double NegationGenerator::phi(double x) const { return phi_(x); }
double NegationGenerator::phi_inverse(double y) const { return phi_inverse_(y); }

double NegationGenerator::negate(double x) const {
  const double y = std::clamp(1.0 - phi_(x), 0.0, 1.0);
  return phi_inverse_(y);
}

double NegationGenerator::fixed_point() const { return phi_inverse_(0.5); }

double strong_negation(const NegationGenerator& g, double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("argument " + std::to_string(x) + " outside [0,1]");
  }
  return g.negate(x);
}

}  // namespace oppo
