#include "oppo/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <thread>

namespace oppo {

namespace {

// rows[i] bit j set when element i is below element j; diagonal always set
struct CompactPoset {
  std::size_t n = 0;
  std::array<std::uint8_t, kMaxEnumerationSize> rows{};

  bool below(std::size_t i, std::size_t j) const { return (rows[i] >> j) & 1u; }
};

using Involution = std::array<std::uint8_t, kMaxEnumerationSize>;

struct CompactStructure {
  CompactPoset poset;
  Involution neg{};
};

bool antisymmetric(const CompactPoset& p) {
  for (std::size_t i = 0; i < p.n; ++i) {
    for (std::size_t j = i + 1; j < p.n; ++j) {
      if (p.below(i, j) && p.below(j, i)) return false;
    }
  }
  return true;
}

bool transitively_closed(const CompactPoset& p) {
  for (std::size_t i = 0; i < p.n; ++i) {
    for (std::size_t j = 0; j < p.n; ++j) {
      if (p.below(i, j) && (p.rows[j] & ~p.rows[i]) != 0) return false;
    }
  }
  return true;
}

void enumerate_posets_naive(std::size_t n,
                            const std::function<void(const CompactPoset&)>& fn) {
  const std::size_t bits = n * n - n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    CompactPoset p;
    p.n = n;
    std::size_t b = 0;
    for (std::size_t i = 0; i < n; ++i) {
      p.rows[i] = static_cast<std::uint8_t>(1u << i);
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        if ((mask >> b) & 1u) p.rows[i] |= static_cast<std::uint8_t>(1u << j);
        ++b;
      }
    }
    if (antisymmetric(p) && transitively_closed(p)) fn(p);
  }
}

// Orients each unordered pair as <, > or incomparable, pruning partial
// assignments that already break transitive closedness. Leaves are checked
// in full, so the pruning only needs to be conservative.
struct PosetBacktracker {
  std::size_t n;
  std::vector<std::pair<std::uint8_t, std::uint8_t>> pairs;
  CompactPoset p;
  std::array<std::uint8_t, kMaxEnumerationSize> decided{};
  const std::function<void(const CompactPoset&)>& fn;

  explicit PosetBacktracker(std::size_t size,
                            const std::function<void(const CompactPoset&)>& callback)
      : n(size), fn(callback) {
    p.n = n;
    for (std::size_t i = 0; i < n; ++i) {
      p.rows[i] = static_cast<std::uint8_t>(1u << i);
      decided[i] = static_cast<std::uint8_t>(1u << i);
      for (std::size_t j = i + 1; j < n; ++j) {
        pairs.emplace_back(static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j));
      }
    }
  }

  bool incomparable_conflicts(std::size_t i, std::size_t j) const {
    for (std::size_t k = 0; k < n; ++k) {
      if (p.below(i, k) && p.below(k, j)) return true;  // closure would need i<=j
      if (p.below(j, k) && p.below(k, i)) return true;
    }
    return false;
  }

  bool edge_conflicts(std::size_t lo, std::size_t hi) const {
    // after adding lo<=hi: decided chains must already be closed
    for (std::size_t k = 0; k < n; ++k) {
      const bool khi_decided = (decided[std::min<std::size_t>(k, hi)] >>
                                std::max<std::size_t>(k, hi)) & 1u;
      const bool klo_decided = (decided[std::min<std::size_t>(k, lo)] >>
                                std::max<std::size_t>(k, lo)) & 1u;
      if (p.below(hi, k) && klo_decided && !p.below(lo, k)) return true;
      if (p.below(k, lo) && khi_decided && !p.below(k, hi)) return true;
    }
    return false;
  }

  void run(std::size_t t) {
    if (t == pairs.size()) {
      if (transitively_closed(p)) fn(p);
      return;
    }
    const auto [i, j] = pairs[t];
    decided[i] |= static_cast<std::uint8_t>(1u << j);
    decided[j] |= static_cast<std::uint8_t>(1u << i);

    if (!incomparable_conflicts(i, j)) run(t + 1);

    p.rows[i] |= static_cast<std::uint8_t>(1u << j);
    if (!edge_conflicts(i, j)) run(t + 1);
    p.rows[i] &= static_cast<std::uint8_t>(~(1u << j));

    p.rows[j] |= static_cast<std::uint8_t>(1u << i);
    if (!edge_conflicts(j, i)) run(t + 1);
    p.rows[j] &= static_cast<std::uint8_t>(~(1u << i));

    decided[i] &= static_cast<std::uint8_t>(~(1u << j));
    decided[j] &= static_cast<std::uint8_t>(~(1u << i));
  }
};

void enumerate_posets(std::size_t n, const std::function<void(const CompactPoset&)>& fn) {
  if (n <= 4) {
    enumerate_posets_naive(n, fn);
  } else {
    PosetBacktracker bt(n, fn);
    bt.run(0);
  }
}

void enumerate_involutions(std::size_t n, const std::function<void(const Involution&)>& fn) {
  Involution sigma{};
  std::array<bool, kMaxEnumerationSize> used{};
  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    std::size_t x = kMaxEnumerationSize;
    for (std::size_t k = 0; k < n; ++k) {
      if (!used[k]) {
        x = k;
        break;
      }
    }
    if (x == kMaxEnumerationSize) {
      fn(sigma);
      return;
    }
    used[x] = true;
    sigma[x] = static_cast<std::uint8_t>(x);
    self(self, depth + 1);
    for (std::size_t y = x + 1; y < n; ++y) {
      if (used[y]) continue;
      used[y] = true;
      sigma[x] = static_cast<std::uint8_t>(y);
      sigma[y] = static_cast<std::uint8_t>(x);
      self(self, depth + 1);
      used[y] = false;
    }
    used[x] = false;
  };
  recurse(recurse, 0);
}

bool antitone(const CompactPoset& p, const Involution& sigma) {
  for (std::size_t a = 0; a < p.n; ++a) {
    for (std::size_t b = 0; b < p.n; ++b) {
      if (p.below(a, b) != p.below(sigma[b], sigma[a])) return false;
    }
  }
  return true;
}

bool has_zero(const CompactPoset& p, const Involution& sigma) {
  for (std::size_t x = 0; x < p.n; ++x) {
    if (p.below(sigma[x], x)) return true;
  }
  return false;
}

struct Encoding {
  std::uint64_t leq_bits = 0;
  Involution neg{};

  friend auto operator<=>(const Encoding&, const Encoding&) = default;
};

Encoding encode_permuted(const CompactStructure& s, const Involution& perm) {
  const std::size_t n = s.poset.n;
  Involution inverse{};
  for (std::size_t k = 0; k < n; ++k) inverse[perm[k]] = static_cast<std::uint8_t>(k);
  Encoding e;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      e.leq_bits = (e.leq_bits << 1) |
                   static_cast<std::uint64_t>(s.poset.below(perm[i], perm[j]));
    }
  }
  for (std::size_t i = 0; i < n; ++i) e.neg[i] = inverse[s.neg[perm[i]]];
  return e;
}

bool is_canonical(const CompactStructure& s) {
  const std::size_t n = s.poset.n;
  Involution perm{};
  for (std::size_t k = 0; k < n; ++k) perm[k] = static_cast<std::uint8_t>(k);
  const Encoding self = encode_permuted(s, perm);
  while (std::next_permutation(perm.begin(), perm.begin() + n)) {
    if (encode_permuted(s, perm) < self) return false;
  }
  return true;
}

ClassCStructure materialize(const CompactStructure& s, std::string name) {
  const std::size_t n = s.poset.n;
  RawStructure raw;
  raw.name = std::move(name);
  for (std::size_t i = 0; i < n; ++i) raw.labels.push_back("x" + std::to_string(i));
  raw.leq = OrderTable(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) raw.leq.set(i, j, s.poset.below(i, j));
  }
  raw.neg.resize(n);
  for (std::size_t i = 0; i < n; ++i) raw.neg[i] = s.neg[i];
  return admit(std::move(raw));
}

void check_size(std::size_t n) {
  if (n < 1 || n > kMaxEnumerationSize) {
    throw std::invalid_argument("enumeration size must lie in [1," +
                                std::to_string(kMaxEnumerationSize) +
                                "], got " + std::to_string(n));
  }
}

void enumerate_compact(std::size_t n, bool up_to_isomorphism,
                       const std::function<bool(const CompactStructure&)>& visit) {
  check_size(n);
  bool stopped = false;
  enumerate_posets(n, [&](const CompactPoset& p) {
    if (stopped) return;
    enumerate_involutions(n, [&](const Involution& sigma) {
      if (stopped) return;
      if (!antitone(p, sigma) || !has_zero(p, sigma)) return;
      CompactStructure s{p, sigma};
      if (up_to_isomorphism && !is_canonical(s)) return;
      if (!visit(s)) stopped = true;
    });
  });
}

}  // namespace

void enumerate_structures(std::size_t n, bool up_to_isomorphism,
                          const std::function<bool(const ClassCStructure&)>& visit) {
  std::size_t index = 0;
  enumerate_compact(n, up_to_isomorphism, [&](const CompactStructure& s) {
    std::string name = "n" + std::to_string(n) + "#" + std::to_string(index);
    ++index;
    return visit(materialize(s, std::move(name)));
  });
}

std::vector<ClassCStructure> enumerate_all(std::size_t n, bool up_to_isomorphism) {
  std::vector<ClassCStructure> out;
  enumerate_structures(n, up_to_isomorphism, [&](const ClassCStructure& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

std::size_t count_structures(std::size_t n, bool up_to_isomorphism) {
  std::size_t count = 0;
  enumerate_compact(n, up_to_isomorphism, [&](const CompactStructure&) {
    ++count;
    return true;
  });
  return count;
}

std::size_t SweepReport::total_violations() const {
  std::size_t total = 0;
  for (const auto& c : claims) total += c.violations;
  return total;
}

std::size_t SweepReport::total_property_failures() const {
  std::size_t total = 0;
  for (const auto& p : properties) total += p.failures;
  return total;
}

std::string SweepReport::to_text() const {
  std::ostringstream os;
  os << header << "\n";
  for (const auto& [n, count] : structure_counts) {
    os << "COUNT n=" << n << " structures=" << count << "\n";
  }
  for (const auto& c : claims) {
    os << "CLAIM " << to_string(c.shape) << " " << c.claim.to_string();
    if (c.claim.hypothesis_sensitive) os << " sensitive";
    os << " hyp=" << c.claim.given.to_string() << " structures=" << c.structures_checked
       << " admissible=" << c.admissible_points << " violations=" << c.violations << "\n";
    constexpr std::size_t kCap = 10;
    for (std::size_t w = 0; w < c.witnesses.size() && w < kCap; ++w) {
      const auto& v = c.witnesses[w];
      os << "  WITNESS n=" << v.size << " structure=" << v.structure_name
         << " P=" << v.p_label << " Q=" << v.q_label << "\n";
    }
    if (c.witnesses.size() > kCap) {
      os << "  ... and " << (c.witnesses.size() - kCap) << " more witnesses\n";
    }
  }
  for (const auto& p : properties) {
    char err[32];
    std::snprintf(err, sizeof(err), "%.3e", p.max_error);
    os << "PROPERTY " << p.name << " checked=" << p.checked << " failures=" << p.failures
       << " max_error=" << err;
    if (!p.note.empty()) os << " note=" << p.note;
    os << "\n";
  }
  os << "TOTAL violations=" << total_violations()
     << " property_failures=" << total_property_failures() << "\n";
  return os.str();
}

namespace {

constexpr std::size_t kWitnessPrintCap = 10;

struct ClaimScan {
  std::size_t admissible = 0;
  std::size_t violations = 0;
  std::vector<SweepViolation> witnesses;
};

std::string hyp_suffix(const EnumerationConfig& cfg) {
  std::ostringstream os;
  os << "max_size=" << cfg.max_size << " iso=" << (cfg.up_to_isomorphism ? "true" : "false")
     << " hyp=" << cfg.hypothesis.to_string() << " shapes=";
  for (std::size_t k = 0; k < cfg.shapes.size(); ++k) {
    if (k) os << ",";
    os << to_string(cfg.shapes[k]);
  }
  return os.str();
}

}  // namespace

SweepReport sweep_theorems(const EnumerationConfig& cfg) {
  check_size(cfg.max_size);
  if (cfg.shapes.empty()) throw std::invalid_argument("no shapes selected");
  const auto t0 = std::chrono::steady_clock::now();

  SweepReport rep;
  rep.header = "SWEEP " + hyp_suffix(cfg);

  std::vector<ClaimSweep> aggregates;
  for (Shape shape : cfg.shapes) {
    for (const Claim& c : expected_claims(shape, cfg.hypothesis)) {
      ClaimSweep cs;
      cs.shape = shape;
      cs.claim = c;
      aggregates.push_back(std::move(cs));
    }
  }

  struct Item {
    std::size_t size;
    std::size_t index;
    CompactStructure compact;
  };
  std::vector<Item> items;
  for (std::size_t n = 1; n <= cfg.max_size; ++n) {
    std::size_t count = 0;
    enumerate_compact(n, cfg.up_to_isomorphism, [&](const CompactStructure& s) {
      items.push_back({n, count, s});
      ++count;
      return true;
    });
    rep.structure_counts.emplace_back(n, count);
  }

  const std::size_t jobs = std::max<std::size_t>(1, std::min(cfg.jobs, items.size() ? items.size() : 1));
  std::vector<std::vector<ClaimScan>> partials(jobs,
                                               std::vector<ClaimScan>(aggregates.size()));

  auto worker = [&](std::size_t w) {
    for (std::size_t it = w; it < items.size(); it += jobs) {
      const Item& item = items[it];
      const ClassCStructure s = materialize(
          item.compact, "n" + std::to_string(item.size) + "#" + std::to_string(item.index));
      const std::size_t n = s.size();

      // the hypothesis is shared by every claim in this sweep
      std::vector<std::pair<std::size_t, std::size_t>> admissible;
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
          if (cfg.hypothesis.admits(s, p, q)) admissible.emplace_back(p, q);
        }
      }

      for (std::size_t k = 0; k < aggregates.size(); ++k) {
        const Claim& c = aggregates[k].claim;
        ClaimScan& scan = partials[w][k];
        bool first = true;
        for (const auto& [p, q] : admissible) {
          ++scan.admissible;
          StatementContext ctx{&s, p, q};
          const bool v1 = eval_statement(ctx, c.s1);
          const bool v2 = eval_statement(ctx, c.s2);
          if (!relation_holds_at(v1, v2, c.kind)) {
            ++scan.violations;
            if (first) {
              scan.witnesses.push_back({item.size, item.index, s.name(), p, q, s.label(p),
                                        s.label(q)});
              first = false;
            }
          }
        }
      }
    }
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (std::size_t w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
    for (auto& t : threads) t.join();
  }

  for (std::size_t k = 0; k < aggregates.size(); ++k) {
    ClaimSweep& agg = aggregates[k];
    agg.structures_checked = items.size();
    for (std::size_t w = 0; w < jobs; ++w) {
      agg.admissible_points += partials[w][k].admissible;
      agg.violations += partials[w][k].violations;
      for (auto& v : partials[w][k].witnesses) agg.witnesses.push_back(std::move(v));
    }
    std::sort(agg.witnesses.begin(), agg.witnesses.end(),
              [](const SweepViolation& x, const SweepViolation& y) {
                return std::tie(x.size, x.structure_index, x.p, x.q) <
                       std::tie(y.size, y.structure_index, y.p, y.q);
              });
  }
  rep.claims = std::move(aggregates);

  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

namespace {

ComplexMatrix random_matrix(detail::SplitMix64& rng, std::size_t dim) {
  ComplexMatrix m(dim);
  for (auto& z : m.a) {
    const double re = rng.range(-1.0, 1.0);
    const double im = rng.range(-1.0, 1.0);
    z = {re, im};
  }
  return m;
}

ComplexMatrix random_psd(detail::SplitMix64& rng, std::size_t dim) {
  const ComplexMatrix g = random_matrix(rng, dim);
  return g * g.conjugate_transpose();
}

ComplexMatrix random_skew(detail::SplitMix64& rng, std::size_t dim) {
  ComplexMatrix s(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    s.at(i, i) = {0.0, rng.range(-1.0, 1.0)};
    for (std::size_t j = i + 1; j < dim; ++j) {
      const double re = rng.range(-1.0, 1.0);
      const double im = rng.range(-1.0, 1.0);
      s.at(i, j) = {re, im};
      s.at(j, i) = -std::conj(s.at(i, j));
    }
  }
  return s;
}

ComplexMatrix plus_scaled_identity(ComplexMatrix m, double scale) {
  for (std::size_t i = 0; i < m.n; ++i) m.at(i, i) += scale;
  return m;
}

SweepReport sample_matrix_instance(const SampleConfig& cfg) {
  SweepReport rep;
  {
    std::ostringstream os;
    os << "SAMPLE kind=matrix dimension=" << cfg.dimension << " samples=" << cfg.samples
       << " seed=" << cfg.seed;
    rep.header = os.str();
  }
  const MatrixOrderConfig mc{cfg.dimension, 1e-9};
  detail::SplitMix64 rng(cfg.seed);

  PropertyCheck reflexive{"reflexive", 0, 0, 0.0, ""};
  PropertyCheck chain{"order-chain", 0, 0, 0.0, ""};
  PropertyCheck transitive{"transitive", 0, 0, 0.0, ""};
  PropertyCheck antitone_pc{"antitone", 0, 0, 0.0, ""};
  PropertyCheck involution{"involution", 0, 0, 0.0, ""};

  std::vector<ClaimSweep> claims;
  for (const Claim& c : expected_claims(Shape::Square, Hypothesis::forward())) {
    ClaimSweep cs;
    cs.shape = Shape::Square;
    cs.claim = c;
    claims.push_back(std::move(cs));
  }

  for (std::size_t k = 0; k < cfg.samples; ++k) {
    const ComplexMatrix a = random_matrix(rng, cfg.dimension);
    ++reflexive.checked;
    if (!matrix_leq(a, a, mc)) ++reflexive.failures;

    const ComplexMatrix b = a + random_psd(rng, cfg.dimension);
    const ComplexMatrix c = b + random_psd(rng, cfg.dimension);
    ++chain.checked;
    if (!(matrix_leq(a, b, mc) && matrix_leq(b, c, mc))) ++chain.failures;
    ++transitive.checked;
    if (!matrix_leq(a, c, mc)) ++transitive.failures;

    const ComplexMatrix r = random_matrix(rng, cfg.dimension);
    antitone_pc.checked += 2;
    if (matrix_leq(a, b, mc) != matrix_leq(matrix_neg(b), matrix_neg(a), mc)) {
      ++antitone_pc.failures;
    }
    if (matrix_leq(a, r, mc) != matrix_leq(matrix_neg(r), matrix_neg(a), mc)) {
      ++antitone_pc.failures;
    }

    ++involution.checked;
    if (!(matrix_neg(matrix_neg(a)) == a)) ++involution.failures;

    // a point with a zero strictly below P: P has positive-definite
    // Hermitian part, so 0 < P and the forward hypothesis is met
    const ComplexMatrix p =
        plus_scaled_identity(random_psd(rng, cfg.dimension), 0.1) +
        random_skew(rng, cfg.dimension);
    ComplexMatrix q(cfg.dimension);
    const char* strategy = "random";
    switch (k % 4) {
      case 0: q = random_matrix(rng, cfg.dimension); break;
      case 1:
        q = p + random_psd(rng, cfg.dimension);
        strategy = "above-P";
        break;
      case 2:
        q = p - random_psd(rng, cfg.dimension);
        strategy = "below-P";
        break;
      case 3:
        q = matrix_neg(p) + random_skew(rng, cfg.dimension);
        strategy = "near-neg-P";
        break;
    }

    const bool vA = matrix_leq(p, q, mc);
    const bool vE = matrix_leq(p, matrix_neg(q), mc);
    auto value_of = [&](StatementKind s) {
      switch (s) {
        case StatementKind::A: return vA;
        case StatementKind::E: return vE;
        case StatementKind::I: return !vE;
        case StatementKind::O: return !vA;
        default: throw std::logic_error("unexpected statement in square claims");
      }
    };
    for (auto& cs : claims) {
      ++cs.admissible_points;
      cs.structures_checked = cfg.samples;
      if (!relation_holds_at(value_of(cs.claim.s1), value_of(cs.claim.s2), cs.claim.kind)) {
        ++cs.violations;
        if (cs.witnesses.size() < kWitnessPrintCap) {
          cs.witnesses.push_back({cfg.dimension, k, "sample#" + std::to_string(k), 0, 0,
                                  "P", std::string("Q(") + strategy + ")"});
        }
      }
    }
  }

  rep.claims = std::move(claims);
  rep.properties = {reflexive, chain, transitive, antitone_pc, involution};

  {
    auto [wa, wb] = matrix_antisymmetry_witness(cfg.dimension);
    const bool demonstrated =
        matrix_leq(wa, wb, mc) && matrix_leq(wb, wa, mc) && !(wa == wb);
    rep.properties.push_back(
        {"antisymmetry-witness", 1, demonstrated ? std::size_t{0} : std::size_t{1}, 0.0,
         "B-A skew-Hermitian nonzero: A<=B and B<=A while A!=B, so the order is a "
         "preorder only"});
  }
  {
    const MatrixOrderConfig one{1, 1e-9};
    ComplexMatrix m(1);
    m.at(0, 0) = 1.0;
    const bool relaxed = matrix_zero_member(m, one);
    const bool strict = matrix_zero_member_strict(m, one);
    rep.properties.push_back(
        {"zero-reading-discrepancy", 1, (relaxed && !strict) ? std::size_t{0} : std::size_t{1},
         0.0,
         "[1]: neg(A)<=A holds yet A+A^H is nonzero; the semidefinite and the "
         "vanishing zero-set readings disagree"});
  }
  return rep;
}

SweepReport sample_negation_instance(const SampleConfig& cfg) {
  SweepReport rep;
  {
    std::ostringstream os;
    os << "SAMPLE kind=negation phi=";
    if (cfg.phi_power == 1.0) {
      os << "identity";
    } else {
      os << "power(" << cfg.phi_power << ")";
    }
    os << " grid=" << cfg.grid;
    rep.header = os.str();
  }
  const NegationGenerator g = cfg.phi_power == 1.0 ? NegationGenerator::identity()
                                                   : NegationGenerator::power(cfg.phi_power);
  const std::size_t grid = std::max<std::size_t>(cfg.grid, 2);

  PropertyCheck involution{"involution", 0, 0, 0.0, ""};
  PropertyCheck boundary{"boundary-exact", 0, 0, 0.0, ""};
  PropertyCheck decreasing{"strictly-decreasing", 0, 0, 0.0, ""};
  PropertyCheck zeroset{"zero-set", 0, 0, 0.0, ""};
  PropertyCheck standard{"standard-negation-exact", 0, 0, 0.0, ""};

  const double xstar = g.fixed_point();
  {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "Z=[%.12g,1]", xstar);
    zeroset.note = buf;
  }

  double prev = 2.0;
  for (std::size_t k = 0; k <= grid; ++k) {
    const double x = static_cast<double>(k) / static_cast<double>(grid);
    const double nx = g.negate(x);

    ++involution.checked;
    const double err = std::abs(g.negate(nx) - x);
    involution.max_error = std::max(involution.max_error, err);
    if (err > 1e-9) ++involution.failures;

    ++decreasing.checked;
    if (!(nx < prev)) ++decreasing.failures;
    prev = nx;

    if (std::abs(x - xstar) > 1e-9) {
      ++zeroset.checked;
      if ((nx <= x) != (x >= xstar)) ++zeroset.failures;
    }

    if (cfg.phi_power == 1.0) {
      ++standard.checked;
      if (nx != 1.0 - x) ++standard.failures;
    }
  }

  boundary.checked = 2;
  if (g.negate(0.0) != 1.0) ++boundary.failures;
  if (g.negate(1.0) != 0.0) ++boundary.failures;

  rep.properties = {involution, boundary, decreasing, zeroset};
  if (cfg.phi_power == 1.0) rep.properties.push_back(standard);
  return rep;
}

}  // namespace

SweepReport sample_check_instance(const SampleConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  SweepReport rep = cfg.kind == InstanceKind::Matrix ? sample_matrix_instance(cfg)
                                                     : sample_negation_instance(cfg);
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

namespace detail {

std::vector<std::uint64_t> poset_keys_naive(std::size_t n) {
  check_size(n);
  std::vector<std::uint64_t> keys;
  enumerate_posets_naive(n, [&](const CompactPoset& p) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        key = (key << 1) | static_cast<std::uint64_t>(p.below(i, j));
      }
    }
    keys.push_back(key);
  });
  std::sort(keys.begin(), keys.end());
  return keys;
}

std::vector<std::uint64_t> poset_keys_backtracking(std::size_t n) {
  check_size(n);
  std::vector<std::uint64_t> keys;
  PosetBacktracker bt(n, [&](const CompactPoset& p) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        key = (key << 1) | static_cast<std::uint64_t>(p.below(i, j));
      }
    }
    keys.push_back(key);
  });
  bt.run(0);
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace detail

}  // namespace oppo
