// Exhaustive enumeration of small structures and theorem sweeps; the
// brute-force oracle backing the rest of the library.
#pragma once

#include <cstdint>
#include <functional>

#include "oppo/instances.hpp"

namespace oppo {

/// Enumeration refuses sizes beyond this; the candidate space explodes.
constexpr std::size_t kMaxEnumerationSize = 6;

/// Streams every labeled structure on {0..n-1} satisfying all four axioms,
/// in a fixed deterministic order. With up_to_isomorphism, only the
/// lexicographically minimal representative of each isomorphism class is
/// emitted. Return false from the visitor to stop early.
void enumerate_structures(std::size_t n, bool up_to_isomorphism,
                          const std::function<bool(const ClassCStructure&)>& visit);

std::vector<ClassCStructure> enumerate_all(std::size_t n, bool up_to_isomorphism);

std::size_t count_structures(std::size_t n, bool up_to_isomorphism);

struct EnumerationConfig {
  std::size_t max_size = 4;
  bool up_to_isomorphism = false;
  Hypothesis hypothesis = Hypothesis::forward();
  std::vector<Shape> shapes = {Shape::Square};
  std::size_t jobs = 1;
};

struct SweepViolation {
  std::size_t size = 0;
  std::size_t structure_index = 0;
  std::string structure_name;
  std::size_t p = 0;
  std::size_t q = 0;
  std::string p_label;
  std::string q_label;
};

struct ClaimSweep {
  Shape shape = Shape::Square;
  Claim claim;
  std::size_t structures_checked = 0;
  std::size_t admissible_points = 0;
  std::size_t violations = 0;
  std::vector<SweepViolation> witnesses;  // first per structure, scan order
};

struct PropertyCheck {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  double max_error = 0.0;
  std::string note;
};

/// Aggregate outcome of a sweep or a sampled instance check. to_text() is
/// deterministic for a fixed configuration; wall_seconds is deliberately
/// kept out of it.
struct SweepReport {
  std::string header;
  std::vector<std::pair<std::size_t, std::size_t>> structure_counts;  // (n, count)
  std::vector<ClaimSweep> claims;
  std::vector<PropertyCheck> properties;
  double wall_seconds = 0.0;

  std::size_t total_violations() const;
  std::size_t total_property_failures() const;
  std::string to_text() const;
};

/// Checks every selected claim over every admissible point of every
/// enumerated structure up to max_size. Verdicts and witnesses do not
/// depend on the worker count.
SweepReport sweep_theorems(const EnumerationConfig& cfg);

enum class InstanceKind { Matrix, Negation };

struct SampleConfig {
  InstanceKind kind = InstanceKind::Matrix;
  std::size_t samples = 1000;
  std::uint64_t seed = 20240731;
  std::size_t dimension = 2;   // matrix instance
  double phi_power = 2.0;      // negation instance; 1 means identity
  std::size_t grid = 10000;    // negation grid resolution
};

/// Seeded randomized verification for the two infinite instances:
/// preorder/antitone/involution properties plus the square claims at
/// sampled admissible points for matrices, and involution / monotonicity /
/// zero-set checks on a dense grid for generated negations. The matrix
/// check also constructs the antisymmetry failure and reports the
/// disagreement between the two zero-set readings.
SweepReport sample_check_instance(const SampleConfig& cfg);

namespace detail {

/// Deterministic splittable generator; identical streams on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double range(double lo, double hi) { return lo + (hi - lo) * unit(); }
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  long long int_range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

/// Sorted order-table encodings of all labeled partial orders on n points,
/// via the exhaustive relation filter. Testing hook.
std::vector<std::uint64_t> poset_keys_naive(std::size_t n);

/// Same set via pairwise-orientation backtracking. Testing hook.
std::vector<std::uint64_t> poset_keys_backtracking(std::size_t n);

}  // namespace detail

}  // namespace oppo
