// Carriers (X, neg, leq), axiom validation and admitted structures.
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oppo {

/// An element of a structure: positional index plus display label.
struct ElementId {
  std::size_t index = 0;
  std::string label;

  friend bool operator==(const ElementId&, const ElementId&) = default;
};

/// Square boolean relation table; entry (i,j) reads "element_i is below
/// element_j". All order queries are O(1) lookups.
class OrderTable {
 public:
  OrderTable() = default;
  explicit OrderTable(std::size_t n) : n_(n), bits_(n * n, 0) {}

  std::size_t size() const { return n_; }
  bool at(std::size_t i, std::size_t j) const { return bits_[i * n_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool v) { bits_[i * n_ + j] = v ? 1 : 0; }

  friend bool operator==(const OrderTable&, const OrderTable&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> bits_;
};

enum class OrderInputKind { Cover, Full };

/// Candidate tuple (X, neg, leq) before admission. `neg` is a total
/// self-map on element indices; involution is not assumed here, it is
/// what validation checks.
struct RawStructure {
  std::string name;
  std::vector<std::string> labels;
  OrderTable leq;
  std::vector<std::size_t> neg;

  std::size_t size() const { return labels.size(); }
  std::optional<std::size_t> index_of(std::string_view label) const;

  /// Dimensions match, neg total and in range, labels unique.
  bool well_formed(std::string* reason = nullptr) const;
};

/// Outcome of checking the four admission axioms. Every false flag
/// carries at least one witness that falsifies the axiom.
struct AxiomReport {
  bool involution_ok = false;
  bool reflexive_ok = false;
  bool antisymmetric_ok = false;
  bool transitive_ok = false;
  bool antitone_ok = false;
  bool zeros_nonempty_ok = false;

  std::vector<std::size_t> involution_witnesses;                 // x with neg(neg(x)) != x
  std::vector<std::size_t> reflexivity_witnesses;                // x not below itself
  std::vector<std::pair<std::size_t, std::size_t>> antisymmetry_witnesses;  // a != b, a<=b<=a
  std::vector<std::array<std::size_t, 3>> transitivity_witnesses;           // a<=b<=c, a!<=c
  std::vector<std::pair<std::size_t, std::size_t>> antitone_witnesses;      // leq(a,b) != leq(-b,-a)
  std::vector<std::size_t> zero_witnesses;  // when Z is empty: every x, since neg(x) !<= x

  bool all_ok() const {
    return involution_ok && reflexive_ok && antisymmetric_ok && transitive_ok &&
           antitone_ok && zeros_nonempty_ok;
  }

  std::string to_text(const RawStructure& s) const;
};

/// Raised when a table is malformed (dimension mismatch, partial neg map).
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AdmissionError;

/// A validated structure: all axioms hold and the zero set
/// {x : neg(x) <= x} is nonempty.
class ClassCStructure {
 public:
  const std::string& name() const { return raw_.name; }
  std::size_t size() const { return raw_.size(); }
  const std::vector<std::string>& labels() const { return raw_.labels; }
  const std::string& label(std::size_t i) const { return raw_.labels[i]; }
  std::optional<std::size_t> index_of(std::string_view label) const {
    return raw_.index_of(label);
  }

  bool leq(std::size_t i, std::size_t j) const { return raw_.leq.at(i, j); }
  std::size_t neg(std::size_t i) const { return raw_.neg[i]; }

  /// i <= j and i != j.
  bool strictly_below(std::size_t i, std::size_t j) const {
    return i != j && raw_.leq.at(i, j);
  }

  /// Sorted indices of {x : neg(x) <= x}.
  const std::vector<std::size_t>& zero_indices() const { return zeros_; }

  const RawStructure& raw() const { return raw_; }

 private:
  friend ClassCStructure admit(RawStructure s);
  ClassCStructure(RawStructure raw, std::vector<std::size_t> zeros)
      : raw_(std::move(raw)), zeros_(std::move(zeros)) {}

  RawStructure raw_;
  std::vector<std::size_t> zeros_;
};

/// Rejection carrying the full axiom report.
class AdmissionError : public std::runtime_error {
 public:
  AdmissionError(AxiomReport report, const std::string& what)
      : std::runtime_error(what), report_(std::move(report)) {}
  const AxiomReport& report() const { return report_; }

 private:
  AxiomReport report_;
};

/// Checks the four admission axioms, collecting witnesses for failures.
/// Throws StructuralError when the tables are malformed.
AxiomReport validate_axioms(const RawStructure& s);

/// Validates and, on success, returns the structure with its zero set.
/// Throws AdmissionError (carrying the report) when any axiom fails.
ClassCStructure admit(RawStructure s);

/// The zero set as elements, in index order.
std::vector<ElementId> zeros(const ClassCStructure& s);

/// Componentwise product; the class is closed under products.
ClassCStructure product(std::span<const ClassCStructure> parts);

/// Builds a relation table from pairs. Cover input is closed
/// reflexively and transitively; full input is taken verbatim plus the
/// reflexive pairs. Antisymmetry is never enforced here; validate_axioms
/// reports it with witnesses.
OrderTable close_order(std::span<const std::pair<std::size_t, std::size_t>> pairs,
                       OrderInputKind kind, std::size_t n);

}  // namespace oppo
