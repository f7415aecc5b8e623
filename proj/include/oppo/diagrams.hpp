// Aristotelian relations, theorem claim sets, verification and rendering.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oppo/statements.hpp"

namespace oppo {

enum class Shape { Square, Cube, Hexagon };

std::string_view to_string(Shape s);
std::optional<Shape> shape_from_string(std::string_view tag);

/// Contrary: never both true. Subcontrary: never both false.
/// Contradictory: always opposite. SubImplication: first implies second at
/// every admissible point; SuperImplication is the converse.
enum class RelationKind {
  Contrary,
  Subcontrary,
  Contradictory,
  SubImplication,
  SuperImplication,
};

constexpr std::size_t kRelationCount = 5;

std::string_view to_string(RelationKind k);
std::optional<RelationKind> relation_from_string(std::string_view tag);

/// Pointwise reading of a relation on two truth values.
bool relation_holds_at(bool v1, bool v2, RelationKind k);

/// Side conditions selecting the admissible (P,Q). import_forward asks for
/// a zero strictly below P, import_backward for one strictly below neg P.
struct Hypothesis {
  bool import_forward = false;
  bool import_backward = false;
  bool distinct = false;  // P != Q
  bool nondual = false;   // P != neg Q

  static Hypothesis forward() { return {true, false, false, false}; }
  static Hypothesis none() { return {}; }

  bool admits(const ClassCStructure& s, std::size_t p, std::size_t q) const;
  std::string to_string() const;

  friend bool operator==(const Hypothesis&, const Hypothesis&) = default;
};

/// One atomic assertion of a theorem, carried as data so the harness can
/// report per-claim verdicts and probe weakened hypotheses.
struct Claim {
  RelationKind kind;
  StatementKind s1;
  StatementKind s2;
  Hypothesis given;
  // set on the two cube claims whose stated hypothesis is not sufficient
  bool hypothesis_sensitive = false;

  std::string to_string() const;  // e.g. Contrary(a,e)
};

enum class Verdict { Holds, Violated, Vacuous };

std::string_view to_string(Verdict v);

struct ClaimResult {
  Claim claim;
  Verdict verdict = Verdict::Vacuous;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // first (P,Q) falsifying
  std::size_t admissible_points = 0;
};

struct VerificationReport {
  Shape shape = Shape::Square;
  std::string structure_name;
  Hypothesis hypothesis;
  bool abs_reduction = false;
  std::size_t admissible_point_count = 0;
  std::vector<ClaimResult> results;

  bool all_hold() const;
  std::size_t count(Verdict v) const;
  std::string to_text(const ClassCStructure* s = nullptr) const;
};

struct PairClassification {
  std::vector<RelationKind> relations;
  std::size_t admissible_points = 0;

  bool vacuous() const { return admissible_points == 0; }
};

/// Every relation holding at all admissible (P,Q). With an empty
/// admissible set all five relations are returned, flagged vacuous.
PairClassification classify_pair(const ClassCStructure& s, StatementKind s1,
                                 StatementKind s2, const Hypothesis& h);

/// The claim list for a shape, stamped with the hypothesis it will be
/// checked under. The cube's eight conditional claims appear only when
/// both distinct and nondual are enabled.
std::vector<Claim> expected_claims(Shape shape, const Hypothesis& h);

struct VerifyOptions {
  Hypothesis hypothesis = Hypothesis::forward();
  /// Check hexagon U/Y in the |Q|-reduced form, restricting those claims
  /// to points where |Q| exists.
  bool abs_reduction = false;
  /// When set, restrict the scan to this single point.
  std::optional<std::pair<std::size_t, std::size_t>> at_point;
};

VerificationReport verify_shape(const ClassCStructure& s, Shape shape,
                                const VerifyOptions& opts = {});

/// First admissible (P,Q), in element index order with P major, where the
/// claim's relation fails. The hypothesis is the caller's probe and may be
/// weaker or stronger than the claim's own.
std::optional<std::pair<std::size_t, std::size_t>> counterexample_search(
    const ClassCStructure& s, const Claim& c, const Hypothesis& h);

struct Diagram {
  struct Edge {
    StatementKind s1;
    StatementKind s2;
    std::vector<RelationKind> relations;
  };
  Shape shape = Shape::Square;
  std::vector<StatementKind> vertices;
  std::vector<Edge> edges;
};

/// The figure for a shape: 4 vertices / 6 edges, 8 / 28, or 6 / 14. The
/// cube carries four subalternation edges beyond its theorem claims so
/// that every pair of vertices is linked.
Diagram build_diagram(Shape shape);

/// Deterministic DOT text. Implications are directed solid edges,
/// contraries dashed, subcontraries dotted, contradictories bold. With a
/// report, violated claims are colored red and vacuous ones gray.
std::string render_dot(const Diagram& d, const VerificationReport* verdicts = nullptr);

}  // namespace oppo
