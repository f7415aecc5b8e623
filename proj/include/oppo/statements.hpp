// The ten opposition statements evaluated at a point (P,Q).
#pragma once

#include <optional>
#include <stdexcept>
#include <string_view>

#include "oppo/core.hpp"

namespace oppo {

/// A is "P below Q", E is "P below neg Q", I and O are their negations.
/// Lowercase letters are the same statements with P,Q replaced by their
/// negations. U and Y come in a compound variant (A or E, I and O) and a
/// max-reduced variant written against |Q| = max{Q, neg Q}.
enum class StatementKind {
  A,
  E,
  I,
  O,
  a,
  e,
  i,
  o,
  U_compound,
  Y_compound,
  U_abs,
  Y_abs,
};

/// Display tag: "A".."o" plus "U"/"Y" for either variant of the compounds.
std::string_view to_string(StatementKind k);

/// Parses the CLI tags A,E,I,O,a,e,i,o,U,Y. U and Y resolve to the
/// compound variant unless abs_reduction is set.
std::optional<StatementKind> statement_from_string(std::string_view tag,
                                                   bool abs_reduction = false);

struct StatementContext {
  const ClassCStructure* structure = nullptr;
  std::size_t p = 0;
  std::size_t q = 0;
};

/// Raised when U_abs/Y_abs is evaluated at a Q incomparable with its negation.
class AbsUndefinedError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

bool eval_statement(const StatementContext& ctx, StatementKind k);

/// max{Q, neg Q} when the two are comparable, otherwise empty. When both
/// directions hold the two coincide by antisymmetry.
std::optional<std::size_t> abs_max(const ClassCStructure& s, std::size_t q);

/// True iff the compound U/Y agree with their |Q|-reduced forms at (P,Q).
/// Requires |Q| to exist; throws AbsUndefinedError otherwise.
bool compound_reduction_equivalent(const ClassCStructure& s, std::size_t p,
                                   std::size_t q);

}  // namespace oppo
