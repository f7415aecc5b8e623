#include "oppo/statements.hpp"

namespace oppo {

std::string_view to_string(StatementKind k) {
  switch (k) {
    case StatementKind::A: return "A";
    case StatementKind::E: return "E";
    case StatementKind::I: return "I";
    case StatementKind::O: return "O";
    case StatementKind::a: return "a";
    case StatementKind::e: return "e";
    case StatementKind::i: return "i";
    case StatementKind::o: return "o";
    case StatementKind::U_compound:
    case StatementKind::U_abs: return "U";
    case StatementKind::Y_compound:
    case StatementKind::Y_abs: return "Y";
  }
  return "?";
}

std::optional<StatementKind> statement_from_string(std::string_view tag,
                                                   bool abs_reduction) {
  if (tag == "A") return StatementKind::A;
  if (tag == "E") return StatementKind::E;
  if (tag == "I") return StatementKind::I;
  if (tag == "O") return StatementKind::O;
  if (tag == "a") return StatementKind::a;
  if (tag == "e") return StatementKind::e;
  if (tag == "i") return StatementKind::i;
  if (tag == "o") return StatementKind::o;
  if (tag == "U") return abs_reduction ? StatementKind::U_abs : StatementKind::U_compound;
  if (tag == "Y") return abs_reduction ? StatementKind::Y_abs : StatementKind::Y_compound;
  return std::nullopt;
}

std::optional<std::size_t> abs_max(const ClassCStructure& s, std::size_t q) {
  const std::size_t nq = s.neg(q);
  if (s.leq(q, nq)) return nq;
  if (s.leq(nq, q)) return q;
  return std::nullopt;
}

bool eval_statement(const StatementContext& ctx, StatementKind k) {
  const ClassCStructure& s = *ctx.structure;
  const std::size_t p = ctx.p;
  const std::size_t q = ctx.q;
  const std::size_t np = s.neg(p);
  const std::size_t nq = s.neg(q);

  switch (k) {
    case StatementKind::A: return s.leq(p, q);
    case StatementKind::E: return s.leq(p, nq);
    case StatementKind::I: return !s.leq(p, nq);
    case StatementKind::O: return !s.leq(p, q);
    case StatementKind::a: return s.leq(np, nq);
    case StatementKind::e: return s.leq(np, q);
    case StatementKind::i: return !s.leq(np, q);
    case StatementKind::o: return !s.leq(np, nq);
    case StatementKind::U_compound: return s.leq(p, q) || s.leq(p, nq);
    case StatementKind::Y_compound: return !s.leq(p, q) && !s.leq(p, nq);
    case StatementKind::U_abs:
    case StatementKind::Y_abs: {
      auto m = abs_max(s, q);
      if (!m) {
        throw AbsUndefinedError("max{Q,neg Q} undefined: '" + s.label(q) + "' and '" +
                                s.label(nq) + "' are incomparable");
      }
      const bool below = s.leq(p, *m);
      return k == StatementKind::U_abs ? below : !below;
    }
  }
  return false;
}

bool compound_reduction_equivalent(const ClassCStructure& s, std::size_t p,
                                   std::size_t q) {
  StatementContext ctx{&s, p, q};
  // evaluating the abs variants throws when |Q| is undefined
  const bool u_abs = eval_statement(ctx, StatementKind::U_abs);
  const bool y_abs = eval_statement(ctx, StatementKind::Y_abs);
  const bool u_comp = eval_statement(ctx, StatementKind::U_compound);
  const bool y_comp = eval_statement(ctx, StatementKind::Y_compound);
  return u_comp == u_abs && y_comp == y_abs;
}

}  // namespace oppo
