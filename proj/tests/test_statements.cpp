#include <doctest.h>

#include "oppo/statements.hpp"
#include "oppo/instances.hpp"

using namespace oppo;

namespace {

ClassCStructure diamond() {
  RawStructure s;
  s.name = "D4";
  s.labels = {"0", "a", "b", "1"};
  std::vector<std::pair<std::size_t, std::size_t>> covers{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  s.leq = close_order(covers, OrderInputKind::Cover, 4);
  s.neg = {3, 2, 1, 0};
  return admit(std::move(s));
}

// direct table lookups, spelled out independently of eval_statement
bool by_hand(const ClassCStructure& s, std::size_t p, std::size_t q, StatementKind k) {
  auto leq = [&](std::size_t x, std::size_t y) { return s.leq(x, y); };
  switch (k) {
    case StatementKind::A: return leq(p, q);
    case StatementKind::E: return leq(p, s.neg(q));
    case StatementKind::I: return !leq(p, s.neg(q));
    case StatementKind::O: return !leq(p, q);
    case StatementKind::a: return leq(s.neg(p), s.neg(q));
    case StatementKind::e: return leq(s.neg(p), q);
    case StatementKind::i: return !leq(s.neg(p), q);
    case StatementKind::o: return !leq(s.neg(p), s.neg(q));
    default: return false;
  }
}

}  // namespace

TEST_CASE("statement evaluation on T3 matches the table lookups") {
  ClassCStructure t3 = three_valued();
  const std::size_t zero = *t3.index_of("0");
  const std::size_t half = *t3.index_of("1/2");
  const std::size_t one = *t3.index_of("1");

  CHECK(eval_statement({&t3, one, one}, StatementKind::A));
  CHECK(!eval_statement({&t3, one, one}, StatementKind::E));
  CHECK(eval_statement({&t3, one, half}, StatementKind::a));
  CHECK(eval_statement({&t3, one, zero}, StatementKind::U_abs));

  const StatementKind kinds[] = {StatementKind::A, StatementKind::E, StatementKind::I,
                                 StatementKind::O, StatementKind::a, StatementKind::e,
                                 StatementKind::i, StatementKind::o};
  for (std::size_t p = 0; p < 3; ++p) {
    for (std::size_t q = 0; q < 3; ++q) {
      for (auto k : kinds) {
        CHECK(eval_statement({&t3, p, q}, k) == by_hand(t3, p, q, k));
      }
    }
  }
}

TEST_CASE("contradictory pairs are definitional") {
  std::vector<ClassCStructure> structures{three_valued(), diamond()};
  for (const auto& s : structures) {
    for (std::size_t p = 0; p < s.size(); ++p) {
      for (std::size_t q = 0; q < s.size(); ++q) {
        StatementContext ctx{&s, p, q};
        CHECK(eval_statement(ctx, StatementKind::A) != eval_statement(ctx, StatementKind::O));
        CHECK(eval_statement(ctx, StatementKind::E) != eval_statement(ctx, StatementKind::I));
        CHECK(eval_statement(ctx, StatementKind::a) != eval_statement(ctx, StatementKind::o));
        CHECK(eval_statement(ctx, StatementKind::e) != eval_statement(ctx, StatementKind::i));
      }
    }
  }
}

TEST_CASE("lowercase statements are the uppercase ones at negated arguments") {
  std::vector<ClassCStructure> structures{three_valued(), diamond()};
  const std::pair<StatementKind, StatementKind> pairs[] = {
      {StatementKind::a, StatementKind::A},
      {StatementKind::e, StatementKind::E},
      {StatementKind::i, StatementKind::I},
      {StatementKind::o, StatementKind::O},
  };
  for (const auto& s : structures) {
    for (std::size_t p = 0; p < s.size(); ++p) {
      for (std::size_t q = 0; q < s.size(); ++q) {
        for (auto [low, up] : pairs) {
          CHECK(eval_statement({&s, p, q}, low) ==
                eval_statement({&s, s.neg(p), s.neg(q)}, up));
        }
      }
    }
  }
}

TEST_CASE("compound U and Y are disjunction and conjunction") {
  ClassCStructure t3 = three_valued();
  for (std::size_t p = 0; p < 3; ++p) {
    for (std::size_t q = 0; q < 3; ++q) {
      StatementContext ctx{&t3, p, q};
      const bool u = eval_statement(ctx, StatementKind::U_compound);
      const bool y = eval_statement(ctx, StatementKind::Y_compound);
      CHECK(u == (eval_statement(ctx, StatementKind::A) ||
                  eval_statement(ctx, StatementKind::E)));
      CHECK(y == (eval_statement(ctx, StatementKind::I) &&
                  eval_statement(ctx, StatementKind::O)));
      CHECK(y == !u);
    }
  }
}

TEST_CASE("abs_max picks the upper element of a comparable pair") {
  ClassCStructure t3 = three_valued();
  const std::size_t zero = *t3.index_of("0");
  const std::size_t half = *t3.index_of("1/2");
  const std::size_t one = *t3.index_of("1");

  CHECK(abs_max(t3, zero) == one);
  CHECK(abs_max(t3, half) == half);  // fixed point of the negation
  CHECK(abs_max(t3, one) == one);

  ClassCStructure d4 = diamond();
  CHECK(!abs_max(d4, *d4.index_of("a")));
  CHECK(!abs_max(d4, *d4.index_of("b")));
  CHECK(abs_max(d4, *d4.index_of("0")) == *d4.index_of("1"));
}

TEST_CASE("abs_max is the unique upper bound within the pair") {
  std::vector<ClassCStructure> structures{three_valued(), diamond()};
  for (const auto& s : structures) {
    for (std::size_t q = 0; q < s.size(); ++q) {
      auto m = abs_max(s, q);
      if (!m) continue;
      CHECK(s.leq(q, *m));
      CHECK(s.leq(s.neg(q), *m));
      const std::size_t lo = s.neg(*m);
      CHECK(s.leq(lo, q));
      CHECK(s.leq(lo, s.neg(q)));
    }
  }
}

TEST_CASE("abs statements raise when the maximum is undefined") {
  ClassCStructure d4 = diamond();
  const std::size_t a = *d4.index_of("a");
  CHECK_THROWS_AS(eval_statement({&d4, 0, a}, StatementKind::U_abs), AbsUndefinedError);
  CHECK_THROWS_AS(compound_reduction_equivalent(d4, 0, a), AbsUndefinedError);
}

TEST_CASE("compound statements reduce through the maximum wherever it exists") {
  ClassCStructure t3 = three_valued();
  const std::size_t zero = *t3.index_of("0");
  const std::size_t half = *t3.index_of("1/2");
  const std::size_t one = *t3.index_of("1");
  CHECK(compound_reduction_equivalent(t3, one, half));
  CHECK(compound_reduction_equivalent(t3, one, zero));
  CHECK(compound_reduction_equivalent(t3, zero, one));
  for (std::size_t p = 0; p < 3; ++p) {
    for (std::size_t q = 0; q < 3; ++q) {
      CHECK(compound_reduction_equivalent(t3, p, q));
    }
  }

  ClassCStructure d4 = diamond();
  for (std::size_t p = 0; p < 4; ++p) {
    for (std::size_t q = 0; q < 4; ++q) {
      if (!abs_max(d4, q)) continue;
      CHECK(compound_reduction_equivalent(d4, p, q));
    }
  }
}

TEST_CASE("statement tags round-trip through their display strings") {
  CHECK(to_string(StatementKind::A) == "A");
  CHECK(to_string(StatementKind::o) == "o");
  CHECK(to_string(StatementKind::U_compound) == "U");
  CHECK(to_string(StatementKind::U_abs) == "U");
  CHECK(statement_from_string("A") == StatementKind::A);
  CHECK(statement_from_string("a") == StatementKind::a);
  CHECK(statement_from_string("U") == StatementKind::U_compound);
  CHECK(statement_from_string("U", true) == StatementKind::U_abs);
  CHECK(statement_from_string("Y", true) == StatementKind::Y_abs);
  CHECK(!statement_from_string("Z"));
}
