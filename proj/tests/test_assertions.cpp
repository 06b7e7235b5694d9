#include <doctest.h>

#include "rsos/assertion.hpp"
#include "rsos/parser.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace rsos;
using namespace rsos::testing;

namespace {

// Recursive evaluator over plain booleans, kept apart from the library's.
bool oracle_eval(const Label& l, const Assertion& f) {
  const EntitySet* parts[] = {&l.w, &l.r, &l.i, &l.p};
  switch (f.kind()) {
    case Assertion::Kind::subset: {
      const EntitySet& target = *parts[static_cast<int>(f.position())];
      for (EntityId e : f.entities().ids()) {
        if (!target.contains(e)) return false;
      }
      return true;
    }
    case Assertion::Kind::nonempty: return parts[static_cast<int>(f.position())]->size() > 0;
    case Assertion::Kind::disjunction: return oracle_eval(l, f.left()) || oracle_eval(l, f.right());
    case Assertion::Kind::conjunction: return oracle_eval(l, f.left()) && oracle_eval(l, f.right());
    case Assertion::Kind::exclusive_or: return oracle_eval(l, f.left()) != oracle_eval(l, f.right());
    case Assertion::Kind::negation: return !oracle_eval(l, f.operand());
  }
  return false;
}

}  // namespace

TEST_CASE("selection") {
  Running ex;
  const Label v{{ex.a, ex.b}, {ex.a, ex.b}, {ex.c}, {ex.b}};
  CHECK(select(v, Position::r) == EntitySet{ex.a, ex.b});
  CHECK(select(v, Position::p) == EntitySet{ex.b});
  CHECK(select(v, Position::i) == EntitySet{ex.c});
  CHECK(select(v, Position::w) == EntitySet{ex.a, ex.b});
  CHECK(select(Label{}, Position::w).empty());
  CHECK(to_char(Position::i) == 'I');
}

TEST_CASE("satisfaction on the first label of the running example") {
  Running ex;
  const Label v{{ex.a, ex.b}, {ex.a, ex.b}, {ex.c}, {ex.b}};
  const auto f1 = parse_assertion("a subset R", ex.u);
  const auto f2 = parse_assertion("{a,b} subset P", ex.u);
  const auto f4 = parse_assertion("{a,b} subset R and c subset I", ex.u);
  const auto f5 = Assertion::negation(f4);
  CHECK(eval_assertion(v, f1));
  CHECK_FALSE(eval_assertion(v, f2));
  CHECK(eval_assertion(v, f4));
  CHECK_FALSE(eval_assertion(v, f5));
  CHECK(eval_assertion(v, Assertion::nonempty(Position::p)));
  CHECK_FALSE(eval_assertion(Label{}, Assertion::nonempty(Position::p)));
}

TEST_CASE("label equivalence") {
  Running ex;
  const Label v{{ex.a, ex.b}, {ex.a, ex.b}, {ex.c}, {ex.b}};
  const Label w{{ex.a, ex.b, ex.c}, {ex.c}, {}, {}};
  const auto f1 = Assertion::subset({ex.a}, Position::r);
  CHECK(label_equiv(f1, v, v));
  // v has a in R, w does not.
  CHECK(oracle_eval(v, f1) != oracle_eval(w, f1));
  CHECK_FALSE(label_equiv(f1, v, w));
  CHECK(label_equiv(Assertion::nonempty(Position::w), v, w));
}

TEST_CASE("printing") {
  Running ex;
  CHECK(to_string(parse_assertion("(a in R) xor (c in R)", ex.u), ex.u) == "a in R xor c in R");
  CHECK(to_string(parse_assertion("(a in R or b in R) and !(c in W)", ex.u), ex.u) == "(a in R or b in R) and !(c in W)");
  CHECK(to_string(Assertion::nonempty(Position::p), ex.u) == "? in P");
  CHECK(to_string(Assertion::subset({ex.a, ex.b}, Position::w), ex.u) == "{a,b} subset W");
}

TEST_CASE("the E position is W") {
  Running ex;
  CHECK(parse_assertion("c in E", ex.u) == Assertion::subset({ex.c}, Position::w));
}

TEST_CASE("algebraic identities on random labels") {
  Rng rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    const auto l = random_label(rng, 5);
    const auto f = random_assertion(rng, 5, 3);
    const auto g = random_assertion(rng, 5, 3);
    CHECK(eval_assertion(l, f) == oracle_eval(l, f));
    CHECK(eval_assertion(l, Assertion::negation(f)) == !eval_assertion(l, f));
    CHECK(eval_assertion(l, Assertion::exclusive_or(f, g)) == (eval_assertion(l, f) != eval_assertion(l, g)));
    CHECK(eval_assertion(l, Assertion::disjunction(f, g)) ==
          eval_assertion(l, Assertion::negation(Assertion::conjunction(Assertion::negation(f), Assertion::negation(g)))));
  }
}

TEST_CASE("label equivalence is an equivalence relation") {
  Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const auto f = random_assertion(rng, 4, 3);
    const auto u = random_label(rng, 4);
    const auto v = random_label(rng, 4);
    const auto w = random_label(rng, 4);
    CHECK(label_equiv(f, u, u));
    CHECK(label_equiv(f, u, v) == label_equiv(f, v, u));
    if (label_equiv(f, u, v) && label_equiv(f, v, w)) CHECK(label_equiv(f, u, w));
  }
}
