#include <doctest.h>

#include <algorithm>

#include "rsos/error.hpp"
#include "rsos/process.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace rsos;
using namespace rsos::testing;

TEST_CASE("entity sets behave as finite sets") {
  EntitySet s{3, 1, 70};
  CHECK(s.size() == 3);
  CHECK(s.contains(70));
  CHECK_FALSE(s.contains(2));
  CHECK(s.ids() == std::vector<EntityId>{1, 3, 70});
  s.erase(70);
  CHECK(s == EntitySet{1, 3});
  CHECK((EntitySet{1, 2} | EntitySet{3}) == EntitySet{1, 2, 3});
  CHECK((EntitySet{1, 2} & EntitySet{2, 3}) == EntitySet{2});
  CHECK((EntitySet{1, 2} - EntitySet{2, 3}) == EntitySet{1});
  CHECK(EntitySet{}.subset_of(EntitySet{1}));
  CHECK_FALSE(EntitySet{1}.intersects(EntitySet{2}));

  int subsets = 0;
  EntitySet{0, 1, 2}.for_each_subset([&](const EntitySet&) { ++subsets; });
  CHECK(subsets == 8);
}

TEST_CASE("set rendering is sorted by name") {
  Universe u{"b", "a", "c"};
  const EntitySet s{0, 1};
  CHECK(join_names(s, u) == "a,b");
  CHECK(brace_set(s, u) == "{a,b}");
  CHECK(bracket_set(s, u) == "[a,b]");
  CHECK(join_names({}, u, "-") == "-");
  CHECK_THROWS_AS(u.id("zz"), std::out_of_range);
}

TEST_CASE("reaction invariants are enforced") {
  CHECK_NOTHROW(Reaction({0, 1}, {2}, {1}));
  CHECK_THROWS_AS(Reaction({}, {2}, {1}), ReactionInvariantViolation);
  CHECK_THROWS_AS(Reaction({0}, {}, {1}), ReactionInvariantViolation);
  CHECK_THROWS_AS(Reaction({0}, {1}, {}), ReactionInvariantViolation);
  CHECK_THROWS_AS(Reaction({0}, {0}, {1}), ReactionInvariantViolation);
}

TEST_CASE("choice is an idempotent commutative monoid with 0 as unit") {
  const auto x = ContextExpr::prefix({0}, ContextExpr::nil());
  const auto y = ContextExpr::prefix({1}, ContextExpr::nil());
  CHECK(ContextExpr::choice(x, y) == ContextExpr::choice(y, x));
  CHECK(ContextExpr::choice(x, x) == x);
  CHECK(ContextExpr::choice(x, ContextExpr::nil()) == x);
  CHECK(ContextExpr::choice(ContextExpr::choice(x, y), x) == ContextExpr::choice(x, y));
  CHECK(ContextExpr::choice(std::vector<ContextExpr>{}).is_nil());
}

TEST_CASE("substitution") {
  Running ex;
  const auto k2 = ex.k2();
  const auto body = k2.body();

  SUBCASE("unfolding the recursive context") {
    const auto expected = ContextExpr::prefix({ex.a, ex.b}, ContextExpr::prefix({ex.a}, k2));
    CHECK(substitute(body, "X", k2) == expected);
  }
  SUBCASE("nil has no free occurrence") { CHECK(substitute(ContextExpr::nil(), "X", k2).is_nil()); }
  SUBCASE("an inner binder for the same variable shadows") {
    const auto inner = ContextExpr::rec("X", ContextExpr::prefix({ex.c}, ContextExpr::var("X")));
    CHECK(substitute(inner, "X", k2) == inner);
  }
  SUBCASE("binders are renamed to avoid capture") {
    // (rec Y. {a}.X)[Y / X] must not capture Y.
    const auto k = ContextExpr::rec("Y", ContextExpr::prefix({ex.a}, ContextExpr::var("X")));
    const auto out = substitute(k, "X", ContextExpr::var("Y"));
    REQUIRE(out.kind() == ContextExpr::Kind::rec);
    CHECK(out.name() != "Y");
    CHECK(free_variables(out) == std::set<std::string>{"Y"});
  }
}

TEST_CASE("guardedness") {
  Running ex;
  CHECK_NOTHROW(check_guarded(ex.k2()));
  CHECK_THROWS_AS(check_guarded(ContextExpr::rec("X", ContextExpr::var("X"))), UnguardedRecursion);
  const auto mixed = ContextExpr::rec(
      "X", ContextExpr::choice(ContextExpr::prefix({ex.c}, ContextExpr::var("X")), ContextExpr::var("X")));
  try {
    check_guarded(mixed);
    FAIL("expected UnguardedRecursion");
  } catch (const UnguardedRecursion& e) {
    CHECK(e.variable() == "X");
  }
}

TEST_CASE("normalize merges entity-set components") {
  Running ex;
  SUBCASE("the empty set is the parallel unit") {
    std::vector<Component> parts{EntitySet{}, EntitySet{ex.b}};
    CHECK(normalize(parts).state() == EntitySet{ex.b});
  }
  SUBCASE("sets are unioned") {
    std::vector<Component> parts{EntitySet{ex.a}, EntitySet{ex.b}};
    CHECK(normalize(parts).state() == EntitySet{ex.a, ex.b});
  }
  SUBCASE("an empty state is discarded next to reactions and contexts") {
    const auto k = ex.seq(ex.gamma);
    std::vector<Component> with{ex.r, EntitySet{}, k};
    std::vector<Component> without{ex.r, k};
    CHECK(normalize(with) == normalize(without));
  }
  SUBCASE("duplicate reactions collapse, duplicate contexts do not") {
    const auto k = ex.seq({{ex.a}});
    std::vector<Component> parts{ex.r, ex.r, k, k};
    const auto m = normalize(parts);
    CHECK(m.reactions().size() == 1);
    CHECK(m.contexts().size() == 2);
  }
}

TEST_CASE("normalize is idempotent and insensitive to component order") {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = uniform(rng, 2, 5);
    std::vector<Component> parts;
    const std::size_t count = uniform(rng, 0, 7);
    for (std::size_t k = 0; k < count; ++k) {
      switch (uniform(rng, 0, 2)) {
        case 0: parts.emplace_back(random_reaction(rng, n)); break;
        case 1: parts.emplace_back(random_set(rng, n)); break;
        default: parts.emplace_back(random_context(rng, n, 3)); break;
      }
    }
    const auto m = normalize(parts);
    CHECK(normalize(m) == m);
    auto shuffled = parts;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const auto m2 = normalize(shuffled);
    CHECK(m2 == m);
    CHECK(m2.hash() == m.hash());
    CHECK(Process(m) == Process(m2));
  }
}

TEST_CASE("parallel composition agrees with normalizing the concatenation") {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_process(rng, 4, 3, 3, 2);
    const auto q = random_process(rng, 4, 3, 3, 2);
    std::vector<Component> parts;
    for (const auto* m : {&p.mixture(), &q.mixture()}) {
      for (const auto& r : m->reactions()) parts.emplace_back(r);
      parts.emplace_back(m->state());
      for (const auto& k : m->contexts()) parts.emplace_back(k);
    }
    CHECK(parallel(p.mixture(), q.mixture()) == normalize(parts));
  }
}

TEST_CASE("encoding an interactive process") {
  Running ex;
  SUBCASE("step 0 is the reaction in parallel with the whole sequence") {
    const auto p = encode(std::vector<Reaction>{ex.r}, ex.gamma, {}, 0);
    CHECK(p == ex.p0());
    CHECK(to_string(p, ex.u) == "[([a,b] -| [c] -> [b]) | {a,b}.{a}.{c}.{c}.0]");
  }
  SUBCASE("a single empty context") {
    const std::vector<EntitySet> gamma{EntitySet{}};
    const auto p = encode(std::vector<Reaction>{ex.r}, gamma, {}, 0);
    CHECK(p == ex.system({}, ContextExpr::prefix({}, ContextExpr::nil())));
  }
  SUBCASE("step 2 carries D_2 = {b}") {
    const auto p = encode(std::vector<Reaction>{ex.r}, ex.gamma, {ex.b}, 2);
    const Process expected(Mixture({ex.r}, {ex.b}, {ContextExpr::prefix({ex.c}, ContextExpr::prefix({ex.c}, {}))}));
    CHECK(p == expected);
  }
  SUBCASE("index past the sequence") {
    CHECK_THROWS_AS(encode(std::vector<Reaction>{ex.r}, ex.gamma, {}, 4), IndexOutOfRange);
  }
}

TEST_CASE("encoded contexts are guarded and deterministic") {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto gamma = random_sequence(rng, 5, 6);
    const auto reactions = random_reactions(rng, 5, 4);
    for (std::size_t i = 0; i < gamma.size(); ++i) {
      const auto p = encode(reactions, gamma, random_set(rng, 5), i);
      for (const auto& k : p.contexts()) {
        CHECK_NOTHROW(check_guarded(k));
        CHECK(is_deterministic(k));
      }
    }
  }
}

TEST_CASE("substitution leaves the reactions of a system untouched") {
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    auto p = random_process(rng, 4, 3, 3);
    std::vector<ContextExpr> unfolded;
    for (const auto& k : p.contexts()) {
      unfolded.push_back(k.kind() == ContextExpr::Kind::rec ? substitute(k.body(), k.name(), k) : k);
    }
    const Process q(Mixture(p.reactions(), p.state(), unfolded));
    CHECK(q.reactions() == p.reactions());
  }
}

TEST_CASE("random contexts are closed and guarded") {
  Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const auto k = random_context(rng, 4, 5);
    CHECK(is_closed(k));
    CHECK_NOTHROW(check_guarded(k));
  }
}
