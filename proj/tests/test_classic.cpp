#include <doctest.h>

#include <set>

#include "rsos/classic.hpp"
#include "rsos/lts.hpp"
#include "support/checks.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace rsos;
using namespace rsos::testing;

namespace {

// Result function over std::set, written independently of EntitySet's
// bit operations.
using Plain = std::set<EntityId>;

Plain plain(const EntitySet& s) {
  const auto ids = s.ids();
  return Plain(ids.begin(), ids.end());
}

Plain oracle_res(const std::vector<Reaction>& reactions, const Plain& w) {
  Plain out;
  for (const auto& a : reactions) {
    bool ok = true;
    for (EntityId x : a.reactants().ids()) ok = ok && w.count(x) == 1;
    for (EntityId x : a.inhibitors().ids()) ok = ok && w.count(x) == 0;
    if (ok) {
      for (EntityId x : a.products().ids()) out.insert(x);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("result function") {
  Running ex;
  CHECK(res(ex.r, {ex.a, ex.b}) == EntitySet{ex.b});
  CHECK(res(ex.r, {ex.b, ex.c}).empty());
  CHECK(res(ex.r, {}).empty());
  const std::vector<Reaction> one{ex.r};
  CHECK(res_all(one, {ex.a, ex.b}) == EntitySet{ex.b});
  CHECK(res_all(std::vector<Reaction>{}, {ex.a, ex.b, ex.c}).empty());

  // (a,b,c) is enabled by {a}; (b,a,d) needs b and is inhibited by a.
  const Universe u{"a", "b", "c", "d"};
  const std::vector<Reaction> two{Reaction({0}, {1}, {2}), Reaction({1}, {0}, {3})};
  CHECK(res_all(two, {0}) == EntitySet{2});
  CHECK(plain(res_all(two, {0})) == oracle_res(two, {0}));
}

TEST_CASE("the running example as an interactive process") {
  Running ex;
  const std::vector<Reaction> a{ex.r};
  const auto run = run_interactive(a, ex.gamma);
  CHECK(run.states.tau == std::vector<EntitySet>{{ex.a, ex.b}, {ex.a, ex.b}, {ex.b, ex.c}, {ex.c}});
  CHECK(run.process.delta == std::vector<EntitySet>{{}, {ex.b}, {ex.b}, {}});
  CHECK(run.process.gamma == ex.gamma);
  CHECK(run.final_result.empty());
}

TEST_CASE("empty contexts enable nothing") {
  Running ex;
  const std::vector<Reaction> a{ex.r};
  const std::vector<EntitySet> gamma(4);
  const auto run = run_interactive(a, gamma);
  for (const auto& d : run.process.delta) CHECK(d.empty());
  for (const auto& w : run.states.tau) CHECK(w.empty());
}

TEST_CASE("sequence shift") {
  Running ex;
  CHECK(sequence_shift(ex.gamma, 0) == ex.gamma);
  CHECK(sequence_shift(ex.gamma, 2) == std::vector<EntitySet>{{ex.c}, {ex.c}});
  CHECK(sequence_shift(ex.gamma, 4).empty());
}

TEST_CASE("correspondence on fixed instances") {
  Running ex;
  const std::vector<Reaction> a{ex.r};
  SUBCASE("the running example") {
    const auto report = correspondence_check(a, ex.gamma, {true, {}});
    CHECK(report.passed);
    CHECK(report.steps_checked == 4);
  }
  SUBCASE("one step, a self-sustaining reaction") {
    const Universe u{"a", "b"};
    const std::vector<Reaction> a1{Reaction({0}, {1}, {0})};
    const std::vector<EntitySet> gamma{{0}};
    const auto run = run_interactive(a1, gamma);
    CHECK(run.states.tau[0] == EntitySet{0});
    CHECK(run.final_result == EntitySet{0});
    const auto report = correspondence_check(a1, gamma);
    CHECK(report.passed);
    CHECK(report.steps_checked == 1);
  }
  SUBCASE("an empty sequence is rejected") { CHECK_FALSE(correspondence_check(a, std::vector<EntitySet>{}).passed); }
}

TEST_CASE("correspondence on random instances") {
  Rng rng(1);
  std::size_t checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = uniform(rng, 2, 6);
    const auto reactions = random_reactions(rng, n, 4);
    const auto gamma = random_sequence(rng, n, 6);

    // Test-side recurrence as the oracle for the library's interactive run.
    const auto run = run_interactive(reactions, gamma);
    Plain d;
    for (std::size_t i = 0; i < gamma.size(); ++i) {
      CHECK(plain(run.process.delta[i]) == d);
      Plain w = plain(gamma[i]);
      w.insert(d.begin(), d.end());
      CHECK(plain(run.states.tau[i]) == w);
      d = oracle_res(reactions, w);
    }
    CHECK(plain(run.final_result) == d);

    const auto report = correspondence_check(reactions, gamma, {true, {}});
    INFO(report.message);
    CHECK(report.passed);
    checked += report.steps_checked;
  }
  CHECK(checked >= 200);
}

TEST_CASE("the encoded run is a chain in the transition system") {
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const auto reactions = random_reactions(rng, 5, 3);
    const auto gamma = random_sequence(rng, 5, 6);
    const Lts lts = build_lts(encode(reactions, gamma, {}, 0));
    CHECK(lts.transitions.size() == gamma.size());
    CHECK(lts.deadlock_count() == 1);
  }
}

TEST_CASE("res_all is monotone in the reaction set and a union") {
  Rng rng(33);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_reactions(rng, 5, 4);
    auto b = a;
    b.push_back(random_reaction(rng, 5));
    const auto w = random_set(rng, 5, 0.5);
    CHECK(res_all(a, w).subset_of(res_all(b, w)));
    EntitySet each;
    for (const auto& r : b) each |= res(r, w);
    CHECK(each == res_all(b, w));
    CHECK(plain(res_all(b, w)) == oracle_res(b, plain(w)));
  }
}

TEST_CASE("running a shifted sequence from its state continues the run") {
  Rng rng(44);
  for (int trial = 0; trial < 100; ++trial) {
    const auto reactions = random_reactions(rng, 5, 4);
    const auto gamma = random_sequence(rng, 5, 6);
    const auto run = run_interactive(reactions, gamma);
    for (std::size_t k = 0; k < gamma.size(); ++k) {
      // Fold D_k into the first context of the suffix.
      auto suffix = sequence_shift(gamma, k);
      suffix[0] |= run.process.delta[k];
      const auto tail = run_interactive(reactions, suffix);
      for (std::size_t j = 0; j < suffix.size(); ++j) CHECK(tail.states.tau[j] == run.states.tau[k + j]);
      CHECK(tail.final_result == run.final_result);
    }
  }
}
