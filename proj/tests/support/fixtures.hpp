#pragma once

// The running example built directly from constructors: S = {a,b,c},
// one reaction (ab, c, b) and the context sequence ab, a, c, c.

#include <vector>

#include "rsos/process.hpp"

namespace rsos::testing {

struct Running {
  Universe u{"a", "b", "c"};
  EntityId a = 0, b = 1, c = 2;
  Reaction r{EntitySet{0, 1}, EntitySet{2}, EntitySet{1}};
  std::vector<EntitySet> gamma{EntitySet{0, 1}, EntitySet{0}, EntitySet{2}, EntitySet{2}};

  ContextExpr seq(std::vector<EntitySet> sets) const { return sequence_context(sets); }

  Process system(EntitySet state, ContextExpr k) const { return Process(Mixture({r}, std::move(state), {std::move(k)})); }

  Process p0() const { return system({}, seq(gamma)); }
  Process p1() const { return system({b}, seq({{a}, {c}, {c}})); }
  Process p2() const { return system({b}, seq({{c}, {c}})); }
  Process p3() const { return system({}, seq({{c}})); }
  Process p4() const { return system({}, ContextExpr::nil()); }

  ContextExpr k2() const {
    return ContextExpr::rec("X", ContextExpr::prefix({a, b}, ContextExpr::prefix({a}, ContextExpr::var("X"))));
  }
};

}  // namespace rsos::testing
