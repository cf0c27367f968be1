#pragma once

#include "wmst/graph.hpp"

namespace wmst::testing {

// Triangle u1 u2 u3 with edges e1 = (u1,u2), e2 = (u2,u3), e3 = (u1,u3),
// predictions (2,3,2) and true weights (1,1,2). Ids are 0-based.
inline WmstInstance small_triangle() {
  Graph g(3, {{0, 1}, {1, 2}, {0, 2}});
  return WmstInstance(std::move(g), {Rational(2), Rational(3), Rational(2)}, {Rational(1), Rational(1), Rational(2)});
}

inline WmstInstance perfect(const WmstInstance& inst) { return inst.with_predicted(inst.actual()); }

}  // namespace wmst::testing
