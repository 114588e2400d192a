#pragma once

#include <vector>

#include "sdres/bigint.hpp"

namespace sdres {

struct LpResult {
  bool feasible = false;
  std::vector<Rational> x;
  std::vector<int> basis;          // basic variable per remaining row
  Rational objective = 0;
  bool primal_degenerate = false;  // some basic variable is zero
  bool dual_degenerate = false;    // some nonbasic reduced cost is zero
};

// min c.x subject to A x = b, x >= 0, by the two-phase simplex method over Q
// with Bland's rule. With `phase_one_only` only feasibility is decided.
LpResult solve_lp(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                  const std::vector<Rational>& c, bool phase_one_only = false);

}  // namespace sdres
