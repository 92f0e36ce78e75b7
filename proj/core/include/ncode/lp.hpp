#pragma once

#include "ncode/rational.hpp"

namespace ncode {

enum class LpStatus { Infeasible, Unbounded, Optimal };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rat value = 0;
  RatVec x;  // primal solution when Optimal
};

// maximize c.y subject to A y <= b, y >= 0 (exact two-phase simplex,
// Bland's rule).
LpResult simplex_max(const RatMat& A, const RatVec& b, const RatVec& c);

// One linear condition on a free point x: a.x <= b, a.x < b (strict),
// or a.x = b (eq; strict ignored).
struct LinCon {
  RatVec a;
  Rat b;
  bool strict = false;
  bool eq = false;
};

struct LinFeas {
  bool feasible = false;
  RatVec x;
};

// Decides whether {x in R^d : cons} is nonempty and returns a witness.
// Strict inequalities are exact: the system is solved with an auxiliary
// margin variable delta (a.x + delta <= b per strict row, delta <= 1) and
// declared feasible iff the maximal delta is positive.
LinFeas lin_feasible(const std::vector<LinCon>& cons, int d);

// maximize c.x over {x : cons}, x free; strict rows are rejected.
LpResult lin_maximize(const std::vector<LinCon>& cons, int d, const RatVec& c);

// Feasibility of: exists lambda >= 0, sum lambda = 1, such that
// x = sum lambda_i pts[i] satisfies cons.
LinFeas hull_feasible(const std::vector<RatVec>& pts,
                      const std::vector<LinCon>& cons);

}  // namespace ncode
