#pragma once

#include <optional>

#include "ncode/rational.hpp"

namespace ncode {

// Solves the square system A x = b. Returns nullopt when A is singular.
std::optional<RatVec> solve_square(RatMat A, RatVec b);

int rank(RatMat A);

// Basis of {x : A x = 0}.
std::vector<RatVec> nullspace(RatMat A);

// Hyperplane a.x = b through the given affinely spanning points, or nullopt
// when they span an affine set of lower dimension (or the nullspace is
// more than one-dimensional).
std::optional<std::pair<RatVec, Rat>> hyperplane_through(
    const std::vector<RatVec>& pts);

}  // namespace ncode
