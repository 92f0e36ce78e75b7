#pragma once

#include <cstdint>
#include <optional>

#include "ncode/geometry.hpp"

namespace ncode {

// An arrangement of open petals whose common intersection is the center.
struct Sunflower {
  int dim = 0;
  int k = 0;
  std::vector<HPolytope> petals;  // open
  HPolytope center;               // open; the pooled petal constraints
  std::vector<RatVec> points;     // one sample point per petal
  bool certified = false;  // flexibility confirmed by a code computation
};

// Smallest k such that the code is a k-flexible sunflower code: [n] must be
// present, and k is the largest weight among the other codewords (0 when
// only the empty word remains). nullopt when [n] is missing.
std::optional<int> is_k_flexible(const Code& c);

// The arrangement witnessing that sampled petal points can miss the center
// when n = dim * k: one long box petal per coordinate direction, k copies
// each (skew shifts the copies so their walls differ), sample points at the
// petal tips. The hull of the points provably misses the center.
Sunflower build_counterexample(int dim, int k, bool skew);

// A random k-flexible sunflower with n petals: the coordinate construction
// with copies shifted along their own axis (plus one extra petal along the
// negative diagonal when n = dim*k + 1), a random petal length per petal,
// a random invertible affine image, and a random rational sample point
// inside each petal. Requires n <= dim*k + 1.
Sunflower random_flexible(int dim, int k, int n, uint64_t seed);

// Whether the hull of the sunflower's sample points meets its center.
bool sunflower_hull_meets(const Sunflower& s);

// One randomized experiment: build random_flexible(dim, k, n, seed) and
// report whether the sampled points' hull meets the center.
bool flexible_trial(int dim, int k, int n, uint64_t seed);

// Recomputes the code of the petal arrangement and checks flexibility;
// throws CapError when the arrangement exceeds the hyperplane cap.
bool certify_flexible(const Sunflower& s);

// Number of codewords of weight exactly k in the petal arrangement.
int weight_k_census(const Sunflower& s);

// A partition of the points into r parts whose hulls share a point, found
// by exhaustive search. Cap: at most 12 points.
std::optional<std::vector<std::vector<int>>> tverberg_partition(
    const std::vector<RatVec>& points, int r);

}  // namespace ncode
