#pragma once

#include <map>
#include <optional>
#include <variant>

#include "ncode/code.hpp"
#include "ncode/lp.hpp"

namespace ncode {

// a.x <= b, or a.x < b when the enclosing realization is open.
struct Halfspace {
  RatVec a;
  Rat b;
};

struct HPolytope {
  int dim = 0;
  std::vector<Halfspace> halfspaces;
};

// Convex hull of finitely many points; always closed.
struct VPolytope {
  int dim = 0;
  std::vector<RatVec> points;
};

struct EmptySet {};

using SetGeom = std::variant<HPolytope, VPolytope, EmptySet>;

// A tuple of convex sets in R^dim, all open or all closed.
struct Realization {
  int dim = 0;
  bool open = false;
  std::vector<SetGeom> sets;
};

// Default cap on distinct hyperplanes in cell enumeration; override with
// the NCODE_MAX_HYPERPLANES environment variable.
int max_hyperplanes();

// Whether p lies in conv(points), by exact LP. Works in any dimension.
bool point_in_vpolytope(const RatVec& p, const VPolytope& v);

// Closed H-description of conv(points), brute force over facet candidate
// subsets; lower-dimensional hulls get affine-hull equalities as halfspace
// pairs. Cap: dim <= 4.
HPolytope vrep_to_hrep(const VPolytope& v);

// The code cut out by the realization: one codeword per nonempty membership
// pattern, by sign-vector enumeration over the distinct defining
// hyperplanes. Errors if the sets cover all of R^dim (the empty codeword
// convention would fail). Witnesses, when requested, hold one point per
// codeword.
Code code_of_realization(const Realization& r,
                         std::map<Word, RatVec>* witnesses = nullptr);

// Shrinks every halfspace: b -> b - eps * |a|_1 (an exact stand-in for the
// Euclidean inward offset, using the L-infinity ball).
HPolytope trim(const HPolytope& p, const Rat& eps);
Realization trim_sets(const Realization& r, const Rat& eps);

// Turns an open realization of an intersection complete code into a closed
// one with the same code: picks atom witnesses, derives the largest safe
// eps exactly, trims, and closes. Returns the closed realization and eps.
std::pair<Realization, Rat> trim_realization(const Realization& r);

// Drops strictness without trimming.
Realization close_realization(const Realization& r);

// Thickens a closed realization of a simplicial complex into an open one
// with the same code: b -> b + eps * |a|_1 with eps chosen exactly so that
// no witness is captured and no empty intersection becomes nonempty.
// Sets must be bounded H-polytopes. With allow_non_complex, non-complex
// codes are attempted anyway and rejected only if the code changes.
std::pair<Realization, Rat> inflate(const Realization& r,
                                    bool allow_non_complex = false);

// Whether conv(points) meets the target set (exact LP; strictness follows
// `open`).
bool hull_meets(const std::vector<RatVec>& points, const HPolytope& target,
                bool open);
bool hull_meets(const std::vector<RatVec>& points, const VPolytope& target);

}  // namespace ncode
