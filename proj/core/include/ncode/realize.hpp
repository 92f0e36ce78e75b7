#pragma once

#include "ncode/geometry.hpp"

namespace ncode {

// Facets of the convex hull of D-dimensional moment-curve points at
// parameters 1..N, by the evenness criterion: a D-subset S of [N] is a
// facet iff every pair of indices outside S has an even number of elements
// of S strictly between them. Caps: 2 <= D <= 8, D < N <= 12.
std::vector<std::vector<int>> cyclic_facets(int D, int N);

// Moment-curve vertices (t, t^2, ..., t^D), t = 1..N.
std::vector<RatVec> moment_curve(int D, int N);

// Polar dual taken about the vertex centroid: one dual vertex per facet,
// solving a.(v - centroid) = 1 over the facet's vertices. Dual vertices are
// returned in facet order, in centroid-translated coordinates.
std::vector<RatVec> polar_dual(const std::vector<RatVec>& verts,
                               const std::vector<std::vector<int>>& facets);

struct SchlegelDiagram {
  RatVec viewpoint;
  int dropped = 0;                     // coordinate removed after projection
  std::vector<RatVec> vertex_images;   // per input vertex, in R^{dim-1}
};

// Projects every vertex onto the base facet's hyperplane from a viewpoint
// slightly beyond that facet (centroid pushed along the facet normal, the
// push halved until only the base inequality is violated).
SchlegelDiagram schlegel(const std::vector<RatVec>& verts,
                         const std::vector<std::vector<int>>& facets,
                         const std::vector<std::pair<RatVec, Rat>>& ineqs,
                         int base);

// Everything produced while realizing a code with closed convex sets:
// the scaffold cells P_i, one relative-interior point per codeword, and
// the final V-polytopes.
struct RealizePlan {
  Code code;
  int d = -1;      // dim of the downward closure
  int m = 0;       // ambient dimension min(2d+1, n-1)
  bool simplex_route = false;
  std::vector<std::vector<int>> curve_facets;  // cyclic route only
  std::vector<VPolytope> scaffold;             // P_1..P_n
  std::map<Word, RatVec> points;               // p_c per nonempty codeword
  Realization realization;                     // closed, V-represented
};

// Builds a closed realization of an intersection complete code in
// dimension min(2d+1, n-1). Caps: n <= 20 overall, n <= 8 when the
// construction must go through the curve polytope (2d+1 < n-1).
RealizePlan realize_closed(const Code& c);

struct VerifyReport {
  bool closure_ok = false;    // the code equals its intersection completion
  bool witnesses_ok = false;  // p_c in V_i iff i in c, for every codeword
  std::optional<bool> full_code_ok;  // deep check; nullopt when skipped
  std::string detail;

  bool ok() const {
    return closure_ok && witnesses_ok && full_code_ok.value_or(true);
  }
};

// deep additionally recomputes the code of the realization (only when the
// ambient dimension is at most 3 and the hyperplane cap allows it).
VerifyReport verify_plan(const RealizePlan& plan, bool deep);

}  // namespace ncode
