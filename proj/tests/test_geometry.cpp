#include <cstdlib>

#include "doctest.h"
#include "helpers.hpp"
#include "ncode/geometry.hpp"

using namespace ncode;
using test::C;
using test::W;

TEST_CASE("point in V-polytope") {
  VPolytope tri{2, {{Rat(0), Rat(0)}, {Rat(2), Rat(0)}, {Rat(0), Rat(2)}}};
  CHECK(point_in_vpolytope({Rat(1, 2), Rat(1, 2)}, tri));
  CHECK(point_in_vpolytope({Rat(1), Rat(1)}, tri));  // edge
  CHECK(point_in_vpolytope({Rat(0), Rat(0)}, tri));  // vertex
  CHECK(!point_in_vpolytope({Rat(2), Rat(2)}, tri));
  VPolytope pt{2, {{Rat(1), Rat(1)}}};
  CHECK(point_in_vpolytope({Rat(1), Rat(1)}, pt));
  CHECK(!point_in_vpolytope({Rat(1), Rat(2)}, pt));
}

TEST_CASE("V to H conversion agrees with LP membership on random points") {
  std::mt19937_64 rng(51);
  for (int it = 0; it < 40; ++it) {
    int dim = 1 + it % 3;
    auto pts = test::random_points(rng, 2 + (int)(rng() % 5), dim);
    VPolytope v{dim, pts};
    HPolytope h = vrep_to_hrep(v);
    CHECK(h.dim == dim);
    for (int q = 0; q < 15; ++q) {
      RatVec p = test::random_points(rng, 1, dim)[0];
      bool in_h = true;
      for (const auto& hs : h.halfspaces) in_h &= dot(hs.a, p) <= hs.b;
      CHECK(in_h == point_in_vpolytope(p, v));
    }
    // the generating points satisfy every halfspace
    for (const auto& p : pts)
      for (const auto& hs : h.halfspaces) CHECK(dot(hs.a, p) <= hs.b);
  }
}

TEST_CASE("1-D interval codes match the sweep oracle") {
  std::mt19937_64 rng(52);
  for (int it = 0; it < 100; ++it) {
    auto ivs = test::random_intervals(rng, 2 + it % 4);
    for (bool open : {false, true}) {
      Realization r = test::interval_realization(ivs, open);
      CHECK(code_of_realization(r).words ==
            test::sweep_code_1d(ivs, open).words);
    }
  }
}

TEST_CASE("2-D box codes match the grid oracle") {
  std::mt19937_64 rng(53);
  for (int it = 0; it < 40; ++it) {
    auto boxes = test::random_boxes(rng, 2 + it % 3);
    for (bool open : {false, true}) {
      Realization r = test::box_realization(boxes, open);
      CHECK(code_of_realization(r).words ==
            test::sweep_code_2d(boxes, open).words);
    }
  }
}

TEST_CASE("witnesses land in their atoms") {
  std::mt19937_64 rng(54);
  auto boxes = test::random_boxes(rng, 3);
  Realization r = test::box_realization(boxes, false);
  std::map<Word, RatVec> wit;
  Code c = code_of_realization(r, &wit);
  for (Word w : c.words) {
    const RatVec& p = wit.at(w);
    for (size_t i = 0; i < boxes.size(); ++i) {
      bool in = true;
      for (const auto& hs : box_set(boxes[i]).halfspaces)
        in &= dot(hs.a, p) <= hs.b;
      CHECK(in == bool(w >> i & 1));
    }
  }
}

TEST_CASE("covering the whole space violates the empty-word convention") {
  // two halfplanes x <= 1 and x >= -1 cover R^2
  Realization r;
  r.dim = 2;
  r.open = false;
  HPolytope left{2, {{{Rat(1), Rat(0)}, Rat(1)}}};
  HPolytope right{2, {{{Rat(-1), Rat(0)}, Rat(1)}}};
  r.sets = {left, right};
  CHECK_THROWS_AS(code_of_realization(r), PreconditionError);
}

TEST_CASE("hyperplane cap") {
  std::mt19937_64 rng(55);
  auto boxes = test::random_boxes(rng, 4);  // up to 16 distinct walls
  Realization r = test::box_realization(boxes, false);
  setenv("NCODE_MAX_HYPERPLANES", "3", 1);
  CHECK_THROWS_AS(code_of_realization(r), CapError);
  unsetenv("NCODE_MAX_HYPERPLANES");
  CHECK_NOTHROW(code_of_realization(r));
}

TEST_CASE("trim shrinks strictly inside") {
  HPolytope box = test::box_set({{Rat(0), Rat(2)}, {Rat(0), Rat(2)}});
  HPolytope t = trim(box, Rat(1, 4));
  for (const auto& hs : t.halfspaces)
    CHECK(dot(hs.a, {Rat(1), Rat(1)}) < hs.b);
  // boundary point of the original is now outside
  bool outside = false;
  for (const auto& hs : t.halfspaces)
    outside |= dot(hs.a, {Rat(0), Rat(1)}) > hs.b;
  CHECK(outside);
}

TEST_CASE("closing without trimming can merge touching sets") {
  // open intervals (0,1) and (1,2): code {1, 2, empty}; the naive closure
  // gains the codeword 12 at the shared boundary
  std::vector<test::Interval> ivs = {{Rat(0), Rat(1)}, {Rat(1), Rat(2)}};
  Realization open_r = test::interval_realization(ivs, true);
  Code open_code = code_of_realization(open_r);
  CHECK(open_code.words == C(2, {{1}, {2}}).words);
  Code closed_code = code_of_realization(close_realization(open_r));
  CHECK(closed_code.contains(W({1, 2}, 2)));
  // the trim pipeline avoids the merge
  auto [closed, eps] = trim_realization(open_r);
  CHECK(eps > 0);
  CHECK(code_of_realization(closed).words == open_code.words);
}

TEST_CASE("trim pipeline preserves random interval and box codes") {
  std::mt19937_64 rng(56);
  int done = 0;
  for (int it = 0; it < 200 && done < 60; ++it) {
    Realization r;
    Code c{0, {}};
    if (it & 1) {
      auto ivs = test::random_intervals(rng, 2 + it % 3);
      r = test::interval_realization(ivs, true);
      c = test::sweep_code_1d(ivs, true);
    } else {
      auto boxes = test::random_boxes(rng, 2 + it % 3);
      r = test::box_realization(boxes, true);
      c = test::sweep_code_2d(boxes, true);
    }
    if (!is_intersection_complete(c)) continue;
    ++done;
    auto [closed, eps] = trim_realization(r);
    CHECK(eps > 0);
    CHECK(!closed.open);
    CHECK(code_of_realization(closed).words == c.words);
  }
  CHECK(done == 60);
}

TEST_CASE("trim pipeline rejects a non intersection complete code") {
  // U1 = (0,4), U2 = (0,2), U3 = (1,4) cuts out {123, 12, 13, empty}
  std::vector<test::Interval> ivs = {
      {Rat(0), Rat(4)}, {Rat(0), Rat(2)}, {Rat(1), Rat(4)}};
  Realization r = test::interval_realization(ivs, true);
  CHECK(code_of_realization(r).words ==
        C(3, {{1, 2, 3}, {1, 2}, {1, 3}}).words);
  CHECK_THROWS_AS(trim_realization(r), PreconditionError);
}

TEST_CASE("inflate preserves simplicial-complex box codes") {
  std::mt19937_64 rng(57);
  int done = 0;
  for (int it = 0; it < 300 && done < 60; ++it) {
    auto boxes = test::random_boxes(rng, 2 + it % 3);
    Code c = test::sweep_code_2d(boxes, false);
    if (!is_simplicial_complex(c)) continue;
    ++done;
    Realization r = test::box_realization(boxes, false);
    auto [open_r, eps] = inflate(r);
    CHECK(eps > 0);
    CHECK(open_r.open);
    CHECK(code_of_realization(open_r).words == c.words);
  }
  CHECK(done == 60);
}

TEST_CASE("inflate on a nested pair needs the escape hatch") {
  // U1 = [1,2] inside U2 = [0,3]: code {12, 2, empty}, not a complex
  std::vector<test::Interval> ivs = {{Rat(1), Rat(2)}, {Rat(0), Rat(3)}};
  Realization r = test::interval_realization(ivs, false);
  CHECK(code_of_realization(r).words == C(2, {{1, 2}, {2}}).words);
  CHECK_THROWS_AS(inflate(r), PreconditionError);
  auto [open_r, eps] = inflate(r, true);
  CHECK(eps > 0);
  CHECK(code_of_realization(open_r).words == C(2, {{1, 2}, {2}}).words);
}

TEST_CASE("inflate requires bounded sets") {
  Realization r;
  r.dim = 1;
  r.open = false;
  r.sets = {HPolytope{1, {{{Rat(1)}, Rat(0)}}}};  // x <= 0, unbounded
  CHECK_THROWS_AS(inflate(r, true), PreconditionError);
}

TEST_CASE("hull meets H and V targets") {
  std::vector<RatVec> seg = {{Rat(-1), Rat(0)}, {Rat(1), Rat(0)}};
  HPolytope band{2,
                 {{{Rat(0), Rat(1)}, Rat(1)}, {{Rat(0), Rat(-1)}, Rat(1)}}};
  CHECK(hull_meets(seg, band, false));
  CHECK(hull_meets(seg, band, true));
  // shifted band y in [1, 2]: touches nothing
  HPolytope far{2,
                {{{Rat(0), Rat(1)}, Rat(2)}, {{Rat(0), Rat(-1)}, Rat(-1)}}};
  CHECK(!hull_meets(seg, far, false));
  // band y in [0, 1]: the segment touches the boundary only
  HPolytope touch{2,
                  {{{Rat(0), Rat(1)}, Rat(1)}, {{Rat(0), Rat(-1)}, Rat(0)}}};
  CHECK(hull_meets(seg, touch, false));
  CHECK(!hull_meets(seg, touch, true));

  VPolytope tri{2, {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}}};
  CHECK(hull_meets(seg, tri));
  VPolytope away{2, {{Rat(5), Rat(5)}, {Rat(6), Rat(5)}}};
  CHECK(!hull_meets(seg, away));
}
