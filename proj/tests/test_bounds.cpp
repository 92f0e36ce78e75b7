#include "doctest.h"
#include "helpers.hpp"
#include "ncode/bounds.hpp"
#include "ncode/families.hpp"

using namespace ncode;
using test::C;
using test::W;

TEST_CASE("two-cover dimension table") {
  CHECK(t_n_bounds(1) == std::pair<int, int>{1, 1});
  CHECK(t_n_bounds(2) == std::pair<int, int>{2, 2});
  CHECK(t_n_bounds(3) == std::pair<int, int>{3, 3});
  CHECK(t_n_bounds(4) == std::pair<int, int>{3, 3});
  CHECK(t_n_bounds(5) == std::pair<int, int>{4, 4});
  CHECK(t_n_bounds(6) == std::pair<int, int>{4, 5});
  CHECK(t_n_bounds(10) == std::pair<int, int>{5, 9});
  CHECK(t_n_bounds(12) == std::pair<int, int>{6, 11});
}

TEST_CASE("extremal maximal-codeword counts") {
  CHECK(binomial_extremal(3) == 2);
  CHECK(binomial_extremal(5) == 6);
  CHECK(binomial_extremal(9) == 70);
  CHECK(binomial_extremal(2) == 1);
}

TEST_CASE("largest union of quotient maximal codewords inside the closure") {
  Code c = intersection_completion(C(4, {{1, 2}, {2, 3}, {3, 4}}));
  // maximal codewords of D are {12, 34}; their union is not a face of
  // Delta(C), each alone is
  Code d = intersection_completion(C(4, {{1, 2}, {3, 4}}));
  CHECK(compute_k(c, d) == 1);
  // all of D's maximal codewords fit inside one facet
  Code d2 = C(4, {{2}, {3}});
  CHECK(compute_k(c, d2) == 2);
}

TEST_CASE("quotient family dimension interval") {
  Code c = intersection_completion(C(4, {{1, 2}, {2, 3}, {3, 4}}));
  Code d = intersection_completion(C(4, {{1, 2}, {3, 4}}));
  auto [lo, hi] = scd_bounds(c, d);
  CHECK(hi == 2);  // m = #maximal codewords of D
  CHECK(lo == 2);  // ceil(m / k) = ceil(2/1)
}

TEST_CASE("report on the star family") {
  for (int n = 1; n <= 5; ++n) {
    BoundReport r = bound_report(make_S_n(n));
    CHECK(r.intersection_complete);
    CHECK(r.exact_odim == n);
    CHECK(r.family.has_value());
    CHECK(r.cdim_upper <= std::max(2, n));
  }
}

TEST_CASE("report on the two-cover family") {
  int exact[] = {0, 1, 2, 3, 3, 4};
  for (int n = 1; n <= 5; ++n) {
    BoundReport r = bound_report(make_T_n(n));
    CHECK(r.exact_odim == exact[n]);
  }
  BoundReport r6 = bound_report(make_T_n(6));
  CHECK(!r6.exact_odim.has_value());
  CHECK(r6.odim_lower == 4);
  CHECK(r6.odim_upper == 5);
}

TEST_CASE("report on coned complexes: exact open dimension = facet count") {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 50; ++it) {
    Code delta = test::random_complex(rng, 4);
    if ((int)facets(delta).size() < 2) continue;
    BoundReport r = bound_report(make_S_Delta(delta));
    CHECK(r.exact_odim == (int)facets(delta).size());
  }
}

TEST_CASE("generic bounds and the trivial code") {
  BoundReport triv = bound_report(code_from_words(3, {}));
  CHECK(triv.exact_odim == 0);
  CHECK(triv.cdim_lower == 0);
  CHECK(triv.cdim_upper == 0);

  Code c = intersection_completion(C(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}}));
  BoundReport r = bound_report(c);
  int m1 = r.max_codeword_count;
  CHECK(r.odim_upper == std::max(2, m1 - 1));
  CHECK(r.cdim_upper <=
        std::min(2 * r.complex_dimension + 1, r.n - 1));
  CHECK(r.odim_lower >= 1);
  CHECK(r.cdim_lower >= 1);
}

TEST_CASE("closed bound never dips below the open floor on tiny codes") {
  BoundReport r = bound_report(C(1, {{1}}));
  CHECK(r.cdim_lower <= r.cdim_upper);
  CHECK(r.cdim_upper >= 1);
}

TEST_CASE("recognition up to relabeling") {
  // relabel the star family: swap neurons 1 and 4 in make_S_n(3)
  Code s3 = make_S_n(3);
  std::vector<Word> relab;
  for (Word w : s3.words) {
    Word v = w & ~(W({1}, 4) | W({4}, 4));
    if (w & W({1}, 4)) v |= W({4}, 4);
    if (w & W({4}, 4)) v |= W({1}, 4);
    relab.push_back(v);
  }
  Code perm = code_from_words(4, relab);
  CHECK(!bound_report(perm).family.has_value());
  BoundReport r = bound_report(perm, true);
  CHECK(r.family.has_value());
  CHECK(r.exact_odim == 3);
}

TEST_CASE("permutation search cap") {
  CHECK_THROWS_AS(bound_report(C(9, {{1, 2, 3}, {4, 5}}), true), CapError);
}
