#include "doctest.h"
#include "helpers.hpp"
#include "ncode/families.hpp"

using namespace ncode;
using test::C;
using test::W;

TEST_CASE("star family golden listings") {
  CHECK(make_S_n(1).words == C(2, {{1, 2}, {1}, {2}}).words);
  CHECK(make_S_n(2).words ==
        C(3, {{1, 2}, {1, 3}, {2, 3}, {1}, {2}, {3}}).words);
  CHECK(make_S_n(3).words ==
        C(4, {{1, 2, 3}, {1, 4}, {2, 4}, {3, 4}, {1}, {2}, {3}, {4}}).words);
}

TEST_CASE("two-cover family golden listings") {
  CHECK(make_T_n(1).words == C(2, {{1, 2}, {1}, {2}}).words);
  CHECK(make_T_n(2).words ==
        C(4, {{1, 3}, {2, 4}, {1, 2}, {3, 4}, {1}, {2}, {3}, {4}}).words);
  CHECK(make_T_n(3).words ==
        C(6, {{1, 3, 5},
              {2, 4, 6},
              {1, 2},
              {3, 4},
              {5, 6},
              {1},
              {2},
              {3},
              {4},
              {5},
              {6}})
            .words);
  CHECK(make_T_n(4).words ==
        C(8, {{1, 3, 5, 7},
              {2, 4, 6, 8},
              {1, 2},
              {3, 4},
              {5, 6},
              {7, 8},
              {1},
              {2},
              {3},
              {4},
              {5},
              {6},
              {7},
              {8}})
            .words);
}

TEST_CASE("two-cover family is intersection complete with n+2 maximal") {
  for (int n = 2; n <= 6; ++n) {
    Code t = make_T_n(n);
    CHECK(t.n == 2 * n);
    CHECK(is_intersection_complete(t));
    CHECK((int)maximal_codewords(t).size() == n + 2);
  }
}

TEST_CASE("coned-complex family: intersection complete, m+1 maximal") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    int n = 3 + it % 4;
    Code delta = test::random_complex(rng, n);
    Code s = make_S_Delta(delta);
    CHECK(s.n == n + 1);
    CHECK(is_intersection_complete(s));
    CHECK(maximal_codewords(s).size() == facets(delta).size() + 1);
  }
}

TEST_CASE("coned-complex family rejects non-complexes and the power set") {
  CHECK_THROWS_AS(make_S_Delta(C(3, {{1, 2}})), PreconditionError);
  Code full = simplicial_complex_of(C(2, {{1, 2}}));
  CHECK_THROWS_AS(make_S_Delta(full), PreconditionError);
}

TEST_CASE("coned-complex family of the empty complex") {
  Code s = make_S_Delta(code_from_words(2, {}));
  // cone of {∅} plus the top word
  CHECK(s.words == C(3, {{3}, {1, 2}}).words);
}

TEST_CASE("quotient family: intersection complete with m+1 maximal") {
  std::mt19937_64 rng(12);
  int checked = 0;
  for (int it = 0; it < 300 && checked < 100; ++it) {
    int n = 3 + it % 3;
    Code c = test::random_ic_code(rng, n);
    // D = completion of a random subset of C's words
    std::vector<Word> sub;
    for (Word w : c.words)
      if (rng() & 1) sub.push_back(w);
    Code d = intersection_completion(code_from_words(n, sub));
    bool d_in_c = true;
    for (Word w : d.words) d_in_c &= c.contains(w);
    if (!d_in_c) continue;
    ++checked;
    Code s = make_S_C_over_D(c, d);
    CHECK(s.n == n + 1);
    CHECK(is_intersection_complete(s));
    if (!d.contains(full_word(n)))
      CHECK(maximal_codewords(s).size() ==
            maximal_codewords(d).size() + 1);
  }
  CHECK(checked == 100);
}

TEST_CASE("quotient family precondition checks") {
  Code c = C(3, {{1, 2}, {1}, {2}});
  CHECK_THROWS_AS(make_S_C_over_D(c, C(3, {{3}})), PreconditionError);
  CHECK_THROWS_AS(make_S_C_over_D(C(3, {{1, 2}, {2, 3}}), c),
                  PreconditionError);
}

TEST_CASE("minimal quotient of the singletons code is the star family") {
  for (int n = 1; n <= 8; ++n) {
    std::vector<Word> singles;
    for (int i = 1; i <= n; ++i) singles.push_back(Word(1) << (i - 1));
    singles.push_back(full_word(n));
    Code c = intersection_completion(code_from_words(n, singles));
    CHECK(make_S_C_over_min(c).words == make_S_n(n).words);
  }
}

TEST_CASE("minimal nonempty codewords") {
  Code c = C(3, {{1, 2, 3}, {1, 2}, {3}, {1}});
  CHECK(minimal_nonempty(c) == std::vector<Word>{W({1}, 3), W({3}, 3)});
}
