#include "doctest.h"
#include "helpers.hpp"
#include "ncode/families.hpp"
#include "ncode/morphisms.hpp"

using namespace ncode;
using test::C;
using test::W;

TEST_CASE("trunk recognition") {
  Code s2 = make_S_n(2);
  CHECK(is_trunk(s2, trunk(s2, W({3}, 3))));
  CHECK(is_trunk(s2, trunk(s2, W({1, 3}, 3))));
  CHECK(is_trunk(s2, s2.words));  // trunk of the empty set
  // {1, 2} is not a trunk: its meet is the empty set, whose trunk is all
  CHECK(!is_trunk(s2, {W({1}, 3), W({2}, 3)}));
  // the empty collection is a trunk iff the full word is absent
  CHECK(is_trunk(s2, {}));
  Code full = C(2, {{1, 2}, {1}});
  CHECK(!is_trunk(full, {}));
}

TEST_CASE("applying simple trunks is the identity") {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 50; ++it) {
    Code c = test::random_code(rng, 3 + it % 3);
    TrunkMorphism f;
    f.source = c;
    for (int i = 1; i <= c.n; ++i) f.trunks.push_back(trunk(c, Word(1) << (i - 1)));
    auto [img, fmap] = apply_morphism(f);
    CHECK(img.words == c.words);
    for (Word w : c.words) CHECK(fmap.at(w) == w);
    CHECK(is_morphism_map(c, img, fmap));
  }
}

TEST_CASE("invalid trunk collections are rejected") {
  Code s2 = make_S_n(2);
  TrunkMorphism f;
  f.source = s2;
  f.trunks = {{W({1}, 3), W({2}, 3)}};
  CHECK_THROWS_AS(apply_morphism(f), PreconditionError);
}

TEST_CASE("restriction relabels surviving neurons") {
  Code c = C(3, {{1, 2, 3}, {1, 3}, {2}});
  Code r = restriction(c, W({1, 3}, 3));
  CHECK(r.n == 2);
  CHECK(r.words == C(2, {{1, 2}}).words);  // 123 and 13 collapse, 2 -> empty
}

TEST_CASE("coned complex maps onto the star family") {
  std::mt19937_64 rng(42);
  int done = 0;
  for (int it = 0; it < 400 && done < 100; ++it) {
    Code delta = test::random_complex(rng, 3 + it % 4);
    int m = (int)facets(delta).size();
    if (m < 2 || m > 5) continue;
    ++done;
    auto [img, fmap] = apply_morphism(sdelta_to_sm(delta));
    CHECK(img.words == make_S_n(m).words);
    (void)fmap;
  }
  CHECK(done == 100);
}

TEST_CASE("two-cover chain under restriction") {
  for (int n = 1; n <= 5; ++n) {
    Code big = make_T_n(n + 1);
    Code r = restriction(big, full_word(2 * n) /* first 2n neurons */);
    CHECK(r.words == make_T_n(n).words);
  }
}

TEST_CASE("quotient family maps onto the minimal-quotient of its image") {
  std::mt19937_64 rng(43);
  int done = 0;
  for (int it = 0; it < 300 && done < 60; ++it) {
    int n = 3 + it % 3;
    Code c = test::random_ic_code(rng, n);
    std::vector<Word> sub;
    for (Word w : c.words)
      if (rng() & 1) sub.push_back(w);
    Code d = intersection_completion(code_from_words(n, sub));
    bool ok = true;
    for (Word w : d.words) ok &= c.contains(w);
    if (!ok || (int)maximal_codewords(d).size() < 2) continue;
    if (d.contains(full_word(n))) continue;
    ++done;
    auto [f, e] = scd_to_semin(c, d);
    auto [img, fmap] = apply_morphism(f);
    CHECK(img.words == make_S_C_over_min(e).words);
    // the image base contains every singleton, so its minimal words are them
    (void)fmap;
  }
  CHECK(done == 60);
}

TEST_CASE("morphism map validation catches corruption") {
  TrunkMorphism f = sdelta_to_sm(simplicial_complex_of(C(2, {{1}, {2}})));
  auto [img, fmap] = apply_morphism(f);
  auto bad = fmap;
  // swap two images; the preimage of a simple trunk stops being a trunk
  bad[W({1}, 3)] = fmap.at(W({2}, 3));
  bad[W({2}, 3)] = fmap.at(W({1}, 3));
  CHECK(is_morphism_map(f.source, img, fmap));
  CHECK(!is_morphism_map(f.source, img, bad));
}

TEST_CASE("minor search finds restrictions and images") {
  Code t2 = make_T_n(2);
  CHECK(minor_search(t2, t2, 0));                 // itself
  CHECK(minor_search(t2, make_T_n(1), 1));        // one restriction
  Code s2 = make_S_n(2);
  Code delta = simplicial_complex_of(C(2, {{1}, {2}}));
  CHECK(minor_search(make_S_Delta(delta), s2, 1));  // one morphism step
  // a code with more neurons than the source is never a minor
  CHECK(!minor_search(t2, make_T_n(3), 3));
}
