#pragma once
// Shared test utilities: terse code builders, random generators, and
// independent oracles (subset closure, pairwise-meet closure, sweep codes).

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "ncode/code.hpp"
#include "ncode/geometry.hpp"

namespace test {

using namespace ncode;

inline Word W(std::initializer_list<int> idx, int n) {
  return word_from_indices(std::vector<int>(idx), n);
}

inline Code C(int n, std::initializer_list<std::initializer_list<int>> ws) {
  std::vector<Word> words;
  for (auto w : ws) words.push_back(W(w, n));
  return code_from_words(n, words);
}

// Down-closure oracle, independent of the library's subset loop.
inline bool oracle_is_complex(const Code& c) {
  std::set<Word> have(c.words.begin(), c.words.end());
  for (Word w : c.words)
    for (Word s = 0; s < (Word(1) << c.n); ++s)
      if ((s & w) == s && !have.count(s)) return false;
  return true;
}

// Pairwise-meet closure oracle: saturate a std::set, no trunk machinery.
inline Code oracle_completion(const Code& c) {
  std::set<Word> have(c.words.begin(), c.words.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Word> cur(have.begin(), have.end());
    for (Word a : cur)
      for (Word b : cur)
        if (have.insert(a & b).second) grew = true;
  }
  return code_from_words(c.n, {have.begin(), have.end()});
}

inline Code random_code(std::mt19937_64& rng, int n, double density = 0.3) {
  std::bernoulli_distribution keep(density);
  std::vector<Word> ws;
  for (Word w = 1; w < (Word(1) << n); ++w)
    if (keep(rng)) ws.push_back(w);
  return code_from_words(n, ws);
}

inline Code random_ic_code(std::mt19937_64& rng, int n) {
  return intersection_completion(random_code(rng, n));
}

// A proper simplicial complex on [n] (never the full power set).
inline Code random_complex(std::mt19937_64& rng, int n) {
  Code base = random_code(rng, n, 0.2);
  std::set<Word> have;
  for (Word w : base.words) {
    if (w == full_word(n)) continue;
    for (Word s = w;; s = (s - 1) & w) {
      have.insert(s);
      if (s == 0) break;
    }
  }
  have.insert(0);
  return code_from_words(n, {have.begin(), have.end()});
}

// ---- interval and box realizations with sweep oracles ----

struct Interval {
  Rat lo, hi;
};

inline HPolytope interval_set(const Interval& iv) {
  HPolytope h;
  h.dim = 1;
  h.halfspaces.push_back({{Rat(1)}, iv.hi});
  h.halfspaces.push_back({{Rat(-1)}, -iv.lo});
  return h;
}

inline Realization interval_realization(const std::vector<Interval>& ivs,
                                        bool open) {
  Realization r;
  r.dim = 1;
  r.open = open;
  for (const auto& iv : ivs) r.sets.push_back(interval_set(iv));
  return r;
}

inline std::vector<Interval> random_intervals(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> coord(0, 16);
  std::vector<Interval> ivs;
  for (int i = 0; i < n; ++i) {
    int a = coord(rng), b = coord(rng);
    if (a == b) b = a + 1;
    if (a > b) std::swap(a, b);
    ivs.push_back({Rat(a, 2), Rat(b, 2)});
  }
  return ivs;
}

// Membership patterns sampled at every breakpoint, between consecutive
// breakpoints, and beyond both ends; exact for interval arrangements.
inline Code sweep_code_1d(const std::vector<Interval>& ivs, bool open) {
  std::vector<Rat> xs;
  for (const auto& iv : ivs) {
    xs.push_back(iv.lo);
    xs.push_back(iv.hi);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Rat> samples;
  samples.push_back(xs.front() - 1);
  for (size_t i = 0; i < xs.size(); ++i) {
    samples.push_back(xs[i]);
    if (i + 1 < xs.size()) samples.push_back((xs[i] + xs[i + 1]) / 2);
  }
  samples.push_back(xs.back() + 1);
  std::set<Word> patterns;
  for (const Rat& x : samples) {
    Word w = 0;
    for (size_t i = 0; i < ivs.size(); ++i) {
      bool in = open ? ivs[i].lo < x && x < ivs[i].hi
                     : ivs[i].lo <= x && x <= ivs[i].hi;
      if (in) w |= Word(1) << i;
    }
    patterns.insert(w);
  }
  return code_from_words((int)ivs.size(), {patterns.begin(), patterns.end()});
}

struct Box {
  Interval x, y;
};

inline HPolytope box_set(const Box& b) {
  HPolytope h;
  h.dim = 2;
  h.halfspaces.push_back({{Rat(1), Rat(0)}, b.x.hi});
  h.halfspaces.push_back({{Rat(-1), Rat(0)}, -b.x.lo});
  h.halfspaces.push_back({{Rat(0), Rat(1)}, b.y.hi});
  h.halfspaces.push_back({{Rat(0), Rat(-1)}, -b.y.lo});
  return h;
}

inline Realization box_realization(const std::vector<Box>& boxes, bool open) {
  Realization r;
  r.dim = 2;
  r.open = open;
  for (const auto& b : boxes) r.sets.push_back(box_set(b));
  return r;
}

inline std::vector<Box> random_boxes(std::mt19937_64& rng, int n) {
  auto ivs1 = random_intervals(rng, n);
  auto ivs2 = random_intervals(rng, n);
  std::vector<Box> boxes;
  for (int i = 0; i < n; ++i) boxes.push_back({ivs1[i], ivs2[i]});
  return boxes;
}

inline std::vector<Rat> sweep_samples(std::vector<Rat> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Rat> samples;
  samples.push_back(xs.front() - 1);
  for (size_t i = 0; i < xs.size(); ++i) {
    samples.push_back(xs[i]);
    if (i + 1 < xs.size()) samples.push_back((xs[i] + xs[i + 1]) / 2);
  }
  samples.push_back(xs.back() + 1);
  return samples;
}

// Grid-sample oracle, exact for axis-aligned box arrangements.
inline Code sweep_code_2d(const std::vector<Box>& boxes, bool open) {
  std::vector<Rat> xs, ys;
  for (const auto& b : boxes) {
    xs.push_back(b.x.lo);
    xs.push_back(b.x.hi);
    ys.push_back(b.y.lo);
    ys.push_back(b.y.hi);
  }
  auto in1 = [&](const Interval& iv, const Rat& v) {
    return open ? iv.lo < v && v < iv.hi : iv.lo <= v && v <= iv.hi;
  };
  std::set<Word> patterns;
  for (const Rat& x : sweep_samples(xs))
    for (const Rat& y : sweep_samples(ys)) {
      Word w = 0;
      for (size_t i = 0; i < boxes.size(); ++i)
        if (in1(boxes[i].x, x) && in1(boxes[i].y, y)) w |= Word(1) << i;
      patterns.insert(w);
    }
  return code_from_words((int)boxes.size(), {patterns.begin(), patterns.end()});
}

inline std::vector<RatVec> random_points(std::mt19937_64& rng, int count,
                                         int dim) {
  std::uniform_int_distribution<int> coord(-12, 12);
  std::vector<RatVec> pts;
  for (int i = 0; i < count; ++i) {
    RatVec p;
    for (int j = 0; j < dim; ++j) p.push_back(Rat(coord(rng), 2));
    pts.push_back(p);
  }
  return pts;
}

}  // namespace test
