#include <benchmark/benchmark.h>

#include <random>

#include "ncode/bounds.hpp"
#include "ncode/code.hpp"
#include "ncode/families.hpp"
#include "ncode/geometry.hpp"
#include "ncode/lp.hpp"
#include "ncode/realize.hpp"
#include "ncode/sunflower.hpp"

using namespace ncode;

namespace {

Code random_code(std::mt19937_64& rng, int n, int count) {
  std::vector<Word> words;
  Word top = (Word(1) << n) - 1;
  std::uniform_int_distribution<Word> pick(1, top);
  for (int i = 0; i < count; ++i) words.push_back(pick(rng));
  return code_from_words(n, std::move(words));
}

Realization box_realization(std::mt19937_64& rng, int n) {
  Realization r;
  r.dim = 2;
  r.open = false;
  std::uniform_int_distribution<int> coord(0, 16);
  for (int i = 0; i < n; ++i) {
    int x0 = coord(rng), x1 = coord(rng), y0 = coord(rng), y1 = coord(rng);
    if (x0 > x1) std::swap(x0, x1);
    if (y0 > y1) std::swap(y0, y1);
    HPolytope hp;
    hp.halfspaces.push_back({{Rat(1), Rat(0)}, Rat(x1, 2)});
    hp.halfspaces.push_back({{Rat(-1), Rat(0)}, Rat(-x0, 2)});
    hp.halfspaces.push_back({{Rat(0), Rat(1)}, Rat(y1, 2)});
    hp.halfspaces.push_back({{Rat(0), Rat(-1)}, Rat(-y0, 2)});
    r.sets.push_back(std::move(hp));
  }
  return r;
}

void bm_completion(benchmark::State& state) {
  std::mt19937_64 rng(7);
  Code c = random_code(rng, (int)state.range(0), 40);
  for (auto _ : state) benchmark::DoNotOptimize(intersection_completion(c));
}
BENCHMARK(bm_completion)->Arg(8)->Arg(12)->Arg(16);

void bm_is_ic(benchmark::State& state) {
  std::mt19937_64 rng(11);
  Code c = intersection_completion(random_code(rng, (int)state.range(0), 40));
  for (auto _ : state) benchmark::DoNotOptimize(is_intersection_complete(c));
}
BENCHMARK(bm_is_ic)->Arg(8)->Arg(12);

void bm_lin_feasible(benchmark::State& state) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> coef(-5, 5);
  std::vector<LinCon> cons;
  for (int i = 0; i < 20; ++i) {
    RatVec a(3);
    for (auto& x : a) x = coef(rng);
    cons.push_back({std::move(a), Rat(coef(rng) + 8), false, false});
  }
  for (auto _ : state) benchmark::DoNotOptimize(lin_feasible(cons, 3));
}
BENCHMARK(bm_lin_feasible);

void bm_code_of_realization(benchmark::State& state) {
  std::mt19937_64 rng(17);
  Realization r = box_realization(rng, (int)state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(code_of_realization(r));
}
BENCHMARK(bm_code_of_realization)->Arg(4)->Arg(6);

void bm_realize_closed(benchmark::State& state) {
  Code c = make_T_n((int)state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(realize_closed(c));
}
BENCHMARK(bm_realize_closed)->Arg(2)->Arg(3);

void bm_verify_deep(benchmark::State& state) {
  Code c = code_from_words(3, {0b111, 0b011, 0b001, 0b010, 0b100});
  RealizePlan plan = realize_closed(c);
  for (auto _ : state) benchmark::DoNotOptimize(verify_plan(plan, true));
}
BENCHMARK(bm_verify_deep);

void bm_counterexample(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(build_counterexample(2, (int)state.range(0), true));
}
BENCHMARK(bm_counterexample)->Arg(1)->Arg(2);

void bm_flexible_trial(benchmark::State& state) {
  uint64_t seed = 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(flexible_trial(2, 2, 5, seed++));
}
BENCHMARK(bm_flexible_trial);

void bm_tverberg(benchmark::State& state) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> coord(-12, 12);
  std::vector<RatVec> pts;
  for (int i = 0; i < 7; ++i)
    pts.push_back({Rat(coord(rng), 2), Rat(coord(rng), 2)});
  for (auto _ : state) benchmark::DoNotOptimize(tverberg_partition(pts, 3));
}
BENCHMARK(bm_tverberg);

}  // namespace

BENCHMARK_MAIN();
