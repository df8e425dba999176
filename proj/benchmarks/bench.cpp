#include <benchmark/benchmark.h>

#include "capcone/negative_classes.hpp"
#include "capcone/numbers_game.hpp"
#include "capcone/reduction.hpp"
#include "capcone/wall_crossing.hpp"

#include <random>

using namespace capcone;

namespace {

PDClass unreduced_example() {
  PDClass pd(Rat(17, 10), std::vector<Rat>(9, Rat(1, 10)));
  pd.c[0] = pd.c[1] = pd.c[2] = Rat(4, 5);
  return pd;
}

void BM_Intersect(benchmark::State& state) {
  const HClass a = rijk_class(1, 2, 3) + 3 * d9_class();
  const HClass b = rij_class(2, 7) + 5 * d9_class();
  for (auto _ : state) benchmark::DoNotOptimize(intersect(a, b));
}
BENCHMARK(BM_Intersect);

void BM_Reflect(benchmark::State& state) {
  const HClass root = rijk_class(1, 2, 3) + 2 * d9_class();
  HClass b = rij_class(2, 7) + 5 * d9_class();
  for (auto _ : state) {
    b = reflect(root, b);
    benchmark::DoNotOptimize(b);
  }
}
BENCHMARK(BM_Reflect);

void BM_CremonaReduce(benchmark::State& state) {
  const PDClass pd = unreduced_example();
  for (auto _ : state) benchmark::DoNotOptimize(cremona_reduce(pd));
}
BENCHMARK(BM_CremonaReduce);

void BM_WallCrossStep(benchmark::State& state) {
  const PDClass pd = CapacityVector(std::vector<Rat>(9, Rat(1, 10))).pd();
  const HClass root = rijk_class(1, 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(normalize(wall_cross_step(pd, root)));
}
BENCHMARK(BM_WallCrossStep);

void BM_GameFire(benchmark::State& state) {
  std::mt19937_64 rng(1);
  GameState s = initial_e8_state();
  for (auto _ : state) {
    s = fire(s, pick_positive(s.values, Strategy::RandomPositive, rng));
    benchmark::DoNotOptimize(s);
    if (s.history.size() > 4096) {
      state.PauseTiming();
      s = initial_e8_state();
      state.ResumeTiming();
    }
  }
}
BENCHMARK(BM_GameFire);

void BM_LatticeFire(benchmark::State& state) {
  std::mt19937_64 rng(1);
  LatticeGameState s = lattice_init();
  for (auto _ : state) {
    const int node = pick_positive(s.game_values(), Strategy::RandomPositive, rng);
    s = lattice_fire(s, node).first;
    benchmark::DoNotOptimize(s);
    if (s.crossed.size() > 4096) {
      state.PauseTiming();
      s = lattice_init();
      state.ResumeTiming();
    }
  }
}
BENCHMARK(BM_LatticeFire);

void BM_LevelBound(benchmark::State& state) {
  const CapacityVector delta = default_sequence_start();
  for (auto _ : state) benchmark::DoNotOptimize(level_bound(delta));
}
BENCHMARK(BM_LevelBound);

void BM_ChamberSignature(benchmark::State& state) {
  const CapacityVector delta = default_sequence_start();
  for (auto _ : state) benchmark::DoNotOptimize(chamber_signature(delta));
}
BENCHMARK(BM_ChamberSignature);

void BM_SequenceSteps(benchmark::State& state) {
  const CapacityVector start = default_sequence_start();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        generate_sequence(start, static_cast<int>(state.range(0)), Strategy::RandomPositive, 0));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SequenceSteps)->Arg(1)->Arg(10)->Arg(50)->Complexity();

void BM_IsAdmissible(benchmark::State& state) {
  const CapacityVector delta = default_sequence_start();
  (void)enumerate_exceptional(state.range(0));  // build the table outside the loop
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_admissible(delta, state.range(0)));
  }
}
BENCHMARK(BM_IsAdmissible)->Arg(8)->Arg(30);

void BM_EnumerateRoots(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_neg2_roots(state.range(0)));
}
BENCHMARK(BM_EnumerateRoots)->Arg(1)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
