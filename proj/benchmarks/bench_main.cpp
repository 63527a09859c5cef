#include <benchmark/benchmark.h>

#include <random>

#include "bigrade/checks.hpp"
#include "bigrade/decomposition.hpp"
#include "bigrade/homology.hpp"
#include "bigrade/invariants.hpp"
#include "bigrade/local_cohomology.hpp"
#include "bigrade/rank.hpp"
#include "bigrade/text_format.hpp"

using namespace bigrade;

namespace {

MonomialIdeal example() {
  return parse_ideal_text("ring 2 4\ngens: x1*x2, x1*y3, x1*y4, x2*y1, y1*y3, y1*y4, y2*y4, y2*y3\n");
}

void BM_Analyze(benchmark::State& state) {
  const auto ideal = example();
  const auto q = AxisIdeal::y_block(ideal.ring());
  for (auto _ : state) benchmark::DoNotOptimize(analyze(ideal, q));
}
BENCHMARK(BM_Analyze);

void BM_Grade(benchmark::State& state) {
  const auto module = Subquotient::cyclic(example());
  const auto q = AxisIdeal::y_block(module.ring());
  for (auto _ : state) benchmark::DoNotOptimize(grade(module, q));
}
BENCHMARK(BM_Grade);

void BM_BettiScan(benchmark::State& state) {
  const auto module = Subquotient::cyclic(example());
  const auto all = AxisIdeal::all(module.ring());
  for (auto _ : state) benchmark::DoNotOptimize(betti_and_projdim(module, all));
}
BENCHMARK(BM_BettiScan);

void BM_Decomposition(benchmark::State& state) {
  std::mt19937_64 rng(5);
  std::vector<MonomialIdeal> ideals;
  while (ideals.size() < 64) {
    auto i = random_ideal(rng);
    if (!i.is_zero() && !i.is_unit()) ideals.push_back(std::move(i));
  }
  for (auto _ : state)
    for (const auto& i : ideals) benchmark::DoNotOptimize(irreducible_decomposition(i));
}
BENCHMARK(BM_Decomposition);

void BM_LocalCohomology(benchmark::State& state) {
  const auto ideal = example();
  const auto q = AxisIdeal::y_block(ideal.ring());
  for (auto _ : state) benchmark::DoNotOptimize(lc_report(ideal, q, 1));
}
BENCHMARK(BM_LocalCohomology);

void BM_Rank(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(3);
  IntMatrix m(size, size);
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c < size; ++c) m(r, c) = static_cast<std::int64_t>(rng() % 3) - 1;
  const int characteristic = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(rank(m, characteristic));
}
BENCHMARK(BM_Rank)->Args({16, 0})->Args({16, 32003})->Args({64, 0})->Args({64, 32003});

}  // namespace

BENCHMARK_MAIN();
