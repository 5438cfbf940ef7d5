#include <benchmark/benchmark.h>

#include "monoteq/classify.hpp"
#include "monoteq/enumerate.hpp"
#include "monoteq/glued.hpp"
#include "monoteq/markov.hpp"
#include "monoteq/patterns.hpp"
#include "monoteq/realize.hpp"

namespace {

using namespace monoteq;

void BM_verdict_all_connected(benchmark::State& state) {
  std::vector<Poset> posets = connected_posets(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const Poset& p : posets) benchmark::DoNotOptimize(verdict(p).kind);
}
BENCHMARK(BM_verdict_all_connected)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_stoch_monotone_check(benchmark::State& state) {
  RandomSource rng(11);
  Poset p = patterns::crown(3);
  MeasureSystem s = random_monotone_kernel(p, rng);
  for (auto _ : state) benchmark::DoNotOptimize(system_is_stoch_monotone(s));
}
BENCHMARK(BM_stoch_monotone_check);

void BM_max_theta_diamond(benchmark::State& state) {
  RandomSource rng(12);
  Poset p = patterns::diamond();
  MeasureSystem s = random_monotone_kernel(p, rng);
  for (auto _ : state) benchmark::DoNotOptimize(max_theta(s));
}
BENCHMARK(BM_max_theta_diamond)->Unit(benchmark::kMillisecond);

void BM_strassen_lp(benchmark::State& state) {
  RandomSource rng(13);
  Poset p = connected_posets(5).back();
  auto [p1, p2] = random_ordered_pair(p, rng);
  for (auto _ : state) benchmark::DoNotOptimize(strassen_lp(p1, p2).has_value());
}
BENCHMARK(BM_strassen_lp);

void BM_strassen_w_glued(benchmark::State& state) {
  RandomSource rng(14);
  Poset host = random_w_glued_diamond(8, rng);
  auto [p1, p2] = random_ordered_pair(host, rng);
  for (auto _ : state) benchmark::DoNotOptimize(strassen_w_glued(p1, p2).first.total());
}
BENCHMARK(BM_strassen_w_glued);

void BM_w_glued_realize(benchmark::State& state) {
  RandomSource rng(15);
  Poset host = random_w_glued_diamond(static_cast<int>(state.range(0)), rng);
  MeasureSystem s = random_monotone_kernel(host, rng);
  for (auto _ : state) benchmark::DoNotOptimize(w_glued_realize(s).theta_weak);
}
BENCHMARK(BM_w_glued_realize)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_decompose_generator(benchmark::State& state) {
  RandomSource rng(16);
  Poset p = patterns::diamond();
  Generator l = random_generator(p, rng);
  for (auto _ : state) benchmark::DoNotOptimize(decompose_generator(l).has_value());
}
BENCHMARK(BM_decompose_generator)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
