#include <benchmark/benchmark.h>

#include <random>

#include "gdta/report.hpp"

namespace {

gdta::GDParams two_factor(std::uint64_t p) {
  return gdta::GDParams(gdta::parse_factors("2x3,3x3"), p);
}

void BM_MultiplyB2(benchmark::State& state) {
  gdta::GDParams params = two_factor(static_cast<std::uint64_t>(state.range(0)));
  std::vector<gdta::B2Label> labels = gdta::enumerate_b2(params);
  std::mt19937_64 rng(1);
  std::vector<std::pair<std::size_t, std::size_t>> pairs(512);
  for (auto& pr : pairs) pr = {rng() % labels.size(), rng() % labels.size()};
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(gdta::multiply_b2(params, labels[a], labels[b]));
  }
}
BENCHMARK(BM_MultiplyB2)->Arg(0)->Arg(5);

void BM_EnumerateLabels(benchmark::State& state) {
  gdta::GDParams params = two_factor(5);
  for (auto _ : state) benchmark::DoNotOptimize(gdta::enumerate_b2(params));
}
BENCHMARK(BM_EnumerateLabels);

void BM_CenterBasis(benchmark::State& state) {
  gdta::GDParams params = two_factor(3);
  for (auto _ : state) benchmark::DoNotOptimize(gdta::center_basis(params));
}
BENCHMARK(BM_CenterBasis);

void BM_Wedderburn(benchmark::State& state) {
  gdta::GDParams params = two_factor(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gdta::wedderburn(params));
}
BENCHMARK(BM_Wedderburn)->Arg(2)->Arg(3)->Arg(5);

void BM_Analyze(benchmark::State& state) {
  gdta::GDParams params = two_factor(3);
  for (auto _ : state) benchmark::DoNotOptimize(gdta::analyze(params));
}
BENCHMARK(BM_Analyze);

}  // namespace
