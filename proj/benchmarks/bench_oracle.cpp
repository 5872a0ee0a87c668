#include <benchmark/benchmark.h>

#include <random>

#include "gdta/oracle.hpp"

namespace {

void BM_GeneratedDimension(benchmark::State& state) {
  gdta::GDParams params(gdta::parse_factors("2x3,3x3"),
                        static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    gdta::VertexSpace sp(params);
    benchmark::DoNotOptimize(gdta::generated_algebra_dimension(sp));
  }
}
BENCHMARK(BM_GeneratedDimension)->Arg(0)->Arg(2)->Arg(5);

void BM_GeneratedDimension256(benchmark::State& state) {
  gdta::GDParams params(gdta::parse_factors("2x2,2x2,2x2,2x2"),
                        static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    gdta::VertexSpace sp(params);
    benchmark::DoNotOptimize(gdta::generated_algebra_dimension(sp));
  }
}
BENCHMARK(BM_GeneratedDimension256)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_RealizedProduct(benchmark::State& state) {
  gdta::GDParams params(gdta::parse_factors("2x3,3x3"), 5);
  gdta::VertexSpace sp(params);
  std::vector<gdta::B2Label> labels = gdta::enumerate_b2(params);
  std::vector<gdta::BlockMatrix> realized;
  for (const gdta::B2Label& l : labels) realized.push_back(gdta::realize_b2_label(sp, l));
  std::mt19937_64 rng(2);
  for (auto _ : state) {
    const gdta::BlockMatrix& a = realized[rng() % realized.size()];
    const gdta::BlockMatrix& b = realized[rng() % realized.size()];
    benchmark::DoNotOptimize(gdta::block_multiply(sp, a, b));
  }
}
BENCHMARK(BM_RealizedProduct);

void BM_VerifyAxioms(benchmark::State& state) {
  gdta::GDParams params(gdta::parse_factors("2x3,3x3"), 3);
  gdta::VertexSpace sp(params);
  for (auto _ : state) benchmark::DoNotOptimize(gdta::verify_axioms(sp, true));
}
BENCHMARK(BM_VerifyAxioms)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
