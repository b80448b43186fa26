#include <benchmark/benchmark.h>

#include "gaussrenyi/cycles.hpp"
#include "gaussrenyi/measures.hpp"
#include "gaussrenyi/quadirr.hpp"

#include <vector>

namespace cy = gr::cycles;
namespace ms = gr::measures;

static void BM_QuenchedEnumeration(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const gr::maps::ParityWord omega(std::vector<gr::maps::Bit>(n, 0));
  std::size_t cycles = 0;
  for (auto _ : state) {
    const cy::CycleSet s = cy::enumerate_quenched(omega, 40, 1e-8);
    cycles = s.cycles.size();
    benchmark::DoNotOptimize(s.z_partial);
  }
  state.counters["cycles"] = static_cast<double>(cycles);
}
BENCHMARK(BM_QuenchedEnumeration)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_AnnealedDensity(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    const ms::DensityEstimate d = ms::annealed_density(0.5, n, {200, 1e-7}, 40);
    benchmark::DoNotOptimize(d.histogram.masses().data());
  }
}
BENCHMARK(BM_AnnealedDensity)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_ExactFixedPoint(benchmark::State& state) {
  const gr::maps::CylinderWord w{2, 5, 3, 8, 1, 4};
  for (auto _ : state) benchmark::DoNotOptimize(cy::fixed_point_of_word(w));
}
BENCHMARK(BM_ExactFixedPoint);

static void BM_MinusCF(benchmark::State& state) {
  const gr::exact::QuadIrr x(7, 3, 11, 43);
  for (auto _ : state) benchmark::DoNotOptimize(gr::quadirr::minus_cf(x));
}
BENCHMARK(BM_MinusCF);

BENCHMARK_MAIN();
