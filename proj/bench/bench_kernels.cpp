// Serial references against the OpenMP kernels on realistic inputs.

#include <benchmark/benchmark.h>

#include <map>

#include "tmc/curves.hpp"
#include "tmc/hausdorff.hpp"
#include "tmc/kernels.hpp"

using namespace tmc;

namespace {

const std::vector<CycNumber>& koch_points(std::uint64_t n) {
  static std::map<std::uint64_t, std::vector<CycNumber>> cache;
  auto& pts = cache[n];
  if (pts.empty()) pts = curve_points(DekkingCurve(2, 3, 1).as_turtle(), n);
  return pts;
}

void BM_embed_serial(benchmark::State& state) {
  const auto& pts = koch_points(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(serial::embed_points(pts, mpq_class(1, 1000000000000)));
}
void BM_embed_parallel(benchmark::State& state) {
  const auto& pts = koch_points(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(parallel::embed_points(pts, mpq_class(1, 1000000000000)));
}

void BM_directed_serial(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const auto a = scaled_prefix_set(DekkingCurve(2, 3, 1), n), b = koch_reference(n);
  const auto samples = sample_segments(a, 1e-3);
  for (auto _ : state) benchmark::DoNotOptimize(serial::directed_distance(samples, b));
}
void BM_directed_parallel(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const auto a = scaled_prefix_set(DekkingCurve(2, 3, 1), n), b = koch_reference(n);
  const auto samples = sample_segments(a, 1e-3);
  for (auto _ : state) benchmark::DoNotOptimize(parallel::directed_distance(samples, b));
}

void BM_counts_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::dekking_counts(2, 3, state.range(0)));
}
void BM_counts_parallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(parallel::dekking_counts(2, 3, state.range(0)));
}

void BM_mismatch_serial(benchmark::State& state) {
  const auto& pts = koch_points(state.range(0));
  const std::vector<CycNumber> scaled = [&] {
    std::vector<CycNumber> out;
    for (const auto& z : pts) out.push_back(CycNumber(3) * z);
    return out;
  }();
  for (auto _ : state) benchmark::DoNotOptimize(serial::first_mismatch(pts, scaled, CycNumber(3)));
}
void BM_mismatch_parallel(benchmark::State& state) {
  const auto& pts = koch_points(state.range(0));
  const std::vector<CycNumber> scaled = [&] {
    std::vector<CycNumber> out;
    for (const auto& z : pts) out.push_back(CycNumber(3) * z);
    return out;
  }();
  for (auto _ : state) benchmark::DoNotOptimize(parallel::first_mismatch(pts, scaled, CycNumber(3)));
}

}  // namespace

BENCHMARK(BM_embed_serial)->Arg(1 << 12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_embed_parallel)->Arg(1 << 12)->Unit(benchmark::kMillisecond);
// the exhaustive reference is quadratic, keep it small
BENCHMARK(BM_directed_serial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_directed_parallel)->Arg(3)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_counts_serial)->Arg(1 << 24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_counts_parallel)->Arg(1 << 24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mismatch_serial)->Arg(1 << 14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mismatch_parallel)->Arg(1 << 14)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
