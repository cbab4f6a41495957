// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include <optional>
#include <span>

#include "latpack/ball.hpp"
#include "latpack/bounds.hpp"
#include "latpack/museq.hpp"

namespace {

using namespace latpack;

std::optional<std::int64_t> norm_of(std::span<const int>, std::int64_t norm) { return norm; }

void BM_BallSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ball::collect_serial<std::int64_t>(n, 10, norm_of));
}

void BM_BallParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ball::collect_parallel<std::int64_t>(n, 10, norm_of));
}

void forbidden(benchmark::State& state, museq::Exec exec) {
  const auto s = museq::greedy_sequence(12, 6).s;
  museq::Options opts;
  opts.exec = exec;
  for (auto _ : state) benchmark::DoNotOptimize(museq::forbidden_values(s, 12, opts));
}

void BM_ForbiddenSerial(benchmark::State& state) { forbidden(state, museq::Exec::serial); }
void BM_ForbiddenParallel(benchmark::State& state) { forbidden(state, museq::Exec::parallel); }

void BM_EnvelopeSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bounds::envelope(9, 2.0, bounds::Exec::serial));
}

void BM_EnvelopeParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bounds::envelope(9, 2.0, bounds::Exec::parallel));
}

}  // namespace

BENCHMARK(BM_BallSerial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BallParallel)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ForbiddenSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ForbiddenParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnvelopeSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnvelopeParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
