// Compares the OpenMP spectrum kernel against the serial reference on
// constructed sequences and a random kernel-stress size.

#include <benchmark/benchmark.h>

#include <random>

#include "adicseq/correlation.hpp"
#include "adicseq/verify.hpp"

using namespace adicseq;

namespace {

BinarySequence constructed(std::uint64_t p) {
  const auto params = build_params(p);
  return construct_u(params, BVector::parse("0101"));
}

BinarySequence random_seq(std::size_t n) {
  std::mt19937_64 rng(42);
  std::vector<std::uint8_t> bits(n);
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1);
  return BinarySequence(std::move(bits));
}

void BM_spectrum_serial(benchmark::State& state) {
  const auto u = constructed(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectrum_serial(u));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * u.period()));
}

void BM_spectrum_openmp(benchmark::State& state) {
  const auto u = constructed(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectrum(u));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * u.period()));
}

void BM_spectrum_serial_random(benchmark::State& state) {
  const auto s = random_seq(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectrum_serial(s));
  }
}

void BM_spectrum_openmp_random(benchmark::State& state) {
  const auto s = random_seq(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectrum(s));
  }
}

void BM_verify_all(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_all(p));
  }
}

}  // namespace

BENCHMARK(BM_spectrum_serial)->Arg(293)->Arg(733)->Arg(1373)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_spectrum_openmp)->Arg(293)->Arg(733)->Arg(1373)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_spectrum_serial_random)->Arg(8000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_spectrum_openmp_random)->Arg(8000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_all)->Arg(53)->Arg(293)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
