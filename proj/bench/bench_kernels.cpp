// Serial reference kernels against their OpenMP counterparts, plus the
// dyadic and naive transfer-matrix products.

#include <benchmark/benchmark.h>

#include <complex>
#include <random>
#include <vector>

#include "al_ist/io.hpp"
#include "al_ist/kernels.hpp"
#include "al_ist/laurent.hpp"
#include "al_ist/nlft.hpp"

namespace {

using al_ist::cplx;

std::vector<cplx> random_coeffs(std::size_t n, unsigned seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cplx> v(n);
  for (auto& c : v) c = {u(gen), u(gen)};
  return v;
}

void BM_ConvolveSerial(benchmark::State& state) {
  const auto a = random_coeffs(static_cast<std::size_t>(state.range(0)), 1);
  const auto b = random_coeffs(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(al_ist::kernels::serial::convolve(a, b));
}
BENCHMARK(BM_ConvolveSerial)->RangeMultiplier(4)->Range(64, 4096);

void BM_ConvolveParallel(benchmark::State& state) {
  const auto a = random_coeffs(static_cast<std::size_t>(state.range(0)), 1);
  const auto b = random_coeffs(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(al_ist::kernels::parallel::convolve(a, b));
}
BENCHMARK(BM_ConvolveParallel)->RangeMultiplier(4)->Range(64, 4096);

void BM_ConvolveFft(benchmark::State& state) {
  const al_ist::LaurentPoly a(0, random_coeffs(static_cast<std::size_t>(state.range(0)), 1));
  const al_ist::LaurentPoly b(0, random_coeffs(static_cast<std::size_t>(state.range(0)), 2));
  for (auto _ : state) benchmark::DoNotOptimize(al_ist::multiply_fft(a, b));
}
BENCHMARK(BM_ConvolveFft)->RangeMultiplier(4)->Range(64, 4096);

template <bool Parallel>
void BM_SchurSweep(benchmark::State& state) {
  auto num = random_coeffs(static_cast<std::size_t>(state.range(0)), 3);
  auto den = random_coeffs(static_cast<std::size_t>(state.range(0)), 4);
  const cplx gamma{0.01, 0.02};
  for (auto _ : state) {
    if constexpr (Parallel) {
      al_ist::kernels::parallel::schur_sweep(num, den, gamma, 1.0);
    } else {
      al_ist::kernels::serial::schur_sweep(num, den, gamma, 1.0);
    }
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_SchurSweep<false>)->RangeMultiplier(4)->Range(1024, 65536);
BENCHMARK(BM_SchurSweep<true>)->RangeMultiplier(4)->Range(1024, 65536);

void BM_NlftDyadic(benchmark::State& state) {
  const auto q = al_ist::io::random_sequence(5, static_cast<int>(state.range(0)), 0, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(al_ist::nlft_forward(q));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NlftDyadic)->RangeMultiplier(4)->Range(256, 4096)->Complexity();

void BM_NlftDyadicSerial(benchmark::State& state) {
  const auto q = al_ist::io::random_sequence(5, static_cast<int>(state.range(0)), 0, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(al_ist::nlft_forward_serial(q));
}
BENCHMARK(BM_NlftDyadicSerial)->RangeMultiplier(4)->Range(256, 4096);

void BM_NlftNaive(benchmark::State& state) {
  const auto q = al_ist::io::random_sequence(5, static_cast<int>(state.range(0)), 0, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(al_ist::nlft_forward_naive(q));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NlftNaive)->RangeMultiplier(4)->Range(256, 4096)->Complexity();

}  // namespace

BENCHMARK_MAIN();
