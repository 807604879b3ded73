// Serial reference vs OpenMP kernels for the per-step inner loops.
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "dqw/kernels.hpp"
#include "dqw/lattice.hpp"

namespace {

std::vector<dqw::cplx> random_vector(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d;
  std::vector<dqw::cplx> v(n);
  for (auto& z : v) z = {d(rng), d(rng)};
  return v;
}

template <bool Parallel>
void BM_Coin(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto m = random_vector(n, 1);
  auto p = random_vector(n, 2);
  std::vector<double> angles(n, 0.05);
  for (auto _ : state) {
    if constexpr (Parallel) dqw::kernels::apply_coin(m, p, angles, dqw::CoinVariant::DeterminantOne);
    else dqw::kernels::serial::apply_coin(m, p, angles, dqw::CoinVariant::DeterminantOne);
    benchmark::DoNotOptimize(m.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

template <bool Parallel>
void BM_Banded(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto in = random_vector(n, 3);
  std::vector<dqw::cplx> out(n);
  std::vector<double> diag(n, 0.0), upper(n, 1.0), lower(n, 0.0);
  for (auto _ : state) {
    if constexpr (Parallel) dqw::kernels::apply_banded(diag, upper, lower, in, out);
    else dqw::kernels::serial::apply_banded(diag, upper, lower, in, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

template <bool Parallel>
void BM_Dense(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto mat = random_vector(n * n, 4);
  const auto in = random_vector(n, 5);
  std::vector<dqw::cplx> out(n);
  for (auto _ : state) {
    if constexpr (Parallel) dqw::kernels::apply_dense(mat.data(), n, in, out);
    else dqw::kernels::serial::apply_dense(mat.data(), n, in, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * n));
}

template <bool Parallel>
void BM_Density(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = random_vector(n, 6);
  const auto p = random_vector(n, 7);
  std::vector<double> out(n);
  for (auto _ : state) {
    if constexpr (Parallel) dqw::kernels::density(m, p, out);
    else dqw::kernels::serial::density(m, p, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

void BM_SpectralShift(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const dqw::LatticeSpec lattice(n, 1.0);
  const std::vector<double> a(n, 0.7);
  dqw::UnitarizeOptions opts;
  opts.strategy = dqw::UnitarizeStrategy::Exponential;
  const auto u = dqw::unitarize(dqw::assemble_stencil(a, lattice), lattice, opts);
  const auto in = random_vector(n, 8);
  std::vector<dqw::cplx> out(n);
  for (auto _ : state) {
    u.apply(in, out);
    benchmark::DoNotOptimize(out.data());
  }
}

}  // namespace

BENCHMARK(BM_Coin<false>)->Arg(4096)->Arg(1 << 16);
BENCHMARK(BM_Coin<true>)->Arg(4096)->Arg(1 << 16);
BENCHMARK(BM_Banded<false>)->Arg(4096)->Arg(1 << 16);
BENCHMARK(BM_Banded<true>)->Arg(4096)->Arg(1 << 16);
BENCHMARK(BM_Density<false>)->Arg(4096)->Arg(1 << 16);
BENCHMARK(BM_Density<true>)->Arg(4096)->Arg(1 << 16);
BENCHMARK(BM_Dense<false>)->Arg(256)->Arg(1024);
BENCHMARK(BM_Dense<true>)->Arg(256)->Arg(1024);
BENCHMARK(BM_SpectralShift)->Arg(4096);

BENCHMARK_MAIN();
