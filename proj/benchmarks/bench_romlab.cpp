#include <benchmark/benchmark.h>

#include <random>

#include "romlab/criterion.hpp"
#include "romlab/factorization.hpp"
#include "romlab/integrate.hpp"
#include "romlab/sumset.hpp"

using namespace romlab;

namespace {

const PrimeSet& primes_1e7() {
  static const PrimeSet ps = sieve(10000000);
  return ps;
}

void BM_sieve(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sieve(limit).count());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(limit));
}
BENCHMARK(BM_sieve)->Arg(1000000)->Arg(10000000)->Unit(benchmark::kMillisecond);

void BM_sumset(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const RationalY y = parse_y("2");
  const PrimeSet& ps = primes_1e7();
  for (auto _ : state) {
    benchmark::DoNotOptimize(sumset_count(y, n, 1, ps).count);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n));
}
BENCHMARK(BM_sumset)->Arg(1000000)->Arg(10000000)->Unit(benchmark::kMillisecond);

void BM_fn_exact(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const RationalY y = parse_y("3/2");
  for (auto _ : state) {
    benchmark::DoNotOptimize(fn_profile(y, n, 1, 0, FnMode::exact).value);
  }
}
BENCHMARK(BM_fn_exact)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_fn_float(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const RationalY y = parse_y("3/2");
  for (auto _ : state) {
    benchmark::DoNotOptimize(fn_profile(y, n, 1, 0, FnMode::floating).value);
  }
}
BENCHMARK(BM_fn_float)->Arg(10000)->Arg(100000)->Arg(1000000)
    ->Unit(benchmark::kMillisecond);

void BM_factorize(benchmark::State& state) {
  const PrimeSet ps = sieve(10000);
  std::mt19937_64 rng(1);
  std::vector<mpz_class> ns;
  for (int i = 0; i < 256; ++i) {
    ns.emplace_back(static_cast<unsigned long>(1 + rng() % 1000000000000ull));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(factorize(ns[i++ % ns.size()], ps).factors.size());
  }
}
BENCHMARK(BM_factorize);

void BM_pair_sum(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const RationalY y = parse_y("3/2");
  const PrimeSet& ps = primes_1e7();
  for (auto _ : state) {
    benchmark::DoNotOptimize(pair_sum(y, n, 1, ps).zero_diff_pairs);
  }
}
BENCHMARK(BM_pair_sum)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_integrate(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const RationalY y1 = parse_y("6/5");
  const RationalY y2 = parse_y("3");
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        integrate_fn_exact(y1, y2, n, 1).piece_count);
  }
}
BENCHMARK(BM_integrate)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
