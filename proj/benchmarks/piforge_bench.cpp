#include <benchmark/benchmark.h>

#include "piforge/gamma.hpp"
#include "piforge/identities.hpp"
#include "piforge/pi_family.hpp"
#include "piforge/real.hpp"

using namespace piforge;

// Throughput of the five-operation term update: a capped run that never
// converges, so every iteration pays for exactly max_terms steps.
static void BM_family_hot_loop(benchmark::State& state) {
  const precision_context ctx(static_cast<unsigned>(state.range(0)));
  const big_real target = big_real::from_decimal("1e-30", ctx);
  const family_params p{0, 4};
  constexpr std::uint64_t steps = 200000;
  for (auto _ : state) {
    const evaluation_report r = eval_family(p, target, ctx, steps);
    benchmark::DoNotOptimize(r.terms_used);
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * steps));
}
BENCHMARK(BM_family_hot_loop)->Arg(128)->Arg(256)->Arg(1024);

static void BM_identity_sweep(benchmark::State& state) {
  for (auto _ : state) {
    const auto reports = sweep_identity(identity_id::iv2, 10, 20);
    benchmark::DoNotOptimize(reports.size());
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * 11 * 21));
}
BENCHMARK(BM_identity_sweep);

static void BM_gamma(benchmark::State& state) {
  const precision_context ctx(static_cast<unsigned>(state.range(0)));
  const rational x(7, 2);
  for (auto _ : state) {
    const big_real g = gamma(x, ctx);
    benchmark::DoNotOptimize(g.sign());
  }
}
BENCHMARK(BM_gamma)->Arg(128)->Arg(256)->Arg(1024);

static void BM_big_real_mul_div(benchmark::State& state) {
  const precision_context ctx(static_cast<unsigned>(state.range(0)));
  big_real a = big_real::pi(ctx);
  const big_real b = big_real::sqrt_pi(ctx);
  for (auto _ : state) {
    a *= b;
    a /= b;
    benchmark::DoNotOptimize(a.sign());
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * 2));
}
BENCHMARK(BM_big_real_mul_div)->Arg(256)->Arg(4096);

BENCHMARK_MAIN();
