#include "ncop/operad.hpp"
#include "ncop/partition.hpp"
#include "ncop/psi.hpp"
#include "ncop/rewrite.hpp"
#include "ncop/series.hpp"
#include "ncop/term.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace ncop;

void bm_enumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(n));
}
BENCHMARK(bm_enumerate)->Arg(6)->Arg(8);

void bm_compose_all_pairs(benchmark::State& state) {
  const auto lhs = enumerate(4);
  const auto rhs = enumerate(3);
  for (auto _ : state)
    for (const auto& pi : lhs)
      for (const auto& nu : rhs)
        for (int i = 1; i <= 4; ++i) benchmark::DoNotOptimize(compose_parts(pi, i, nu));
}
BENCHMARK(bm_compose_all_pairs);

void bm_normal_form(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto monomials = enumerate_all(n, Signature::Reduced);
  for (auto _ : state)
    for (const Term& t : monomials) benchmark::DoNotOptimize(normal_form(t));
}
BENCHMARK(bm_normal_form)->Arg(4)->Arg(5);

void bm_eval_psi(benchmark::State& state) {
  const auto monomials = enumerate_all(5, Signature::Full);
  for (auto _ : state)
    for (const Term& t : monomials) benchmark::DoNotOptimize(eval_psi(t));
}
BENCHMARK(bm_eval_psi);

void bm_rank_check(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rank_check(n));
}
BENCHMARK(bm_rank_check)->Arg(5)->Arg(6);

void bm_factorize(benchmark::State& state) {
  const auto parts = enumerate(6);
  for (auto _ : state)
    for (const auto& pi : parts) benchmark::DoNotOptimize(factorize(pi));
}
BENCHMARK(bm_factorize);

void bm_solve_system(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_system(order));
}
BENCHMARK(bm_solve_system)->Arg(16)->Arg(32);

void bm_riordan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(riordan(64));
}
BENCHMARK(bm_riordan);

void bm_count(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count(64));
}
BENCHMARK(bm_count);

}  // namespace

BENCHMARK_MAIN();
