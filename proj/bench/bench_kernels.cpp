#include <map>
#include <benchmark/benchmark.h>

#include "nimgroup/group_spec.hpp"
#include "nimgroup/kernels.hpp"
#include "nimgroup/lattice.hpp"

using namespace nimgroup;

namespace {

const FiniteGroup& group_for(std::int64_t p) {
  static std::map<std::int64_t, FiniteGroup> cache;
  auto it = cache.find(p);
  if (it == cache.end()) it = cache.emplace(p, build_group(frobenius(static_cast<std::size_t>(p)))).first;
  return it->second;
}

template <bool Parallel>
void BM_Associativity(benchmark::State& state) {
  const auto& g = group_for(state.range(0));
  for (auto _ : state) {
    auto r = Parallel ? kernels::find_nonassociative(g.table(), g.order())
                      : kernels::find_nonassociative_serial(g.table(), g.order());
    benchmark::DoNotOptimize(r);
  }
}

template <bool Parallel>
void BM_JoinEach(benchmark::State& state) {
  const auto& g = group_for(state.range(0));
  const auto subs = all_subgroups(g).members;
  for (auto _ : state) {
    auto r = Parallel ? kernels::join_each(g, subs.front(), subs) : kernels::join_each_serial(g, subs.front(), subs);
    benchmark::DoNotOptimize(r);
  }
}

template <bool Parallel>
void BM_OneStep(benchmark::State& state) {
  const auto& g = group_for(state.range(0));
  const auto subs = all_subgroups(g).members;
  for (auto _ : state) {
    auto r = Parallel ? kernels::one_step_extensions(g, subs) : kernels::one_step_extensions_serial(g, subs);
    benchmark::DoNotOptimize(r);
  }
}

}  // namespace

BENCHMARK(BM_Associativity<false>)->Arg(7)->Arg(13)->Arg(19)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Associativity<true>)->Arg(7)->Arg(13)->Arg(19)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JoinEach<false>)->Arg(7)->Arg(13)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JoinEach<true>)->Arg(7)->Arg(13)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OneStep<false>)->Arg(7)->Arg(13)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OneStep<true>)->Arg(7)->Arg(13)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
