// Serial vs OpenMP candidate filter on the subgroups of Q_8 (order 64)
// embedded in A_n.

#include <benchmark/benchmark.h>

#include <map>

#include "brauerlab/group_search.hpp"
#include "brauerlab/sc_kernels.hpp"
#include "brauerlab/sylow.hpp"

namespace {

using namespace brauerlab;

struct Setup {
  PermGroup q8;
  ElementTable table;
  std::vector<ElementSet> subgroups;
  FilterContext ctx;

  explicit Setup(int n) : q8(q8_in(n)), table(q8), subgroups(enumerate_subgroups(table)) {
    ctx = FilterContext{&table, n, 4, {}};
    for (const auto& z : center(q8).elements()) ctx.q2w_center.set(table.index_of(z));
  }

  static PermGroup q8_in(int n) {
    std::vector<Permutation> gens;
    for (const auto& g : sylow_alt_generators(8)) gens.push_back(g.extended(n));
    return PermGroup(n, gens);
  }
};

const Setup& setup(int n) {
  static std::map<int, Setup> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.try_emplace(n, n).first;
  return it->second;
}

void BM_FilterSerial(benchmark::State& state) {
  const Setup& s = setup(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(filter_candidates_serial(s.ctx, s.subgroups));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.subgroups.size()));
}

void BM_FilterOmp(benchmark::State& state) {
  const Setup& s = setup(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(filter_candidates_omp(s.ctx, s.subgroups));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.subgroups.size()));
}

}  // namespace

BENCHMARK(BM_FilterSerial)->Arg(8)->Arg(11)->Arg(14)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FilterOmp)->Arg(8)->Arg(11)->Arg(14)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
