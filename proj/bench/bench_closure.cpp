#include <benchmark/benchmark.h>

#include "dehnkit/groups.hpp"

using namespace dehnkit;

namespace {

// Serial reference vs OpenMP frontier expansion on the two largest canonical groups.
void run(benchmark::State& state, Scenario s, long D, bool parallel) {
    const auto gens = maximal_group(D, s).gens;
    for (auto _ : state) {
        GroupSet G = parallel ? closure_parallel(gens) : closure_serial(gens);
        benchmark::DoNotOptimize(G.elements.data());
    }
}

void BM_Serial72(benchmark::State& st) { run(st, Scenario::sqrt3_III, -3, false); }
void BM_Parallel72(benchmark::State& st) { run(st, Scenario::sqrt3_III, -3, true); }
void BM_Serial96(benchmark::State& st) { run(st, Scenario::sqrt1_III_pair, -1, false); }
void BM_Parallel96(benchmark::State& st) { run(st, Scenario::sqrt1_III_pair, -1, true); }

}  // namespace

BENCHMARK(BM_Serial72)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel72)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Serial96)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel96)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
