// Serial reference kernel against the OpenMP kernel on a few networks.

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "bcstar/enumerate.hpp"

namespace {

struct Case {
    const char* stages;
    int n;
};

const std::vector<Case>& cases() {
    static const std::vector<Case> all = {
        {"[2,3] o [1,2] o [3,4] o [2,3]", 4},
        {"[-3,3] o [1,3] o [-2,2]", 3},
        {"[1,4] o [-2,2] o [2,4] o [1,3]", 4},
        {"[-2,2] o [-1,1] o [1,2] * [-2,2]", 2},
    };
    return all;
}

void run(benchmark::State& state, bool parallel) {
    const Case& c = cases().at(static_cast<std::size_t>(state.range(0)));
    const bcstar::StarNetwork net = bcstar::parse_network(c.stages, c.n);
    bcstar::EnumerationOptions opts;
    opts.parallel = parallel;
    for (auto _ : state) {
        auto counts = bcstar::count_families(net, opts);
        benchmark::DoNotOptimize(counts);
    }
    state.SetLabel(c.stages);
    state.counters["families"] = static_cast<double>(bcstar::family_count_estimate(net));
}

void BM_serial(benchmark::State& state) { run(state, false); }
void BM_parallel(benchmark::State& state) { run(state, true); }

} // namespace

BENCHMARK(BM_serial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_parallel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
