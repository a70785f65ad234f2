#include <benchmark/benchmark.h>

#include "retract/cograph_retract.hpp"
#include "retract/oracle.hpp"
#include "retract/sweep.hpp"

using namespace retract;

namespace {

struct Corpus {
    std::vector<Graph> g, h;
    explicit Corpus(std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) {
            g.push_back(random_cograph(3 + static_cast<int>(i % 6), i));
            h.push_back(random_cograph(1 + static_cast<int>(i % 5), 7919 * i + 1));
        }
    }
    bool check(std::size_t i) const { return fpt_retract(g[i], h[i]).yes() == brute_retract(g[i], h[i]).yes(); }
};

const Corpus& corpus() {
    static const Corpus c(512);
    return c;
}

void BM_SerialSweep(benchmark::State& state) {
    const auto& c = corpus();
    for (auto _ : state) {
        auto r = serial_map(c.g.size(), [&](std::size_t i) { return c.check(i); });
        benchmark::DoNotOptimize(r);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(c.g.size()));
}

void BM_ParallelSweep(benchmark::State& state) {
    const auto& c = corpus();
    const int threads = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto r = parallel_map(c.g.size(), [&](std::size_t i) { return c.check(i); }, threads);
        benchmark::DoNotOptimize(r);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(c.g.size()));
}

}  // namespace

BENCHMARK(BM_SerialSweep)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ParallelSweep)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
