// Serial reference versus OpenMP kernels on the larger catalog groups.
#include <benchmark/benchmark.h>

#include "spectable/catalog.hpp"
#include "spectable/molien.hpp"
#include "spectable/oracle.hpp"

using namespace spectable;

namespace {

const Catalog& catalog() {
    static const Catalog c(SPECTABLE_DEFAULT_CATALOG);
    return c;
}

const char* const kGroups[] = {"O", "2O", "2I"};

Execution mode(const benchmark::State& state) {
    return state.range(1) == 0 ? Execution::serial : Execution::parallel;
}

void set_label(benchmark::State& state) {
    state.SetLabel(std::string(kGroups[state.range(0)]) + (state.range(1) == 0 ? " serial" : " parallel"));
}

void correlation(benchmark::State& state) {
    const auto& g = catalog().get(kGroups[state.range(0)]);
    const auto& table = g.verified_table();
    const auto& rep = g.rep(g.defining_rep);
    for (auto _ : state) benchmark::DoNotOptimize(correlation_table(g.group, table, rep, 24, true, mode(state)));
    set_label(state);
}

void projector_traces(benchmark::State& state) {
    const auto& g = catalog().get(kGroups[state.range(0)]);
    const auto& table = g.verified_table();
    const auto& rep = g.rep(g.defining_rep);
    for (auto _ : state) benchmark::DoNotOptimize(projector_trace_columns(g.group, table, rep, 12, mode(state)));
    set_label(state);
}

}  // namespace

BENCHMARK(correlation)->ArgsProduct({{0, 1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(projector_traces)->ArgsProduct({{0, 1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
