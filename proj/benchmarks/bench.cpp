#include "edgewalk/asymptotics.hpp"
#include "edgewalk/formula.hpp"
#include "edgewalk/graph.hpp"
#include "edgewalk/lattice.hpp"
#include "edgewalk/simulate.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

namespace {

using namespace edgewalk;

std::vector<TimeSpec> paper_specs() {
    return {TimeSpec::parse("1/1"), TimeSpec::parse("sqrt(2)"), TimeSpec::parse("sqrt(3)"),
            TimeSpec::parse("sqrt(5)"), TimeSpec::parse("sqrt(7)")};
}

void BM_CountWeak(benchmark::State& state) {
    std::vector<double> c{1.0, std::sqrt(2.0), std::sqrt(3.0), std::sqrt(5.0), std::sqrt(7.0)};
    c.resize(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(count_weak(c, 40.0));
}
BENCHMARK(BM_CountWeak)->DenseRange(1, 5);

void BM_StrictInclusionExclusion(benchmark::State& state) {
    std::vector<double> c{1.0, std::sqrt(2.0), std::sqrt(3.0), std::sqrt(5.0), std::sqrt(7.0)};
    for (auto _ : state) benchmark::DoNotOptimize(strict_via_inclusion_exclusion(c, 40.0));
}
BENCHMARK(BM_StrictInclusionExclusion);

void BM_Simulate(benchmark::State& state) {
    MetricTree h = make_h_junction(paper_specs());
    Basis basis = Basis::from_specs(paper_specs());
    Vertex a = h.vertex("A");
    double T = static_cast<double>(state.range(0));
    for (auto _ : state) {
        SimulationReport rep = simulate(h, a, T, basis);
        benchmark::DoNotOptimize(rep.total_points);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Simulate)->RangeMultiplier(2)->Range(10, 80)->Complexity();

void BM_BirthTerms(benchmark::State& state) {
    MetricTree h = make_h_junction(paper_specs());
    Vertex a = h.vertex("A");
    for (auto _ : state) benchmark::DoNotOptimize(birth_terms(h, a));
}
BENCHMARK(BM_BirthTerms);

void BM_EvalTerms(benchmark::State& state) {
    MetricTree h = make_h_junction(paper_specs());
    TermList terms = birth_terms(h, h.vertex("A"));
    std::vector<double> times = h.edge_times();
    double T = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(eval_terms(terms, times, T));
}
BENCHMARK(BM_EvalTerms)->Arg(100)->Arg(300)->Arg(600);

void BM_HTotalClosedForm(benchmark::State& state) {
    std::vector<double> t{1.0, std::sqrt(2.0), std::sqrt(3.0), std::sqrt(5.0), std::sqrt(7.0)};
    for (auto _ : state) benchmark::DoNotOptimize(h_total(t, HVertex::A, 600.0));
}
BENCHMARK(BM_HTotalClosedForm);

void BM_Z0(benchmark::State& state) {
    // caterpillar with ten edges
    std::vector<std::tuple<std::string, std::string, TimeSpec>> list;
    for (int v = 1; v <= 10; ++v)
        list.emplace_back("v" + std::to_string(v / 2), "v" + std::to_string(v),
                          TimeSpec::decimal(1.0));
    MetricTree tree = build_tree(list);
    Vertex root = tree.vertex("v0");
    for (auto _ : state) benchmark::DoNotOptimize(z0(tree, root));
}
BENCHMARK(BM_Z0);

} // namespace

BENCHMARK_MAIN();
