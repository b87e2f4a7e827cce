#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "bridgelife/chloride.hpp"
#include "bridgelife/decksim.hpp"
#include "bridgelife/fatigue.hpp"
#include "bridgelife/planning.hpp"
#include "bridgelife/specialfn.hpp"

namespace bl = bridgelife;

static void BM_Erf(benchmark::State& state) {
    double x = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bl::specialfn::erf(x));
        x += 1e-4;
        if (x > 4.0) x = 0.0;
    }
}
BENCHMARK(BM_Erf);

static void BM_InitiationTime(benchmark::State& state) {
    bl::chloride::ChlorideEnvironment env{3.5, 1.2, 2e-8, 50.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(bl::chloride::t1_fick(env));
    }
}
BENCHMARK(BM_InitiationTime);

static void BM_Rainflow(benchmark::State& state) {
    std::mt19937 rng(1);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    std::vector<double> history(static_cast<std::size_t>(state.range(0)));
    for (double& v : history) v = u(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bl::fatigue::rainflow_count(history));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Rainflow)->Range(64, 16384)->Complexity();

static void BM_MaintenanceLp(benchmark::State& state) {
    bl::planning::PlanningInstance inst;
    inst.groups = 2;
    inst.states = 4;
    inst.treatments = 2;
    inst.periods = static_cast<std::size_t>(state.range(0));
    inst.group_sizes = {1.0, 2.0};
    inst.budgets.assign(inst.periods, 0.5);
    const bl::markov::Matrix decay{{0.7, 0.2, 0.1, 0.0},
                                   {0.0, 0.6, 0.3, 0.1},
                                   {0.0, 0.0, 0.5, 0.5},
                                   {0.0, 0.0, 0.0, 1.0}};
    const bl::markov::Matrix repair{{1.0, 0.0, 0.0, 0.0},
                                    {0.9, 0.1, 0.0, 0.0},
                                    {0.7, 0.2, 0.1, 0.0},
                                    {0.5, 0.3, 0.1, 0.1}};
    for (std::size_t s = 0; s < inst.groups; ++s) {
        inst.costs.push_back({std::vector<double>(inst.periods, 0.0),
                              std::vector<double>(inst.periods, 1.0)});
        inst.tpms.push_back({{decay}, {repair}});
        inst.initial.push_back({0.4, 0.3, 0.2, 0.1});
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(bl::planning::solve_instance(inst));
    }
}
BENCHMARK(BM_MaintenanceLp)->Arg(3)->Arg(5)->Arg(8);

static void BM_DeckSimulation(benchmark::State& state) {
    bl::decksim::DeckSimConfig cfg;
    cfg.cells = static_cast<std::size_t>(state.range(0));
    cfg.seed = 7;
    cfg.surface_chloride = {3.5, 0.5, 0.5, 12.0};
    cfg.threshold_chloride = {1.2, 0.2, 0.2, 4.0};
    cfg.diffusion = {2e-8, 5e-9, 1e-9, 1e-6};
    cfg.cover = {50.0, 8.0, 20.0, 90.0};
    cfg.icorr = {2.0, 0.5, 0.1, 10.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(bl::decksim::simulate_deck(cfg));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DeckSimulation)->Range(128, 8192)->Complexity();

BENCHMARK_MAIN();
