#include <benchmark/benchmark.h>

#include <random>

#include "argonaut/af/semantics.hpp"
#include "argonaut/agents/decision.hpp"
#include "argonaut/protocol/session.hpp"

using namespace argonaut;

namespace {

af::ArgumentationFramework synth_framework(int n, double density, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<af::ArgumentId> args;
    for (int i = 0; i < n; ++i) args.push_back("x" + std::to_string(i));
    std::vector<af::Attack> attacks;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j && unit(rng) < density)
                attacks.push_back({args[static_cast<std::size_t>(i)],
                                   args[static_cast<std::size_t>(j)]});
        }
    }
    return {args, attacks};
}

void BM_Grounded(benchmark::State& state) {
    const auto f = synth_framework(static_cast<int>(state.range(0)), 0.15, 99);
    for (auto _ : state) {
        benchmark::DoNotOptimize(af::grounded_extension(f));
    }
}
BENCHMARK(BM_Grounded)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_Preferred(benchmark::State& state) {
    const auto f = synth_framework(static_cast<int>(state.range(0)), 0.15, 99);
    for (auto _ : state) {
        benchmark::DoNotOptimize(af::preferred_extensions(f));
    }
}
BENCHMARK(BM_Preferred)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

void BM_Complete(benchmark::State& state) {
    const auto f = synth_framework(static_cast<int>(state.range(0)), 0.15, 99);
    for (auto _ : state) {
        benchmark::DoNotOptimize(af::complete_extensions(f));
    }
}
BENCHMARK(BM_Complete)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

void BM_MaximalIdeal(benchmark::State& state) {
    const auto f = synth_framework(static_cast<int>(state.range(0)), 0.15, 99);
    for (auto _ : state) {
        benchmark::DoNotOptimize(af::maximal_ideal_extension(f));
    }
}
BENCHMARK(BM_MaximalIdeal)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

void BM_DecideFull(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> value(-10, 10);
    std::vector<std::pair<agents::JointActionProfile, double>> a, b;
    for (int i = 0; i < n; ++i) {
        const auto profile = agents::make_actor_profile("act" + std::to_string(i));
        a.emplace_back(profile, value(rng));
        b.emplace_back(profile, value(rng));
    }
    const agents::UtilityTable own("own", a), other("other", b);
    for (auto _ : state) {
        benchmark::DoNotOptimize(agents::decide_full(own, other, {}));
    }
}
BENCHMARK(BM_DecideFull)->Arg(4)->Arg(16)->Arg(64);

void BM_FullSession(benchmark::State& state) {
    protocol::Scenario scenario;
    scenario.persuader.role = protocol::Role::persuader;
    scenario.persuader.name = "persuader";
    scenario.persuader.actions = {"Show steak ad", "Show salad ad"};
    scenario.persuader.utilities = {{"Show steak ad", 5}, {"Show salad ad", 2}};
    scenario.persuader.rules = {{"Show steak ad", std::nullopt, "a2"}};
    scenario.persuader.repertoire = {{"b2", "c2"}, {"d2", "e2"}, {"d2", "b2"}};
    scenario.mitigator.role = protocol::Role::mitigator;
    scenario.mitigator.name = "mitigator";
    scenario.mitigator.utilities = {{"Show steak ad", -10}, {"Show salad ad", 8}};
    scenario.mitigator.repertoire = {{"a2", "b2"}, {"c2", "d2"}, {"e2", "d2"}};
    scenario.config.max_rounds = 4;

    for (auto _ : state) {
        benchmark::DoNotOptimize(protocol::run_session(scenario));
    }
}
BENCHMARK(BM_FullSession);

} // namespace

BENCHMARK_MAIN();
