// Copyright 2026 The qgames Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qgames/catalog.hpp"
#include "qgames/equivalence.hpp"
#include "qgames/transforms.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace qgames;

QuantumSequentialGame bench_game(std::size_t steps) {
    RandomQseqSpec spec;
    spec.seed = 42;
    spec.steps = steps;
    spec.options_per_move = 2;
    return random_qseq(spec);
}

void BM_PayoffSeq(benchmark::State &state) {
    const auto g = bench_game(static_cast<std::size_t>(state.range(0)));
    SeqProfile profile(g.n_players());
    for (std::size_t i = 0; i < g.n_players(); ++i) {
        profile[i].assign(g.turn_map.moves_of(i), 0);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(payoff_seq(g, profile));
    }
}
BENCHMARK(BM_PayoffSeq)->DenseRange(1, 4);

void BM_SeqToSim(benchmark::State &state) {
    const auto g = bench_game(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(seq_to_sim(g));
    }
}
BENCHMARK(BM_SeqToSim)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_TabulateSimFromSeq(benchmark::State &state) {
    const auto res = seq_to_sim(bench_game(static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(tabulate_normal_form(res.game));
    }
}
BENCHMARK(BM_TabulateSimFromSeq)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_SearchEquivalence(benchmark::State &state) {
    RandomNormalFormSpec spec;
    spec.seed = 7;
    spec.players = 3;
    spec.max_strategies = static_cast<std::size_t>(state.range(0));
    spec.duplicate_rate = 0.0;
    spec.levels = 100;
    const auto g = random_normal_form(spec);
    std::vector<std::vector<std::size_t>> perm(g.n_players());
    for (std::size_t i = 0; i < g.n_players(); ++i) {
        for (std::size_t s = g.strategy_count(i); s-- > 0;) {
            perm[i].push_back(s);
        }
    }
    const auto h = permute_strategies(g, perm);
    for (auto _ : state) {
        benchmark::DoNotOptimize(search_equivalence(g, h));
    }
}
BENCHMARK(BM_SearchEquivalence)->DenseRange(2, 6, 2);

} // namespace

BENCHMARK_MAIN();
