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

/**
 * @file
 * Builtin example games and seeded random game generators.
 *
 * Builtins: "penny-table1" (classical PQ penny flipover as a strategic game,
 * Q moving twice), "penny-table2" (both players move once),
 * "penny-seq-classical" (the same flipover encoded as a sequential quantum
 * game on one qubit), "penny-seq-quantum" (Q plays Hadamard at both of its
 * turns) and "random-qseq(seed,d,m)".
 */
#pragma once

#include "qgames/games.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace qgames {

[[nodiscard]] std::vector<std::string> builtin_names();

/// Throws UnknownName.
[[nodiscard]] AnyGame builtin_catalog(std::string_view name);

[[nodiscard]] StrategicGame penny_table1();
[[nodiscard]] StrategicGame penny_table2();
[[nodiscard]] QuantumSequentialGame penny_seq_classical();
[[nodiscard]] QuantumSequentialGame penny_seq_quantum();

[[nodiscard]] ComplexMatrix pauli_x();
[[nodiscard]] ComplexMatrix hadamard();

using Rng = std::mt19937_64;

/// Haar-distributed unitary (QR of a complex Ginibre matrix with phase fix).
[[nodiscard]] ComplexMatrix random_unitary(std::size_t dim, Rng &rng);
/// Normalized W W^dagger for a complex Ginibre W.
[[nodiscard]] ComplexMatrix random_density(std::size_t dim, Rng &rng);
/// Channel with `kraus_count` Kraus operators cut from a random isometry.
[[nodiscard]] QuantumChannel random_channel(std::string label, std::size_t dim,
                                            std::size_t kraus_count, Rng &rng);
/// Diagonal POVM with `outcomes` elements and random weights per basis state.
[[nodiscard]] Povm random_diagonal_povm(std::size_t dim, std::size_t outcomes,
                                        Rng &rng);

struct RandomQseqSpec {
    std::uint64_t seed = 0;
    std::size_t dim = 2;
    std::size_t steps = 2;
    /// 0 picks min(steps, 2).
    std::size_t players = 0;
    /// Options per turn; 0 draws 1..3 per turn.
    std::size_t options_per_move = 2;
    /// false: players alternate 1,2,1,...; true: each turn's player is drawn.
    bool random_turns = false;
};

/// Random unitary-conjugation moves, random mixed initial state, random
/// diagonal POVM with 2 or 3 outcomes and payoffs in [-1, 1].
[[nodiscard]] QuantumSequentialGame random_qseq(const RandomQseqSpec &spec);

struct RandomQsimSpec {
    std::uint64_t seed = 0;
    std::size_t players = 2;
    std::size_t dim = 2;
    /// Strategies per player drawn from 1..max_strategies.
    std::size_t max_strategies = 3;
};

/// Random channels (1 or 2 Kraus operators), random mixed initial state,
/// random diagonal POVM and payoffs in [-1, 1].
[[nodiscard]] QuantumSimultaneousGame random_qsim(const RandomQsimSpec &spec);

struct RandomNormalFormSpec {
    std::uint64_t seed = 0;
    std::size_t players = 2;
    std::size_t max_strategies = 4;
    /// Payoffs drawn from {-levels..levels}; small values create redundancy.
    int levels = 2;
    /// Probability that a strategy duplicates an earlier one of its player.
    double duplicate_rate = 0.3;
};

[[nodiscard]] NormalForm random_normal_form(const RandomNormalFormSpec &spec);

/// Relabels each player's strategies: new index perm[i][s] holds old s.
[[nodiscard]] NormalForm permute_strategies(
    const NormalForm &nf, const std::vector<std::vector<std::size_t>> &perm);

} // namespace qgames
