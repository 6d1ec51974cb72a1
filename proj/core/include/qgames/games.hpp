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
 * Finite quantum simultaneous and sequential games, their payoff functions
 * and tabulation into normal form.
 *
 * A simultaneous game hands player i the i-th tensor factor of a shared
 * initial state; each player applies one channel from a finite list and a
 * referee measures the whole system. A sequential game has one shared
 * system on which the players act in a fixed turn order.
 */
#pragma once

#include "qgames/normal_form.hpp"
#include "qgames/quantum.hpp"

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace qgames {

struct QuantumSimultaneousGame {
    std::vector<std::string> player_names;
    /// Dimension of each player's subsystem; the full space is their product.
    std::vector<std::size_t> player_dims;
    DensityOperator rho_init;
    /// strategies[i] is player i's nonempty list of channels of dim player_dims[i].
    std::vector<std::vector<QuantumChannel>> strategies;
    Povm povm;
    /// payoffs[r] is the payoff vector (one entry per player) for outcome r.
    std::vector<std::vector<double>> payoffs;

    [[nodiscard]] std::size_t n_players() const noexcept {
        return player_names.size();
    }
    [[nodiscard]] std::size_t total_dim() const;

    friend bool operator==(const QuantumSimultaneousGame &,
                           const QuantumSimultaneousGame &) = default;
};

/// A player's move: the j-th (0-based) move of player `player`.
struct Move {
    std::size_t player;
    std::size_t move;

    friend bool operator==(const Move &, const Move &) = default;
};

/**
 * Turn order of a sequential game stored as the player id (0-based) moving
 * at each step. The map (player, j) -> step is a bijection by construction.
 */
class TurnMap {
  public:
    TurnMap(std::vector<std::size_t> turn_sequence, std::size_t n_players);

    [[nodiscard]] std::size_t steps() const noexcept { return sequence_.size(); }
    [[nodiscard]] std::size_t n_players() const noexcept {
        return steps_of_.size();
    }
    [[nodiscard]] const std::vector<std::size_t> &sequence() const noexcept {
        return sequence_;
    }
    /// m_i, the number of moves of a player (may be zero).
    [[nodiscard]] std::size_t moves_of(std::size_t player) const {
        return steps_of_.at(player).size();
    }
    /// Global step of the j-th move of a player.
    [[nodiscard]] std::size_t step_of(std::size_t player, std::size_t j) const {
        return steps_of_.at(player).at(j);
    }
    /// Inverse: who moves at a step, and which of their moves it is.
    [[nodiscard]] Move mover(std::size_t step) const { return movers_.at(step); }

    friend bool operator==(const TurnMap &a, const TurnMap &b) {
        return a.sequence_ == b.sequence_ && a.n_players() == b.n_players();
    }

  private:
    std::vector<std::size_t> sequence_;
    std::vector<std::vector<std::size_t>> steps_of_;
    std::vector<Move> movers_;
};

struct QuantumSequentialGame {
    std::vector<std::string> player_names;
    std::size_t dim;
    DensityOperator rho_init;
    /// move_options[k] is the list of channels available at step k.
    std::vector<std::vector<QuantumChannel>> move_options;
    TurnMap turn_map;
    Povm povm;
    std::vector<std::vector<double>> payoffs;

    [[nodiscard]] std::size_t n_players() const noexcept {
        return player_names.size();
    }

    friend bool operator==(const QuantumSequentialGame &,
                           const QuantumSequentialGame &) = default;
};

/// Per-player tuples of option indices, one per move of that player in
/// move order.
using SeqProfile = std::vector<std::vector<std::size_t>>;

using AnyGame =
    std::variant<StrategicGame, QuantumSimultaneousGame, QuantumSequentialGame>;

// Validation: structural checks (dimensions, list lengths) plus the numerical
// invariants of every state, channel and POVM. Paths are JSON pointers into
// the game document layout used by game-io.
[[nodiscard]] ValidationReport validate(const StrategicGame &game,
                                        double tol = kValidationTolerance);
[[nodiscard]] ValidationReport validate(const QuantumSimultaneousGame &game,
                                        double tol = kValidationTolerance);
[[nodiscard]] ValidationReport validate(const QuantumSequentialGame &game,
                                        double tol = kValidationTolerance);
[[nodiscard]] ValidationReport validate(const AnyGame &game,
                                        double tol = kValidationTolerance);

/// State after every player applied their chosen channel to their slot.
[[nodiscard]] ComplexMatrix final_state(const QuantumSimultaneousGame &game,
                                        std::span<const std::size_t> profile);
/// State after steps 0..m-1 were applied in order.
[[nodiscard]] ComplexMatrix final_state(const QuantumSequentialGame &game,
                                        const SeqProfile &profile);

/// sum_r a_r Tr[M_r (E_1 x ... x E_n)(rho_init)]
[[nodiscard]] std::vector<double>
payoff_sim(const QuantumSimultaneousGame &game,
           std::span<const std::size_t> profile);
/// sum_r a_r Tr[M_r E_m o ... o E_1(rho_init)]
[[nodiscard]] std::vector<double> payoff_seq(const QuantumSequentialGame &game,
                                             const SeqProfile &profile);

/// Expected payoff for given outcome probabilities.
[[nodiscard]] std::vector<double>
expected_payoff(std::span<const double> probabilities,
                const std::vector<std::vector<double>> &payoffs,
                std::size_t n_players);

// Sequential strategy enumeration. Player i's strategies are the tuples of
// Q_{step_of(i,0)} x Q_{step_of(i,1)} x ..., enumerated with move 0 most
// significant. A player without moves has exactly one (empty) strategy.
[[nodiscard]] std::size_t seq_strategy_count(const QuantumSequentialGame &game,
                                             std::size_t player);
[[nodiscard]] std::vector<std::size_t>
decode_seq_strategy(const QuantumSequentialGame &game, std::size_t player,
                    std::size_t index);
[[nodiscard]] std::size_t
encode_seq_strategy(const QuantumSequentialGame &game, std::size_t player,
                    std::span<const std::size_t> tuple);
/// Concatenated option labels; "-" for the empty tuple.
[[nodiscard]] std::string seq_strategy_label(const QuantumSequentialGame &game,
                                             std::size_t player,
                                             std::span<const std::size_t> tuple);

[[nodiscard]] NormalForm tabulate_normal_form(const StrategicGame &game);
[[nodiscard]] NormalForm
tabulate_normal_form(const QuantumSimultaneousGame &game);
[[nodiscard]] NormalForm
tabulate_normal_form(const QuantumSequentialGame &game);
[[nodiscard]] NormalForm tabulate_normal_form(const AnyGame &game);

} // namespace qgames
