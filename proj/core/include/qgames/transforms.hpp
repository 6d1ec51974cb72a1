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
 * Constructive transforms between finite quantum simultaneous and
 * sequential games.
 *
 * sim_to_seq turns each player's local channel into a full-space channel
 * applied at that player's single turn.
 *
 * seq_to_sim gives every player 2*m_i copies of the sequential system. The
 * first m_i copies carry that player's moves; the last m_i are ancillas.
 * The initial state chains the moves together with maximally entangled
 * pairs (ancilla of step k, operated copy of step k+1), and the referee
 * projects each (operated copy of step k, ancilla of step k) pair onto the
 * maximally entangled state. On success, which happens with probability
 * d^{-2(m-1)} independent of the strategies, the state has been carried
 * from each step's copy to the next, so the final copy holds
 * E_m o ... o E_1(rho_init). Scaling the success payoffs by d^{2m-2} makes
 * the expected payoffs match the sequential game exactly.
 */
#pragma once

#include "qgames/equivalence.hpp"
#include "qgames/games.hpp"
#include "qgames/slots.hpp"

#include <cstddef>
#include <vector>

namespace qgames {

[[nodiscard]] QuantumSequentialGame sim_to_seq(const QuantumSimultaneousGame &game);

/**
 * Slot bookkeeping for seq_to_sim. All 2m slots have dimension d. Player i
 * owns the contiguous block of 2*m_i slots starting at sum_{i'<i} 2*m_{i'};
 * within the block, j < m_i are operated slots and j >= m_i are ancillas.
 */
class SeqToSimLayout {
  public:
    explicit SeqToSimLayout(const QuantumSequentialGame &game);

    [[nodiscard]] std::size_t n_players() const noexcept {
        return moves_.size();
    }
    [[nodiscard]] std::size_t steps() const noexcept { return movers_.size(); }
    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] std::size_t moves_of(std::size_t player) const {
        return moves_.at(player);
    }
    [[nodiscard]] std::size_t slot_count() const noexcept { return 2 * steps(); }

    /// Global slot of the j-th (0-based, j < 2*m_i) copy owned by a player.
    [[nodiscard]] std::size_t slot(std::size_t player, std::size_t j) const;
    /// (player, j) moving at a step: the inverse turn map.
    [[nodiscard]] Move mover(std::size_t step) const { return movers_.at(step); }
    /// (player, j + m_player): the ancilla paired with a step.
    [[nodiscard]] Move ancilla(std::size_t step) const;
    [[nodiscard]] std::size_t operated_slot(std::size_t step) const;
    [[nodiscard]] std::size_t ancilla_slot(std::size_t step) const;

    [[nodiscard]] SlotLayout slot_layout() const {
        return SlotLayout::uniform(slot_count(), dim_);
    }
    /// d^{2 m_i} per player.
    [[nodiscard]] std::vector<std::size_t> player_dims() const;

  private:
    std::size_t dim_;
    std::vector<std::size_t> moves_;
    std::vector<std::size_t> offsets_;
    std::vector<Move> movers_;
};

[[nodiscard]] SeqToSimLayout build_layout(const QuantumSequentialGame &game);

/// rho_init on the first step's copy, |0><0| on the last step's ancilla, and
/// a maximally entangled pair on (ancilla of step a, copy of step a+1) for
/// every a < m-1.
[[nodiscard]] DensityOperator build_initial_state_sim(const SeqToSimLayout &layout,
                                                      const DensityOperator &rho_init);

/// Projector onto the entangled chain, expressed on its own support.
struct KProjector {
    /// Product of Phi projectors on (copy of step b, ancilla of step b),
    /// b < m-1, in that slot order. 1x1 identity when m == 1.
    ComplexMatrix op;
    /// Support slots, matching the factor order of op.
    std::vector<std::size_t> slots;

    [[nodiscard]] ComplexMatrix embedded(const SeqToSimLayout &layout) const {
        return embed_at_slots(op, slots, layout.slot_layout());
    }
};

[[nodiscard]] KProjector build_k_projector(const SeqToSimLayout &layout);

struct SeqToSimOptions {
    /// Upper bound on prod_k |Q_k|, the number of strategy profiles.
    std::size_t max_profiles = 10'000;
};

struct SeqToSimResult {
    QuantumSimultaneousGame game;
    /// psi[i][s] is the sequential option tuple behind sim strategy s of
    /// player i.
    std::vector<std::vector<std::vector<std::size_t>>> psi;
    SeqToSimLayout layout;
    KProjector k;
    /// d^{2m-2}, the factor applied to successful-projection payoffs.
    double payoff_scale;
};

/// Throws StrategyExplosion when the profile count exceeds the cap.
[[nodiscard]] SeqToSimResult seq_to_sim(const QuantumSequentialGame &game,
                                        const SeqToSimOptions &options = {});

/// Raw-level witness from the simultaneous normal form of result.game to
/// tabulate_normal_form(seq), induced by psi.
[[nodiscard]] EquivalenceWitness psi_witness(const SeqToSimResult &result,
                                             const QuantumSequentialGame &seq);

/// Raw-level witness from tabulate(sim) to tabulate(sim_to_seq(sim)); the
/// sequential strategy of player i is the one-move tuple of the same
/// channel, so this is the identity.
[[nodiscard]] EquivalenceWitness
sim_to_seq_witness(const QuantumSimultaneousGame &sim);

} // namespace qgames
