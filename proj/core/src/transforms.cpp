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

#include "qgames/transforms.hpp"

#include "qgames/error.hpp"

#include <cmath>
#include <string>

namespace qgames {

namespace {

void require_valid(const ValidationReport &report, const char *what) {
    if (!report.empty()) {
        throw Error(ErrorKind::ValidationError,
                    std::string(what) + " is not a valid game",
                    describe(report));
    }
}

std::size_t checked_power(std::size_t base, std::size_t exp) {
    std::size_t out = 1;
    for (std::size_t k = 0; k < exp; ++k) {
        out *= base;
    }
    return out;
}

} // namespace

QuantumSequentialGame sim_to_seq(const QuantumSimultaneousGame &game) {
    require_valid(validate(game), "simultaneous game");
    const std::size_t n = game.n_players();
    const SlotLayout layout(game.player_dims);

    std::vector<std::vector<QuantumChannel>> options(n);
    std::vector<std::size_t> turns(n);
    for (std::size_t i = 0; i < n; ++i) {
        turns[i] = i;
        const std::size_t slots[] = {i};
        for (const auto &ch : game.strategies[i]) {
            std::vector<ComplexMatrix> kraus;
            kraus.reserve(ch.kraus().size());
            for (const auto &k : ch.kraus()) {
                kraus.push_back(embed_at_slots(k, slots, layout));
            }
            options[i].emplace_back(ch.label(), std::move(kraus));
        }
    }
    return QuantumSequentialGame{
        .player_names = game.player_names,
        .dim = layout.total_dim(),
        .rho_init = game.rho_init,
        .move_options = std::move(options),
        .turn_map = TurnMap(std::move(turns), n),
        .povm = game.povm,
        .payoffs = game.payoffs,
    };
}

SeqToSimLayout::SeqToSimLayout(const QuantumSequentialGame &game)
    : dim_(game.dim) {
    const auto &turns = game.turn_map;
    const std::size_t n = turns.n_players();
    moves_.resize(n);
    offsets_.resize(n);
    std::size_t offset = 0;
    for (std::size_t i = 0; i < n; ++i) {
        moves_[i] = turns.moves_of(i);
        offsets_[i] = offset;
        offset += 2 * moves_[i];
    }
    for (std::size_t k = 0; k < turns.steps(); ++k) {
        movers_.push_back(turns.mover(k));
    }
}

std::size_t SeqToSimLayout::slot(std::size_t player, std::size_t j) const {
    if (j >= 2 * moves_.at(player)) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "player " + std::to_string(player + 1) + " owns " +
                        std::to_string(2 * moves_[player]) + " slots");
    }
    return offsets_[player] + j;
}

Move SeqToSimLayout::ancilla(std::size_t step) const {
    const Move mv = mover(step);
    return {mv.player, mv.move + moves_[mv.player]};
}

std::size_t SeqToSimLayout::operated_slot(std::size_t step) const {
    const Move mv = mover(step);
    return slot(mv.player, mv.move);
}

std::size_t SeqToSimLayout::ancilla_slot(std::size_t step) const {
    const Move mv = ancilla(step);
    return slot(mv.player, mv.move);
}

std::vector<std::size_t> SeqToSimLayout::player_dims() const {
    std::vector<std::size_t> dims;
    dims.reserve(moves_.size());
    for (const auto mi : moves_) {
        dims.push_back(checked_power(dim_, 2 * mi));
    }
    return dims;
}

SeqToSimLayout build_layout(const QuantumSequentialGame &game) {
    return SeqToSimLayout(game);
}

DensityOperator build_initial_state_sim(const SeqToSimLayout &layout,
                                        const DensityOperator &rho_init) {
    if (rho_init.dim() != layout.dim()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "initial state has dimension " +
                        std::to_string(rho_init.dim()) + ", layout expects " +
                        std::to_string(layout.dim()));
    }
    const SlotLayout slots = layout.slot_layout();
    const std::size_t m = layout.steps();
    const std::size_t d = layout.dim();

    // The factors sit on disjoint slots that together cover every slot, so
    // the product of their embeddings is their tensor product.
    ComplexMatrix state =
        embed_at_slots(rho_init.matrix(), {layout.operated_slot(0)}, slots);
    state = state * embed_at_slots(ComplexMatrix::basis_projector(d, 0),
                                   {layout.ancilla_slot(m - 1)}, slots);
    const ComplexMatrix phi = maximally_entangled_projector(d);
    for (std::size_t a = 0; a + 1 < m; ++a) {
        state = state * embed_at_slots(phi,
                                       {layout.ancilla_slot(a),
                                        layout.operated_slot(a + 1)},
                                       slots);
    }
    return DensityOperator(std::move(state));
}

KProjector build_k_projector(const SeqToSimLayout &layout) {
    KProjector k{ComplexMatrix::identity(1), {}};
    const ComplexMatrix phi = maximally_entangled_projector(layout.dim());
    for (std::size_t b = 0; b + 1 < layout.steps(); ++b) {
        k.op = tensor_product(k.op, phi);
        k.slots.push_back(layout.operated_slot(b));
        k.slots.push_back(layout.ancilla_slot(b));
    }
    return k;
}

SeqToSimResult seq_to_sim(const QuantumSequentialGame &game,
                          const SeqToSimOptions &options) {
    require_valid(validate(game), "sequential game");

    std::size_t profiles = 1;
    for (const auto &q : game.move_options) {
        if (profiles > options.max_profiles / q.size()) {
            throw Error(ErrorKind::StrategyExplosion,
                        "more than " + std::to_string(options.max_profiles) +
                            " strategy profiles");
        }
        profiles *= q.size();
    }
    if (profiles > options.max_profiles) {
        throw Error(ErrorKind::StrategyExplosion,
                    std::to_string(profiles) + " strategy profiles exceed the cap of " +
                        std::to_string(options.max_profiles));
    }

    SeqToSimLayout layout(game);
    const std::size_t n = game.n_players();
    const std::size_t m = layout.steps();
    const std::size_t d = layout.dim();
    const SlotLayout slots = layout.slot_layout();

    // Player strategies: tensor of the chosen moves on the operated copies,
    // identity on the ancillas.
    std::vector<std::vector<QuantumChannel>> strategies(n);
    std::vector<std::vector<std::vector<std::size_t>>> psi(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t mi = layout.moves_of(i);
        const ComplexMatrix ancilla_identity =
            ComplexMatrix::identity(checked_power(d, mi));
        for (std::size_t s = 0; s < seq_strategy_count(game, i); ++s) {
            auto tuple = decode_seq_strategy(game, i, s);
            std::vector<const QuantumChannel *> chosen;
            for (std::size_t j = 0; j < mi; ++j) {
                chosen.push_back(
                    &game.move_options[game.turn_map.step_of(i, j)][tuple[j]]);
            }
            std::vector<ComplexMatrix> kraus;
            std::vector<std::size_t> pick(mi, 0);
            while (true) {
                ComplexMatrix k = ComplexMatrix::identity(1);
                for (std::size_t j = 0; j < mi; ++j) {
                    k = tensor_product(k, chosen[j]->kraus()[pick[j]]);
                }
                kraus.push_back(tensor_product(k, ancilla_identity));
                std::size_t j = mi;
                while (j-- > 0) {
                    if (++pick[j] < chosen[j]->kraus().size()) {
                        break;
                    }
                    pick[j] = 0;
                }
                if (j == static_cast<std::size_t>(-1)) {
                    break;
                }
            }
            strategies[i].emplace_back(seq_strategy_label(game, i, tuple),
                                       std::move(kraus));
            psi[i].push_back(std::move(tuple));
        }
    }

    KProjector k = build_k_projector(layout);
    const ComplexMatrix k_full = k.embedded(layout);
    const ComplexMatrix k_complement =
        ComplexMatrix::identity(slots.total_dim()) - k_full;
    const double scale = std::pow(static_cast<double>(d), 2.0 * (m - 1));

    std::vector<PovmElement> elements;
    std::vector<std::vector<double>> payoffs;
    const std::size_t last = layout.operated_slot(m - 1);
    for (std::size_t family = 1; family <= 2; ++family) {
        for (std::size_t r = 0; r < game.povm.size(); ++r) {
            const auto &orig = game.povm[r];
            const ComplexMatrix mr = embed_at_slots(orig.matrix, {last}, slots);
            elements.push_back(
                {"(" + std::to_string(family) + "," + orig.label + ")",
                 (family == 1 ? k_full : k_complement) * mr});
            std::vector<double> a(n, 0.0);
            if (family == 1) {
                for (std::size_t i = 0; i < n; ++i) {
                    a[i] = scale * game.payoffs[r][i];
                }
            }
            payoffs.push_back(std::move(a));
        }
    }

    QuantumSimultaneousGame sim{
        .player_names = game.player_names,
        .player_dims = layout.player_dims(),
        .rho_init = build_initial_state_sim(layout, game.rho_init),
        .strategies = std::move(strategies),
        .povm = Povm(std::move(elements)),
        .payoffs = std::move(payoffs),
    };
    return SeqToSimResult{std::move(sim), std::move(psi), std::move(layout),
                          std::move(k), scale};
}

EquivalenceWitness psi_witness(const SeqToSimResult &result,
                               const QuantumSequentialGame &seq) {
    EquivalenceWitness w;
    for (std::size_t i = 0; i < result.psi.size(); ++i) {
        auto &m = w.maps.emplace_back();
        for (const auto &tuple : result.psi[i]) {
            m.push_back(encode_seq_strategy(seq, i, tuple));
        }
    }
    return w;
}

EquivalenceWitness sim_to_seq_witness(const QuantumSimultaneousGame &sim) {
    std::vector<std::size_t> counts;
    for (const auto &s : sim.strategies) {
        counts.push_back(s.size());
    }
    return identity_witness(counts);
}

} // namespace qgames
