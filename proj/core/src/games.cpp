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

#include "qgames/games.hpp"

#include "qgames/error.hpp"
#include "qgames/slots.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace qgames {

namespace {

constexpr double kStructural = std::numeric_limits<double>::quiet_NaN();

std::string at(const std::string &prefix, std::size_t index) {
    return prefix + "/" + std::to_string(index);
}

void append(ValidationReport &into, ValidationReport more) {
    into.insert(into.end(), std::make_move_iterator(more.begin()),
                std::make_move_iterator(more.end()));
}

void check_payoffs(ValidationReport &report,
                   const std::vector<std::vector<double>> &payoffs,
                   std::size_t outcomes, std::size_t n) {
    if (payoffs.size() != outcomes) {
        report.push_back({"/payoffs",
                          "one payoff vector per POVM outcome (" +
                              std::to_string(outcomes) + " expected)",
                          kStructural});
    }
    for (std::size_t r = 0; r < payoffs.size(); ++r) {
        if (payoffs[r].size() != n) {
            report.push_back({at("/payoffs", r),
                              "payoff vector has one entry per player",
                              kStructural});
        }
        for (std::size_t i = 0; i < payoffs[r].size(); ++i) {
            if (!std::isfinite(payoffs[r][i])) {
                report.push_back(
                    {at(at("/payoffs", r), i), "finite payoff", kStructural});
            }
        }
    }
}

void check_state_and_povm(ValidationReport &report, const ComplexMatrix &rho,
                          const Povm &povm, std::size_t dim, double tol) {
    if (rho.dim() != dim) {
        report.push_back({"/rho_init",
                          "initial state dimension " + std::to_string(dim),
                          kStructural});
    } else {
        append(report, validate_density(rho, tol, "/rho_init"));
    }
    if (povm.dim() != dim) {
        report.push_back({"/povm", "POVM dimension " + std::to_string(dim),
                          kStructural});
    } else {
        append(report, validate_povm(povm, tol, "/povm"));
    }
}

void check_channel_list(ValidationReport &report, const std::string &path,
                        const std::vector<QuantumChannel> &list,
                        std::size_t dim, double tol) {
    if (list.empty()) {
        report.push_back({path, "nonempty strategy list", kStructural});
    }
    for (std::size_t s = 0; s < list.size(); ++s) {
        if (list[s].dim() != dim) {
            report.push_back({at(path, s),
                              "channel dimension " + std::to_string(dim),
                              kStructural});
            continue;
        }
        append(report, validate_channel(list[s], tol, at(path, s)));
    }
}

void require_index(std::size_t index, std::size_t size, const std::string &what) {
    if (index >= size) {
        throw Error(ErrorKind::IndexOutOfRange,
                    what + ": index " + std::to_string(index) +
                        " out of range (" + std::to_string(size) + " options)");
    }
}

ComplexMatrix apply_embedded(const QuantumChannel &channel, std::size_t slot,
                             const SlotLayout &layout, const ComplexMatrix &rho) {
    if (layout.slot_count() == 1) {
        return apply_channel(channel, rho);
    }
    const std::size_t slots[] = {slot};
    ComplexMatrix out = ComplexMatrix::zero(rho.dim());
    for (const auto &k : channel.kraus()) {
        out = out + conjugate(embed_at_slots(k, slots, layout), rho);
    }
    return out;
}

} // namespace

std::size_t QuantumSimultaneousGame::total_dim() const {
    std::size_t d = 1;
    for (const auto di : player_dims) {
        d *= di;
    }
    return d;
}

TurnMap::TurnMap(std::vector<std::size_t> turn_sequence, std::size_t n_players)
    : sequence_(std::move(turn_sequence)), steps_of_(n_players) {
    if (sequence_.empty()) {
        throw Error(ErrorKind::ShapeMismatch, "turn sequence is empty");
    }
    movers_.reserve(sequence_.size());
    for (std::size_t k = 0; k < sequence_.size(); ++k) {
        const std::size_t p = sequence_[k];
        if (p >= n_players) {
            throw Error(ErrorKind::IndexOutOfRange,
                        "turn " + std::to_string(k) + " names player " +
                            std::to_string(p + 1) + " of " +
                            std::to_string(n_players));
        }
        movers_.push_back({p, steps_of_[p].size()});
        steps_of_[p].push_back(k);
    }
}

ValidationReport validate(const StrategicGame &game, double) {
    ValidationReport report;
    const auto p = game.normal_form.payoffs();
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (!std::isfinite(p[k])) {
            report.push_back({at("/payoffs", k / game.normal_form.n_players()),
                              "finite payoff", kStructural});
        }
    }
    return report;
}

ValidationReport validate(const QuantumSimultaneousGame &game, double tol) {
    ValidationReport report;
    const std::size_t n = game.n_players();
    if (n == 0) {
        report.push_back({"/players", "at least one player", kStructural});
        return report;
    }
    if (game.player_dims.size() != n) {
        report.push_back({"/dims", "one subsystem dimension per player", kStructural});
        return report;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (game.player_dims[i] == 0) {
            report.push_back({at("/dims", i), "positive dimension", kStructural});
            return report;
        }
    }
    if (game.strategies.size() != n) {
        report.push_back({"/channels", "one strategy list per player", kStructural});
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            check_channel_list(report, at("/channels", i), game.strategies[i],
                               game.player_dims[i], tol);
        }
    }
    check_state_and_povm(report, game.rho_init.matrix(), game.povm,
                         game.total_dim(), tol);
    check_payoffs(report, game.payoffs, game.povm.size(), n);
    return report;
}

ValidationReport validate(const QuantumSequentialGame &game, double tol) {
    ValidationReport report;
    const std::size_t n = game.n_players();
    if (n == 0) {
        report.push_back({"/players", "at least one player", kStructural});
        return report;
    }
    if (game.turn_map.n_players() != n) {
        report.push_back({"/turn_sequence", "turn map over the game's players",
                          kStructural});
    }
    if (game.move_options.size() != game.turn_map.steps()) {
        report.push_back({"/channels", "one option list per turn", kStructural});
    } else {
        for (std::size_t k = 0; k < game.move_options.size(); ++k) {
            check_channel_list(report, at("/channels", k), game.move_options[k],
                               game.dim, tol);
        }
    }
    check_state_and_povm(report, game.rho_init.matrix(), game.povm, game.dim,
                         tol);
    check_payoffs(report, game.payoffs, game.povm.size(), n);
    return report;
}

ValidationReport validate(const AnyGame &game, double tol) {
    return std::visit([tol](const auto &g) { return validate(g, tol); }, game);
}

ComplexMatrix final_state(const QuantumSimultaneousGame &game,
                          std::span<const std::size_t> profile) {
    const std::size_t n = game.n_players();
    if (profile.size() != n) {
        throw Error(ErrorKind::ProfileShapeMismatch,
                    "profile has " + std::to_string(profile.size()) +
                        " entries for " + std::to_string(n) + " players");
    }
    const SlotLayout layout(game.player_dims);
    ComplexMatrix rho = game.rho_init.matrix();
    for (std::size_t i = 0; i < n; ++i) {
        require_index(profile[i], game.strategies.at(i).size(),
                      "player " + game.player_names[i]);
        rho = apply_embedded(game.strategies[i][profile[i]], i, layout, rho);
    }
    return rho;
}

ComplexMatrix final_state(const QuantumSequentialGame &game,
                          const SeqProfile &profile) {
    const std::size_t n = game.n_players();
    const auto &turns = game.turn_map;
    if (profile.size() != n) {
        throw Error(ErrorKind::ProfileShapeMismatch,
                    "profile has " + std::to_string(profile.size()) +
                        " tuples for " + std::to_string(n) + " players");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (profile[i].size() != turns.moves_of(i)) {
            throw Error(ErrorKind::ProfileShapeMismatch,
                        "player " + game.player_names[i] + " has " +
                            std::to_string(turns.moves_of(i)) +
                            " moves, profile gives " +
                            std::to_string(profile[i].size()));
        }
    }
    ComplexMatrix rho = game.rho_init.matrix();
    for (std::size_t k = 0; k < turns.steps(); ++k) {
        const Move mv = turns.mover(k);
        const std::size_t choice = profile[mv.player][mv.move];
        require_index(choice, game.move_options.at(k).size(),
                      "turn " + std::to_string(k));
        rho = apply_channel(game.move_options[k][choice], rho);
    }
    return rho;
}

std::vector<double>
expected_payoff(std::span<const double> probabilities,
                const std::vector<std::vector<double>> &payoffs,
                std::size_t n_players) {
    if (probabilities.size() != payoffs.size()) {
        throw Error(ErrorKind::ShapeMismatch,
                    "payoff list does not match the number of outcomes");
    }
    std::vector<double> out(n_players, 0.0);
    for (std::size_t r = 0; r < probabilities.size(); ++r) {
        if (payoffs[r].size() != n_players) {
            throw Error(ErrorKind::ShapeMismatch,
                        "payoff vector " + std::to_string(r) +
                            " has the wrong length");
        }
        for (std::size_t i = 0; i < n_players; ++i) {
            out[i] += probabilities[r] * payoffs[r][i];
        }
    }
    return out;
}

std::vector<double> payoff_sim(const QuantumSimultaneousGame &game,
                               std::span<const std::size_t> profile) {
    const auto probs = outcome_probabilities(game.povm, final_state(game, profile));
    return expected_payoff(probs, game.payoffs, game.n_players());
}

std::vector<double> payoff_seq(const QuantumSequentialGame &game,
                               const SeqProfile &profile) {
    const auto probs = outcome_probabilities(game.povm, final_state(game, profile));
    return expected_payoff(probs, game.payoffs, game.n_players());
}

std::size_t seq_strategy_count(const QuantumSequentialGame &game,
                               std::size_t player) {
    std::size_t count = 1;
    for (std::size_t j = 0; j < game.turn_map.moves_of(player); ++j) {
        count *= game.move_options.at(game.turn_map.step_of(player, j)).size();
    }
    return count;
}

std::vector<std::size_t> decode_seq_strategy(const QuantumSequentialGame &game,
                                              std::size_t player,
                                              std::size_t index) {
    require_index(index, seq_strategy_count(game, player),
                  "player " + game.player_names.at(player));
    const std::size_t moves = game.turn_map.moves_of(player);
    std::vector<std::size_t> tuple(moves);
    for (std::size_t j = moves; j-- > 0;) {
        const std::size_t radix =
            game.move_options[game.turn_map.step_of(player, j)].size();
        tuple[j] = index % radix;
        index /= radix;
    }
    return tuple;
}

std::size_t encode_seq_strategy(const QuantumSequentialGame &game,
                                std::size_t player,
                                std::span<const std::size_t> tuple) {
    const std::size_t moves = game.turn_map.moves_of(player);
    if (tuple.size() != moves) {
        throw Error(ErrorKind::ProfileShapeMismatch,
                    "player " + game.player_names.at(player) + " has " +
                        std::to_string(moves) + " moves");
    }
    std::size_t index = 0;
    for (std::size_t j = 0; j < moves; ++j) {
        const std::size_t radix =
            game.move_options[game.turn_map.step_of(player, j)].size();
        require_index(tuple[j], radix, "player " + game.player_names[player]);
        index = index * radix + tuple[j];
    }
    return index;
}

std::string seq_strategy_label(const QuantumSequentialGame &game,
                               std::size_t player,
                               std::span<const std::size_t> tuple) {
    if (tuple.empty()) {
        return "-";
    }
    std::string label;
    for (std::size_t j = 0; j < tuple.size(); ++j) {
        label += game.move_options.at(game.turn_map.step_of(player, j))
                     .at(tuple[j])
                     .label();
    }
    return label;
}

NormalForm tabulate_normal_form(const StrategicGame &game) {
    return game.normal_form;
}

NormalForm tabulate_normal_form(const QuantumSimultaneousGame &game) {
    const std::size_t n = game.n_players();
    std::vector<std::vector<std::string>> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto &ch : game.strategies.at(i)) {
            labels[i].push_back(ch.label());
        }
    }
    // Pre-embed every strategy once; payoff_sim would redo it per profile.
    const SlotLayout layout(game.player_dims);
    std::vector<std::vector<std::vector<ComplexMatrix>>> embedded(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto &ch : game.strategies[i]) {
            auto &ks = embedded[i].emplace_back();
            const std::size_t slots[] = {i};
            for (const auto &k : ch.kraus()) {
                ks.push_back(embed_at_slots(k, slots, layout));
            }
        }
    }

    std::vector<std::size_t> counts;
    std::size_t cells = 1;
    for (const auto &l : labels) {
        counts.push_back(l.size());
        cells *= l.size();
    }
    std::vector<double> payoffs;
    payoffs.reserve(cells * n);
    Profile profile(n, 0);
    for (std::size_t flat = 0; flat < cells; ++flat) {
        std::size_t rest = flat;
        for (std::size_t i = n; i-- > 0;) {
            profile[i] = rest % counts[i];
            rest /= counts[i];
        }
        ComplexMatrix rho = game.rho_init.matrix();
        for (std::size_t i = 0; i < n; ++i) {
            ComplexMatrix next = ComplexMatrix::zero(rho.dim());
            for (const auto &k : embedded[i][profile[i]]) {
                next = next + conjugate(k, rho);
            }
            rho = std::move(next);
        }
        const auto cell = expected_payoff(outcome_probabilities(game.povm, rho),
                                          game.payoffs, n);
        payoffs.insert(payoffs.end(), cell.begin(), cell.end());
    }
    return NormalForm(game.player_names, std::move(labels), std::move(payoffs));
}

NormalForm tabulate_normal_form(const QuantumSequentialGame &game) {
    const std::size_t n = game.n_players();
    std::vector<std::vector<std::string>> labels(n);
    std::vector<std::size_t> counts(n);
    std::size_t cells = 1;
    for (std::size_t i = 0; i < n; ++i) {
        counts[i] = seq_strategy_count(game, i);
        cells *= counts[i];
        for (std::size_t s = 0; s < counts[i]; ++s) {
            labels[i].push_back(
                seq_strategy_label(game, i, decode_seq_strategy(game, i, s)));
        }
    }
    std::vector<double> payoffs;
    payoffs.reserve(cells * n);
    SeqProfile profile(n);
    for (std::size_t flat = 0; flat < cells; ++flat) {
        std::size_t rest = flat;
        for (std::size_t i = n; i-- > 0;) {
            profile[i] = decode_seq_strategy(game, i, rest % counts[i]);
            rest /= counts[i];
        }
        const auto cell = payoff_seq(game, profile);
        payoffs.insert(payoffs.end(), cell.begin(), cell.end());
    }
    return NormalForm(game.player_names, std::move(labels), std::move(payoffs));
}

NormalForm tabulate_normal_form(const AnyGame &game) {
    return std::visit([](const auto &g) { return tabulate_normal_form(g); },
                      game);
}

} // namespace qgames
