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
 * Normal forms (N, Omega, f) over finite strategy lists, strategic games,
 * and the mixed extension of a finite strategic game.
 */
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace qgames {

/// One strategy index per player.
using Profile = std::vector<std::size_t>;

/**
 * Payoff tensor over labelled strategy profiles. Cells are stored row-major
 * with player 0 as the most significant index; each cell holds one payoff
 * per player.
 */
class NormalForm {
  public:
    /// Empty player_names defaults to "1".."n".
    NormalForm(std::vector<std::string> player_names,
               std::vector<std::vector<std::string>> strategy_labels,
               std::vector<double> payoffs);

    [[nodiscard]] std::size_t n_players() const noexcept {
        return labels_.size();
    }
    [[nodiscard]] const std::vector<std::string> &player_names() const noexcept {
        return player_names_;
    }
    [[nodiscard]] const std::string &player_name(std::size_t player) const {
        return player_names_.at(player);
    }
    [[nodiscard]] std::size_t strategy_count(std::size_t player) const {
        return labels_.at(player).size();
    }
    [[nodiscard]] std::vector<std::size_t> strategy_counts() const;
    [[nodiscard]] const std::vector<std::vector<std::string>> &
    strategy_labels() const noexcept {
        return labels_;
    }
    [[nodiscard]] const std::string &label(std::size_t player,
                                           std::size_t strategy) const {
        return labels_.at(player).at(strategy);
    }

    [[nodiscard]] std::size_t cell_count() const noexcept { return cells_; }
    /// Throws ProfileShapeMismatch / IndexOutOfRange on a bad profile.
    [[nodiscard]] std::size_t flat_index(std::span<const std::size_t> profile) const;
    [[nodiscard]] Profile profile_at(std::size_t flat) const;

    [[nodiscard]] std::span<const double>
    payoff(std::span<const std::size_t> profile) const {
        return payoff_at(flat_index(profile));
    }
    [[nodiscard]] std::span<const double> payoff_at(std::size_t flat) const {
        return std::span<const double>(payoffs_).subspan(flat * n_players(),
                                                         n_players());
    }
    [[nodiscard]] std::span<const double> payoffs() const noexcept {
        return payoffs_;
    }

    friend bool operator==(const NormalForm &, const NormalForm &) = default;

  private:
    std::vector<std::string> player_names_;
    std::vector<std::vector<std::string>> labels_;
    std::vector<double> payoffs_;
    std::vector<std::size_t> strides_;
    std::size_t cells_ = 1;
};

/// A strategic game is its own normal form: the game-to-normal-form rule is
/// the identity.
struct StrategicGame {
    NormalForm normal_form;

    friend bool operator==(const StrategicGame &,
                           const StrategicGame &) = default;
};

/// Per-player probability vectors over pure strategies.
using MixedStrategyProfile = std::vector<std::vector<double>>;

/// Expected payoff sum_s prod_i q_i(s_i) f(s).
/// Throws ProfileShapeMismatch on length mismatches and InvalidDistribution
/// when a vector is negative or does not sum to 1 within 1e-12.
[[nodiscard]] std::vector<double>
evaluate_mixed(const StrategicGame &game, const MixedStrategyProfile &profile);

} // namespace qgames
