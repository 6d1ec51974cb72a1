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

#include "qgames/normal_form.hpp"

#include "qgames/error.hpp"

#include <cmath>
#include <string>

namespace qgames {

NormalForm::NormalForm(std::vector<std::string> player_names,
                       std::vector<std::vector<std::string>> strategy_labels,
                       std::vector<double> payoffs)
    : player_names_(std::move(player_names)),
      labels_(std::move(strategy_labels)), payoffs_(std::move(payoffs)) {
    const std::size_t n = labels_.size();
    if (n == 0) {
        throw Error(ErrorKind::ShapeMismatch, "normal form needs at least one player");
    }
    if (player_names_.empty()) {
        for (std::size_t i = 0; i < n; ++i) {
            player_names_.push_back(std::to_string(i + 1));
        }
    }
    if (player_names_.size() != n) {
        throw Error(ErrorKind::ShapeMismatch,
                    std::to_string(player_names_.size()) + " player names for " +
                        std::to_string(n) + " strategy lists");
    }
    strides_.resize(n);
    for (std::size_t i = n; i-- > 0;) {
        if (labels_[i].empty()) {
            throw Error(ErrorKind::ShapeMismatch,
                        "player " + player_names_[i] + " has no strategies");
        }
        strides_[i] = cells_;
        cells_ *= labels_[i].size();
    }
    if (payoffs_.size() != cells_ * n) {
        throw Error(ErrorKind::ShapeMismatch,
                    "payoff tensor has " + std::to_string(payoffs_.size()) +
                        " entries, expected " + std::to_string(cells_ * n));
    }
}

std::vector<std::size_t> NormalForm::strategy_counts() const {
    std::vector<std::size_t> counts;
    counts.reserve(labels_.size());
    for (const auto &l : labels_) {
        counts.push_back(l.size());
    }
    return counts;
}

std::size_t NormalForm::flat_index(std::span<const std::size_t> profile) const {
    if (profile.size() != n_players()) {
        throw Error(ErrorKind::ProfileShapeMismatch,
                    "profile has " + std::to_string(profile.size()) +
                        " entries for " + std::to_string(n_players()) +
                        " players");
    }
    std::size_t flat = 0;
    for (std::size_t i = 0; i < profile.size(); ++i) {
        if (profile[i] >= labels_[i].size()) {
            throw Error(ErrorKind::IndexOutOfRange,
                        "strategy " + std::to_string(profile[i]) +
                            " out of range for player " + player_names_[i]);
        }
        flat += profile[i] * strides_[i];
    }
    return flat;
}

Profile NormalForm::profile_at(std::size_t flat) const {
    Profile p(n_players());
    for (std::size_t i = 0; i < p.size(); ++i) {
        p[i] = (flat / strides_[i]) % labels_[i].size();
    }
    return p;
}

std::vector<double> evaluate_mixed(const StrategicGame &game,
                                   const MixedStrategyProfile &profile) {
    const auto &nf = game.normal_form;
    const std::size_t n = nf.n_players();
    if (profile.size() != n) {
        throw Error(ErrorKind::ProfileShapeMismatch,
                    "mixed profile has " + std::to_string(profile.size()) +
                        " players, game has " + std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (profile[i].size() != nf.strategy_count(i)) {
            throw Error(ErrorKind::ProfileShapeMismatch,
                        "player " + nf.player_name(i) + " distribution has " +
                            std::to_string(profile[i].size()) +
                            " entries, expected " +
                            std::to_string(nf.strategy_count(i)));
        }
        double total = 0.0;
        for (const double q : profile[i]) {
            if (!(q >= 0.0)) {
                throw Error(ErrorKind::InvalidDistribution,
                            "player " + nf.player_name(i) +
                                " has a negative probability");
            }
            total += q;
        }
        if (std::abs(total - 1.0) > 1e-12) {
            throw Error(ErrorKind::InvalidDistribution,
                        "player " + nf.player_name(i) +
                            " probabilities sum to " + std::to_string(total));
        }
    }

    std::vector<double> expected(n, 0.0);
    for (std::size_t flat = 0; flat < nf.cell_count(); ++flat) {
        const Profile p = nf.profile_at(flat);
        double weight = 1.0;
        for (std::size_t i = 0; i < n && weight != 0.0; ++i) {
            weight *= profile[i][p[i]];
        }
        if (weight == 0.0) {
            continue;
        }
        const auto cell = nf.payoff_at(flat);
        for (std::size_t i = 0; i < n; ++i) {
            expected[i] += weight * cell[i];
        }
    }
    return expected;
}

} // namespace qgames
