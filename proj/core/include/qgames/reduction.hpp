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
 * Redundancy partition and reduced normal form.
 *
 * Two strategies of one player are redundant when every opponent profile
 * gives the same payoff vector against both. Payoffs are compared after
 * canonical rounding to a fixed number of decimal digits, which keeps the
 * relation transitive for numerically computed payoffs.
 */
#pragma once

#include "qgames/normal_form.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace qgames {

inline constexpr int kDefaultDigits = 9;

/// round(x * 10^digits) as an exactly representable double; -0 maps to 0.
[[nodiscard]] double canonical_round(double x, int digits = kDefaultDigits);

/// Rounded payoff vectors against every opponent profile, opponents in
/// row-major order (lowest player index most significant).
using PayoffSignature = std::vector<double>;

[[nodiscard]] PayoffSignature payoff_signature(const NormalForm &nf,
                                               std::size_t player,
                                               std::size_t strategy,
                                               int digits = kDefaultDigits);

struct RedundancyPartition {
    /// classes[player][c] lists the member strategy indices, ascending.
    /// Classes are ordered by their lowest member.
    std::vector<std::vector<std::vector<std::size_t>>> classes;
    /// class_of[player][strategy] is the class index of that strategy.
    std::vector<std::vector<std::size_t>> class_of;

    [[nodiscard]] std::size_t class_count(std::size_t player) const {
        return classes.at(player).size();
    }
    [[nodiscard]] std::size_t representative(std::size_t player,
                                             std::size_t cls) const {
        return classes.at(player).at(cls).front();
    }
};

[[nodiscard]] RedundancyPartition
compute_redundancy_partition(const NormalForm &nf, int digits = kDefaultDigits);

struct ReducedNormalForm {
    /// Normal form over class representatives (labels are the
    /// representatives' labels).
    NormalForm normal_form;
    RedundancyPartition partition;
    /// Member labels per player, per class.
    std::vector<std::vector<std::vector<std::string>>> class_members;
};

/// Throws NumericalInconsistency when some class member disagrees with its
/// representative after rounding.
[[nodiscard]] ReducedNormalForm reduce_normal_form(const NormalForm &nf,
                                                   int digits = kDefaultDigits);

} // namespace qgames
