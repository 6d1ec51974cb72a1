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
 * Game equivalence: witnesses, their verification, and a backtracking
 * search for per-player bijections between reduced strategy classes.
 *
 * Players are never permuted; equivalence compares player i of one game
 * with player i of the other.
 */
#pragma once

#include "qgames/normal_form.hpp"
#include "qgames/reduction.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace qgames {

enum class WitnessLevel {
    /// Bijections between reduced strategy classes.
    Reduced,
    /// Bijections between the unreduced strategy lists.
    Raw,
};

/// maps[i][a] = b sends class (or strategy) a of player i in the first game
/// to b in the second.
struct EquivalenceWitness {
    std::vector<std::vector<std::size_t>> maps;

    friend bool operator==(const EquivalenceWitness &,
                           const EquivalenceWitness &) = default;
};

[[nodiscard]] EquivalenceWitness
identity_witness(const std::vector<std::size_t> &counts);
/// Throws ShapeMismatch if some map is not a bijection.
[[nodiscard]] EquivalenceWitness invert(const EquivalenceWitness &w);
/// first then second: maps[i][a] = second.maps[i][first.maps[i][a]].
[[nodiscard]] EquivalenceWitness compose(const EquivalenceWitness &first,
                                         const EquivalenceWitness &second);

struct WitnessCheck {
    bool holds;
    /// Largest absolute payoff difference seen over all profiles.
    double max_deviation;
};

/**
 * Checks f1(C) == f2(phi(C)) at every profile after canonical rounding.
 * Throws ShapeMismatch when player counts differ or the witness is not a
 * per-player bijection of the right size for the chosen level.
 */
[[nodiscard]] WitnessCheck verify_witness(const NormalForm &g1,
                                          const NormalForm &g2,
                                          const EquivalenceWitness &w,
                                          WitnessLevel level,
                                          int digits = kDefaultDigits);

struct SearchOptions {
    int digits = kDefaultDigits;
    std::uint64_t budget = 10'000'000;
};

enum class SearchStatus { Equivalent, NotEquivalent, BudgetExceeded };

struct SearchResult {
    SearchStatus status;
    /// Reduced-level witness, present iff status == Equivalent.
    std::optional<EquivalenceWitness> witness;
    std::uint64_t nodes_explored;
};

/**
 * Exhaustive search over class bijections on the reduced forms. Classes are
 * assigned round-robin across players (class 0 of every player, then class
 * 1, ...) and candidate targets are tried in ascending order, so the
 * returned witness is deterministic. A candidate pairing must agree on the
 * sorted multiset of rounded payoff vectors the class sees.
 */
[[nodiscard]] SearchResult search_equivalence(const NormalForm &g1,
                                              const NormalForm &g2,
                                              const SearchOptions &options = {});

} // namespace qgames
