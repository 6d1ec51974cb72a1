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
 * Human-readable renderings of normal forms, reductions and witnesses.
 */
#pragma once

#include "qgames/equivalence.hpp"
#include "qgames/quantum.hpp"
#include "qgames/reduction.hpp"

#include <span>
#include <string>
#include <vector>

namespace qgames {

/// "(-1, 1)" with %.10g entries.
[[nodiscard]] std::string format_payoff(std::span<const double> payoff);

/// "{NN, FF}"
[[nodiscard]] std::string format_class(const std::vector<std::string> &members);

/// One line per cell: "(N, NN) -> (-1, 1)".
[[nodiscard]] std::string render_normal_form(const NormalForm &nf);

/// Class counts and membership per player followed by the reduced cells.
[[nodiscard]] std::string render_reduction(const ReducedNormalForm &reduced);

/// "Q: {NN, FF} -> {N}; {NF, FN} -> {F}" per player.
[[nodiscard]] std::string render_witness(const EquivalenceWitness &w,
                                         const ReducedNormalForm &from,
                                         const ReducedNormalForm &to);

[[nodiscard]] std::string render_validation(const ValidationReport &report);

} // namespace qgames
