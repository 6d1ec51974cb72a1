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
 * JSON game documents.
 *
 * Layout (schema_version "1"):
 *
 *     { "schema_version": "1", "kind": "strategic" | "qsim" | "qseq",
 *       "players": ["P", "Q"], "payoffs": [[...], ...], ... }
 *
 * strategic adds "strategies" (labels per player) and stores payoffs as one
 * vector per cell in row-major profile order. qsim adds "dims" (one per
 * player), "rho_init", "channels" (per player, a list of
 * {"label", "kraus": [matrix...]}) and "povm" ({"label", "matrix"} per
 * outcome); payoffs are one vector per outcome. qseq is like qsim with
 * "dims": [d], "channels" holding one option list per turn, and
 * "turn_sequence" listing the 1-based player moving at each turn.
 *
 * Matrices are row-major nested arrays of [re, im] pairs. Saved documents
 * have sorted keys and shortest round-trip float formatting, so equal games
 * serialize to identical bytes and reload bit-exactly.
 */
#pragma once

#include "qgames/equivalence.hpp"
#include "qgames/games.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace qgames {

inline constexpr std::string_view kSchemaVersion = "1";

[[nodiscard]] std::string_view kind_name(const AnyGame &game) noexcept;

[[nodiscard]] std::string serialize_game(const AnyGame &game);

/// Throws ParseError, SchemaError (first offending path) or ValidationError
/// (every violated invariant, with paths).
[[nodiscard]] AnyGame parse_game(std::string_view text);

[[nodiscard]] AnyGame load_game(const std::filesystem::path &path);

/// Throws IoError when the file cannot be written.
void save_game(const AnyGame &game, const std::filesystem::path &path);

/// {"level": "reduced"|"raw", "maps": [[...], ...]}
[[nodiscard]] std::string serialize_witness(const EquivalenceWitness &w,
                                            WitnessLevel level);

void write_text_file(const std::filesystem::path &path, std::string_view text);

} // namespace qgames
