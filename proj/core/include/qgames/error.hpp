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
 * Error type shared by every qgames module.
 */
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qgames {

enum class ErrorKind {
    DimensionMismatch,
    IndexOutOfRange,
    ProfileShapeMismatch,
    InvalidDistribution,
    ShapeMismatch,
    NumericalInconsistency,
    StrategyExplosion,
    BudgetExceeded,
    UnknownName,
    ParseError,
    SchemaError,
    ValidationError,
    IoError,
};

[[nodiscard]] std::string_view to_string(ErrorKind kind) noexcept;

/**
 * Exception carrying an ErrorKind and, for schema and validation failures,
 * one diagnostic line per offending field (JSON-pointer style paths).
 */
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &message,
          std::vector<std::string> diagnostics = {});

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }
    [[nodiscard]] const std::vector<std::string> &diagnostics() const noexcept {
        return diagnostics_;
    }

  private:
    ErrorKind kind_;
    std::vector<std::string> diagnostics_;
};

} // namespace qgames
