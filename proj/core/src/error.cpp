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

#include "qgames/error.hpp"

namespace qgames {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::DimensionMismatch:
        return "DimensionMismatch";
    case ErrorKind::IndexOutOfRange:
        return "IndexOutOfRange";
    case ErrorKind::ProfileShapeMismatch:
        return "ProfileShapeMismatch";
    case ErrorKind::InvalidDistribution:
        return "InvalidDistribution";
    case ErrorKind::ShapeMismatch:
        return "ShapeMismatch";
    case ErrorKind::NumericalInconsistency:
        return "NumericalInconsistency";
    case ErrorKind::StrategyExplosion:
        return "StrategyExplosion";
    case ErrorKind::BudgetExceeded:
        return "BudgetExceeded";
    case ErrorKind::UnknownName:
        return "UnknownName";
    case ErrorKind::ParseError:
        return "ParseError";
    case ErrorKind::SchemaError:
        return "SchemaError";
    case ErrorKind::ValidationError:
        return "ValidationError";
    case ErrorKind::IoError:
        return "IoError";
    }
    return "Unknown";
}

namespace {
std::string compose(ErrorKind kind, const std::string &message,
                    const std::vector<std::string> &diagnostics) {
    std::string out(to_string(kind));
    out += ": ";
    out += message;
    for (const auto &d : diagnostics) {
        out += "\n  ";
        out += d;
    }
    return out;
}
} // namespace

Error::Error(ErrorKind kind, const std::string &message,
             std::vector<std::string> diagnostics)
    : std::runtime_error(compose(kind, message, diagnostics)), kind_(kind),
      diagnostics_(std::move(diagnostics)) {}

} // namespace qgames
