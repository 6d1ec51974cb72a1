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
 * Density operators, Kraus-form channels, POVMs and their validators.
 */
#pragma once

#include "qgames/linalg.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qgames {

/// Default tolerance for Hermiticity, trace, PSD and completeness checks.
inline constexpr double kValidationTolerance = 1e-9;

/// A density matrix. Numerical invariants are checked by validate_density.
class DensityOperator {
  public:
    explicit DensityOperator(ComplexMatrix matrix) : matrix_(std::move(matrix)) {}

    [[nodiscard]] const ComplexMatrix &matrix() const noexcept { return matrix_; }
    [[nodiscard]] std::size_t dim() const noexcept { return matrix_.dim(); }

    friend bool operator==(const DensityOperator &,
                           const DensityOperator &) = default;

  private:
    ComplexMatrix matrix_;
};

/**
 * CPTP map rho -> sum_k K_k rho K_k^dagger. The constructor only enforces
 * shape (nonempty, equal dimensions); completeness is reported by
 * validate_channel so malformed inputs can be diagnosed rather than thrown.
 */
class QuantumChannel {
  public:
    QuantumChannel(std::string label, std::vector<ComplexMatrix> kraus);

    static QuantumChannel identity(std::size_t dim, std::string label = "I");
    static QuantumChannel unitary(std::string label, ComplexMatrix u);

    [[nodiscard]] std::size_t dim() const noexcept { return kraus_.front().dim(); }
    [[nodiscard]] const std::vector<ComplexMatrix> &kraus() const noexcept {
        return kraus_;
    }
    [[nodiscard]] const std::string &label() const noexcept { return label_; }

    friend bool operator==(const QuantumChannel &,
                           const QuantumChannel &) = default;

  private:
    std::string label_;
    std::vector<ComplexMatrix> kraus_;
};

struct PovmElement {
    std::string label;
    ComplexMatrix matrix;

    friend bool operator==(const PovmElement &, const PovmElement &) = default;
};

class Povm {
  public:
    explicit Povm(std::vector<PovmElement> elements);

    /// {|k><k|} labelled "0".."d-1".
    static Povm computational_basis(std::size_t dim);

    [[nodiscard]] std::size_t dim() const noexcept {
        return elements_.front().matrix.dim();
    }
    [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }
    [[nodiscard]] const std::vector<PovmElement> &elements() const noexcept {
        return elements_;
    }
    [[nodiscard]] const PovmElement &operator[](std::size_t r) const {
        return elements_.at(r);
    }

    friend bool operator==(const Povm &, const Povm &) = default;

  private:
    std::vector<PovmElement> elements_;
};

/// One violated invariant. An empty ValidationReport means valid.
struct Violation {
    std::string path;
    std::string invariant;
    double deviation;
};
using ValidationReport = std::vector<Violation>;

[[nodiscard]] ValidationReport
validate_density(const ComplexMatrix &rho, double tol = kValidationTolerance,
                 const std::string &path = "");
[[nodiscard]] inline ValidationReport
validate_density(const DensityOperator &rho, double tol = kValidationTolerance,
                 const std::string &path = "") {
    return validate_density(rho.matrix(), tol, path);
}
[[nodiscard]] ValidationReport
validate_channel(const QuantumChannel &channel,
                 double tol = kValidationTolerance,
                 const std::string &path = "");
[[nodiscard]] ValidationReport validate_povm(const Povm &povm,
                                             double tol = kValidationTolerance,
                                             const std::string &path = "");

/// One line per violation: "<path>: <invariant> (deviation <x>)".
[[nodiscard]] std::vector<std::string>
describe(const ValidationReport &report);

[[nodiscard]] ComplexMatrix apply_channel(const QuantumChannel &channel,
                                          const ComplexMatrix &rho);
[[nodiscard]] inline ComplexMatrix apply_channel(const QuantumChannel &channel,
                                                 const DensityOperator &rho) {
    return apply_channel(channel, rho.matrix());
}

/// |Phi><Phi| with |Phi> = d^{-1/2} sum_i |i>|i>, a d^2 x d^2 matrix.
[[nodiscard]] ComplexMatrix maximally_entangled_projector(std::size_t d);

/// Probability of each POVM outcome on rho. Imaginary residue above tol
/// raises NumericalInconsistency; below it the residue is discarded.
[[nodiscard]] std::vector<double>
outcome_probabilities(const Povm &povm, const ComplexMatrix &rho,
                      double tol = kValidationTolerance);

} // namespace qgames
