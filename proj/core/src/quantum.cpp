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

#include "qgames/quantum.hpp"

#include "qgames/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

namespace qgames {

namespace {

void require_uniform_dims(const std::vector<ComplexMatrix> &ms,
                          const char *what) {
    for (const auto &m : ms) {
        if (m.dim() != ms.front().dim()) {
            throw Error(ErrorKind::DimensionMismatch,
                        std::string(what) + " mixes dimensions " +
                            std::to_string(ms.front().dim()) + " and " +
                            std::to_string(m.dim()));
        }
    }
}

double hermiticity_deviation(const ComplexMatrix &m) {
    return max_abs_diff(m, m.adjoint());
}

std::string join_path(const std::string &prefix, const std::string &leaf) {
    return prefix.empty() ? leaf : prefix + leaf;
}

} // namespace

QuantumChannel::QuantumChannel(std::string label,
                               std::vector<ComplexMatrix> kraus)
    : label_(std::move(label)), kraus_(std::move(kraus)) {
    if (kraus_.empty()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "channel '" + label_ + "' has no Kraus operators");
    }
    require_uniform_dims(kraus_, "Kraus list");
}

QuantumChannel QuantumChannel::identity(std::size_t dim, std::string label) {
    return QuantumChannel(std::move(label), {ComplexMatrix::identity(dim)});
}

QuantumChannel QuantumChannel::unitary(std::string label, ComplexMatrix u) {
    return QuantumChannel(std::move(label), {std::move(u)});
}

Povm::Povm(std::vector<PovmElement> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) {
        throw Error(ErrorKind::DimensionMismatch, "POVM has no elements");
    }
    for (const auto &e : elements_) {
        if (e.matrix.dim() != elements_.front().matrix.dim()) {
            throw Error(ErrorKind::DimensionMismatch,
                        "POVM element '" + e.label + "' has dimension " +
                            std::to_string(e.matrix.dim()));
        }
    }
}

Povm Povm::computational_basis(std::size_t dim) {
    std::vector<PovmElement> els;
    els.reserve(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        els.push_back({std::to_string(k), ComplexMatrix::basis_projector(dim, k)});
    }
    return Povm(std::move(els));
}

ValidationReport validate_density(const ComplexMatrix &rho, double tol,
                                  const std::string &path) {
    ValidationReport report;
    const double herm = hermiticity_deviation(rho);
    if (herm > tol) {
        report.push_back({join_path(path, ""), "hermitian", herm});
    }
    const double tr = std::abs(rho.trace() - Complex(1.0));
    if (tr > tol) {
        report.push_back({join_path(path, ""), "unit trace", tr});
    }
    const double min_ev = rho.hermitian_eigenvalues().front();
    if (min_ev < -tol) {
        report.push_back({join_path(path, ""), "positive semidefinite", -min_ev});
    }
    return report;
}

ValidationReport validate_channel(const QuantumChannel &channel, double tol,
                                  const std::string &path) {
    ValidationReport report;
    ComplexMatrix sum = ComplexMatrix::zero(channel.dim());
    for (const auto &k : channel.kraus()) {
        sum = sum + k.adjoint() * k;
    }
    const double dev = max_abs_diff(sum, ComplexMatrix::identity(channel.dim()));
    if (dev > tol) {
        report.push_back(
            {join_path(path, "/kraus"), "trace-preserving completeness", dev});
    }
    return report;
}

ValidationReport validate_povm(const Povm &povm, double tol,
                               const std::string &path) {
    ValidationReport report;
    ComplexMatrix sum = ComplexMatrix::zero(povm.dim());
    for (std::size_t r = 0; r < povm.size(); ++r) {
        const auto &m = povm[r].matrix;
        const std::string elem = join_path(path, "/" + std::to_string(r));
        const double herm = hermiticity_deviation(m);
        if (herm > tol) {
            report.push_back({elem, "hermitian", herm});
        }
        const double min_ev = m.hermitian_eigenvalues().front();
        if (min_ev < -tol) {
            report.push_back({elem, "positive semidefinite", -min_ev});
        }
        sum = sum + m;
    }
    const double dev = max_abs_diff(sum, ComplexMatrix::identity(povm.dim()));
    if (dev > tol) {
        report.push_back({join_path(path, ""), "povm completeness", dev});
    }
    return report;
}

std::vector<std::string> describe(const ValidationReport &report) {
    std::vector<std::string> lines;
    lines.reserve(report.size());
    for (const auto &v : report) {
        std::string line = (v.path.empty() ? std::string("/") : v.path) + ": " +
                           v.invariant + " violated";
        if (!std::isnan(v.deviation)) {
            char buf[64];
            std::snprintf(buf, sizeof buf, " (deviation %.3g)", v.deviation);
            line += buf;
        }
        lines.push_back(std::move(line));
    }
    return lines;
}

ComplexMatrix apply_channel(const QuantumChannel &channel,
                            const ComplexMatrix &rho) {
    if (channel.dim() != rho.dim()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "channel '" + channel.label() + "' has dimension " +
                        std::to_string(channel.dim()) + ", state has " +
                        std::to_string(rho.dim()));
    }
    const auto &kraus = channel.kraus();
    ComplexMatrix out = conjugate(kraus.front(), rho);
    for (std::size_t k = 1; k < kraus.size(); ++k) {
        out = out + conjugate(kraus[k], rho);
    }
    return out;
}

ComplexMatrix maximally_entangled_projector(std::size_t d) {
    if (d == 0) {
        throw Error(ErrorKind::DimensionMismatch, "dimension must be >= 1");
    }
    std::vector<Complex> phi(d * d);
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t i = 0; i < d; ++i) {
        phi[i * d + i] = amp;
    }
    return ComplexMatrix::outer(phi);
}

std::vector<double> outcome_probabilities(const Povm &povm,
                                          const ComplexMatrix &rho,
                                          double tol) {
    if (povm.dim() != rho.dim()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "POVM dimension " + std::to_string(povm.dim()) +
                        " does not match state dimension " +
                        std::to_string(rho.dim()));
    }
    std::vector<double> probs;
    probs.reserve(povm.size());
    for (const auto &e : povm.elements()) {
        const Complex p = trace_of_product(e.matrix, rho);
        if (std::abs(p.imag()) > tol) {
            throw Error(ErrorKind::NumericalInconsistency,
                        "Tr[M rho] for outcome '" + e.label +
                            "' has imaginary part " + std::to_string(p.imag()));
        }
        probs.push_back(p.real());
    }
    return probs;
}

} // namespace qgames
