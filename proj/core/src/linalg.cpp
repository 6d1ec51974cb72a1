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

#include "qgames/linalg.hpp"

#include "qgames/error.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

namespace qgames {

namespace {

using RowMajor =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ConstView = Eigen::Map<const RowMajor>;
using View = Eigen::Map<RowMajor>;

ConstView view(const ComplexMatrix &m) {
    const auto d = static_cast<Eigen::Index>(m.dim());
    return ConstView(m.entries().data(), d, d);
}

void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b,
                      const char *what) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorKind::DimensionMismatch,
                    std::string(what) + ": dimensions " +
                        std::to_string(a.dim()) + " and " +
                        std::to_string(b.dim()) + " differ");
    }
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
    if (dim == 0) {
        throw Error(ErrorKind::DimensionMismatch, "matrix dimension must be >= 1");
    }
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
    if (dim == 0 || data_.size() != dim * dim) {
        throw Error(ErrorKind::DimensionMismatch,
                    "expected " + std::to_string(dim * dim) +
                        " entries for dimension " + std::to_string(dim) +
                        ", got " + std::to_string(data_.size()));
    }
}

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
    if (dim_ == 0) {
        throw Error(ErrorKind::DimensionMismatch, "matrix dimension must be >= 1");
    }
    data_.reserve(dim_ * dim_);
    for (const auto &row : rows) {
        if (row.size() != dim_) {
            throw Error(ErrorKind::DimensionMismatch,
                        "matrix literal is not square");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m.data_[i * dim + i] = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        m.data_[i * values.size() + i] = values[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::basis_projector(std::size_t dim, std::size_t k) {
    if (k >= dim) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "basis index " + std::to_string(k) +
                        " out of range for dimension " + std::to_string(dim));
    }
    ComplexMatrix m(dim);
    m.data_[k * dim + k] = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> ket) {
    ComplexMatrix m(ket.size());
    for (std::size_t i = 0; i < ket.size(); ++i) {
        for (std::size_t j = 0; j < ket.size(); ++j) {
            m.data_[i * ket.size() + j] = ket[i] * std::conj(ket[j]);
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            m.data_[j * dim_ + i] = std::conj(data_[i * dim_ + j]);
        }
    }
    return m;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        t += data_[i * dim_ + i];
    }
    return t;
}

std::vector<double> ComplexMatrix::hermitian_eigenvalues() const {
    const RowMajor a = view(*this);
    const Eigen::MatrixXcd herm = 0.5 * (a + a.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        herm, Eigen::EigenvaluesOnly);
    const auto &ev = solver.eigenvalues();
    std::vector<double> out(ev.data(), ev.data() + ev.size());
    std::sort(out.begin(), out.end());
    return out;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "matrix product");
    ComplexMatrix out(a.dim());
    const auto d = static_cast<Eigen::Index>(a.dim());
    View(out.data_.data(), d, d).noalias() = view(a) * view(b);
    return out;
}

ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "matrix sum");
    ComplexMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) {
        out.data_[i] += b.data_[i];
    }
    return out;
}

ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "matrix difference");
    ComplexMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) {
        out.data_[i] -= b.data_[i];
    }
    return out;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix &a) {
    ComplexMatrix out = a;
    for (auto &x : out.data_) {
        x *= s;
    }
    return out;
}

ComplexMatrix tensor_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    const std::size_t d = da * db;
    std::vector<Complex> out(d * d);
    for (std::size_t i = 0; i < da; ++i) {
        for (std::size_t j = 0; j < da; ++j) {
            const Complex aij = a(i, j);
            for (std::size_t k = 0; k < db; ++k) {
                for (std::size_t l = 0; l < db; ++l) {
                    out[(i * db + k) * d + (j * db + l)] = aij * b(k, l);
                }
            }
        }
    }
    return ComplexMatrix(d, std::move(out));
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "max_abs_diff");
    double worst = 0.0;
    const auto ea = a.entries();
    const auto eb = b.entries();
    for (std::size_t i = 0; i < ea.size(); ++i) {
        worst = std::max(worst, std::abs(ea[i] - eb[i]));
    }
    return worst;
}

Complex trace_of_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "trace_of_product");
    const std::size_t d = a.dim();
    Complex t = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            t += a(i, j) * b(j, i);
        }
    }
    return t;
}

ComplexMatrix conjugate(const ComplexMatrix &a, const ComplexMatrix &rho) {
    require_same_dim(a, rho, "conjugate");
    ComplexMatrix out(a.dim());
    const auto d = static_cast<Eigen::Index>(a.dim());
    View(out.data_.data(), d, d).noalias() =
        view(a) * view(rho) * view(a).adjoint();
    return out;
}

} // namespace qgames
