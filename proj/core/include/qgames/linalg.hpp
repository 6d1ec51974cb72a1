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
 * Dense square complex matrices in row-major storage.
 *
 * Every quantum object in qgames (states, Kraus operators, POVM elements)
 * is a ComplexMatrix. Dimensions stay small (at most a few hundred), so
 * everything is dense.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qgames {

using Complex = std::complex<double>;

class ComplexMatrix {
  public:
    /// Zero matrix of the given dimension (dim >= 1).
    explicit ComplexMatrix(std::size_t dim);
    /// Takes ownership of dim*dim row-major entries.
    ComplexMatrix(std::size_t dim, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix zero(std::size_t dim) { return ComplexMatrix(dim); }
    static ComplexMatrix diagonal(std::span<const double> values);
    /// |k><k| in dimension dim.
    static ComplexMatrix basis_projector(std::size_t dim, std::size_t k);
    /// |v><v| for an arbitrary (not necessarily normalized) vector.
    static ComplexMatrix outer(std::span<const Complex> ket);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] std::span<const Complex> entries() const noexcept {
        return data_;
    }
    [[nodiscard]] const Complex &operator()(std::size_t row,
                                            std::size_t col) const {
        return data_[row * dim_ + col];
    }

    [[nodiscard]] ComplexMatrix adjoint() const;
    [[nodiscard]] Complex trace() const;
    /// Sorted ascending; only meaningful for Hermitian matrices (the
    /// Hermitian part is used).
    [[nodiscard]] std::vector<double> hermitian_eigenvalues() const;

    friend ComplexMatrix operator*(const ComplexMatrix &a,
                                   const ComplexMatrix &b);
    friend ComplexMatrix operator+(const ComplexMatrix &a,
                                   const ComplexMatrix &b);
    friend ComplexMatrix operator-(const ComplexMatrix &a,
                                   const ComplexMatrix &b);
    friend ComplexMatrix operator*(Complex s, const ComplexMatrix &a);
    friend ComplexMatrix conjugate(const ComplexMatrix &a,
                                   const ComplexMatrix &rho);

    friend bool operator==(const ComplexMatrix &a,
                           const ComplexMatrix &b) = default;

  private:
    std::size_t dim_;
    std::vector<Complex> data_;
};

/// Kronecker product: (a x b)[i*db + k, j*db + l] = a[i,j] * b[k,l].
[[nodiscard]] ComplexMatrix tensor_product(const ComplexMatrix &a,
                                           const ComplexMatrix &b);

/// Largest entrywise |a - b|. Throws DimensionMismatch on differing dims.
[[nodiscard]] double max_abs_diff(const ComplexMatrix &a,
                                  const ComplexMatrix &b);

/// Tr[a b] without forming the product.
[[nodiscard]] Complex trace_of_product(const ComplexMatrix &a,
                                       const ComplexMatrix &b);

/// a rho a^dagger
[[nodiscard]] ComplexMatrix conjugate(const ComplexMatrix &a,
                                      const ComplexMatrix &rho);

} // namespace qgames
