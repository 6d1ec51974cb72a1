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

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "qgames/catalog.hpp"
#include "qgames/error.hpp"
#include "qgames/linalg.hpp"

#include <cmath>

namespace qgames {
namespace {

using Catch::Matchers::WithinAbs;

ComplexMatrix from_rng(std::size_t dim, Rng &rng) {
    std::normal_distribution<double> n;
    std::vector<Complex> e(dim * dim);
    for (auto &x : e) {
        x = {n(rng), n(rng)};
    }
    return ComplexMatrix(dim, std::move(e));
}

TEST_CASE("identity and zero constructors", "[linalg]") {
    const auto i3 = ComplexMatrix::identity(3);
    CHECK(i3.dim() == 3);
    CHECK(i3.trace() == Complex(3.0, 0.0));
    CHECK(i3(0, 1) == Complex(0.0, 0.0));
    CHECK(ComplexMatrix::zero(2) == ComplexMatrix(2));
}

TEST_CASE("constructor rejects inconsistent shapes", "[linalg]") {
    CHECK_THROWS_AS(ComplexMatrix(2, std::vector<Complex>(3)), Error);
    CHECK_THROWS_AS(ComplexMatrix({{1.0, 0.0}, {1.0}}), Error);
}

TEST_CASE("tensor product of identities is identity", "[linalg]") {
    CHECK(tensor_product(ComplexMatrix::identity(2), ComplexMatrix::identity(2)) ==
          ComplexMatrix::identity(4));
}

TEST_CASE("tensor product of basis projectors places a single one", "[linalg]") {
    const auto k = tensor_product(ComplexMatrix::basis_projector(2, 0),
                                  ComplexMatrix::basis_projector(2, 1));
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            CHECK(k(r, c) == Complex(r == 1 && c == 1 ? 1.0 : 0.0, 0.0));
        }
    }
}

TEST_CASE("tensor product matches the index oracle", "[linalg]") {
    Rng rng(11);
    for (std::size_t da : {1, 2, 3}) {
        for (std::size_t db : {1, 2, 4}) {
            const auto a = from_rng(da, rng);
            const auto b = from_rng(db, rng);
            CHECK(max_abs_diff(tensor_product(a, b), testing::kron_oracle(a, b)) == 0.0);
        }
    }
}

TEST_CASE("product, adjoint and trace against naive loops", "[linalg]") {
    Rng rng(3);
    const auto a = from_rng(5, rng);
    const auto b = from_rng(5, rng);
    CHECK(max_abs_diff(a * b, testing::matmul_oracle(a, b)) < 1e-12);
    CHECK(max_abs_diff((a * b).adjoint(), b.adjoint() * a.adjoint()) < 1e-12);
    CHECK(std::abs(trace_of_product(a, b) - (a * b).trace()) < 1e-12);
    CHECK(max_abs_diff(conjugate(a, b), a * b * a.adjoint()) < 1e-12);
    CHECK(max_abs_diff(a + b - b, a) < 1e-12);
    CHECK(max_abs_diff(Complex(2.0, 0.0) * a, a + a) == 0.0);
}

TEST_CASE("hermitian eigenvalues are real and ascending", "[linalg]") {
    const double v[] = {0.3, -1.0, 2.0};
    const auto eig = ComplexMatrix::diagonal(v).hermitian_eigenvalues();
    REQUIRE(eig.size() == 3);
    CHECK_THAT(eig[0], WithinAbs(-1.0, 1e-14));
    CHECK_THAT(eig[1], WithinAbs(0.3, 1e-14));
    CHECK_THAT(eig[2], WithinAbs(2.0, 1e-14));

    Rng rng(5);
    const auto u = random_unitary(3, rng);
    const auto rotated = conjugate(u, ComplexMatrix::diagonal(v)).hermitian_eigenvalues();
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK_THAT(rotated[k], WithinAbs(eig[k], 1e-12));
    }
}

TEST_CASE("outer product of a ket", "[linalg]") {
    const Complex ket[] = {{1.0, 0.0}, {0.0, 1.0}};
    const auto p = ComplexMatrix::outer(ket);
    CHECK(p(0, 1) == Complex(0.0, -1.0));
    CHECK(p(1, 0) == Complex(0.0, 1.0));
    CHECK(p.trace() == Complex(2.0, 0.0));
}

TEST_CASE("dimension mismatch throws", "[linalg]") {
    const auto a = ComplexMatrix::identity(2);
    const auto b = ComplexMatrix::identity(3);
    try {
        (void)(a * b);
        FAIL("expected throw");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::DimensionMismatch);
    }
    CHECK_THROWS_AS(a + b, Error);
    CHECK_THROWS_AS(max_abs_diff(a, b), Error);
}

} // namespace
} // namespace qgames
