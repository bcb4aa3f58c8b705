// Copyright 2026 The typlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include "doctest.h"
#include "test_util.hpp"
#include "typlab/errors.hpp"
#include "typlab/linalg.hpp"
#include "typlab/reference.hpp"
#include "typlab/sampling.hpp"

using namespace typlab;

TEST_CASE("normalize") {
    auto a = normalize(ComplexVector{2.0, 0.0});
    CHECK(a[0] == Complex(1.0));
    CHECK(a[1] == Complex(0.0));

    auto b = normalize(ComplexVector{1.0, 1.0});
    CHECK(b[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(b[1].real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));

    CHECK_THROWS_WITH_AS(normalize(ComplexVector{0.0, 0.0}), "degenerate sample", DegenerateSample);
}

TEST_CASE("partial trace of a Bell state is maximally mixed") {
    const double h = 1.0 / std::sqrt(2.0);
    ComplexVector bell{h, 0.0, 0.0, h};
    for (std::size_t site : {0u, 1u}) {
        auto rho = partial_trace_single_site(bell, site, 2);
        CHECK(std::abs(rho(0, 0) - 0.5) < 1e-15);
        CHECK(std::abs(rho(1, 1) - 0.5) < 1e-15);
        CHECK(std::abs(rho(0, 1)) < 1e-15);
    }
}

TEST_CASE("partial trace of a product state factorizes") {
    const double h = 1.0 / std::sqrt(2.0);
    ComplexVector psi = kron(ComplexVector{1.0, 0.0}, ComplexVector{h, h});
    auto rho = partial_trace_single_site(psi, 1, 2);
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            CHECK(std::abs(rho(r, c) - 0.5) < 1e-15);
        }
    }
    CHECK(purity(rho) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(purity(partial_trace_single_site(psi, 0, 2)) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("partial trace matches the dense outer-product oracle") {
    for (std::size_t d : {2u, 3u}) {
        for (std::uint64_t trial = 0; trial < 5; ++trial) {
            RngStream s = RngStream::for_block(11, trial, d);
            auto psi = haar_state(ipow(d, 3), s);
            for (std::size_t site = 0; site < 3; ++site) {
                auto fast = partial_trace_single_site(psi, site, d).hermitian().matrix();
                auto slow = reference::outer_product_partial_trace(psi, site, d);
                CHECK((fast - slow).max_abs() < 1e-12);
            }
        }
    }
}

TEST_CASE("partial trace errors") {
    ComplexVector psi{1.0, 0.0, 0.0, 0.0};
    CHECK_THROWS_AS(partial_trace_single_site(psi, 2, 2), IndexError);
    CHECK_THROWS_AS(partial_trace_single_site(ComplexVector{1.0, 0.0, 0.0}, 0, 2), ValidationError);
}

TEST_CASE("partial trace output is always a valid density matrix") {
    // 10,000 random inputs over 1..6 qubits; DensityMatrix construction
    // enforces Hermiticity, unit trace and positivity.
    std::size_t checked = 0;
    for (std::uint64_t i = 0; i < 10000; ++i) {
        const std::size_t n = 1 + i % 6;
        RngStream s = RngStream::for_block(5, i, 0);
        auto psi = haar_state(ipow(2, n), s);
        CHECK(std::abs(psi.norm_squared() - 1.0) < 1e-12);
        auto rho = partial_trace_single_site(psi, i % n, 2);
        CHECK(std::abs(rho.hermitian().trace() - 1.0) <= 1e-10);
        CHECK(rho.hermitian().matrix().hermiticity_defect() <= 1e-12);
        CHECK(hermitian_eigenvalues(rho.hermitian()).front() >= -1e-10);
        ++checked;
    }
    CHECK(checked == 10000);
}

TEST_CASE("hermitian eigenvalues, fixed cases") {
    auto d = hermitian_eigenvalues(HermitianMatrix{{3.0, 0.0}, {0.0, 1.0}});
    CHECK(d == std::vector<double>{1.0, 3.0});

    auto x = hermitian_eigenvalues(HermitianMatrix{{0.0, 1.0}, {1.0, 0.0}});
    CHECK(x[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(x[1] == doctest::Approx(1.0).epsilon(1e-14));

    auto y = hermitian_eigenvalues(HermitianMatrix{{0.0, Complex(0, -1)}, {Complex(0, 1), 0.0}});
    CHECK(y[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(y[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("non-Hermitian input is rejected") {
    CHECK_THROWS_AS(HermitianMatrix({{0.0, 1.0}, {2.0, 0.0}}), ValidationError);
    CHECK_THROWS_AS(HermitianMatrix({{Complex(0, 1), 0.0}, {0.0, 0.0}}), ValidationError);
    // Below the 1e-8 validation threshold the input is symmetrized exactly.
    HermitianMatrix nearly({{0.0, 1.0}, {1.0 + 1e-10, 0.0}});
    CHECK(nearly.matrix().hermiticity_defect() == 0.0);
}

TEST_CASE("eigenvalues reproduce trace identities for random 8x8") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        RngStream rng(seed, 1);
        auto h = test::random_hermitian(8, rng);
        auto ev = hermitian_eigenvalues(h);
        double s1 = 0.0, s2 = 0.0;
        for (double x : ev) {
            s1 += x;
            s2 += x * x;
        }
        CHECK(std::abs(s1 - h.trace()) < 1e-9);
        CHECK(std::abs(s2 - reference::trace_of_square(h.matrix())) < 1e-9);
        CHECK(std::is_sorted(ev.begin(), ev.end()));
    }
}

TEST_CASE("Jacobi reconstruction residual") {
    for (std::size_t dim : {1u, 2u, 3u, 7u, 16u, 33u, 64u}) {
        RngStream rng(dim, 2);
        auto h = test::random_hermitian(dim, rng);
        auto e = hermitian_eigen(h);
        ComplexMatrix lambda(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            lambda(i, i) = e.values[i];
        }
        CHECK((h.matrix() - e.vectors * lambda * e.vectors.adjoint()).max_abs() < 1e-10);
        CHECK((e.vectors.adjoint() * e.vectors - ComplexMatrix::identity(dim)).max_abs() < 1e-10);
    }
}

TEST_CASE("Jacobi handles degenerate and large-norm spectra") {
    auto e = hermitian_eigenvalues(HermitianMatrix(3.0 * ComplexMatrix::identity(4)));
    for (double x : e) {
        CHECK(x == 3.0);
    }
    RngStream rng(9, 9);
    auto h = test::random_hermitian(6, rng);
    auto big = HermitianMatrix(1e6 * h.matrix());
    auto ev = hermitian_eigenvalues(big);
    auto ev1 = hermitian_eigenvalues(h);
    for (std::size_t i = 0; i < ev.size(); ++i) {
        CHECK(ev[i] == doctest::Approx(1e6 * ev1[i]).epsilon(1e-10));
    }
}

TEST_CASE("trace norm") {
    CHECK(trace_norm(HermitianMatrix(ComplexMatrix(2))) == 0.0);
    auto zero_proj = DensityMatrix::pure(ComplexVector{1.0, 0.0});
    CHECK(trace_norm(zero_proj - DensityMatrix::maximally_mixed(2)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(trace_distance(zero_proj, DensityMatrix::maximally_mixed(2)) == doctest::Approx(0.5).epsilon(1e-14));

    for (std::uint64_t i = 0; i < 50; ++i) {
        RngStream s = RngStream::for_block(3, i, 0);
        auto rho = partial_trace_single_site(haar_state(8, s), 0, 2);
        auto sig = partial_trace_single_site(haar_state(4, s), 1, 2);
        auto diff = rho - sig;
        auto ev = reference::eigenvalues_2x2(diff.matrix());
        CHECK(trace_norm(diff) == doctest::Approx(std::abs(ev[0]) + std::abs(ev[1])).epsilon(1e-12));
        // Identical inputs give exactly zero.
        CHECK(trace_norm(rho - rho) == 0.0);
    }
}

TEST_CASE("purity") {
    CHECK(purity(DensityMatrix::maximally_mixed(4)) == doctest::Approx(0.25).epsilon(1e-15));
    RngStream s(1, 1);
    CHECK(purity(DensityMatrix::pure(haar_state(5, s))) == doctest::Approx(1.0).epsilon(1e-12));

    auto psi = haar_state(1024, s);
    auto rho = partial_trace_single_site(psi, 4, 2);
    const double p = purity(rho);
    CHECK(p == doctest::Approx(reference::trace_of_square(rho.hermitian().matrix())).epsilon(1e-13));
    // 1/2 + r^2/2 with E r^2 = 3/1025.
    CHECK(p >= 0.5);
    CHECK(p < 0.52);
}

TEST_CASE("operator norm") {
    CHECK(operator_norm(HermitianMatrix{{1.0, 0.0}, {0.0, -1.0}}) == 1.0);
    CHECK(operator_norm(HermitianMatrix(3.0 * ComplexMatrix::identity(2))) == 3.0);
    RngStream rng(4, 4);
    auto h = test::random_hermitian(4, rng);
    auto ev = hermitian_eigenvalues(h);
    CHECK(operator_norm(h) == std::max(std::abs(ev.front()), std::abs(ev.back())));
}

TEST_CASE("density matrix validation") {
    CHECK_THROWS_AS(DensityMatrix(HermitianMatrix{{1.0, 0.0}, {0.0, 1.0}}), ValidationError);
    CHECK_THROWS_AS(DensityMatrix(HermitianMatrix{{1.5, 0.0}, {0.0, -0.5}}), ValidationError);
    CHECK_NOTHROW(DensityMatrix(HermitianMatrix{{0.5, 0.5}, {0.5, 0.5}}));
}
