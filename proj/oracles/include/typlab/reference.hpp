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

#pragma once

// Dense reference computations. Everything here materializes full d^N
// operators and outer products, sharing no code with the contraction paths
// in the main library except the samplers and matrix containers. Only for
// small N.

#include <array>
#include <cstddef>
#include <cstdint>

#include "typlab/linalg.hpp"
#include "typlab/observables.hpp"
#include "typlab/partition.hpp"

namespace typlab::reference {

/// sigma at `site`, identity on the other n_sites - 1 sites (site 0 most
/// significant).
ComplexMatrix embed_site_operator(const ComplexMatrix &sigma, std::size_t site, std::size_t n_sites);

/// A_N as a dense d^N x d^N matrix.
ComplexMatrix dense_extensive(const ComplexMatrix &sigma, std::size_t n_sites);

/// Re <psi| op |psi> via a dense matrix-vector product.
double dense_expectation(const ComplexVector &psi, const ComplexMatrix &op);

/// Product state by repeated Kronecker products of the blocks.
ComplexVector dense_product(const KSeparableState &state);

/// Reduced state of one site from the full |psi><psi|, summing over every
/// digit tuple of the other sites.
ComplexMatrix outer_product_partial_trace(const ComplexVector &psi, std::size_t site, std::size_t local_dim);

/// Closed-form ascending eigenvalues of a 2x2 Hermitian matrix.
std::array<double, 2> eigenvalues_2x2(const ComplexMatrix &m);

/// Tr(m * m) by explicit multiplication.
double trace_of_square(const ComplexMatrix &m);

struct MonteCarloVariance {
    double mean;
    double mean_stderr;
    double variance;
    double variance_stderr;
};

/// Two-pass statistics of stored values.
MonteCarloVariance two_pass_statistics(const std::vector<double> &values);

/// Variance of <A_N> over K-separable Haar states, each evaluated on the dense
/// tensor product against the dense A_N.
MonteCarloVariance brute_force_haar_variance(const Partition &partition, const LocalObservable &sigma,
                                             std::uint64_t samples, std::uint64_t master_seed);

}  // namespace typlab::reference
