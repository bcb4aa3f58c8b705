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

#include <cstddef>
#include <string>

#include "typlab/observables.hpp"
#include "typlab/partition.hpp"

namespace typlab {

/// Average distance of a random reduced state from its ensemble average,
/// (1/2) sqrt(d_S Tr[Omega_B^2]). The bound constant of 1/2 applies to the
/// trace distance (1/2)||.||_1.
double canonical_typicality_bound_purity(std::size_t subsystem_dim, double bath_purity);
/// (1/2) sqrt(d_S^2 / d_R)
double canonical_typicality_bound_dim(std::size_t subsystem_dim, std::size_t restricted_dim);

/// Ensemble variance bound for a generic observable: 4 ||A||^2 Tr[Omega^2].
double reimann_variance_bound(double op_norm, double total_purity);

/// Variance bound for extensive observables on K-separable ensembles:
/// (N / 4) ||sigma||^2 d^2 / d^{n_B}.
double main_variance_bound(std::size_t n_sites, double sigma_norm, std::size_t local_dim, std::size_t block_size);

/// Qubit case with ||sigma|| = 1: N / 2^{N/K}.
double qubit_variance_bound(std::size_t n_sites, std::size_t n_blocks);

/// Bound on the variance of a = A_N / N for qubits: 1 / (N 2^{N/K}).
double density_variance_bound(std::size_t n_sites, std::size_t n_blocks);

/// Bound on the mean squared trace distance of one site's reduced state from
/// its average, d^2 / (4 d_B).
double reduced_state_squared_distance_bound(std::size_t local_dim, std::size_t block_dim);

/// Exact variance of <A_N> over independent Haar blocks, from the Haar
/// second-moment identity E[<O><P>] = (Tr O Tr P + Tr OP) / (D (D + 1)).
double exact_haar_ensemble_variance(const Partition &partition, const LocalObservable &sigma);

/// Exact variance of a = A_N / N when every site is an independent uniform
/// pick from sigma's eigenbasis (the eigenvector baseline).
double exact_eigenbasis_density_variance(std::size_t n_sites, const LocalObservable &sigma);

struct BoundReport {
    Partition partition;
    std::string sigma_name;
    double sigma_norm;
    double main_bound;
    double qubit_bound;
    double density_bound;
    double exact_variance;
    double exact_density_variance;
};

BoundReport make_bound_report(const Partition &partition, const LocalObservable &sigma);

}  // namespace typlab
