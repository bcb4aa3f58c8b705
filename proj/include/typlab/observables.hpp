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

#include "typlab/linalg.hpp"
#include "typlab/partition.hpp"

namespace typlab {

/// A single-site Hermitian operator with its cached spectral data.
class LocalObservable {
  public:
    explicit LocalObservable(HermitianMatrix sigma, std::string name = "custom");

    static LocalObservable pauli_x();
    static LocalObservable pauli_y();
    static LocalObservable pauli_z();
    static LocalObservable identity(std::size_t d = 2);
    /// "pauli-x", "pauli-y", "pauli-z", "identity" (qubit presets).
    static LocalObservable preset(const std::string &name);

    const HermitianMatrix &sigma() const noexcept { return sigma_; }
    const std::string &name() const noexcept { return name_; }
    std::size_t dim() const noexcept { return sigma_.dim(); }
    bool is_diagonal() const noexcept { return is_diagonal_; }
    double op_norm() const noexcept { return op_norm_; }
    double trace() const noexcept { return trace_; }
    /// Tr sigma^2
    double trace_sq() const noexcept { return trace_sq_; }
    const EigenDecomposition &eigen() const noexcept { return eigen_; }
    bool is_traceless() const noexcept;

  private:
    HermitianMatrix sigma_;
    std::string name_;
    bool is_diagonal_;
    double op_norm_;
    double trace_;
    double trace_sq_;
    EigenDecomposition eigen_;
};

/// A_N = sum_l sigma^(l), the same sigma on every site.
struct ExtensiveObservable {
    LocalObservable sigma;
    std::size_t n_sites;
};

/// <psi| sigma^(site) |psi> for one block vector, by direct contraction over
/// amplitude pairs. Dispatches to the diagonal path when sigma is diagonal.
double expectation_site(const ComplexVector &block, std::size_t site_in_block, const LocalObservable &sigma);

/// Generic O(D d^2) contraction; throws ConsistencyError when the imaginary
/// part exceeds 1e-8.
double expectation_site_general(const ComplexVector &block, std::size_t site_in_block, const HermitianMatrix &sigma);
/// O(D) path using only the diagonal of sigma.
double expectation_site_diagonal(const ComplexVector &block, std::size_t site_in_block, const HermitianMatrix &sigma);

/// Sum over blocks and sites of `expectation_site`.
double expectation_extensive(const KSeparableState &state, const ExtensiveObservable &a);

double density_value(double a_value, std::size_t n_sites);

/// Haar ensemble mean of <A_N>: N Tr(sigma) / d.
double mean_over_average_state(const Partition &partition, const LocalObservable &sigma);

}  // namespace typlab
