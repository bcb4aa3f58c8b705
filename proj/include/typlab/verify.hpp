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

#include <cstdint>
#include <vector>

#include "typlab/bounds.hpp"
#include "typlab/experiments.hpp"
#include "typlab/report.hpp"

namespace typlab {

/// Left-panel sweeps: K = 1 with N = 2..16 and K = 2 with N = 2..24.
std::vector<ExperimentConfig> default_fixed_k_configs();
/// Right-panel sweeps: n_B = 1, 2 over N = 8..512 and n_B = 3 over N = 6..384.
std::vector<ExperimentConfig> default_fixed_nb_configs();
ExperimentConfig default_eigenvec_config();
ExperimentConfig default_typicality_config();

/// Row-level checks on a finished sweep: bound dominance (Haar modes),
/// mean consistency (traceless sigma) and the aggregate oracle-consistency
/// rate (>= 95% of rows within 4 stderr of the exact value).
std::vector<CheckResult> sweep_checks(const ExperimentConfig &config, const SweepResult &result);

/// Analytic checks on a bound report: exact <= main bound for traceless
/// unit-norm sigma, qubit/density bound consistency.
std::vector<CheckResult> bound_report_checks(const BoundReport &report, const LocalObservable &sigma);

/// Typicality checks: mean trace distance against (1/2) sqrt(d_S^2/d_R),
/// unhalved trace norm against sqrt(d_S^2/d_R), and the squared-distance bound.
std::vector<CheckResult> typicality_checks(const TypicalityReport &report);

struct BoundsVerification {
    std::vector<CheckResult> checks;
    std::vector<BoundReport> reports;
};

/// Runs every config's sweep and the analytic bound checks for each row.
BoundsVerification verify_bounds(const std::vector<ExperimentConfig> &configs);

/// The oracle validation suite: eigensolver identities, partial trace and
/// expectation against dense references, Haar moments, and the exact
/// ensemble variance against brute-force Monte Carlo for N <= 6.
std::vector<CheckResult> selftest_checks(std::uint64_t mc_samples = 100000, std::uint64_t seed = 20260101,
                                         unsigned workers = 1);

/// exact_haar_ensemble_variance vs brute force for every N <= max_n, divisor
/// K and sigma in {pauli-z, pauli-x, diag(2,0)}, at 4 combined stderr.
std::vector<CheckResult> exact_variance_oracle_checks(std::size_t max_n, std::uint64_t samples, std::uint64_t seed);

}  // namespace typlab
