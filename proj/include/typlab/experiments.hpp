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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "typlab/observables.hpp"
#include "typlab/partition.hpp"
#include "typlab/stats.hpp"

namespace typlab {

enum class Mode { FixedK, FixedNB, EigenvecBaseline, TypicalityCheck };

/// Config-file spelling: "fixed-k", "fixed-nb", "eigenvec", "typicality".
std::string mode_name(Mode mode);
Mode parse_mode(const std::string &name);

struct ExperimentConfig {
    static constexpr std::uint64_t kDefaultSamples = 1000;
    static constexpr std::uint64_t kDefaultSeed = 42;

    Mode mode = Mode::FixedK;
    std::vector<std::size_t> n_values;
    std::size_t k = 1;
    std::size_t n_b = 1;
    std::size_t d = 2;
    /// Preset name or matrix literal; kept for manifests and config output.
    std::string sigma_text = "pauli-z";
    LocalObservable sigma = LocalObservable::pauli_z();
    std::uint64_t samples = kDefaultSamples;
    std::uint64_t seed = kDefaultSeed;
    unsigned workers = 1;
};

/// Throws ValidationError (listing the offending N values) when a sweep's
/// divisibility rule or M >= 2 is violated.
void validate(const ExperimentConfig &config);

enum class SamplerMode { Haar, Eigenbasis };

/// Samples are processed in fixed chunks of this size and merged in chunk
/// order, so results do not depend on the worker count.
inline constexpr std::uint64_t kChunkSize = 64;

/// Statistics of a = <A_N> / N over `samples` states.
SampleStats run_ensemble(const Partition &partition, const LocalObservable &sigma, std::uint64_t samples,
                         std::uint64_t master_seed, SamplerMode mode, unsigned workers = 1);

struct SweepRow {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t n_b = 0;
    std::uint64_t m = 0;
    double mean_a = 0.0;
    double var_a = 0.0;
    double var_a_stderr = 0.0;
    double density_bound = 0.0;
    double exact_density_variance = 0.0;
    std::uint64_t seed = 0;

    double mean_a_stderr() const;
    bool operator==(const SweepRow &) const = default;
};

struct LogLogFit {
    double slope;
    double intercept;
    double r_squared;
};

/// OLS of ln(var) on ln(N). Needs >= 3 points with positive coordinates.
LogLogFit fit_loglog_slope(std::span<const std::pair<double, double>> points);
LogLogFit fit_loglog_slope(std::span<const SweepRow> rows);

struct SweepResult {
    std::vector<SweepRow> rows;
    std::optional<LogLogFit> fit;
};

SweepResult sweep_fixed_k(const ExperimentConfig &config);
SweepResult sweep_fixed_nb(const ExperimentConfig &config);
SweepResult eigenvec_baseline(const ExperimentConfig &config);
/// Dispatches on config.mode (not valid for TypicalityCheck).
SweepResult run_sweep(const ExperimentConfig &config);

struct TypicalityReport {
    std::size_t n_qubits;
    std::uint64_t samples;
    /// Mean over samples and sites of ||rho_site - I/2||_1 (unhalved).
    double mean_trace_norm;
    double mean_trace_norm_stderr;
    /// Mean of the trace distance (1/2)||rho_site - I/2||_1.
    double mean_trace_distance;
    /// Mean of the squared trace distance.
    double mean_sq_trace_distance;
    /// (1/2) sqrt(d_S^2 / d_R) with d_S = 2, d_R = 2^n.
    double bound;
    /// d^2 / (4 d_B)
    double squared_bound;
};

TypicalityReport verify_canonical_typicality(std::size_t n_qubits, std::uint64_t samples, std::uint64_t master_seed,
                                             unsigned workers = 1);

}  // namespace typlab
