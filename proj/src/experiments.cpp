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

#include "typlab/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "typlab/bounds.hpp"
#include "typlab/errors.hpp"
#include "typlab/linalg.hpp"
#include "typlab/sampling.hpp"

namespace typlab {

namespace {

/// Runs fn(begin, end) over fixed-size chunks of [0, total) and merges the
/// partial results in chunk order.
template <class Result, class Fn>
Result run_chunked(std::uint64_t total, unsigned workers, Fn &&fn) {
    const std::uint64_t n_chunks = (total + kChunkSize - 1) / kChunkSize;
    std::vector<Result> parts(n_chunks);
    auto do_chunk = [&](std::uint64_t c) {
        const std::uint64_t begin = c * kChunkSize;
        const std::uint64_t end = std::min(total, begin + kChunkSize);
        parts[c] = fn(begin, end);
    };

    const unsigned n_threads = static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, workers), n_chunks));
    if (n_threads <= 1) {
        for (std::uint64_t c = 0; c < n_chunks; ++c) {
            do_chunk(c);
        }
    } else {
        std::atomic<std::uint64_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        std::vector<std::jthread> pool;
        pool.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t) {
            pool.emplace_back([&] {
                for (std::uint64_t c = next++; c < n_chunks; c = next++) {
                    try {
                        do_chunk(c);
                    } catch (...) {
                        std::lock_guard lock(error_mutex);
                        if (!error) {
                            error = std::current_exception();
                        }
                        next = n_chunks;
                    }
                }
            });
        }
        pool.clear();
        if (error) {
            std::rethrow_exception(error);
        }
    }

    Result merged{};
    for (const auto &p : parts) {
        merged.merge(p);
    }
    return merged;
}

double sq(double x) { return x * x; }

SweepRow make_row(const Partition &p, const LocalObservable &sigma, const SampleStats &stats,
                  std::uint64_t seed, double exact_density_variance) {
    const double n = static_cast<double>(p.n_sites());
    SweepRow row;
    row.n = p.n_sites();
    row.k = p.n_blocks();
    row.n_b = p.block_size();
    row.m = stats.count();
    row.mean_a = stats.mean();
    row.var_a = stats.variance();
    row.var_a_stderr = stats.variance_stderr();
    row.density_bound = main_variance_bound(p.n_sites(), sigma.op_norm(), p.local_dim(), p.block_size()) / sq(n);
    row.exact_density_variance = exact_density_variance;
    row.seed = seed;
    return row;
}

SweepResult haar_sweep(const ExperimentConfig &config, bool fixed_k) {
    validate(config);
    SweepResult out;
    for (std::size_t n : config.n_values) {
        Partition p = fixed_k ? Partition(n, config.k, config.d) : Partition::with_block_size(n, config.n_b, config.d);
        SampleStats stats = run_ensemble(p, config.sigma, config.samples, config.seed, SamplerMode::Haar, config.workers);
        const double exact = exact_haar_ensemble_variance(p, config.sigma) / sq(static_cast<double>(n));
        out.rows.push_back(make_row(p, config.sigma, stats, config.seed, exact));
    }
    return out;
}

std::optional<LogLogFit> try_fit(const std::vector<SweepRow> &rows) {
    if (rows.size() < 3) {
        return std::nullopt;
    }
    for (const auto &r : rows) {
        if (!(r.var_a > 0.0)) {
            return std::nullopt;
        }
    }
    return fit_loglog_slope(rows);
}

struct TypicalityAccumulator {
    SampleStats trace_norm;
    SampleStats sq_distance;

    void merge(const TypicalityAccumulator &o) {
        trace_norm.merge(o.trace_norm);
        sq_distance.merge(o.sq_distance);
    }
};

}  // namespace

std::string mode_name(Mode mode) {
    switch (mode) {
        case Mode::FixedK:
            return "fixed-k";
        case Mode::FixedNB:
            return "fixed-nb";
        case Mode::EigenvecBaseline:
            return "eigenvec";
        case Mode::TypicalityCheck:
            return "typicality";
    }
    return "unknown";
}

Mode parse_mode(const std::string &name) {
    if (name == "fixed-k") {
        return Mode::FixedK;
    }
    if (name == "fixed-nb") {
        return Mode::FixedNB;
    }
    if (name == "eigenvec" || name == "eigenvec-baseline") {
        return Mode::EigenvecBaseline;
    }
    if (name == "typicality" || name == "typicality-check") {
        return Mode::TypicalityCheck;
    }
    throw ValidationError("unknown mode '" + name + "'");
}

void validate(const ExperimentConfig &config) {
    if (config.samples < 2) {
        throw ValidationError("need at least 2 samples, got " + std::to_string(config.samples));
    }
    if (config.n_values.empty()) {
        throw ValidationError("no N values given");
    }
    if (config.sigma.dim() != config.d) {
        throw ValidationError("observable is " + std::to_string(config.sigma.dim()) + "x" +
                              std::to_string(config.sigma.dim()) + " but d=" + std::to_string(config.d));
    }
    std::size_t divisor = 1;
    std::string what;
    switch (config.mode) {
        case Mode::FixedK:
            divisor = config.k;
            what = "K=" + std::to_string(config.k);
            break;
        case Mode::FixedNB:
            divisor = config.n_b;
            what = "n_B=" + std::to_string(config.n_b);
            break;
        case Mode::EigenvecBaseline:
            break;
        case Mode::TypicalityCheck:
            if (config.d != 2) {
                throw ValidationError("typicality check is defined for qubits (d=2)");
            }
            for (std::size_t n : config.n_values) {
                if (n < 2 || n > 16) {
                    throw ValidationError("typicality check needs 2 <= n <= 16, got " + std::to_string(n));
                }
            }
            return;
    }
    if (divisor < 1) {
        throw ValidationError(what + " must be >= 1");
    }
    std::string bad;
    for (std::size_t n : config.n_values) {
        if (n < 1 || n % divisor != 0) {
            bad += (bad.empty() ? "" : ", ") + std::to_string(n);
        }
    }
    if (!bad.empty()) {
        throw ValidationError("N values not divisible by " + what + ": " + bad);
    }
}

SampleStats run_ensemble(const Partition &partition, const LocalObservable &sigma, std::uint64_t samples,
                         std::uint64_t master_seed, SamplerMode mode, unsigned workers) {
    if (samples < 2) {
        throw ValidationError("need at least 2 samples, got " + std::to_string(samples));
    }
    if (sigma.dim() != partition.local_dim()) {
        throw ValidationError("observable dimension does not match partition");
    }
    if (mode == SamplerMode::Eigenbasis && partition.n_blocks() != partition.n_sites()) {
        throw ValidationError("eigenbasis baseline needs K == N");
    }
    const ExtensiveObservable a{sigma, partition.n_sites()};
    return run_chunked<SampleStats>(samples, workers, [&](std::uint64_t begin, std::uint64_t end) {
        SampleStats s;
        for (std::uint64_t i = begin; i < end; ++i) {
            double value;
            if (mode == SamplerMode::Haar) {
                value = expectation_extensive(k_separable_state(partition, i, master_seed), a);
            } else {
                RngStream stream = RngStream::for_block(master_seed, i, 0);
                value = expectation_extensive(eigenbasis_product_state(partition, sigma, stream), a);
            }
            s.add(density_value(value, partition.n_sites()));
        }
        return s;
    });
}

double SweepRow::mean_a_stderr() const {
    return m > 0 ? std::sqrt(var_a / static_cast<double>(m)) : 0.0;
}

LogLogFit fit_loglog_slope(std::span<const std::pair<double, double>> points) {
    if (points.size() < 3) {
        throw ValidationError("slope fit needs at least 3 points, got " + std::to_string(points.size()));
    }
    std::vector<double> xs;
    std::vector<double> ys;
    for (const auto &[n, var] : points) {
        if (!(n > 0.0)) {
            throw ValidationError("slope fit needs positive N, got " + std::to_string(n));
        }
        if (!(var > 0.0)) {
            throw ValidationError("cannot take log of non-positive variance " + std::to_string(var));
        }
        xs.push_back(std::log(n));
        ys.push_back(std::log(var));
    }
    const double count = static_cast<double>(xs.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= count;
    my /= count;
    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if (!(sxx > 0.0)) {
        throw ValidationError("slope fit needs at least two distinct N");
    }
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - (intercept + slope * xs[i]);
        ss_res += r * r;
    }
    const double r2 = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
    return LogLogFit{slope, intercept, r2};
}

LogLogFit fit_loglog_slope(std::span<const SweepRow> rows) {
    std::vector<std::pair<double, double>> pts;
    pts.reserve(rows.size());
    for (const auto &r : rows) {
        pts.emplace_back(static_cast<double>(r.n), r.var_a);
    }
    return fit_loglog_slope(pts);
}

SweepResult sweep_fixed_k(const ExperimentConfig &config) {
    if (config.mode != Mode::FixedK) {
        throw ValidationError("sweep_fixed_k needs mode fixed-k");
    }
    return haar_sweep(config, true);
}

SweepResult sweep_fixed_nb(const ExperimentConfig &config) {
    if (config.mode != Mode::FixedNB) {
        throw ValidationError("sweep_fixed_nb needs mode fixed-nb");
    }
    SweepResult out = haar_sweep(config, false);
    out.fit = try_fit(out.rows);
    return out;
}

SweepResult eigenvec_baseline(const ExperimentConfig &config) {
    if (config.mode != Mode::EigenvecBaseline) {
        throw ValidationError("eigenvec_baseline needs mode eigenvec");
    }
    validate(config);
    SweepResult out;
    for (std::size_t n : config.n_values) {
        Partition p(n, n, config.d);
        SampleStats stats =
            run_ensemble(p, config.sigma, config.samples, config.seed, SamplerMode::Eigenbasis, config.workers);
        out.rows.push_back(make_row(p, config.sigma, stats, config.seed,
                                    exact_eigenbasis_density_variance(n, config.sigma)));
    }
    out.fit = try_fit(out.rows);
    return out;
}

SweepResult run_sweep(const ExperimentConfig &config) {
    switch (config.mode) {
        case Mode::FixedK:
            return sweep_fixed_k(config);
        case Mode::FixedNB:
            return sweep_fixed_nb(config);
        case Mode::EigenvecBaseline:
            return eigenvec_baseline(config);
        case Mode::TypicalityCheck:
            break;
    }
    throw ValidationError("mode " + mode_name(config.mode) + " does not produce sweep rows");
}

TypicalityReport verify_canonical_typicality(std::size_t n_qubits, std::uint64_t samples, std::uint64_t master_seed,
                                             unsigned workers) {
    if (n_qubits < 2 || n_qubits > 16) {
        throw ValidationError("typicality check needs 2 <= n <= 16, got " + std::to_string(n_qubits));
    }
    if (samples < 2) {
        throw ValidationError("need at least 2 samples");
    }
    const std::size_t dim = ipow(2, n_qubits);
    const DensityMatrix mixed = DensityMatrix::maximally_mixed(2);

    auto acc = run_chunked<TypicalityAccumulator>(samples, workers, [&](std::uint64_t begin, std::uint64_t end) {
        TypicalityAccumulator a;
        for (std::uint64_t i = begin; i < end; ++i) {
            RngStream stream = RngStream::for_block(master_seed, i, 0);
            const ComplexVector psi = haar_state(dim, stream);
            double tn_sum = 0.0;
            double sq_sum = 0.0;
            for (std::size_t site = 0; site < n_qubits; ++site) {
                const double tn = trace_norm(partial_trace_single_site(psi, site, 2) - mixed);
                tn_sum += tn;
                sq_sum += 0.25 * tn * tn;
            }
            a.trace_norm.add(tn_sum / static_cast<double>(n_qubits));
            a.sq_distance.add(sq_sum / static_cast<double>(n_qubits));
        }
        return a;
    });

    return TypicalityReport{
        n_qubits,
        samples,
        acc.trace_norm.mean(),
        acc.trace_norm.mean_stderr(),
        0.5 * acc.trace_norm.mean(),
        acc.sq_distance.mean(),
        canonical_typicality_bound_dim(2, dim),
        reduced_state_squared_distance_bound(2, dim),
    };
}

}  // namespace typlab
