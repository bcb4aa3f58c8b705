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

#include "typlab/bounds.hpp"

#include <cmath>

#include "typlab/errors.hpp"

namespace typlab {

namespace {

double as_double(std::size_t x) { return static_cast<double>(x); }

void require_divisible(std::size_t n_sites, std::size_t n_blocks) {
    if (n_sites < 1 || n_blocks < 1 || n_sites % n_blocks != 0) {
        throw ValidationError("K=" + std::to_string(n_blocks) + " must divide N=" + std::to_string(n_sites));
    }
}

}  // namespace

double canonical_typicality_bound_purity(std::size_t subsystem_dim, double bath_purity) {
    if (subsystem_dim < 2) {
        throw ValidationError("subsystem dimension must be >= 2");
    }
    if (!(bath_purity > 0.0 && bath_purity <= 1.0)) {
        throw ValidationError("bath purity must lie in (0, 1]");
    }
    return 0.5 * std::sqrt(as_double(subsystem_dim) * bath_purity);
}

double canonical_typicality_bound_dim(std::size_t subsystem_dim, std::size_t restricted_dim) {
    if (subsystem_dim < 2) {
        throw ValidationError("subsystem dimension must be >= 2");
    }
    if (restricted_dim < 1) {
        throw ValidationError("restricted dimension must be >= 1");
    }
    const double ds = as_double(subsystem_dim);
    return 0.5 * std::sqrt(ds * ds / as_double(restricted_dim));
}

double reimann_variance_bound(double op_norm, double total_purity) {
    if (!(op_norm >= 0.0)) {
        throw ValidationError("operator norm must be non-negative");
    }
    if (!(total_purity > 0.0 && total_purity <= 1.0)) {
        throw ValidationError("purity must lie in (0, 1]");
    }
    return 4.0 * op_norm * op_norm * total_purity;
}

double main_variance_bound(std::size_t n_sites, double sigma_norm, std::size_t local_dim, std::size_t block_size) {
    if (n_sites < 1 || block_size < 1) {
        throw ValidationError("main bound needs N >= 1 and n_B >= 1");
    }
    if (local_dim < 2) {
        throw ValidationError("main bound needs d >= 2");
    }
    if (!(sigma_norm >= 0.0)) {
        throw ValidationError("sigma norm must be non-negative");
    }
    const double d = as_double(local_dim);
    // d^2 / d^{n_B} = d^{2 - n_B}; pow keeps large n_B finite.
    return as_double(n_sites) / 4.0 * sigma_norm * sigma_norm * std::pow(d, 2.0 - as_double(block_size));
}

double qubit_variance_bound(std::size_t n_sites, std::size_t n_blocks) {
    require_divisible(n_sites, n_blocks);
    return as_double(n_sites) * std::ldexp(1.0, -static_cast<int>(n_sites / n_blocks));
}

double density_variance_bound(std::size_t n_sites, std::size_t n_blocks) {
    require_divisible(n_sites, n_blocks);
    return std::ldexp(1.0, -static_cast<int>(n_sites / n_blocks)) / as_double(n_sites);
}

double reduced_state_squared_distance_bound(std::size_t local_dim, std::size_t block_dim) {
    if (local_dim < 2 || block_dim < local_dim) {
        throw ValidationError("need d >= 2 and d_B >= d");
    }
    const double d = as_double(local_dim);
    return d * d / (4.0 * as_double(block_dim));
}

double exact_haar_ensemble_variance(const Partition &partition, const LocalObservable &sigma) {
    if (sigma.dim() != partition.local_dim()) {
        throw ValidationError("observable dimension does not match partition");
    }
    const double d = as_double(partition.local_dim());
    const double n_b = as_double(partition.block_size());
    const double big_d = std::pow(d, n_b);
    const double tr = sigma.trace();
    const double tr_sq = sigma.trace_sq();

    // Embedded operator O_l = sigma at site l, identity on the rest of the block.
    const double tr_o = tr * std::pow(d, n_b - 1.0);
    const double tr_o_sq = tr_sq * std::pow(d, n_b - 1.0);
    const double tr_o_o = tr * tr * std::pow(d, n_b - 2.0);
    const double norm2 = big_d * (big_d + 1.0);

    const double var_site = (tr_o_sq + tr_o * tr_o) / norm2 - (tr_o / big_d) * (tr_o / big_d);
    const double cov_pair = (tr_o_o + tr_o * tr_o) / norm2 - tr_o * tr_o / (big_d * big_d);

    const double sites = as_double(partition.block_size());
    const double per_block = sites * var_site + sites * (sites - 1.0) * cov_pair;
    const double total = as_double(partition.n_blocks()) * per_block;
    // Cancellation in cov_pair (and in var_site for sigma ~ I) leaves rounding
    // noise of either sign; a variance is never negative.
    return total < 0.0 ? 0.0 : total;
}

double exact_eigenbasis_density_variance(std::size_t n_sites, const LocalObservable &sigma) {
    if (n_sites < 1) {
        throw ValidationError("need N >= 1");
    }
    const auto &ev = sigma.eigen().values;
    double mean = 0.0;
    for (double x : ev) {
        mean += x;
    }
    mean /= as_double(ev.size());
    double var = 0.0;
    for (double x : ev) {
        var += (x - mean) * (x - mean);
    }
    var /= as_double(ev.size());
    return var / as_double(n_sites);
}

BoundReport make_bound_report(const Partition &partition, const LocalObservable &sigma) {
    const std::size_t n = partition.n_sites();
    const double exact = exact_haar_ensemble_variance(partition, sigma);
    const double main = main_variance_bound(n, sigma.op_norm(), partition.local_dim(), partition.block_size());
    return BoundReport{
        partition,
        sigma.name(),
        sigma.op_norm(),
        main,
        qubit_variance_bound(n, partition.n_blocks()),
        main / (as_double(n) * as_double(n)),
        exact,
        exact / (as_double(n) * as_double(n)),
    };
}

}  // namespace typlab
