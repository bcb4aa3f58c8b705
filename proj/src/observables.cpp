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

#include "typlab/observables.hpp"

#include <cmath>

#include "typlab/errors.hpp"

namespace typlab {

namespace {

constexpr double kImaginaryTolerance = 1e-8;

}  // namespace

LocalObservable::LocalObservable(HermitianMatrix sigma, std::string name)
    : sigma_(std::move(sigma)), name_(std::move(name)), eigen_(hermitian_eigen(sigma_)) {
    const std::size_t d = sigma_.dim();
    if (d < 2) {
        throw ValidationError("local observable must be at least 2x2");
    }
    is_diagonal_ = true;
    trace_sq_ = 0.0;
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            if (r != c && sigma_(r, c) != 0.0) {
                is_diagonal_ = false;
            }
            trace_sq_ += std::norm(sigma_(r, c));
        }
    }
    trace_ = sigma_.trace();
    op_norm_ = std::max(std::abs(eigen_.values.front()), std::abs(eigen_.values.back()));
}

LocalObservable LocalObservable::pauli_x() { return LocalObservable(HermitianMatrix{{0.0, 1.0}, {1.0, 0.0}}, "pauli-x"); }

LocalObservable LocalObservable::pauli_y() {
    return LocalObservable(HermitianMatrix{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}}, "pauli-y");
}

LocalObservable LocalObservable::pauli_z() { return LocalObservable(HermitianMatrix{{1.0, 0.0}, {0.0, -1.0}}, "pauli-z"); }

LocalObservable LocalObservable::identity(std::size_t d) {
    return LocalObservable(HermitianMatrix(ComplexMatrix::identity(d)), "identity");
}

LocalObservable LocalObservable::preset(const std::string &name) {
    if (name == "pauli-x") {
        return pauli_x();
    }
    if (name == "pauli-y") {
        return pauli_y();
    }
    if (name == "pauli-z") {
        return pauli_z();
    }
    if (name == "identity") {
        return identity(2);
    }
    throw ValidationError("unknown observable preset '" + name + "'");
}

bool LocalObservable::is_traceless() const noexcept { return std::abs(trace_) <= 1e-12; }

namespace {

struct SiteLayout {
    std::size_t d;
    std::size_t low;
    std::size_t high;
};

SiteLayout site_layout(const ComplexVector &block, std::size_t site_in_block, std::size_t d) {
    const std::size_t n = site_count(block.dim(), d);
    if (site_in_block >= n) {
        throw IndexError("site " + std::to_string(site_in_block) + " out of range for block of " +
                         std::to_string(n) + " sites");
    }
    const std::size_t low = ipow(d, n - 1 - site_in_block);
    return SiteLayout{d, low, block.dim() / (low * d)};
}

}  // namespace

double expectation_site_diagonal(const ComplexVector &block, std::size_t site_in_block, const HermitianMatrix &s) {
    const auto [d, low, high] = site_layout(block, site_in_block, s.dim());
    const Complex *amps = block.amplitudes().data();
    double acc = 0.0;
    for (std::size_t h = 0; h < high; ++h) {
        const Complex *base = amps + h * d * low;
        for (std::size_t a = 0; a < d; ++a) {
            const double saa = s(a, a).real();
            if (saa == 0.0) {
                continue;
            }
            double part = 0.0;
            const Complex *row = base + a * low;
            for (std::size_t l = 0; l < low; ++l) {
                part += std::norm(row[l]);
            }
            acc += saa * part;
        }
    }
    return acc;
}

double expectation_site_general(const ComplexVector &block, std::size_t site_in_block, const HermitianMatrix &s) {
    const auto [d, low, high] = site_layout(block, site_in_block, s.dim());
    const Complex *amps = block.amplitudes().data();
    // sum_{h,l} sum_{a,b} conj(psi[h,a,l]) sigma[a,b] psi[h,b,l]
    Complex acc = 0.0;
    for (std::size_t h = 0; h < high; ++h) {
        const Complex *base = amps + h * d * low;
        for (std::size_t a = 0; a < d; ++a) {
            for (std::size_t b = 0; b < d; ++b) {
                const Complex sab = s(a, b);
                if (sab == 0.0) {
                    continue;
                }
                const Complex *ra = base + a * low;
                const Complex *rb = base + b * low;
                Complex part = 0.0;
                for (std::size_t l = 0; l < low; ++l) {
                    part += std::conj(ra[l]) * rb[l];
                }
                acc += sab * part;
            }
        }
    }
    if (std::abs(acc.imag()) > kImaginaryTolerance) {
        throw ConsistencyError("expectation of a Hermitian operator has imaginary part " +
                               std::to_string(acc.imag()));
    }
    return acc.real();
}

double expectation_site(const ComplexVector &block, std::size_t site_in_block, const LocalObservable &sigma) {
    return sigma.is_diagonal() ? expectation_site_diagonal(block, site_in_block, sigma.sigma())
                               : expectation_site_general(block, site_in_block, sigma.sigma());
}

double expectation_extensive(const KSeparableState &state, const ExtensiveObservable &a) {
    const Partition &p = state.partition();
    if (a.n_sites != p.n_sites()) {
        throw ValidationError("observable has N=" + std::to_string(a.n_sites) + " but state has N=" +
                              std::to_string(p.n_sites()));
    }
    if (a.sigma.dim() != p.local_dim()) {
        throw ValidationError("observable local dimension " + std::to_string(a.sigma.dim()) +
                              " does not match partition d=" + std::to_string(p.local_dim()));
    }
    double total = 0.0;
    for (const auto &block : state.blocks()) {
        for (std::size_t l = 0; l < p.block_size(); ++l) {
            total += expectation_site(block, l, a.sigma);
        }
    }
    return total;
}

double density_value(double a_value, std::size_t n_sites) {
    if (n_sites < 1) {
        throw ValidationError("density value needs N >= 1");
    }
    return a_value / static_cast<double>(n_sites);
}

double mean_over_average_state(const Partition &partition, const LocalObservable &sigma) {
    if (sigma.dim() != partition.local_dim()) {
        throw ValidationError("observable dimension does not match partition");
    }
    return static_cast<double>(partition.n_sites()) * sigma.trace() / static_cast<double>(partition.local_dim());
}

}  // namespace typlab
