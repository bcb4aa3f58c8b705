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

#include "typlab/reference.hpp"

#include <cmath>
#include <vector>

#include "typlab/errors.hpp"
#include "typlab/sampling.hpp"

namespace typlab::reference {

ComplexMatrix embed_site_operator(const ComplexMatrix &sigma, std::size_t site, std::size_t n_sites) {
    const std::size_t d = sigma.dim();
    ComplexMatrix out{{Complex(1.0)}};
    for (std::size_t s = 0; s < n_sites; ++s) {
        out = kron(out, s == site ? sigma : ComplexMatrix::identity(d));
    }
    return out;
}

ComplexMatrix dense_extensive(const ComplexMatrix &sigma, std::size_t n_sites) {
    ComplexMatrix total(ipow(sigma.dim(), n_sites));
    for (std::size_t s = 0; s < n_sites; ++s) {
        total = total + embed_site_operator(sigma, s, n_sites);
    }
    return total;
}

double dense_expectation(const ComplexVector &psi, const ComplexMatrix &op) {
    const ComplexVector phi = op * psi;
    Complex acc = 0.0;
    for (std::size_t i = 0; i < psi.dim(); ++i) {
        acc += std::conj(psi[i]) * phi[i];
    }
    return acc.real();
}

ComplexVector dense_product(const KSeparableState &state) {
    ComplexVector out{Complex(1.0)};
    for (const auto &b : state.blocks()) {
        out = kron(out, b);
    }
    return out;
}

ComplexMatrix outer_product_partial_trace(const ComplexVector &psi, std::size_t site, std::size_t local_dim) {
    const std::size_t n = site_count(psi.dim(), local_dim);
    const ComplexMatrix full = outer(psi);
    const std::size_t d = local_dim;
    ComplexMatrix rho(d);
    // Enumerate every full index, decode its digits, and accumulate the
    // entries whose non-traced digits agree.
    std::vector<std::size_t> di(n), dj(n);
    for (std::size_t i = 0; i < psi.dim(); ++i) {
        for (std::size_t j = 0; j < psi.dim(); ++j) {
            std::size_t a = i, b = j;
            for (std::size_t s = n; s-- > 0;) {
                di[s] = a % d;
                a /= d;
                dj[s] = b % d;
                b /= d;
            }
            bool match = true;
            for (std::size_t s = 0; s < n; ++s) {
                if (s != site && di[s] != dj[s]) {
                    match = false;
                    break;
                }
            }
            if (match) {
                rho(di[site], dj[site]) += full(i, j);
            }
        }
    }
    return rho;
}

std::array<double, 2> eigenvalues_2x2(const ComplexMatrix &m) {
    if (m.dim() != 2) {
        throw ValidationError("expected a 2x2 matrix");
    }
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const double half_gap = 0.5 * (a - d);
    const double r = std::sqrt(half_gap * half_gap + std::norm(m(0, 1)));
    const double centre = 0.5 * (a + d);
    return {centre - r, centre + r};
}

double trace_of_square(const ComplexMatrix &m) { return (m * m).trace().real(); }

MonteCarloVariance two_pass_statistics(const std::vector<double> &values) {
    const double n = static_cast<double>(values.size());
    double mean = 0.0;
    for (double v : values) {
        mean += v;
    }
    mean /= n;
    double c2 = 0.0;
    double c4 = 0.0;
    for (double v : values) {
        const double d2 = (v - mean) * (v - mean);
        c2 += d2;
        c4 += d2 * d2;
    }
    const double var = c2 / (n - 1.0);
    const double m4 = c4 / n;
    const double se2 = (m4 - var * var * (n - 3.0) / (n - 1.0)) / n;
    return MonteCarloVariance{mean, std::sqrt(var / n), var, se2 > 0.0 ? std::sqrt(se2) : 0.0};
}

MonteCarloVariance brute_force_haar_variance(const Partition &partition, const LocalObservable &sigma,
                                             std::uint64_t samples, std::uint64_t master_seed) {
    if (ipow(partition.local_dim(), partition.n_sites()) > 4096) {
        throw ValidationError("brute-force oracle limited to d^N <= 4096");
    }
    const ComplexMatrix a_n = dense_extensive(sigma.sigma().matrix(), partition.n_sites());
    std::vector<double> values;
    values.reserve(samples);
    for (std::uint64_t i = 0; i < samples; ++i) {
        values.push_back(dense_expectation(dense_product(k_separable_state(partition, i, master_seed)), a_n));
    }
    return two_pass_statistics(values);
}

}  // namespace typlab::reference
