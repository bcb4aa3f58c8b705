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

#include "typlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "typlab/errors.hpp"

namespace typlab {

namespace {

constexpr double kJacobiThreshold = 1e-13;
constexpr int kJacobiMaxSweeps = 100;

}  // namespace

ComplexVector::ComplexVector(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {}

ComplexVector::ComplexVector(std::initializer_list<Complex> amplitudes) : amps_(amplitudes) {}

double ComplexVector::norm_squared() const noexcept {
    double acc = 0.0;
    for (const auto &a : amps_) {
        acc += std::norm(a);
    }
    return acc;
}

double ComplexVector::norm() const noexcept { return std::sqrt(norm_squared()); }

ComplexVector normalize(const ComplexVector &v) {
    double n = v.norm();
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw DegenerateSample();
    }
    std::vector<Complex> out(v.amplitudes().begin(), v.amplitudes().end());
    double inv = 1.0 / n;
    for (auto &a : out) {
        a *= inv;
    }
    return ComplexVector(std::move(out));
}

ComplexVector kron(const ComplexVector &a, const ComplexVector &b) {
    std::vector<Complex> out;
    out.reserve(a.dim() * b.dim());
    for (const auto &x : a.amplitudes()) {
        for (const auto &y : b.amplitudes()) {
            out.push_back(x * y);
        }
    }
    return ComplexVector(std::move(out));
}

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> row_major) : dim_(dim), data_(std::move(row_major)) {
    if (data_.size() != dim_ * dim_) {
        throw ValidationError("matrix data has " + std::to_string(data_.size()) + " entries, expected " +
                              std::to_string(dim_ * dim_));
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) : dim_(rows.size()) {
    data_.reserve(dim_ * dim_);
    for (const auto &row : rows) {
        if (row.size() != dim_) {
            throw ValidationError("matrix is not square");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

Complex ComplexMatrix::trace() const noexcept {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double ComplexMatrix::hermiticity_defect() const noexcept {
    double defect = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = r; c < dim_; ++c) {
            defect = std::max(defect, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        }
    }
    return defect;
}

double ComplexMatrix::max_abs() const noexcept {
    double m = 0.0;
    for (const auto &x : data_) {
        m = std::max(m, std::abs(x));
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

static void require_same_dim(std::size_t a, std::size_t b) {
    if (a != b) {
        throw ValidationError("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a.dim(), b.dim());
    std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
            Complex ark = a(r, k);
            if (ark == 0.0) {
                continue;
            }
            for (std::size_t c = 0; c < n; ++c) {
                out(r, c) += ark * b(k, c);
            }
        }
    }
    return out;
}

ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a.dim(), b.dim());
    std::vector<Complex> out(a.data().begin(), a.data().end());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] += b.data()[i];
    }
    return ComplexMatrix(a.dim(), std::move(out));
}

ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a.dim(), b.dim());
    std::vector<Complex> out(a.data().begin(), a.data().end());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] -= b.data()[i];
    }
    return ComplexMatrix(a.dim(), std::move(out));
}

ComplexMatrix operator*(double s, const ComplexMatrix &a) {
    std::vector<Complex> out(a.data().begin(), a.data().end());
    for (auto &x : out) {
        x *= s;
    }
    return ComplexMatrix(a.dim(), std::move(out));
}

ComplexVector operator*(const ComplexMatrix &a, const ComplexVector &v) {
    require_same_dim(a.dim(), v.dim());
    std::vector<Complex> out(a.dim());
    for (std::size_t r = 0; r < a.dim(); ++r) {
        Complex acc = 0.0;
        for (std::size_t c = 0; c < a.dim(); ++c) {
            acc += a(r, c) * v[c];
        }
        out[r] = acc;
    }
    return ComplexVector(std::move(out));
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    std::size_t na = a.dim();
    std::size_t nb = b.dim();
    ComplexMatrix out(na * nb);
    for (std::size_t ar = 0; ar < na; ++ar) {
        for (std::size_t ac = 0; ac < na; ++ac) {
            Complex x = a(ar, ac);
            for (std::size_t br = 0; br < nb; ++br) {
                for (std::size_t bc = 0; bc < nb; ++bc) {
                    out(ar * nb + br, ac * nb + bc) = x * b(br, bc);
                }
            }
        }
    }
    return out;
}

ComplexMatrix outer(const ComplexVector &v) {
    ComplexMatrix out(v.dim());
    for (std::size_t r = 0; r < v.dim(); ++r) {
        for (std::size_t c = 0; c < v.dim(); ++c) {
            out(r, c) = v[r] * std::conj(v[c]);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// HermitianMatrix / DensityMatrix

HermitianMatrix::HermitianMatrix(ComplexMatrix m) : m_(std::move(m)) {
    double defect = m_.hermiticity_defect();
    if (!(defect <= kValidationTolerance)) {
        throw ValidationError("matrix is not Hermitian (symmetry defect " + std::to_string(defect) + ")");
    }
    std::size_t n = m_.dim();
    for (std::size_t r = 0; r < n; ++r) {
        m_(r, r) = m_(r, r).real();
        for (std::size_t c = r + 1; c < n; ++c) {
            Complex avg = 0.5 * (m_(r, c) + std::conj(m_(c, r)));
            m_(r, c) = avg;
            m_(c, r) = std::conj(avg);
        }
    }
}

HermitianMatrix::HermitianMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : HermitianMatrix(ComplexMatrix(rows)) {}

HermitianMatrix operator-(const HermitianMatrix &a, const HermitianMatrix &b) {
    return HermitianMatrix(a.matrix() - b.matrix());
}

DensityMatrix::DensityMatrix(HermitianMatrix h) : h_(std::move(h)) {
    if (h_.dim() == 0) {
        throw ValidationError("density matrix must have dimension >= 1");
    }
    double tr = h_.trace();
    if (!(std::abs(tr - 1.0) <= kTraceTolerance)) {
        throw ValidationError("density matrix trace " + std::to_string(tr) + " differs from 1");
    }
    auto ev = hermitian_eigenvalues(h_);
    if (ev.front() < kEigenvalueFloor) {
        throw ValidationError("density matrix has negative eigenvalue " + std::to_string(ev.front()));
    }
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
    return DensityMatrix(HermitianMatrix((1.0 / static_cast<double>(dim)) * ComplexMatrix::identity(dim)));
}

DensityMatrix DensityMatrix::pure(const ComplexVector &psi) { return DensityMatrix(HermitianMatrix(outer(psi))); }

HermitianMatrix operator-(const DensityMatrix &a, const DensityMatrix &b) { return a.hermitian() - b.hermitian(); }

// ---------------------------------------------------------------------------
// Spectra

EigenDecomposition hermitian_eigen(const HermitianMatrix &h) {
    const std::size_t n = h.dim();
    ComplexMatrix a = h.matrix();
    ComplexMatrix v = ComplexMatrix::identity(n);

    double frob = 0.0;
    for (const auto &x : a.data()) {
        frob += std::norm(x);
    }
    const double tol = kJacobiThreshold * std::max(1.0, std::sqrt(frob));

    auto max_off = [&] {
        double m = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                m = std::max(m, std::abs(a(p, q)));
            }
        }
        return m;
    };

    int sweep = 0;
    while (max_off() >= tol) {
        if (sweep++ == kJacobiMaxSweeps) {
            throw ConsistencyError("Jacobi eigensolver did not converge in " + std::to_string(kJacobiMaxSweeps) +
                                   " sweeps");
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag < tol * 1e-3) {
                    continue;
                }
                // J = diag(1, conj(phase)) * R(c, s): the phase makes the
                // (p, q) entry real, then a real rotation annihilates it.
                const Complex phase_c = std::conj(apq / mag);
                const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
                const double t =
                    (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const Complex jpp = c;
                const Complex jpq = s;
                const Complex jqp = -s * phase_c;
                const Complex jqq = c * phase_c;

                for (std::size_t k = 0; k < n; ++k) {
                    Complex akp = a(k, p);
                    Complex akq = a(k, q);
                    a(k, p) = akp * jpp + akq * jqp;
                    a(k, q) = akp * jpq + akq * jqq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    Complex apk = a(p, k);
                    Complex aqk = a(q, k);
                    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
                    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                for (std::size_t k = 0; k < n; ++k) {
                    Complex vkp = v(k, p);
                    Complex vkq = v(k, q);
                    v(k, p) = vkp * jpp + vkq * jqp;
                    v(k, q) = vkp * jpq + vkq * jqq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) {
            out.vectors(r, k) = v(r, order[k]);
        }
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const HermitianMatrix &h) { return hermitian_eigen(h).values; }

double trace_norm(const HermitianMatrix &h) {
    double acc = 0.0;
    for (double ev : hermitian_eigenvalues(h)) {
        acc += std::abs(ev);
    }
    return acc;
}

double trace_distance(const DensityMatrix &a, const DensityMatrix &b) { return 0.5 * trace_norm(a - b); }

double operator_norm(const HermitianMatrix &h) {
    double m = 0.0;
    for (double ev : hermitian_eigenvalues(h)) {
        m = std::max(m, std::abs(ev));
    }
    return m;
}

double purity(const DensityMatrix &rho) {
    // Tr rho^2 = sum_ij |rho_ij|^2 for Hermitian rho.
    double acc = 0.0;
    for (const auto &x : rho.hermitian().matrix().data()) {
        acc += std::norm(x);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Partial trace

std::size_t ipow(std::size_t d, std::size_t n) {
    std::size_t out = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (out > (std::size_t{1} << 62) / d) {
            throw ValidationError("dimension " + std::to_string(d) + "^" + std::to_string(n) + " overflows");
        }
        out *= d;
    }
    return out;
}

std::size_t site_count(std::size_t dim, std::size_t local_dim) {
    if (local_dim < 2) {
        throw ValidationError("local dimension must be >= 2");
    }
    std::size_t n = 0;
    std::size_t p = 1;
    while (p < dim) {
        p *= local_dim;
        ++n;
    }
    if (p != dim) {
        throw ValidationError("state dimension " + std::to_string(dim) + " is not a power of " +
                              std::to_string(local_dim));
    }
    return n;
}

DensityMatrix partial_trace_single_site(const ComplexVector &state, std::size_t site, std::size_t local_dim) {
    const std::size_t n = site_count(state.dim(), local_dim);
    if (site >= n) {
        throw IndexError("site " + std::to_string(site) + " out of range for " + std::to_string(n) + " sites");
    }
    const std::size_t d = local_dim;
    const std::size_t low = ipow(d, n - 1 - site);
    const std::size_t high = state.dim() / (low * d);
    const auto amps = state.amplitudes();

    ComplexMatrix rho(d);
    for (std::size_t h = 0; h < high; ++h) {
        const std::size_t base = h * d * low;
        for (std::size_t a = 0; a < d; ++a) {
            for (std::size_t b = a; b < d; ++b) {
                Complex acc = 0.0;
                const Complex *pa = amps.data() + base + a * low;
                const Complex *pb = amps.data() + base + b * low;
                for (std::size_t l = 0; l < low; ++l) {
                    acc += pa[l] * std::conj(pb[l]);
                }
                rho(a, b) += acc;
            }
        }
    }
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < a; ++b) {
            rho(a, b) = std::conj(rho(b, a));
        }
    }
    return DensityMatrix(HermitianMatrix(std::move(rho)));
}

}  // namespace typlab
