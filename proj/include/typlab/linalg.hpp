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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace typlab {

using Complex = std::complex<double>;

/// Amplitudes of a (not necessarily normalized) vector in C^D.
class ComplexVector {
  public:
    ComplexVector() = default;
    explicit ComplexVector(std::vector<Complex> amplitudes);
    ComplexVector(std::initializer_list<Complex> amplitudes);

    std::size_t dim() const noexcept { return amps_.size(); }
    std::span<const Complex> amplitudes() const noexcept { return amps_; }
    const Complex &operator[](std::size_t i) const { return amps_[i]; }

    double norm_squared() const noexcept;
    double norm() const noexcept;

    bool operator==(const ComplexVector &) const = default;

  private:
    std::vector<Complex> amps_;
};

/// Returns v / |v|. Throws DegenerateSample for the zero vector.
ComplexVector normalize(const ComplexVector &v);

/// Tensor product a ⊗ b, with `a` on the most significant digits.
ComplexVector kron(const ComplexVector &a, const ComplexVector &b);

/// Dense row-major square matrix.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim);
    ComplexMatrix(std::size_t dim, std::vector<Complex> row_major);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }
    Complex &operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
    std::span<const Complex> data() const noexcept { return data_; }

    Complex trace() const noexcept;
    /// max_ij |A_ij - conj(A_ji)|
    double hermiticity_defect() const noexcept;
    double max_abs() const noexcept;
    ComplexMatrix adjoint() const;

    bool operator==(const ComplexMatrix &) const = default;

  private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator*(double s, const ComplexMatrix &a);
ComplexVector operator*(const ComplexMatrix &a, const ComplexVector &v);
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
/// |v><v|
ComplexMatrix outer(const ComplexVector &v);

/// Hermitian matrix. Construction rejects inputs whose symmetry defect exceeds
/// 1e-8 and then symmetrizes, so the stored entries are exactly Hermitian.
class HermitianMatrix {
  public:
    static constexpr double kValidationTolerance = 1e-8;

    HermitianMatrix() = default;
    explicit HermitianMatrix(ComplexMatrix m);
    HermitianMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    std::size_t dim() const noexcept { return m_.dim(); }
    const Complex &operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
    const ComplexMatrix &matrix() const noexcept { return m_; }
    double trace() const noexcept { return m_.trace().real(); }

    bool operator==(const HermitianMatrix &) const = default;

  private:
    ComplexMatrix m_;
};

HermitianMatrix operator-(const HermitianMatrix &a, const HermitianMatrix &b);

/// Hermitian, unit trace (1e-10), eigenvalues >= -1e-10.
class DensityMatrix {
  public:
    static constexpr double kTraceTolerance = 1e-10;
    static constexpr double kEigenvalueFloor = -1e-10;

    explicit DensityMatrix(HermitianMatrix h);

    static DensityMatrix maximally_mixed(std::size_t dim);
    static DensityMatrix pure(const ComplexVector &psi);

    std::size_t dim() const noexcept { return h_.dim(); }
    const Complex &operator()(std::size_t r, std::size_t c) const { return h_(r, c); }
    const HermitianMatrix &hermitian() const noexcept { return h_; }

  private:
    HermitianMatrix h_;
};

HermitianMatrix operator-(const DensityMatrix &a, const DensityMatrix &b);

/// Eigenvalues ascending; column k of `vectors` is the eigenvector for
/// values[k].
struct EigenDecomposition {
    std::vector<double> values;
    ComplexMatrix vectors;
};

/// Cyclic complex Jacobi. Sweeps until every off-diagonal magnitude is below
/// 1e-13 (relative to max(1, ||H||_F)); at most 100 sweeps.
EigenDecomposition hermitian_eigen(const HermitianMatrix &h);
std::vector<double> hermitian_eigenvalues(const HermitianMatrix &h);

/// Sum of |eigenvalues| (unhalved).
double trace_norm(const HermitianMatrix &h);
/// Half the trace norm of the difference; the trace distance.
double trace_distance(const DensityMatrix &a, const DensityMatrix &b);
double operator_norm(const HermitianMatrix &h);
/// Tr rho^2
double purity(const DensityMatrix &rho);

/// Returns n with d^n == dim, or throws ValidationError.
std::size_t site_count(std::size_t dim, std::size_t local_dim);
/// d^n, throws on overflow past 2^62.
std::size_t ipow(std::size_t d, std::size_t n);

/// Reduced state of one site. Site 0 is the most significant base-d digit of
/// the amplitude index.
DensityMatrix partial_trace_single_site(const ComplexVector &state, std::size_t site, std::size_t local_dim);

}  // namespace typlab
