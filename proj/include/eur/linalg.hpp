// Copyright 2026 The eur Authors
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

namespace eur {

using Complex = std::complex<double>;

/// Tolerances shared by every module.
namespace tol {
inline constexpr double herm = 1e-10;  // Hermiticity of inputs
inline constexpr double trace = 1e-9;  // unit trace of density matrices
inline constexpr double psd = 1e-9;    // smallest admissible negative eigenvalue
inline constexpr double eig = 1e-12;   // Jacobi convergence
inline constexpr double cptp = 1e-12;  // Kraus completeness
inline constexpr double xpattern = 1e-12;
inline constexpr double norm = 1e-12;  // post-selection probability floor
inline constexpr double order = 1e-9;  // bound ordering
}  // namespace tol

enum class Subsystem { A, B };

inline Subsystem other(Subsystem s) { return s == Subsystem::A ? Subsystem::B : Subsystem::A; }

/// Dense complex matrix, row-major. Entries are always finite.
class ComplexMatrix {
   public:
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    /// Row-major nested initializer, e.g. {{0, 1}, {1, 0}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const Complex> diag);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    std::span<const Complex> entries() const { return entries_; }

    ComplexMatrix adjoint() const;
    Complex trace() const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex scale);

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
    friend ComplexMatrix operator*(ComplexMatrix lhs, Complex scale) { return lhs *= scale; }
    friend ComplexMatrix operator*(Complex scale, ComplexMatrix rhs) { return rhs *= scale; }
    friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

    bool operator==(const ComplexMatrix&) const = default;

   private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> entries_;
};

/// Largest entrywise |a - b|; throws on shape mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest |m(i,j) - conj(m(j,i))|.
double max_asymmetry(const ComplexMatrix& m);

namespace pauli {
ComplexMatrix i2();
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
}  // namespace pauli

/// Kronecker product; block (i, j) equals a(i, j) * b.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Reduced state of the kept qubit of a 4x4 two-qubit operator.
ComplexMatrix partial_trace(const ComplexMatrix& rho, Subsystem keep);

/// op * rho * op^dagger.
ComplexMatrix conjugate_sandwich(const ComplexMatrix& op, const ComplexMatrix& rho);

/// Real eigenvalues of a Hermitian matrix, sorted descending.
struct HermitianSpectrum {
    std::vector<double> eigenvalues;

    std::size_t size() const { return eigenvalues.size(); }
    double sum() const;
};

/// Eigenvalues of a Hermitian matrix. 1x1 and 2x2 inputs are solved in closed
/// form, X-structured 4x4 inputs split into their two 2x2 blocks, everything
/// else goes through cyclic Jacobi sweeps.
HermitianSpectrum hermitian_eigenvalues(const ComplexMatrix& m);

/// The Jacobi path alone, for any Hermitian size. Exposed for cross-checks.
HermitianSpectrum jacobi_eigenvalues(const ComplexMatrix& m);

/// True when a 4x4 matrix has no entries above `eps` outside the main and
/// anti-diagonal.
bool has_x_structure(const ComplexMatrix& m, double eps = tol::xpattern);

/// Checks Hermiticity, unit trace and positivity; throws NumericError otherwise.
/// Returns the spectrum computed along the way.
HermitianSpectrum validate_density(const ComplexMatrix& rho);

}  // namespace eur
