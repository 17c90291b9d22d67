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

#include "eur/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "eur/error.hpp"

namespace eur {

namespace {

void require_finite(std::span<const Complex> entries) {
    for (const auto& z : entries) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw NumericError("matrix entry is not finite");
        }
    }
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        std::ostringstream os;
        os << what << ": dimension mismatch (" << a.rows() << "x" << a.cols() << " vs " << b.rows() << "x"
           << b.cols() << ")";
        throw ValidationError(os.str());
    }
}

std::vector<double> sorted_descending(std::vector<double> v) {
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

// Eigenvalues of [[a, b], [conj(b), c]] with a, c real.
std::pair<double, double> hermitian_2x2(double a, double c, Complex b) {
    double mean = 0.5 * (a + c);
    double half_gap = std::hypot(0.5 * (a - c), std::abs(b));
    return {mean + half_gap, mean - half_gap};
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex{0.0, 0.0}) {
    if (rows == 0 || cols == 0) {
        throw ValidationError("matrix dimensions must be positive");
    }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0) {
        throw ValidationError("matrix dimensions must be positive");
    }
    if (entries_.size() != rows * cols) {
        throw ValidationError("entry count does not match rows x cols");
    }
    require_finite(entries_);
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    if (rows_ == 0 || cols_ == 0) {
        throw ValidationError("matrix dimensions must be positive");
    }
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw ValidationError("ragged matrix initializer");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
    require_finite(entries_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
    ComplexMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        m(i, i) = diag[i];
    }
    require_finite(m.entries_);
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) {
        t += (*this)(i, i);
    }
    return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    require_same_shape(*this, rhs, "matrix addition");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] += rhs.entries_[i];
    }
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    require_same_shape(*this, rhs, "matrix subtraction");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] -= rhs.entries_[i];
    }
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
    for (auto& z : entries_) {
        z *= scale;
    }
    require_finite(entries_);
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    if (lhs.cols() != rhs.rows()) {
        throw ValidationError("matrix product: inner dimensions differ");
    }
    ComplexMatrix out(lhs.rows(), rhs.cols());
    for (std::size_t r = 0; r < lhs.rows(); ++r) {
        for (std::size_t k = 0; k < lhs.cols(); ++k) {
            const Complex a = lhs(r, k);
            if (a == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < rhs.cols(); ++c) {
                out(r, c) += a * rhs(k, c);
            }
        }
    }
    return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "max_abs_diff");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return worst;
}

double max_asymmetry(const ComplexMatrix& m) {
    if (!m.is_square()) {
        throw ValidationError("max_asymmetry: matrix is not square");
    }
    double worst = 0.0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = r; c < m.cols(); ++c) {
            worst = std::max(worst, std::abs(m(r, c) - std::conj(m(c, r))));
        }
    }
    return worst;
}

namespace pauli {
ComplexMatrix i2() { return ComplexMatrix::identity(2); }
ComplexMatrix x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix y() { return {{0.0, Complex{0.0, -1.0}}, {Complex{0.0, 1.0}, 0.0}}; }
ComplexMatrix z() { return {{1.0, 0.0}, {0.0, -1.0}}; }
}  // namespace pauli

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar) {
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            for (std::size_t br = 0; br < b.rows(); ++br) {
                for (std::size_t bc = 0; bc < b.cols(); ++bc) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = a(ar, ac) * b(br, bc);
                }
            }
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, Subsystem keep) {
    if (rho.rows() != 4 || rho.cols() != 4) {
        throw ValidationError("not a two-qubit state");
    }
    // Index |a b> = 2a + b, qubit A first.
    ComplexMatrix out(2, 2);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            Complex acc = 0.0;
            for (std::size_t k = 0; k < 2; ++k) {
                acc += keep == Subsystem::A ? rho(2 * i + k, 2 * j + k) : rho(2 * k + i, 2 * k + j);
            }
            out(i, j) = acc;
        }
    }
    return out;
}

ComplexMatrix conjugate_sandwich(const ComplexMatrix& op, const ComplexMatrix& rho) {
    if (!op.is_square() || !rho.is_square() || op.cols() != rho.rows()) {
        throw ValidationError("conjugate_sandwich: dimension mismatch");
    }
    return op * rho * op.adjoint();
}

double HermitianSpectrum::sum() const {
    double s = 0.0;
    for (double v : eigenvalues) {
        s += v;
    }
    return s;
}

HermitianSpectrum jacobi_eigenvalues(const ComplexMatrix& m) {
    if (!m.is_square()) {
        throw ValidationError("eigenvalues of a non-square matrix");
    }
    const std::size_t n = m.rows();
    // H = A + iB is Hermitian iff [[A, -B], [B, A]] is real symmetric; every
    // eigenvalue of H appears twice in the embedding.
    const std::size_t dim = 2 * n;
    std::vector<double> s(dim * dim, 0.0);
    auto at = [&](std::size_t r, std::size_t c) -> double& { return s[r * dim + c]; };
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            const double re = 0.5 * (m(r, c).real() + m(c, r).real());
            const double im = 0.5 * (m(r, c).imag() - m(c, r).imag());
            at(r, c) = re;
            at(r + n, c + n) = re;
            at(r, c + n) = -im;
            at(r + n, c) = im;
        }
    }

    double scale = 0.0;
    for (double v : s) {
        scale = std::max(scale, std::abs(v));
    }
    const double threshold = tol::eig * std::max(1.0, scale);

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < dim; ++p) {
            for (std::size_t q = p + 1; q < dim; ++q) {
                off = std::max(off, std::abs(at(p, q)));
            }
        }
        if (off < threshold * 1e-3) {
            break;
        }
        for (std::size_t p = 0; p < dim; ++p) {
            for (std::size_t q = p + 1; q < dim; ++q) {
                const double apq = at(p, q);
                if (std::abs(apq) < 1e-300) {
                    continue;
                }
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t =
                    (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * c;
                for (std::size_t k = 0; k < dim; ++k) {
                    const double akp = at(k, p);
                    const double akq = at(k, q);
                    at(k, p) = c * akp - sn * akq;
                    at(k, q) = sn * akp + c * akq;
                }
                for (std::size_t k = 0; k < dim; ++k) {
                    const double apk = at(p, k);
                    const double aqk = at(q, k);
                    at(p, k) = c * apk - sn * aqk;
                    at(q, k) = sn * apk + c * aqk;
                }
            }
        }
    }

    std::vector<double> doubled(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        doubled[i] = at(i, i);
    }
    doubled = sorted_descending(std::move(doubled));
    HermitianSpectrum out;
    out.eigenvalues.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.eigenvalues.push_back(0.5 * (doubled[2 * i] + doubled[2 * i + 1]));
    }
    return out;
}

bool has_x_structure(const ComplexMatrix& m, double eps) {
    if (m.rows() != 4 || m.cols() != 4) {
        return false;
    }
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            if (r != c && r + c != 3 && std::abs(m(r, c)) > eps) {
                return false;
            }
        }
    }
    return true;
}

HermitianSpectrum hermitian_eigenvalues(const ComplexMatrix& m) {
    if (!m.is_square()) {
        throw ValidationError("eigenvalues of a non-square matrix");
    }
    const double asym = max_asymmetry(m);
    if (asym > tol::herm) {
        std::ostringstream os;
        os << "matrix is not Hermitian (max asymmetry " << asym << ")";
        throw NumericError(os.str());
    }
    if (m.rows() == 1) {
        return {{m(0, 0).real()}};
    }
    if (m.rows() == 2) {
        auto [hi, lo] = hermitian_2x2(m(0, 0).real(), m(1, 1).real(), m(0, 1));
        return {{hi, lo}};
    }
    if (has_x_structure(m, 0.0)) {
        // Outer block {|00>, |11>}, inner block {|01>, |10>}.
        auto [o1, o2] = hermitian_2x2(m(0, 0).real(), m(3, 3).real(), m(0, 3));
        auto [i1, i2] = hermitian_2x2(m(1, 1).real(), m(2, 2).real(), m(1, 2));
        return {sorted_descending({o1, o2, i1, i2})};
    }
    return jacobi_eigenvalues(m);
}

HermitianSpectrum validate_density(const ComplexMatrix& rho) {
    if (!rho.is_square()) {
        throw NumericError("density matrix is not square");
    }
    HermitianSpectrum spectrum = hermitian_eigenvalues(rho);
    const double tr = rho.trace().real();
    if (std::abs(tr - 1.0) > tol::trace) {
        std::ostringstream os;
        os << "unphysical state: trace " << tr << " differs from 1";
        throw NumericError(os.str());
    }
    const double smallest = spectrum.eigenvalues.back();
    if (smallest < -tol::psd) {
        std::ostringstream os;
        os << "unphysical state: negative eigenvalue " << smallest;
        throw NumericError(os.str());
    }
    return spectrum;
}

}  // namespace eur
