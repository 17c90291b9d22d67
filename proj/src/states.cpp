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

#include "eur/states.hpp"

#include <cmath>
#include <sstream>

#include "eur/error.hpp"

namespace eur {

double BellDiagonalCoeffs::operator[](int axis) const {
    switch (axis) {
        case 1:
            return c1;
        case 2:
            return c2;
        case 3:
            return c3;
        default:
            throw ValidationError("axis index must be 1, 2 or 3");
    }
}

std::array<double, 4> BellDiagonalCoeffs::bell_weights() const {
    return {(1 - c1 - c2 - c3) / 4, (1 - c1 + c2 + c3) / 4, (1 + c1 - c2 + c3) / 4, (1 + c1 + c2 - c3) / 4};
}

std::string BellDiagonalCoeffs::physicality_violation() const {
    static constexpr const char* kNames[4] = {"(1 - c1 - c2 - c3)/4", "(1 - c1 + c2 + c3)/4",
                                              "(1 + c1 - c2 + c3)/4", "(1 + c1 + c2 - c3)/4"};
    std::ostringstream os;
    for (int j = 1; j <= 3; ++j) {
        double v = (*this)[j];
        if (!std::isfinite(v) || std::abs(v) > 1.0) {
            os << "|c" << j << "| = " << std::abs(v) << " exceeds 1";
            return os.str();
        }
    }
    auto w = bell_weights();
    for (int i = 0; i < 4; ++i) {
        if (w[i] < -tol::psd) {
            os << "eigenvalue " << kNames[i] << " = " << w[i] << " is negative";
            return os.str();
        }
    }
    return {};
}

ComplexMatrix XState::to_matrix() const {
    ComplexMatrix m(4, 4);
    m(0, 0) = d11;
    m(1, 1) = d22;
    m(2, 2) = d33;
    m(3, 3) = d44;
    m(0, 3) = a14;
    m(3, 0) = std::conj(a14);
    m(1, 2) = a23;
    m(2, 1) = std::conj(a23);
    return m;
}

void XState::validate() const {
    const double total = d11 + d22 + d33 + d44;
    if (std::abs(total - 1.0) > tol::trace) {
        std::ostringstream os;
        os << "unphysical X-state: populations sum to " << total;
        throw NumericError(os.str());
    }
    for (double d : {d11, d22, d33, d44}) {
        if (d < -tol::psd) {
            throw NumericError("unphysical X-state: negative population");
        }
    }
    auto root = [](double a, double b) { return std::sqrt(std::max(0.0, a) * std::max(0.0, b)); };
    if (std::abs(a14) > root(d11, d44) + tol::psd) {
        throw NumericError("unphysical X-state: |a14| exceeds sqrt(d11 d44)");
    }
    if (std::abs(a23) > root(d22, d33) + tol::psd) {
        throw NumericError("unphysical X-state: |a23| exceeds sqrt(d22 d33)");
    }
}

ComplexMatrix bell_diagonal_density(const BellDiagonalCoeffs& c) {
    if (auto why = c.physicality_violation(); !why.empty()) {
        throw NumericError("unphysical Bell-diagonal coefficients: " + why);
    }
    ComplexMatrix rho = ComplexMatrix::identity(4);
    rho += c.c1 * tensor_product(pauli::x(), pauli::x());
    rho += c.c2 * tensor_product(pauli::y(), pauli::y());
    rho += c.c3 * tensor_product(pauli::z(), pauli::z());
    rho *= 0.25;
    return rho;
}

XState as_xstate(const ComplexMatrix& rho) {
    if (rho.rows() != 4 || rho.cols() != 4) {
        throw ValidationError("not a two-qubit state");
    }
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            if (r != c && r + c != 3 && std::abs(rho(r, c)) >= tol::xpattern) {
                std::ostringstream os;
                os << "not an X-state: entry (" << r + 1 << ", " << c + 1 << ") has magnitude "
                   << std::abs(rho(r, c));
                throw NumericError(os.str());
            }
        }
    }
    XState x;
    x.d11 = rho(0, 0).real();
    x.d22 = rho(1, 1).real();
    x.d33 = rho(2, 2).real();
    x.d44 = rho(3, 3).real();
    x.a14 = rho(0, 3);
    x.a23 = rho(1, 2);
    return x;
}

ComplexMatrix reduced_state(const ComplexMatrix& rho, Subsystem keep) { return partial_trace(rho, keep); }

}  // namespace eur
