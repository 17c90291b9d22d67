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

#include <array>
#include <cmath>
#include <random>

#include "eur/linalg.hpp"
#include "eur/states.hpp"

namespace eur::test {

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20261017);
    return gen;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

/// Uniform over the physical tetrahedron (rejection sampling in the cube).
inline BellDiagonalCoeffs random_coeffs() {
    while (true) {
        BellDiagonalCoeffs c{uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
        if (c.is_physical()) {
            return c;
        }
    }
}

/// Random physical X-state with complex coherences.
inline XState random_xstate() {
    std::array<double, 4> w{};
    double total = 0.0;
    for (auto& v : w) {
        v = -std::log(uniform(1e-12, 1.0));
        total += v;
    }
    for (auto& v : w) {
        v /= total;
    }
    XState x{w[0], w[1], w[2], w[3]};
    x.a14 = std::polar(uniform(0, 1) * std::sqrt(w[0] * w[3]), uniform(0, 2 * M_PI));
    x.a23 = std::polar(uniform(0, 1) * std::sqrt(w[1] * w[2]), uniform(0, 2 * M_PI));
    return x;
}

inline ComplexMatrix random_hermitian(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        m(r, r) = uniform(-1, 1);
        for (std::size_t c = r + 1; c < n; ++c) {
            m(r, c) = Complex{uniform(-1, 1), uniform(-1, 1)};
            m(c, r) = std::conj(m(r, c));
        }
    }
    return m;
}

/// Random two-qubit density matrix (G G^dagger / tr), generally not X-shaped.
inline ComplexMatrix random_density() {
    ComplexMatrix g(4, 4);
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            g(r, c) = Complex{uniform(-1, 1), uniform(-1, 1)};
        }
    }
    ComplexMatrix rho = g * g.adjoint();
    rho *= 1.0 / rho.trace().real();
    return rho;
}

/// -sum p log2 p in long double, independent of the library's entropy code.
template <typename Range>
double oracle_entropy(const Range& probs) {
    long double h = 0.0L;
    for (double p : probs) {
        if (p > 0.0) {
            h -= static_cast<long double>(p) * std::log2(static_cast<long double>(p));
        }
    }
    return static_cast<double>(h);
}

inline double oracle_h2(double x) { return oracle_entropy(std::array<double, 2>{x, 1.0 - x}); }

/// Explicit Kraus sum with index loops: sum_i (E_i (x) I) rho (E_i (x) I)^dagger.
inline ComplexMatrix oracle_kraus_on_a(const std::array<std::array<Complex, 4>, 2>& kraus, const ComplexMatrix& rho) {
    ComplexMatrix out(4, 4);
    for (const auto& e : kraus) {
        // e = [[e0, e1], [e2, e3]]
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                for (int a2 = 0; a2 < 2; ++a2)
                    for (int b2 = 0; b2 < 2; ++b2) {
                        Complex acc = 0.0;
                        for (int x = 0; x < 2; ++x)
                            for (int y = 0; y < 2; ++y) {
                                acc += e[static_cast<std::size_t>(2 * a + x)] * rho(2 * x + b, 2 * y + b2) *
                                       std::conj(e[static_cast<std::size_t>(2 * a2 + y)]);
                            }
                        out(2 * a + b, 2 * a2 + b2) += acc;
                    }
    }
    return out;
}

}  // namespace eur::test
