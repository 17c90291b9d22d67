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
#include <string>

#include "eur/linalg.hpp"

namespace eur {

/// Correlation coefficients <sigma_j (x) sigma_j> of a Bell-diagonal state.
struct BellDiagonalCoeffs {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;

    double operator[](int axis) const;  // axis in {1, 2, 3}

    /// The four Bell-basis weights (1 - c1 - c2 - c3)/4, (1 - c1 + c2 + c3)/4,
    /// (1 + c1 - c2 + c3)/4, (1 + c1 + c2 - c3)/4, in that order.
    std::array<double, 4> bell_weights() const;

    /// Empty when physical, otherwise a description of the first violation.
    std::string physicality_violation() const;
    bool is_physical() const { return physicality_violation().empty(); }

    bool operator==(const BellDiagonalCoeffs&) const = default;
};

/// The seven independent entries of a two-qubit X-state in the basis
/// |00>, |01>, |10>, |11> (qubit A first).
struct XState {
    double d11 = 0.25;
    double d22 = 0.25;
    double d33 = 0.25;
    double d44 = 0.25;
    Complex a14 = 0.0;
    Complex a23 = 0.0;

    ComplexMatrix to_matrix() const;
    /// Throws NumericError when populations or block positivity fail.
    void validate() const;
};

/// (I (x) I + sum_j c_j sigma_j (x) sigma_j) / 4.
ComplexMatrix bell_diagonal_density(const BellDiagonalCoeffs& c);

/// Extracts the X entries; throws NumericError naming the first entry outside
/// the X pattern whose magnitude reaches 1e-12.
XState as_xstate(const ComplexMatrix& rho);

/// Reduced state of one qubit.
ComplexMatrix reduced_state(const ComplexMatrix& rho, Subsystem keep);

}  // namespace eur
