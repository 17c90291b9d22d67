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
#include <span>
#include <string>

#include "eur/linalg.hpp"
#include "eur/states.hpp"

namespace eur {

/// Measurement direction on the Bloch sphere, theta in [0, pi], phi in [0, 2 pi).
struct BlochDirection {
    double theta = 0.0;
    double phi = 0.0;
};

/// Rank-1 projective measurement on one qubit.
class ProjectiveBasis {
   public:
    /// Throws ValidationError unless both are Hermitian idempotents summing to I.
    ProjectiveBasis(ComplexMatrix p0, ComplexMatrix p1, std::string label);

    static ProjectiveBasis pauli_x();
    static ProjectiveBasis pauli_y();
    static ProjectiveBasis pauli_z();
    static ProjectiveBasis along(BlochDirection dir);

    const std::array<ComplexMatrix, 2>& projectors() const { return projectors_; }
    const std::string& label() const { return label_; }

   private:
    std::array<ComplexMatrix, 2> projectors_;
    std::string label_;
};

/// -sum p_i log2 p_i, with 0 log 0 = 0. Entries in [-1e-9, 0) are treated as 0.
double shannon_entropy(std::span<const double> p);

/// Binary entropy h(x) in bits.
double binary_entropy(double x);

double von_neumann_entropy(const ComplexMatrix& rho);

/// sum_x (P_x (x) I) rho (P_x (x) I) with the projectors on `side`.
ComplexMatrix post_measurement_state(const ComplexMatrix& rho, const ProjectiveBasis& basis, Subsystem side);

/// S(K|M) = S(rho_KM) - S(rho_M) after measuring `measured` in `basis`.
double conditional_entropy_after_measurement(const ComplexMatrix& rho, const ProjectiveBasis& basis,
                                             Subsystem measured = Subsystem::A, Subsystem memory = Subsystem::B);

/// S(rho) - S(rho_conditioning). Negative values signal entanglement.
double quantum_conditional_entropy(const ComplexMatrix& rho, Subsystem conditioning = Subsystem::B);

double mutual_information(const ComplexMatrix& rho);

/// S(rho_memory) - sum_i p_i S(rho_memory^i); branches with p_i < 1e-12 are dropped.
double holevo_quantity(const ComplexMatrix& rho, const ProjectiveBasis& basis, Subsystem measured = Subsystem::A,
                       Subsystem memory = Subsystem::B);

struct MeasurementOptimum {
    BlochDirection direction;
    /// min over projective measurements of sum_i p_i S(rho_unmeasured^i).
    double average_entropy = 0.0;
};

/// Grid search (1 degree in theta and phi) followed by coordinate-wise
/// golden-section refinement. Deterministic: ties resolve to the smallest
/// theta, then the smallest phi.
MeasurementOptimum optimize_measurement(const ComplexMatrix& rho, Subsystem measured = Subsystem::A);

/// Average post-measurement entropy of the unmeasured qubit for one direction.
double average_branch_entropy(const ComplexMatrix& rho, Subsystem measured, BlochDirection dir);

double min_conditional_entropy_over_measurements(const ComplexMatrix& rho, Subsystem measured = Subsystem::A);

double classical_correlation(const ComplexMatrix& rho, Subsystem measured = Subsystem::A);

double quantum_discord(const ComplexMatrix& rho, Subsystem measured = Subsystem::A);

/// Correlation quantities that share one measurement optimization.
struct Correlations {
    double mutual_information = 0.0;
    double classical_correlation = 0.0;
    double discord = 0.0;
    double min_conditional_entropy = 0.0;
};

Correlations correlations(const ComplexMatrix& rho, Subsystem measured = Subsystem::A);

/// Closed-form X-state discord with the measurement on qubit B:
/// S(rho_B) - S(rho_AB) + min{P1, P2}, P1 = h(Gamma),
/// P2 = -sum_i rho_ii log2 rho_ii - h(rho_11 + rho_33).
double discord_xstate_closed(const XState& x);

}  // namespace eur
