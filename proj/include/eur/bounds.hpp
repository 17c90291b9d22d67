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

#include <optional>

#include "eur/linalg.hpp"
#include "eur/measures.hpp"
#include "eur/states.hpp"

namespace eur {

/// max_{i,j} |<b1_i|b2_j>|^2 for rank-1 projective bases.
double complementarity_c(const ProjectiveBasis& b1, const ProjectiveBasis& b2);

/// S(P|memory) + S(Q|memory).
double uncertainty_lhs(const ComplexMatrix& rho, const ProjectiveBasis& b1, const ProjectiveBasis& b2,
                       Subsystem measured = Subsystem::A, Subsystem memory = Subsystem::B);

/// log2(1/c) + S(measured|memory).
double berta_bound(const ComplexMatrix& rho, double c, Subsystem memory = Subsystem::B);

/// Berta + max{0, D - J}, both taken with the measurement on `measured`.
double pati_bound(const ComplexMatrix& rho, double c, Subsystem measured = Subsystem::A);

/// Berta + max{0, I(A:B) - I(P:memory) - I(Q:memory)}.
double adabi_bound(const ComplexMatrix& rho, double c, const ProjectiveBasis& b1, const ProjectiveBasis& b2,
                   Subsystem measured = Subsystem::A, Subsystem memory = Subsystem::B);

inline double tightness(double u_lhs, double bound) { return u_lhs - bound; }

/// c_i == -c_j c_k within 1e-12; {i, j, k} must be {1, 2, 3}.
bool spmc_satisfied(const BellDiagonalCoeffs& c, int i, int j, int k);

/// Everything reported for one sweep point.
struct BoundReport {
    double u_lhs = 0.0;
    double berta = 0.0;
    double pati = 0.0;
    double adabi = 0.0;
    double tightness_berta = 0.0;
    double tightness_pati = 0.0;
    double tightness_adabi = 0.0;
    double discord = 0.0;
    double s_min_cond = 0.0;
    double complementarity_c = 1.0;
};

/// Computes every field with one measurement optimization. Defaults to
/// sigma_x / sigma_z on qubit A with memory B.
BoundReport bound_report(const ComplexMatrix& rho, const ProjectiveBasis& b1, const ProjectiveBasis& b2,
                         Subsystem measured = Subsystem::A);
BoundReport bound_report(const ComplexMatrix& rho);

/// A closed-form expression next to the pipeline value it should reproduce.
struct CrossCheck {
    std::optional<double> closed;  // empty when the expression is undefined
    double pipeline = 0.0;

    std::optional<double> gap() const {
        if (!closed) {
            return std::nullopt;
        }
        return *closed - pipeline;
    }
};

/// The arctanh amplitude-damping uncertainty (arctanh form, base-2 scaled)
/// against the sigma_x / sigma_z pipeline.
CrossCheck ad_closed_form_u(const BellDiagonalCoeffs& c, double d);

struct BpfCrossChecks {
    CrossCheck u;
    CrossCheck bound;
};

/// The arctanh bit-phase-flip uncertainty and zeta-form Berta bound against the pipeline.
BpfCrossChecks bpf_closed_forms(const BellDiagonalCoeffs& c, double p);

/// Closed-form amplitude-damping eigenvalues of the evolved state (ascending order
/// is not guaranteed).
std::array<double, 4> ad_closed_eigenvalues(const BellDiagonalCoeffs& c, double d);

/// Closed-form bit-phase-flip eigenvalues of the evolved state.
std::array<double, 4> bpf_closed_eigenvalues(const BellDiagonalCoeffs& c, double p);

}  // namespace eur
