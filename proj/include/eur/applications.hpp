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
#include <string>
#include <vector>

#include "eur/channels.hpp"
#include "eur/linalg.hpp"
#include "eur/measures.hpp"
#include "eur/states.hpp"

namespace eur {

struct WitnessResult {
    double u_value = 0.0;
    double threshold = 1.0;  // log2(1/c)
    bool entangled_witnessed = false;
};

/// Entropic witness: entangled when S(P|B) + S(Q|B) < log2(1/c) - 1e-9.
WitnessResult witness_verdict(const ComplexMatrix& rho, const ProjectiveBasis& b1, const ProjectiveBasis& b2,
                              Subsystem measured = Subsystem::A, Subsystem memory = Subsystem::B);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    bool lo_closed = true;
    bool hi_closed = true;

    std::string describe() const;
};

struct ThresholdResult {
    std::string parameter_name;  // "d" or "p"
    double critical_value = 0.0;
    double steering_strength_s = 0.0;
    std::vector<Interval> window;  // parameters where the state is witnessed

    std::string window_description() const;
};

/// sigma_x / sigma_z uncertainty of the Bell-diagonal state after the noise
/// channel at `param` followed by a weak measurement of strength s on qubit A.
double witnessed_uncertainty(ChannelKind family, const BellDiagonalCoeffs& coeffs, double param, double s);

/// Noise level where the witness stops firing, found by bracketing on a grid
/// and bisecting to 1e-7 or better. The BPF search runs on [0, 1/2] and the
/// window is mirrored about 1/2. Throws NumericError("no threshold in range")
/// when the curve never crosses log2(1/c).
ThresholdResult witness_threshold(ChannelKind family, const BellDiagonalCoeffs& coeffs, double s = 0.0);

/// Mutual information of the state, checked against S(rho_A) - U_b + 1 with
/// c = 1/2; throws NumericError if the two disagree by more than 1e-10.
double channel_capacity(const ComplexMatrix& rho);

/// S(rho_A) - (1 + S(A|B)) + 1.
double capacity_bound_form(const ComplexMatrix& rho);

struct CapacitySchedule {
    double start = 0.0;
    double stop = 1.0;
    int points = 101;
    /// When set (AD only) the grid runs over time t with d = 1 - exp(-lambda t).
    std::optional<double> rate_lambda;
};

struct CapacityPoint {
    double parameter = 0.0;  // t when timed, otherwise d or p
    double channel_param = 0.0;
    double capacity = 0.0;
    double closed_form = 0.0;  // eigenvalue expression for the same point
};

std::vector<CapacityPoint> capacity_curves(ChannelKind family, const BellDiagonalCoeffs& coeffs,
                                           const CapacitySchedule& schedule);

}  // namespace eur
