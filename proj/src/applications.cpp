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

#include "eur/applications.hpp"

#include <cmath>
#include <sstream>

#include "eur/bounds.hpp"
#include "eur/error.hpp"

namespace eur {

namespace {

constexpr int kScanPoints = 400;
constexpr double kBisectTol = 1e-10;
constexpr double kBracketStep = 1e-4;

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

std::vector<double> linear_grid(double start, double stop, int points) {
    if (points < 2) {
        throw ValidationError("a grid needs at least 2 points");
    }
    std::vector<double> out(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        out[static_cast<std::size_t>(i)] = i == points - 1 ? stop : start + (stop - start) * i / (points - 1);
    }
    return out;
}

}  // namespace

WitnessResult witness_verdict(const ComplexMatrix& rho, const ProjectiveBasis& b1, const ProjectiveBasis& b2,
                              Subsystem measured, Subsystem memory) {
    WitnessResult out;
    out.u_value = uncertainty_lhs(rho, b1, b2, measured, memory);
    out.threshold = std::log2(1.0 / complementarity_c(b1, b2));
    out.entangled_witnessed = out.u_value < out.threshold - tol::order;
    return out;
}

std::string Interval::describe() const {
    std::ostringstream os;
    os.precision(10);
    os << (lo_closed ? '[' : '(') << lo << ", " << hi << (hi_closed ? ']' : ')');
    return os.str();
}

std::string ThresholdResult::window_description() const {
    std::string out;
    for (std::size_t i = 0; i < window.size(); ++i) {
        if (i > 0) {
            out += " U ";
        }
        out += window[i].describe();
    }
    return out;
}

double witnessed_uncertainty(ChannelKind family, const BellDiagonalCoeffs& coeffs, double param, double s) {
    ComplexMatrix rho = apply_one_sided(make_channel(family, param), bell_diagonal_density(coeffs));
    if (s != 0.0) {
        rho = apply_steering(weak_op(s), rho);
    }
    return uncertainty_lhs(rho, ProjectiveBasis::pauli_x(), ProjectiveBasis::pauli_z());
}

ThresholdResult witness_threshold(ChannelKind family, const BellDiagonalCoeffs& coeffs, double s) {
    if (family == ChannelKind::Custom) {
        throw ValidationError("witness threshold needs the AD or BPF family");
    }
    weak_op(s);  // validates s
    const double threshold = 1.0;  // log2(1/c), c = 1/2 for sigma_x / sigma_z
    auto excess = [&](double x) { return witnessed_uncertainty(family, coeffs, x, s) - threshold; };

    const double range_hi = family == ChannelKind::AD ? 1.0 : 0.5;
    const auto scan = linear_grid(0.0, range_hi, kScanPoints + 1);
    if (excess(scan.front()) >= -tol::order) {
        throw NumericError("no threshold in range: state is not witnessed at zero noise");
    }
    std::optional<std::pair<double, double>> bracket;
    for (std::size_t i = 0; i + 1 < scan.size(); ++i) {
        if (excess(scan[i + 1]) >= -tol::order) {
            bracket = {scan[i], scan[i + 1]};
            break;
        }
    }
    if (!bracket) {
        throw NumericError("no threshold in range: state stays witnessed");
    }
    auto [lo, hi] = *bracket;
    while (hi - lo > kBisectTol) {
        const double mid = 0.5 * (lo + hi);
        if (excess(mid) < -tol::order) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const double critical = 0.5 * (lo + hi);

    const double below = std::max(0.0, critical - kBracketStep);
    const double above = std::min(range_hi, critical + kBracketStep);
    if (!(excess(below) < 0.0 && excess(above) >= -tol::order)) {
        throw NumericError("threshold bracketing check failed");
    }

    ThresholdResult out;
    out.parameter_name = family == ChannelKind::AD ? "d" : "p";
    out.critical_value = critical;
    out.steering_strength_s = s;
    out.window.push_back({0.0, critical, true, false});
    if (family == ChannelKind::BPF) {
        out.window.push_back({1.0 - critical, 1.0, false, true});
    }
    return out;
}

double capacity_bound_form(const ComplexMatrix& rho) {
    const double berta = 1.0 + quantum_conditional_entropy(rho, Subsystem::B);
    return von_neumann_entropy(partial_trace(rho, Subsystem::A)) - berta + 1.0;
}

double channel_capacity(const ComplexMatrix& rho) {
    const double mi = mutual_information(rho);
    const double bound_form = capacity_bound_form(rho);
    if (std::abs(mi - bound_form) > 1e-10) {
        std::ostringstream os;
        os << "capacity forms disagree: " << mi << " vs " << bound_form;
        throw NumericError(os.str());
    }
    return mi;
}

std::vector<CapacityPoint> capacity_curves(ChannelKind family, const BellDiagonalCoeffs& coeffs,
                                           const CapacitySchedule& schedule) {
    if (family == ChannelKind::Custom) {
        throw ValidationError("capacity curves need the AD or BPF family");
    }
    if (schedule.rate_lambda && family != ChannelKind::AD) {
        throw ValidationError("a decay rate only applies to the AD channel");
    }
    const auto initial = bell_diagonal_density(coeffs);
    std::vector<CapacityPoint> out;
    for (double x : linear_grid(schedule.start, schedule.stop, schedule.points)) {
        CapacityPoint pt;
        pt.parameter = x;
        pt.channel_param = schedule.rate_lambda ? d_of_t(*schedule.rate_lambda, x) : x;
        const auto rho = apply_one_sided(make_channel(family, pt.channel_param), initial);
        pt.capacity = channel_capacity(rho);

        double closed = 0.0;
        if (family == ChannelKind::AD) {
            const double d = pt.channel_param;
            for (double l : ad_closed_eigenvalues(coeffs, d)) {
                closed += xlog2x(l);
            }
            closed -= xlog2x((1.0 - d) / 2.0) + xlog2x((1.0 + d) / 2.0);
            closed += 1.0;
        } else {
            for (double l : bpf_closed_eigenvalues(coeffs, pt.channel_param)) {
                closed += xlog2x(l);
            }
            closed += 2.0;
        }
        pt.closed_form = closed;
        out.push_back(pt);
    }
    return out;
}

}  // namespace eur
