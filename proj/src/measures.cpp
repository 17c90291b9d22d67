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

#include "eur/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "eur/error.hpp"

namespace eur {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDegree = kPi / 180.0;

double clamp_probability(double v) { return std::clamp(v, 0.0, 1.0); }

double entropy_of(const HermitianSpectrum& spectrum) {
    std::vector<double> p(spectrum.eigenvalues);
    for (auto& v : p) {
        v = clamp_probability(v);
    }
    return shannon_entropy(p);
}

bool is_projector(const ComplexMatrix& p) {
    return p.rows() == 2 && p.cols() == 2 && max_asymmetry(p) <= tol::herm && max_abs_diff(p * p, p) <= tol::herm;
}

ComplexMatrix lift(const ComplexMatrix& op, Subsystem side) {
    return side == Subsystem::A ? tensor_product(op, pauli::i2()) : tensor_product(pauli::i2(), op);
}

void require_complementary(Subsystem measured, Subsystem memory) {
    if (measured == memory) {
        throw ValidationError("measured and memory qubits must differ");
    }
}

// Unit vector (cos(theta/2), e^{i phi} sin(theta/2)).
std::array<Complex, 2> bloch_vector(BlochDirection dir) {
    return {Complex{std::cos(0.5 * dir.theta), 0.0}, std::polar(std::sin(0.5 * dir.theta), dir.phi)};
}

// Flat view of a validated 4x4 state used by the optimizer's inner loop.
struct PackedState {
    std::array<Complex, 16> m;
    Subsystem measured;
    // Reduced state of the unmeasured qubit.
    double r00, r11;
    Complex r01;

    PackedState(const ComplexMatrix& rho, Subsystem side) : measured(side) {
        for (std::size_t i = 0; i < 16; ++i) {
            m[i] = rho.entries()[i];
        }
        auto reduced = partial_trace(rho, other(side));
        r00 = reduced(0, 0).real();
        r11 = reduced(1, 1).real();
        r01 = reduced(0, 1);
    }

    Complex at(int r, int c) const { return m[static_cast<std::size_t>(4 * r + c)]; }

    // Entry (x, y) of the measured qubit's block (u, w): index of |a b>.
    Complex element(int u, int x, int w, int y) const {
        // u, w: measured-qubit indices; x, y: unmeasured-qubit indices.
        return measured == Subsystem::A ? at(2 * u + x, 2 * w + y) : at(2 * x + u, 2 * y + w);
    }
};

// p * h(eigenvalues of sigma / p) for an unnormalized 2x2 Hermitian sigma.
double branch_term(double s00, double s11, Complex s01) {
    const double p = s00 + s11;
    if (p < tol::norm) {
        return 0.0;
    }
    const double r = std::min(1.0, std::hypot(s00 - s11, 2.0 * std::abs(s01)) / p);
    return p * binary_entropy(0.5 * (1.0 + r));
}

double objective(const PackedState& s, BlochDirection dir) {
    const auto v = bloch_vector(dir);
    // sigma_xy = sum_{u,w} conj(v_u) v_w rho[(u,x),(w,y)]
    Complex s00 = 0.0, s11 = 0.0, s01 = 0.0;
    for (int u = 0; u < 2; ++u) {
        for (int w = 0; w < 2; ++w) {
            const Complex weight = std::conj(v[static_cast<std::size_t>(u)]) * v[static_cast<std::size_t>(w)];
            s00 += weight * s.element(u, 0, w, 0);
            s11 += weight * s.element(u, 1, w, 1);
            s01 += weight * s.element(u, 0, w, 1);
        }
    }
    const double a = s00.real();
    const double b = s11.real();
    return branch_term(a, b, s01) + branch_term(s.r00 - a, s.r11 - b, s.r01 - s01);
}

template <typename F>
double golden_section_min(F&& f, double lo, double hi, double tol_x) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = f(c);
    double fd = f(d);
    while (hi - lo > tol_x) {
        if (fc <= fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = f(d);
        }
    }
    return 0.5 * (lo + hi);
}

double wrap_phi(double phi) {
    phi = std::fmod(phi, 2.0 * kPi);
    return phi < 0.0 ? phi + 2.0 * kPi : phi;
}

}  // namespace

ProjectiveBasis::ProjectiveBasis(ComplexMatrix p0, ComplexMatrix p1, std::string label)
    : projectors_{std::move(p0), std::move(p1)}, label_(std::move(label)) {
    for (const auto& p : projectors_) {
        if (!is_projector(p)) {
            throw ValidationError("basis element is not a 2x2 Hermitian projector");
        }
    }
    if (max_abs_diff(projectors_[0] + projectors_[1], pauli::i2()) > tol::cptp) {
        throw ValidationError("basis projectors do not sum to the identity");
    }
}

ProjectiveBasis ProjectiveBasis::pauli_x() {
    return {ComplexMatrix{{0.5, 0.5}, {0.5, 0.5}}, ComplexMatrix{{0.5, -0.5}, {-0.5, 0.5}}, "sigma_x"};
}

ProjectiveBasis ProjectiveBasis::pauli_y() {
    const Complex i{0.0, 1.0};
    return {ComplexMatrix{{0.5, -0.5 * i}, {0.5 * i, 0.5}}, ComplexMatrix{{0.5, 0.5 * i}, {-0.5 * i, 0.5}},
            "sigma_y"};
}

ProjectiveBasis ProjectiveBasis::pauli_z() {
    return {ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}}, ComplexMatrix{{0.0, 0.0}, {0.0, 1.0}}, "sigma_z"};
}

ProjectiveBasis ProjectiveBasis::along(BlochDirection dir) {
    const auto v = bloch_vector(dir);
    ComplexMatrix p0(2, 2);
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            p0(r, c) = v[r] * std::conj(v[c]);
        }
    }
    ComplexMatrix p1 = pauli::i2() - p0;
    std::ostringstream label;
    label << "bloch(" << dir.theta << "," << dir.phi << ")";
    return {std::move(p0), std::move(p1), label.str()};
}

double binary_entropy(double x) {
    x = clamp_probability(x);
    double h = 0.0;
    if (x > 0.0) {
        h -= x * std::log2(x);
    }
    if (x < 1.0) {
        h -= (1.0 - x) * std::log2(1.0 - x);
    }
    return h;
}

double shannon_entropy(std::span<const double> p) {
    double total = 0.0;
    double h = 0.0;
    for (double v : p) {
        if (!std::isfinite(v) || v < -tol::psd) {
            std::ostringstream os;
            os << "negative probability " << v;
            throw NumericError(os.str());
        }
        total += v;
        if (v > 0.0) {
            h -= v * std::log2(v);
        }
    }
    if (std::abs(total - 1.0) > tol::trace) {
        std::ostringstream os;
        os << "probabilities sum to " << total;
        throw NumericError(os.str());
    }
    return h;
}

double von_neumann_entropy(const ComplexMatrix& rho) { return entropy_of(validate_density(rho)); }

ComplexMatrix post_measurement_state(const ComplexMatrix& rho, const ProjectiveBasis& basis, Subsystem side) {
    if (rho.rows() != 4 || rho.cols() != 4) {
        throw ValidationError("not a two-qubit state");
    }
    ComplexMatrix out(4, 4);
    for (const auto& p : basis.projectors()) {
        const auto lifted = lift(p, side);
        out += lifted * rho * lifted;
    }
    return out;
}

double conditional_entropy_after_measurement(const ComplexMatrix& rho, const ProjectiveBasis& basis,
                                             Subsystem measured, Subsystem memory) {
    require_complementary(measured, memory);
    validate_density(rho);
    return von_neumann_entropy(post_measurement_state(rho, basis, measured)) -
           von_neumann_entropy(partial_trace(rho, memory));
}

double quantum_conditional_entropy(const ComplexMatrix& rho, Subsystem conditioning) {
    return von_neumann_entropy(rho) - von_neumann_entropy(partial_trace(rho, conditioning));
}

double mutual_information(const ComplexMatrix& rho) {
    return von_neumann_entropy(partial_trace(rho, Subsystem::A)) +
           von_neumann_entropy(partial_trace(rho, Subsystem::B)) - von_neumann_entropy(rho);
}

double holevo_quantity(const ComplexMatrix& rho, const ProjectiveBasis& basis, Subsystem measured,
                       Subsystem memory) {
    require_complementary(measured, memory);
    validate_density(rho);
    double value = von_neumann_entropy(partial_trace(rho, memory));
    for (const auto& p : basis.projectors()) {
        const auto lifted = lift(p, measured);
        ComplexMatrix branch = partial_trace(lifted * rho * lifted, memory);
        const double prob = branch.trace().real();
        if (prob < tol::norm) {
            continue;
        }
        branch *= 1.0 / prob;
        value -= prob * entropy_of(hermitian_eigenvalues(branch));
    }
    return value;
}

double average_branch_entropy(const ComplexMatrix& rho, Subsystem measured, BlochDirection dir) {
    validate_density(rho);
    return objective(PackedState(rho, measured), dir);
}

MeasurementOptimum optimize_measurement(const ComplexMatrix& rho, Subsystem measured) {
    if (rho.rows() != 4 || rho.cols() != 4) {
        throw ValidationError("not a two-qubit state");
    }
    validate_density(rho);
    const PackedState state(rho, measured);

    MeasurementOptimum best{{0.0, 0.0}, objective(state, {0.0, 0.0})};
    for (int i = 0; i <= 180; ++i) {
        const double theta = i * kDegree;
        // phi is irrelevant at the poles.
        const int phi_steps = (i == 0 || i == 180) ? 1 : 360;
        for (int j = 0; j < phi_steps; ++j) {
            const BlochDirection dir{theta, j * kDegree};
            const double v = objective(state, dir);
            if (v < best.average_entropy) {
                best = {dir, v};
            }
        }
    }

    for (int round = 0; round < 8; ++round) {
        const MeasurementOptimum before = best;
        const double t_lo = std::max(0.0, best.direction.theta - kDegree);
        const double t_hi = std::min(kPi, best.direction.theta + kDegree);
        const double phi0 = best.direction.phi;
        const double theta = golden_section_min(
            [&](double t) { return objective(state, {t, phi0}); }, t_lo, t_hi, 1e-10);
        if (double v = objective(state, {theta, phi0}); v < best.average_entropy) {
            best = {{theta, phi0}, v};
        }
        const double theta0 = best.direction.theta;
        const double phi = golden_section_min(
            [&](double f) { return objective(state, {theta0, f}); }, phi0 - kDegree, phi0 + kDegree, 1e-10);
        if (double v = objective(state, {theta0, phi}); v < best.average_entropy) {
            best = {{theta0, wrap_phi(phi)}, v};
        }
        if (before.average_entropy - best.average_entropy < 1e-15) {
            break;
        }
    }
    return best;
}

double min_conditional_entropy_over_measurements(const ComplexMatrix& rho, Subsystem measured) {
    return optimize_measurement(rho, measured).average_entropy;
}

double classical_correlation(const ComplexMatrix& rho, Subsystem measured) {
    return correlations(rho, measured).classical_correlation;
}

double quantum_discord(const ComplexMatrix& rho, Subsystem measured) { return correlations(rho, measured).discord; }

Correlations correlations(const ComplexMatrix& rho, Subsystem measured) {
    Correlations out;
    out.mutual_information = mutual_information(rho);
    out.min_conditional_entropy = min_conditional_entropy_over_measurements(rho, measured);
    out.classical_correlation =
        von_neumann_entropy(partial_trace(rho, other(measured))) - out.min_conditional_entropy;
    const double d = out.mutual_information - out.classical_correlation;
    if (d < -tol::psd) {
        std::ostringstream os;
        os << "negative discord " << d;
        throw NumericError(os.str());
    }
    out.discord = std::max(0.0, d);
    return out;
}

double discord_xstate_closed(const XState& x) {
    x.validate();
    const double r33_44 = x.d33 + x.d44;
    const double b0 = x.d11 + x.d33;  // probability of |0> on B
    const double z = 1.0 - 2.0 * r33_44;
    const double coh = std::abs(x.a14) + std::abs(x.a23);
    const double gamma = 0.5 * (1.0 + std::sqrt(z * z + 4.0 * coh * coh));
    const double p1 = binary_entropy(gamma);
    const std::array<double, 4> pops{clamp_probability(x.d11), clamp_probability(x.d22), clamp_probability(x.d33),
                                     clamp_probability(x.d44)};
    double pop_entropy = 0.0;
    for (double v : pops) {
        if (v > 0.0) {
            pop_entropy -= v * std::log2(v);
        }
    }
    const double p2 = pop_entropy - binary_entropy(b0);
    const double s_ab = entropy_of(hermitian_eigenvalues(x.to_matrix()));
    return binary_entropy(b0) - s_ab + std::min(p1, p2);
}

}  // namespace eur
