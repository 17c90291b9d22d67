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

#include "eur/channels.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <string>

#include "eur/error.hpp"

namespace eur {

namespace {

std::string upper(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char ch) { return std::toupper(ch); });
    return out;
}

void require_unit_interval(double value, const char* name) {
    if (!(value >= 0.0 && value <= 1.0)) {
        std::ostringstream os;
        os << name << " = " << value << " is outside [0, 1]";
        throw ValidationError(os.str());
    }
}

ComplexMatrix lift(const ComplexMatrix& op, Subsystem side) {
    return side == Subsystem::A ? tensor_product(op, pauli::i2()) : tensor_product(pauli::i2(), op);
}

}  // namespace

std::string_view to_string(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::AD:
            return "AD";
        case ChannelKind::BPF:
            return "BPF";
        case ChannelKind::Custom:
            return "custom";
    }
    return "custom";
}

ChannelKind parse_channel_kind(std::string_view text) {
    auto u = upper(text);
    if (u == "AD") {
        return ChannelKind::AD;
    }
    if (u == "BPF") {
        return ChannelKind::BPF;
    }
    throw ValidationError("unknown channel '" + std::string(text) + "' (expected AD or BPF)");
}

KrausChannel::KrausChannel(std::vector<ComplexMatrix> operators, ChannelKind kind)
    : operators_(std::move(operators)), kind_(kind) {
    if (operators_.empty()) {
        throw ValidationError("Kraus channel needs at least one operator");
    }
    for (const auto& e : operators_) {
        if (e.rows() != 2 || e.cols() != 2) {
            throw ValidationError("Kraus operators must be 2x2");
        }
    }
    if (double err = completeness_error(); err > tol::cptp) {
        std::ostringstream os;
        os << "Kraus operators are not complete (error " << err << ")";
        throw ValidationError(os.str());
    }
}

double KrausChannel::completeness_error() const {
    ComplexMatrix acc(2, 2);
    for (const auto& e : operators_) {
        acc += e.adjoint() * e;
    }
    return max_abs_diff(acc, pauli::i2());
}

KrausChannel ad_kraus(double d) {
    require_unit_interval(d, "damping probability d");
    ComplexMatrix e1{{1.0, 0.0}, {0.0, std::sqrt(1.0 - d)}};
    ComplexMatrix e2{{0.0, std::sqrt(d)}, {0.0, 0.0}};
    return KrausChannel({std::move(e1), std::move(e2)}, ChannelKind::AD);
}

double d_of_t(double lambda, double t) {
    if (!(lambda >= 0.0) || !(t >= 0.0)) {
        throw ValidationError("rate and time must be non-negative");
    }
    return -std::expm1(-lambda * t);
}

KrausChannel bpf_kraus(double p) {
    require_unit_interval(p, "flip parameter p");
    return KrausChannel({std::sqrt(p) * pauli::i2(), std::sqrt(1.0 - p) * pauli::y()}, ChannelKind::BPF);
}

KrausChannel bit_flip_kraus(double p) {
    require_unit_interval(p, "flip parameter p");
    return KrausChannel({std::sqrt(p) * pauli::i2(), std::sqrt(1.0 - p) * pauli::x()}, ChannelKind::Custom);
}

KrausChannel make_channel(ChannelKind kind, double param) {
    switch (kind) {
        case ChannelKind::AD:
            return ad_kraus(param);
        case ChannelKind::BPF:
            return bpf_kraus(param);
        case ChannelKind::Custom:
            break;
    }
    throw ValidationError("make_channel: no parametrized family for a custom channel");
}

ComplexMatrix apply_one_sided(const KrausChannel& channel, const ComplexMatrix& rho, Subsystem side) {
    if (rho.rows() != 4 || rho.cols() != 4) {
        throw ValidationError("not a two-qubit state");
    }
    validate_density(rho);
    ComplexMatrix out(4, 4);
    for (const auto& e : channel.operators()) {
        out += conjugate_sandwich(lift(e, side), rho);
    }
    validate_density(out);
    return out;
}

std::string_view to_string(SteeringKind kind) { return kind == SteeringKind::Filter ? "filter" : "weak"; }

SteeringKind parse_steering_kind(std::string_view text) {
    auto u = upper(text);
    if (u == "FILTER") {
        return SteeringKind::Filter;
    }
    if (u == "WEAK") {
        return SteeringKind::Weak;
    }
    throw ValidationError("unknown steering operation '" + std::string(text) + "' (expected filter or weak)");
}

SteeringOp filter_op(double k) {
    if (!(k > 0.0 && k < 1.0)) {
        std::ostringstream os;
        os << "filter strength k = " << k << " is outside (0, 1)";
        throw ValidationError(os.str());
    }
    return {ComplexMatrix{{std::sqrt(1.0 - k), 0.0}, {0.0, std::sqrt(k)}}, k, SteeringKind::Filter};
}

SteeringOp weak_op(double s) {
    if (!(s >= 0.0 && s < 1.0)) {
        std::ostringstream os;
        os << "weak measurement strength s = " << s << " is outside [0, 1)";
        throw ValidationError(os.str());
    }
    return {ComplexMatrix{{1.0, 0.0}, {0.0, std::sqrt(1.0 - s)}}, s, SteeringKind::Weak};
}

SteeringOp make_steering(SteeringKind kind, double strength) {
    return kind == SteeringKind::Filter ? filter_op(strength) : weak_op(strength);
}

ComplexMatrix apply_steering(const SteeringOp& op, const ComplexMatrix& rho, Subsystem side) {
    if (rho.rows() != 4 || rho.cols() != 4) {
        throw ValidationError("not a two-qubit state");
    }
    ComplexMatrix out = conjugate_sandwich(lift(op.op, side), rho);
    const double prob = out.trace().real();
    if (!(prob > tol::norm)) {
        throw NumericError("post-selection probability ≈ 0");
    }
    out *= 1.0 / prob;
    // Renormalization leaves the diagonal summing to 1 up to one rounding; pin it.
    const double drift = out.trace().real() - 1.0;
    std::size_t largest = 0;
    for (std::size_t i = 1; i < 4; ++i) {
        if (out(i, i).real() > out(largest, largest).real()) {
            largest = i;
        }
    }
    out(largest, largest) -= drift;
    validate_density(out);
    return out;
}

}  // namespace eur
