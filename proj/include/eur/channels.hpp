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

#include <string_view>
#include <vector>

#include "eur/linalg.hpp"

namespace eur {

enum class ChannelKind { AD, BPF, Custom };

std::string_view to_string(ChannelKind kind);
/// Accepts "AD" / "BPF" (case-insensitive); throws ValidationError otherwise.
ChannelKind parse_channel_kind(std::string_view text);

/// Single-qubit CPTP map in Kraus form.
class KrausChannel {
   public:
    /// Throws ValidationError unless sum_i E_i^dagger E_i = I within 1e-12.
    KrausChannel(std::vector<ComplexMatrix> operators, ChannelKind kind);

    const std::vector<ComplexMatrix>& operators() const { return operators_; }
    ChannelKind kind() const { return kind_; }

    /// max |sum_i E_i^dagger E_i - I|.
    double completeness_error() const;

   private:
    std::vector<ComplexMatrix> operators_;
    ChannelKind kind_;
};

/// Amplitude damping: E1 = diag(1, sqrt(1 - d)), E2 = sqrt(d) |0><1|.
KrausChannel ad_kraus(double d);

/// Damping probability 1 - exp(-lambda t).
double d_of_t(double lambda, double t);

/// Bit-phase flip: E1 = sqrt(p) I, E2 = sqrt(1 - p) sigma_y. Leaves c2 alone
/// and scales c1, c3 by (2p - 1).
KrausChannel bpf_kraus(double p);

/// Bit flip with sigma_x, kept for comparison with the bit-phase flip.
KrausChannel bit_flip_kraus(double p);

/// Builds the channel of the given family at parameter `param` (d or p).
KrausChannel make_channel(ChannelKind kind, double param);

/// sum_i (E_i (x) I) rho (E_i (x) I)^dagger, or with the factors swapped when
/// `side` is B. The result is checked to be a density matrix.
ComplexMatrix apply_one_sided(const KrausChannel& channel, const ComplexMatrix& rho, Subsystem side = Subsystem::A);

enum class SteeringKind { Filter, Weak };

std::string_view to_string(SteeringKind kind);
SteeringKind parse_steering_kind(std::string_view text);

/// Diagonal local operation applied with post-selection.
struct SteeringOp {
    ComplexMatrix op;
    double strength;
    SteeringKind kind;
};

/// diag(sqrt(1 - k), sqrt(k)), 0 < k < 1.
SteeringOp filter_op(double k);

/// diag(1, sqrt(1 - s)), 0 <= s < 1.
SteeringOp weak_op(double s);

SteeringOp make_steering(SteeringKind kind, double strength);

/// (O (x) I) rho (O (x) I)^dagger / Tr[...]. Throws NumericError when the
/// post-selection probability is below 1e-12.
ComplexMatrix apply_steering(const SteeringOp& op, const ComplexMatrix& rho, Subsystem side = Subsystem::A);

}  // namespace eur
