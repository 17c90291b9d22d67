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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include "eur/applications.hpp"
#include "eur/bounds.hpp"
#include "eur/error.hpp"
#include "eur/sweep.hpp"

namespace eur {

namespace {

struct GapTracker {
    ErrataEntry entry;

    void add(double param, std::optional<double> gap) {
        ++entry.total;
        if (!gap) {
            return;
        }
        ++entry.applicable;
        if (entry.applicable == 1 || std::abs(*gap) > entry.max_abs_gap) {
            entry.max_abs_gap = std::abs(*gap);
            entry.at_param = param;
        }
    }
};

double spectrum_gap(std::array<double, 4> closed, const ComplexMatrix& rho) {
    std::sort(closed.begin(), closed.end(), std::greater<>());
    const auto numeric = hermitian_eigenvalues(rho).eigenvalues;
    double worst = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        worst = std::max(worst, std::abs(closed[i] - numeric[i]));
    }
    return worst;
}

}  // namespace

ErrataReport errata_report(const BellDiagonalCoeffs& coeffs, ChannelKind channel, const std::vector<double>& grid) {
    if (grid.empty()) {
        throw ValidationError("errata report needs a non-empty grid");
    }
    if (channel == ChannelKind::Custom) {
        throw ValidationError("errata report needs the AD or BPF channel");
    }
    for (double x : grid) {
        if (!(x >= 0.0 && x <= 1.0)) {
            throw ValidationError("errata grid values must lie in [0, 1]");
        }
    }
    const bool ad = channel == ChannelKind::AD;
    const double identity = ad ? 0.0 : 1.0;
    std::vector<double> params{identity};
    for (double x : grid) {
        if (x != identity) {
            params.push_back(x);
        }
    }

    ErrataReport report;
    report.channel = channel;
    report.coeffs = coeffs;
    report.identity_param = identity;

    GapTracker eig{{ad ? "eigenvalues of evolved state (AD closed form)" : "eigenvalues of evolved state (BPF list)"}};
    GapTracker u_closed{{ad ? "uncertainty U (AD arctanh form)" : "uncertainty U (BPF arctanh form)"}};
    GapTracker bound_closed{{"Berta bound (BPF zeta form)"}};
    GapTracker discord{{"X-state discord closed form vs sweep (measured B)"}};
    GapTracker capacity{{ad ? "capacity eigenvalue form (AD)" : "capacity eigenvalue form (BPF)"}};
    GapTracker adabi_gap{{"u - adabi (tightness, logged)"}};
    GapTracker pati_gap{{"u - pati (tightness, logged)"}};

    const auto initial = bell_diagonal_density(coeffs);
    for (double x : params) {
        const auto rho = apply_one_sided(make_channel(channel, x), initial);
        if (ad) {
            eig.add(x, spectrum_gap(ad_closed_eigenvalues(coeffs, x), rho));
            const auto check = ad_closed_form_u(coeffs, x);
            u_closed.add(x, check.gap());
            if (x == identity) {
                report.identity_u = check.pipeline;
            }
        } else {
            eig.add(x, spectrum_gap(bpf_closed_eigenvalues(coeffs, x), rho));
            const auto checks = bpf_closed_forms(coeffs, x);
            u_closed.add(x, checks.u.gap());
            bound_closed.add(x, checks.bound.gap());
            if (x == identity) {
                report.identity_u = checks.u.pipeline;
            }
        }
        discord.add(x, discord_xstate_closed(as_xstate(rho)) - quantum_discord(rho, Subsystem::B));
        const auto cap = capacity_curves(channel, coeffs, {x, x, 2, std::nullopt}).front();
        capacity.add(x, cap.closed_form - cap.capacity);
        const auto br = bound_report(rho);
        adabi_gap.add(x, br.tightness_adabi);
        pati_gap.add(x, br.tightness_pati);
    }

    report.entries = {eig.entry, u_closed.entry};
    if (!ad) {
        report.entries.push_back(bound_closed.entry);
    }
    report.entries.insert(report.entries.end(), {discord.entry, capacity.entry, adabi_gap.entry, pati_gap.entry});
    return report;
}

std::string ErrataReport::to_text() const {
    std::ostringstream os;
    const char* pname = channel == ChannelKind::AD ? "d" : "p";
    os << "errata report: channel " << to_string(channel) << ", coeffs (" << coeffs.c1 << ", " << coeffs.c2 << ", "
       << coeffs.c3 << ")\n";
    char buf[256];
    std::snprintf(buf, sizeof(buf), "identity point %s = %g: pipeline U = %.12g\n", pname, identity_param,
                  identity_u);
    os << buf;
    std::snprintf(buf, sizeof(buf), "%-52s %14s %10s %12s\n", "formula", "max |gap|", pname, "applicable");
    os << buf;
    for (const auto& e : entries) {
        if (e.applicable == 0) {
            std::snprintf(buf, sizeof(buf), "%-52s %14s %10s %6d/%-5d\n", e.formula.c_str(), "n/a", "-", 0, e.total);
        } else {
            std::snprintf(buf, sizeof(buf), "%-52s %14.6e %10.6g %6d/%-5d\n", e.formula.c_str(), e.max_abs_gap,
                          e.at_param, e.applicable, e.total);
        }
        os << buf;
    }
    return os.str();
}

}  // namespace eur
