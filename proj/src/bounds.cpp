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

#include "eur/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "eur/channels.hpp"
#include "eur/error.hpp"

namespace eur {

namespace {

// Arguments this close to +-1 are pulled back to the edge before evaluating.
constexpr double kEdge = 1.0 - 1e-12;

double edge_clamp(double x) { return std::clamp(x, -kEdge, kEdge); }

// arctanh scaled to base 2, matching the bit-valued entropies it is mixed with.
double atanh2(double x) { return std::atanh(edge_clamp(x)) / std::numbers::ln2; }

double log2_one_plus(double x) { return std::log2(1.0 + edge_clamp(x)); }
double log2_one_minus(double x) { return std::log2(1.0 - edge_clamp(x)); }

double sigma_xz_uncertainty(const ComplexMatrix& rho) {
    return uncertainty_lhs(rho, ProjectiveBasis::pauli_x(), ProjectiveBasis::pauli_z());
}

}  // namespace

double complementarity_c(const ProjectiveBasis& b1, const ProjectiveBasis& b2) {
    double c = 0.0;
    for (const auto& p : b1.projectors()) {
        for (const auto& q : b2.projectors()) {
            c = std::max(c, (p * q).trace().real());
        }
    }
    return c;
}

double uncertainty_lhs(const ComplexMatrix& rho, const ProjectiveBasis& b1, const ProjectiveBasis& b2,
                       Subsystem measured, Subsystem memory) {
    return conditional_entropy_after_measurement(rho, b1, measured, memory) +
           conditional_entropy_after_measurement(rho, b2, measured, memory);
}

double berta_bound(const ComplexMatrix& rho, double c, Subsystem memory) {
    if (!(c > 0.0 && c <= 1.0)) {
        throw ValidationError("complementarity c must lie in (0, 1]");
    }
    return std::log2(1.0 / c) + quantum_conditional_entropy(rho, memory);
}

double pati_bound(const ComplexMatrix& rho, double c, Subsystem measured) {
    const auto corr = correlations(rho, measured);
    return berta_bound(rho, c, other(measured)) +
           std::max(0.0, corr.discord - corr.classical_correlation);
}

double adabi_bound(const ComplexMatrix& rho, double c, const ProjectiveBasis& b1, const ProjectiveBasis& b2,
                   Subsystem measured, Subsystem memory) {
    const double delta = mutual_information(rho) - holevo_quantity(rho, b1, measured, memory) -
                         holevo_quantity(rho, b2, measured, memory);
    return berta_bound(rho, c, memory) + std::max(0.0, delta);
}

bool spmc_satisfied(const BellDiagonalCoeffs& c, int i, int j, int k) {
    if (std::set<int>{i, j, k} != std::set<int>{1, 2, 3}) {
        throw ValidationError("SPMC axes must be a permutation of 1, 2, 3");
    }
    return std::abs(c[i] + c[j] * c[k]) <= 1e-12;
}

BoundReport bound_report(const ComplexMatrix& rho, const ProjectiveBasis& b1, const ProjectiveBasis& b2,
                         Subsystem measured) {
    const Subsystem memory = other(measured);
    BoundReport r;
    r.complementarity_c = complementarity_c(b1, b2);
    r.u_lhs = uncertainty_lhs(rho, b1, b2, measured, memory);
    r.berta = berta_bound(rho, r.complementarity_c, memory);

    const auto corr = correlations(rho, measured);
    r.discord = corr.discord;
    r.s_min_cond = corr.min_conditional_entropy;
    r.pati = r.berta + std::max(0.0, corr.discord - corr.classical_correlation);

    const double delta = corr.mutual_information - holevo_quantity(rho, b1, measured, memory) -
                         holevo_quantity(rho, b2, measured, memory);
    r.adabi = r.berta + std::max(0.0, delta);

    r.tightness_berta = tightness(r.u_lhs, r.berta);
    r.tightness_pati = tightness(r.u_lhs, r.pati);
    r.tightness_adabi = tightness(r.u_lhs, r.adabi);
    return r;
}

BoundReport bound_report(const ComplexMatrix& rho) {
    return bound_report(rho, ProjectiveBasis::pauli_x(), ProjectiveBasis::pauli_z());
}

CrossCheck ad_closed_form_u(const BellDiagonalCoeffs& c, double d) {
    CrossCheck out;
    out.pipeline = sigma_xz_uncertainty(apply_one_sided(ad_kraus(d), bell_diagonal_density(c)));

    const double radicand = -(c.c1 - c.c2) * (c.c1 + c.c2) * (-1.0 + d);
    if (radicand < 0.0) {
        return out;
    }
    const double mu1 = std::sqrt(radicand);
    const double mu2 = c.c3 + d - c.c3 * d;
    const double mu3 = c.c3 - c.c3 * d - d;
    const double braces = 4.0 * mu1 * atanh2(mu1) + 2.0 * mu2 * atanh2(mu2) - 2.0 * mu3 * atanh2(mu3) +
                          2.0 * log2_one_plus(mu1) + 2.0 * log2_one_plus(mu2) + log2_one_minus(mu2) +
                          log2_one_plus(mu2) + log2_one_plus(mu3) + log2_one_minus(mu3);
    out.closed = -0.25 * braces;
    return out;
}

BpfCrossChecks bpf_closed_forms(const BellDiagonalCoeffs& c, double p) {
    BpfCrossChecks out;
    const auto rho = apply_one_sided(bpf_kraus(p), bell_diagonal_density(c));
    out.u.pipeline = sigma_xz_uncertainty(rho);
    out.bound.pipeline = berta_bound(rho, 0.5);

    const double nu1 = c.c1 - 2.0 * c.c1 * p;
    const double nu2 = c.c3 - 2.0 * c.c3 * p;
    const double braces = -2.0 * nu1 * atanh2(nu1) - log2_one_plus(nu1) - log2_one_minus(nu1) -
                          (1.0 + nu2) * log2_one_plus(nu2) + (nu2 - 1.0) * log2_one_minus(nu2);
    out.u.closed = -0.5 * braces;

    const double c1 = c.c1, c2 = c.c2, c3 = c.c3;
    const std::array<double, 4> zeta{
        1 + c1 + c2 - c3 - 2 * c1 * p + 2 * c3 * p,
        1 + c1 - c2 + c3 - 2 * (c1 + c3) * p,
        1 - c1 - c2 - c3 + 2 * (c1 + c3) * p,
        1 + c2 + c3 - 2 * c3 * p + c1 * (-1 + 2 * p),
    };
    double sum = 0.0;
    for (double z : zeta) {
        if (z > 0.0) {
            sum += z * std::log2(z / 4.0);
        }
    }
    out.bound.closed = -0.25 * sum;
    return out;
}

std::array<double, 4> ad_closed_eigenvalues(const BellDiagonalCoeffs& c, double d) {
    const double c1 = c.c1, c2 = c.c2, c3 = c.c3;
    const double plus = std::sqrt(std::max(
        0.0, c1 * c1 + 2 * c1 * c2 + c2 * c2 - c1 * c1 * d - 2 * c1 * c2 * d - c2 * c2 * d + d * d));
    const double minus = std::sqrt(std::max(
        0.0, c1 * c1 - 2 * c1 * c2 + c2 * c2 - c1 * c1 * d + 2 * c1 * c2 * d - c2 * c2 * d + d * d));
    return {
        0.25 * (1 - c3 + c3 * d - plus),
        0.25 * (1 - c3 + c3 * d + plus),
        0.25 * (1 + c3 - c3 * d - minus),
        0.25 * (1 + c3 - c3 * d + minus),
    };
}

std::array<double, 4> bpf_closed_eigenvalues(const BellDiagonalCoeffs& c, double p) {
    const double c1 = c.c1, c2 = c.c2, c3 = c.c3;
    return {
        0.25 * (1 + c1 - c2 + c3 - 2 * c1 * p - 2 * c3 * p),
        0.25 * (1 - c1 + c2 + c3 + 2 * c1 * p - 2 * c3 * p),
        0.25 * (1 + c1 + c2 - c3 - 2 * c1 * p + 2 * c3 * p),
        0.25 * (1 - c1 - c2 - c3 + 2 * c1 * p + 2 * c3 * p),
    };
}

}  // namespace eur
