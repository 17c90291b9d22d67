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

#include "eur/channels.hpp"
#include "eur/error.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

using namespace eur;

namespace {

const BellDiagonalCoeffs kFig1{-0.5, 0.4, 0.8};

ComplexMatrix random_evolved_state(int trial) {
    const auto rho = bell_diagonal_density(test::random_coeffs());
    const double x = test::uniform(0, 1);
    switch (trial % 4) {
        case 0:
            return apply_one_sided(ad_kraus(x), rho);
        case 1:
            return apply_one_sided(bpf_kraus(x), rho);
        case 2:
            return apply_steering(weak_op(test::uniform(0, 0.95)), apply_one_sided(ad_kraus(x), rho));
        default:
            return test::random_density();
    }
}

}  // namespace

TEST(bounds, complementarity_examples) {
    const auto x = ProjectiveBasis::pauli_x(), y = ProjectiveBasis::pauli_y(), z = ProjectiveBasis::pauli_z();
    EXPECT_NEAR(complementarity_c(x, z), 0.5, 1e-15);
    EXPECT_NEAR(complementarity_c(x, y), 0.5, 1e-15);
    EXPECT_NEAR(complementarity_c(z, z), 1.0, 1e-15);
    EXPECT_NEAR(complementarity_c(z, ProjectiveBasis::along({M_PI / 3, 0.0})), 0.75, 1e-15);
}

TEST(bounds, berta_rejects_bad_c) {
    const auto rho = bell_diagonal_density(kFig1);
    EXPECT_THROW(berta_bound(rho, 0.0), ValidationError);
    EXPECT_THROW(berta_bound(rho, 1.5), ValidationError);
    EXPECT_NEAR(berta_bound(rho, 1.0), quantum_conditional_entropy(rho), 1e-15);
}

TEST(bounds, bell_and_mixed_examples) {
    const auto bell = bound_report(bell_diagonal_density({1, -1, 1}));
    EXPECT_NEAR(bell.u_lhs, 0.0, 1e-12);
    EXPECT_NEAR(bell.berta, 0.0, 1e-12);
    EXPECT_NEAR(bell.pati, 0.0, 1e-9);
    EXPECT_NEAR(bell.adabi, 0.0, 1e-12);
    EXPECT_NEAR(bell.discord, 1.0, 1e-9);

    const auto mixed = bound_report(0.25 * ComplexMatrix::identity(4));
    EXPECT_NEAR(mixed.u_lhs, 2.0, 1e-12);
    EXPECT_NEAR(mixed.berta, 2.0, 1e-12);
    EXPECT_NEAR(mixed.pati, 2.0, 1e-12);
    EXPECT_NEAR(mixed.adabi, 2.0, 1e-12);
    EXPECT_EQ(mixed.complementarity_c, 0.5);
}

TEST(bounds, product_state_saturates_berta) {
    // |0>|0>: S(X|B) = 1, S(Z|B) = 0, S(A|B) = 0.
    ComplexMatrix rho(4, 4);
    rho(0, 0) = 1.0;
    const auto r = bound_report(rho);
    EXPECT_NEAR(r.u_lhs, 1.0, 1e-12);
    EXPECT_NEAR(r.berta, 1.0, 1e-12);
    EXPECT_NEAR(r.tightness_berta, 0.0, 1e-12);
}

TEST(bounds, fig1_point_against_oracle) {
    // Oracle for the undamped Bell-diagonal state: S(X|B) = 2 - ... via Bell weights.
    const auto rho = bell_diagonal_density(kFig1);
    const auto w = kFig1.bell_weights();
    const double s_ab = test::oracle_entropy(w);
    const double u = (1 - (1 - test::oracle_h2(0.75))) + (1 - (1 - test::oracle_h2(0.9)));
    const auto r = bound_report(rho);
    EXPECT_NEAR(r.u_lhs, u, 1e-12);
    EXPECT_NEAR(r.berta, 1 + s_ab - 1, 1e-12);
    const double discord = 2 - s_ab - (1 - test::oracle_h2(0.9));
    EXPECT_NEAR(r.discord, discord, 1e-9);
    EXPECT_NEAR(r.s_min_cond, test::oracle_h2(0.9), 1e-9);
}

TEST(bounds, report_matches_standalone_functions) {
    for (int trial = 0; trial < 12; ++trial) {
        const auto rho = random_evolved_state(trial);
        const auto x = ProjectiveBasis::pauli_x(), z = ProjectiveBasis::pauli_z();
        const auto r = bound_report(rho);
        EXPECT_NEAR(r.u_lhs, uncertainty_lhs(rho, x, z), 1e-14);
        EXPECT_NEAR(r.berta, berta_bound(rho, 0.5), 1e-14);
        EXPECT_NEAR(r.pati, pati_bound(rho, 0.5), 1e-12);
        EXPECT_NEAR(r.adabi, adabi_bound(rho, 0.5, x, z), 1e-12);
        EXPECT_NEAR(r.tightness_adabi, r.u_lhs - r.adabi, 1e-15);
        EXPECT_NEAR(r.discord, quantum_discord(rho), 1e-12);
    }
}

TEST(bounds, ordering_holds_on_random_states) {
    for (int trial = 0; trial < 400; ++trial) {
        const auto rho = random_evolved_state(trial);
        const auto r = bound_report(rho);
        EXPECT_LE(r.berta, r.pati + tol::order);
        EXPECT_LE(r.pati, r.adabi + tol::order);
        EXPECT_LE(r.adabi, r.u_lhs + tol::order);
    }
}

TEST(bounds, adabi_equals_u_for_x_states) {
    // X-states have a z-diagonal marginal and uniform x outcomes, so the
    // Adabi correction closes the gap exactly whenever it is active.
    for (int trial = 0; trial < 100; ++trial) {
        const auto x = test::random_xstate();
        const auto rho = x.to_matrix();
        const auto r = bound_report(rho);
        const double delta = r.adabi - r.berta;
        if (delta > 1e-9) {
            EXPECT_NEAR(r.u_lhs, r.adabi, 1e-12);
        }
    }
}

TEST(bounds, other_basis_pairs) {
    const auto rho = bell_diagonal_density(kFig1);
    const auto b2 = ProjectiveBasis::along({M_PI / 3, 0.0});
    const auto r = bound_report(rho, ProjectiveBasis::pauli_z(), b2);
    EXPECT_NEAR(r.complementarity_c, 0.75, 1e-15);
    EXPECT_NEAR(r.berta, std::log2(1 / 0.75) + quantum_conditional_entropy(rho), 1e-14);
    EXPECT_LE(r.berta, r.u_lhs + tol::order);
    EXPECT_LE(r.adabi, r.u_lhs + tol::order);

    const auto on_b = bound_report(rho, ProjectiveBasis::pauli_x(), ProjectiveBasis::pauli_z(), Subsystem::B);
    const auto on_a = bound_report(rho);
    EXPECT_NEAR(on_b.u_lhs, on_a.u_lhs, 1e-12);  // swap-symmetric state
}

TEST(bounds, spmc_cases) {
    EXPECT_TRUE(spmc_satisfied({-1, 1, 1}, 1, 2, 3));
    EXPECT_TRUE(spmc_satisfied({-0.25, 0.5, 0.5}, 1, 2, 3));
    EXPECT_FALSE(spmc_satisfied(kFig1, 1, 2, 3));
    EXPECT_TRUE(spmc_satisfied({0.5, -0.25, 0.5}, 2, 3, 1));
    EXPECT_THROW(spmc_satisfied(kFig1, 1, 1, 2), ValidationError);
    EXPECT_THROW(spmc_satisfied(kFig1, 0, 1, 2), ValidationError);
}

TEST(bounds, closed_eigenvalues_match_numeric_spectrum) {
    for (int trial = 0; trial < 300; ++trial) {
        const auto c = test::random_coeffs();
        const double x = test::uniform(0, 1);
        for (bool ad : {true, false}) {
            auto closed = ad ? ad_closed_eigenvalues(c, x) : bpf_closed_eigenvalues(c, x);
            std::sort(closed.begin(), closed.end(), std::greater<>());
            const auto rho = apply_one_sided(ad ? ad_kraus(x) : bpf_kraus(x), bell_diagonal_density(c));
            const auto spec = hermitian_eigenvalues(rho).eigenvalues;
            for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(closed[i], spec[i], 1e-12);
        }
    }
}

TEST(bounds, bpf_bound_form_matches_pipeline) {
    for (double p = 0.0; p <= 1.0; p += 0.05) {
        const auto checks = bpf_closed_forms(kFig1, p);
        ASSERT_TRUE(checks.bound.gap().has_value());
        EXPECT_NEAR(*checks.bound.gap(), 0.0, 1e-12);
    }
}

TEST(bounds, arctanh_u_forms_disagree_with_pipeline) {
    // The bit-phase-flip arctanh form evaluates to 2 - U.
    for (double p = 0.0; p <= 1.0; p += 0.1) {
        const auto checks = bpf_closed_forms(kFig1, p);
        ASSERT_TRUE(checks.u.closed.has_value());
        EXPECT_NEAR(*checks.u.closed, 2.0 - checks.u.pipeline, 1e-9);
    }
    const auto at_zero = ad_closed_form_u(kFig1, 0.0);
    EXPECT_GT(at_zero.pipeline, 0.0);
    CrossCheck empty;
    EXPECT_FALSE(empty.gap().has_value());
}
