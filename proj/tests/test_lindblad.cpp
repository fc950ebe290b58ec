// Copyright 2026 The blochldp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <random>

#include "blochldp/lindblad.hpp"
#include "blochldp/superop.hpp"
#include "test_support.hpp"

using namespace blochldp;

TEST_CASE("parameter admissibility") {
    CHECK_NOTHROW(validate(GKSParams{0.3, 1.0, 0.0, {0.0, 0.0}}));
    CHECK_NOTHROW(validate(GKSParams{0.0, 1.0, 0.5, {0.5, 0.5}}));  // |z|^2 = 0.5 < 0.75
    CHECK_THROWS_AS(validate(GKSParams{0.0, 0.0, 0.0, {0.0, 0.0}}), InvalidParams);
    CHECK_THROWS_AS(validate(GKSParams{0.0, 1.0, -0.1, {0.0, 0.0}}), InvalidParams);
    CHECK_THROWS_AS(validate(GKSParams{0.0, 1.0, 0.1, {0.5, 0.0}}), InvalidParams);
    CHECK_THROWS_AS(validate(GKSParams{0.0, 1.0, 0.0, {0.1, 0.0}}), InvalidParams);
}

TEST_CASE("dissipator action on the Pauli basis, fixed parameter sets") {
    // (xi=0, eta=1, nu=0): sigma_1 -> -sigma_1/2.
    {
        const Mat4 L = superop_from_gks({0.0, 1.0, 0.0, {0.0, 0.0}});
        CHECK(max_abs_diff(apply(L, sigma_x()), -0.5 * sigma_x()) <= 1e-12);
    }
    // (xi=0.3, eta=1, nu=0): sigma_1 -> -sigma_1/2 + 0.6 sigma_2.
    {
        const Mat4 L = superop_from_gks({0.3, 1.0, 0.0, {0.0, 0.0}});
        const Mat2 want = -0.5 * sigma_x() + 0.6 * sigma_y();
        CHECK(max_abs_diff(apply(L, sigma_x()), want) <= 1e-12);
    }
    // (xi=0.3, eta=1, nu=0.5, zeta=0.2): sigma_3 -> -2 sigma_3.
    {
        const Mat4 L = superop_from_gks({0.3, 1.0, 0.5, {0.2, 0.0}});
        CHECK(max_abs_diff(apply(L, sigma_z()), -2.0 * sigma_z()) <= 1e-12);
    }
}

TEST_CASE("dissipator action on the Pauli basis, randomized") {
    std::mt19937 rng(21);
    for (int i = 0; i < 30; ++i) {
        const GKSParams p = testing::random_gks(rng, /*nu_cap_factor=*/1.5);
        const Mat4 L = superop_from_gks(p);
        const double re = p.zeta.real(), im = p.zeta.imag();

        CHECK(max_abs_diff(apply(L, Mat2::identity()), -p.eta * sigma_z()) <= 1e-12);
        const Mat2 want1 =
            -(p.nu + 0.5 * p.eta - re) * sigma_x() + (2.0 * p.xi - im) * sigma_y();
        CHECK(max_abs_diff(apply(L, sigma_x()), want1) <= 1e-12);
        const Mat2 want2 =
            -(2.0 * p.xi + im) * sigma_x() - (p.nu + 0.5 * p.eta + re) * sigma_y();
        CHECK(max_abs_diff(apply(L, sigma_y()), want2) <= 1e-12);
        CHECK(max_abs_diff(apply(L, sigma_z()), -(2.0 * p.nu + p.eta) * sigma_z()) <= 1e-12);
    }
}

TEST_CASE("y/z-form superoperator on fixed inputs") {
    const GKSParams model{0.3, 1.0, 0.0, {0.0, 0.0}};
    const YZGenerator g = gks_to_yz(model);
    const Mat4 L = superop_from_yz(g);
    CHECK(max_abs_diff(apply(L, sigma_z()), -1.0 * sigma_z()) <= 1e-12);
    CHECK(max_abs_diff(apply(L, Mat2::identity()), -1.0 * sigma_z()) <= 1e-12);

    YZGenerator zero;
    zero.e1 = Vec2{0.0, 1.0};
    zero.e2 = Vec2{1.0, 0.0};
    CHECK(max_abs(superop_from_yz(zero)) == 0.0);
}

TEST_CASE("y/z-form validation reports the violated invariant") {
    YZGenerator g = gks_to_yz({0.3, 1.0, 0.0, {0.0, 0.0}});
    g.z1(1, 1) = 0.5;  // z1 e1 != 0
    CHECK_THROWS_WITH_AS(superop_from_yz(g), doctest::Contains("z e1"), InvalidGenerator);

    YZGenerator bad_y = gks_to_yz({0.0, 1.0, 0.0, {0.0, 0.0}});
    bad_y.y(1, 1) = Complex(0.3, 0.0);  // breaks (y+y*) e1 = 0
    CHECK_THROWS_AS(superop_from_yz(bad_y), InvalidGenerator);
}

TEST_CASE("parameter form converts to y/z form") {
    {
        const YZGenerator g = gks_to_yz({0.3, 1.0, 0.0, {0.0, 0.0}});
        CHECK(max_abs_diff(g.y, Mat2::diag(Complex(-0.5, -0.3), Complex(0.0, 0.3))) <= 1e-15);
        Mat2 z_want;
        z_want(1, 0) = 1.0;
        CHECK(max_abs_diff(g.z1, z_want) <= 1e-15);
    }
    {
        const YZGenerator g = gks_to_yz({0.0, 2.0, 0.0, {0.0, 0.0}});
        CHECK(max_abs_diff(g.y, Mat2::diag(-1.0, 0.0)) <= 1e-15);
        Mat2 z_want;
        z_want(1, 0) = std::sqrt(2.0);
        CHECK(max_abs_diff(g.z1, z_want) <= 1e-15);
    }
    CHECK_THROWS_AS(gks_to_yz({0.3, 1.0, 0.1, {0.0, 0.0}}), NotPureAbsorbing);
}

TEST_CASE("the two generator forms agree on the pure-absorbing grid") {
    for (const auto& p : testing::nu0_family()) {
        const Mat4 a = superop_from_gks(p);
        const Mat4 b = superop_from_yz(gks_to_yz(p));
        CHECK(max_abs_diff(a, b) <= 1e-12);
    }
}

TEST_CASE("rate parameters") {
    // The parameter family always has a = 0 and gap = eta.
    for (double xi : {0.0, 0.3, 0.9}) {
        const RateParams r = rate_params(gks_to_yz({xi, 1.0, 0.0, {0.0, 0.0}}));
        CHECK(r.eta == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(r.a == doctest::Approx(0.0).epsilon(1e-13));
        CHECK(r.gap == doctest::Approx(1.0).epsilon(1e-13));
    }

    // Nonzero diagonal overlap, checked against direct inner products:
    // z1 e2 = c1 e1 + c2 e2 with c2 = 0.5 gives a = 0.25; trace
    // annihilation fixes |c1|^2 + |c2|^2 = 2, so eta = 2 and gap = 1.75.
    {
        YZGenerator g;
        g.e1 = Vec2{0.0, 1.0};
        g.e2 = Vec2{1.0, 0.0};
        const double c2 = 0.5;
        const double c1 = std::sqrt(2.0 - c2 * c2);
        g.z1 = c1 * outer(g.e1, g.e2) + c2 * outer(g.e2, g.e2);
        g.y = -1.0 * projector(g.e2);
        const Complex direct_overlap = inner(g.z1 * g.e2, g.e2);
        CHECK(std::abs(direct_overlap - Complex(0.5)) <= 1e-14);
        const RateParams r = rate_params(g);
        CHECK(r.a == doctest::Approx(0.25).epsilon(1e-13));
        CHECK(r.eta == doctest::Approx(2.0).epsilon(1e-13));
        CHECK(r.gap == doctest::Approx(1.75).epsilon(1e-13));
        CHECK(validate(g).markov_ok());
    }

    // Pure contraction part (z = 0): eta comes from y alone.
    {
        YZGenerator g;
        g.e1 = Vec2{0.0, 1.0};
        g.e2 = Vec2{1.0, 0.0};
        g.y = Mat2::diag(-1.0, 0.0);
        const RateParams r = rate_params(g);
        CHECK(r.eta == doctest::Approx(2.0).epsilon(1e-13));
        CHECK(r.a == doctest::Approx(0.0).epsilon(1e-13));
    }

    // a = eta makes the gap vanish and the rate parameters invalid.
    {
        YZGenerator g;
        g.e1 = Vec2{0.0, 1.0};
        g.e2 = Vec2{1.0, 0.0};
        g.z1 = outer(g.e2, g.e2);  // z1 e2 = e2, so a = 1
        g.y = -0.5 * projector(g.e2);
        CHECK_THROWS_AS(rate_params(g), NonPositiveGap);
    }
}

TEST_CASE("image of the stationary projection under the dissipative part") {
    {
        const Mat2 image = jstar_on_e1(gks_to_yz({0.3, 1.0, 0.0, {0.0, 0.0}}));
        CHECK(max_abs_diff(image, Mat2::diag(1.0, 0.0)) <= 1e-12);
    }
    {
        const Mat2 image = jstar_on_e1(gks_to_yz({0.0, 2.0, 0.0, {0.0, 0.0}}));
        CHECK(max_abs_diff(image, Mat2::diag(2.0, 0.0)) <= 1e-12);
    }
    // With z = 0 the dissipative image is zero while the gap is eta > 0,
    // so the identity cannot hold: such generators have no CP part.
    {
        YZGenerator g;
        g.e1 = Vec2{0.0, 1.0};
        g.e2 = Vec2{1.0, 0.0};
        g.y = Mat2::diag(-1.0, 0.0);
        CHECK_THROWS_AS(jstar_on_e1(g), IdentityViolation);
    }
    // Holds for every generator with a stationary pure state, including
    // randomly rotated frames with a > 0.
    std::mt19937 rng(22);
    for (int i = 0; i < 20; ++i) {
        const YZGenerator g = testing::random_yz_with_overlap(rng);
        const RateParams r = rate_params(g);
        const Mat2 image = jstar_on_e1(g);
        CHECK(max_abs_diff(image, r.gap * projector(g.e2)) <= 1e-10);
    }
}

TEST_CASE("stationary state") {
    CHECK(max_abs_diff(absorbing_state({0.3, 1.0, 0.0, {0.0, 0.0}}), Mat2::diag(0.0, 1.0)) <=
          1e-15);
    CHECK(max_abs_diff(absorbing_state({0.0, 1.0, 0.5, {0.0, 0.0}}), Mat2::diag(0.25, 0.75)) <=
          1e-15);

    const Mat2 rho_inf = absorbing_state({0.0, 1.0, 10.0, {0.0, 0.0}});
    const Mat2 want = pauli_compose({1.0, {0.0, 0.0, -1.0 / 21.0}});
    CHECK(max_abs_diff(rho_inf, want) <= 1e-15);

    std::mt19937 rng(23);
    for (int i = 0; i < 25; ++i) {
        const GKSParams p = testing::random_gks(rng, /*nu_cap_factor=*/2.0);
        const Mat4 L = superop_from_gks(p);
        CHECK(max_abs(apply(L, absorbing_state(p))) <= 1e-10);
    }
}

TEST_CASE("generators annihilate the trace") {
    std::mt19937 rng(24);
    for (int i = 0; i < 25; ++i) {
        CHECK(trace_annihilation_defect(superop_from_gks(testing::random_gks(rng, 1.5))) <=
              1e-12);
        CHECK(trace_annihilation_defect(
                  superop_from_yz(testing::random_yz_with_overlap(rng))) <= 1e-12);
    }
}

TEST_CASE("the Kraus part alone is completely positive") {
    std::mt19937 rng(25);
    for (int i = 0; i < 20; ++i) {
        const YZGenerator g = testing::random_yz_with_overlap(rng);
        const Mat4 kraus =
            sandwich_superop(g.z1, dagger(g.z1)) + sandwich_superop(g.z2, dagger(g.z2));
        CHECK(eig4_hermitian(choi(kraus))[3] >= -1e-10);
    }
}
