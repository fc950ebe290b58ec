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
#include "blochldp/mat2.hpp"
#include "blochldp/superop.hpp"
#include "test_support.hpp"

using namespace blochldp;

namespace {

Mat2 random_hermitian(std::mt19937& rng) {
    std::normal_distribution<double> n;
    Mat2 a;
    for (auto& z : a.e) z = Complex(n(rng), n(rng));
    return 0.5 * (a + dagger(a));
}

// Reference exponential: plain scaled Taylor, kept independent of the
// closed-form expm2 it checks.
Mat2 expm2_taylor(const Mat2& a) {
    int scal = 0;
    while (max_abs(std::ldexp(1.0, -scal) * a) > 0.25) ++scal;
    const Mat2 b = std::ldexp(1.0, -scal) * a;
    Mat2 sum = Mat2::identity();
    Mat2 term = Mat2::identity();
    for (int k = 1; k <= 20; ++k) {
        term = (1.0 / k) * (term * b);
        sum = sum + term;
    }
    for (int i = 0; i < scal; ++i) sum = sum * sum;
    return sum;
}

}  // namespace

TEST_CASE("pauli decomposition on the fixed points") {
    const BlochState half_i = pauli_decompose(0.5 * Mat2::identity());
    CHECK(half_i.trace == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(half_i.u_norm() == doctest::Approx(0.0).epsilon(1e-14));

    const BlochState sz = pauli_decompose(sigma_z());
    CHECK(sz.trace == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(sz.u[2] == doctest::Approx(2.0).epsilon(1e-14));

    const BlochState ground = pauli_decompose(Mat2::diag(0.0, 1.0));
    CHECK(ground.trace == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(ground.u[0] == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(ground.u[2] == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("pauli composition on the fixed points") {
    CHECK(max_abs_diff(pauli_compose({1.0, {0, 0, 0}}), 0.5 * Mat2::identity()) < 1e-15);
    CHECK(max_abs_diff(pauli_compose({1.0, {0, 0, -1}}), Mat2::diag(0.0, 1.0)) < 1e-15);
    CHECK(max_abs_diff(pauli_compose({0.0, {2, 0, 0}}), sigma_x()) < 1e-15);
}

TEST_CASE("pauli round trip is the identity on Hermitian matrices") {
    std::mt19937 rng(11);
    for (int i = 0; i < 200; ++i) {
        const Mat2 m = random_hermitian(rng);
        CHECK(max_abs_diff(pauli_compose(pauli_decompose(m)), m) <= 1e-14 * std::max(1.0, max_abs(m)));
    }
}

TEST_CASE("pauli decomposition rejects non-Hermitian input") {
    Mat2 m;
    m(0, 1) = Complex(1.0, 0.5);
    m(1, 0) = Complex(0.0, 0.0);
    CHECK_THROWS_AS(pauli_decompose(m), NonHermitian);
    CHECK_THROWS_AS(eig_hermitian2(m), NonHermitian);
}

TEST_CASE("eigendecomposition: diagonal, degenerate, and sigma_x-tilted") {
    const auto d = eig_hermitian2(Mat2::diag(0.7, 0.3));
    CHECK(d[0].eigenvalue == doctest::Approx(0.7).epsilon(1e-14));
    CHECK(d[1].eigenvalue == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(max_abs_diff(d[0].projection, Mat2::diag(1.0, 0.0)) < 1e-14);
    CHECK(max_abs_diff(d[1].projection, Mat2::diag(0.0, 1.0)) < 1e-14);
    CHECK_FALSE(d[0].degenerate);

    const auto deg = eig_hermitian2(0.5 * Mat2::identity());
    CHECK(deg[0].degenerate);
    CHECK(deg[0].eigenvalue == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(deg[1].eigenvalue == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(max_abs_diff(deg[0].projection, Mat2::diag(1.0, 0.0)) < 1e-15);

    // (I + 0.6 sigma_1)/2 = [[.5,.3],[.3,.5]]; the characteristic polynomial
    // lambda^2 - lambda + 0.16 has roots 0.8 and 0.2.
    const Mat2 tilted = pauli_compose({1.0, {0.6, 0.0, 0.0}});
    const auto t = eig_hermitian2(tilted);
    CHECK(t[0].eigenvalue == doctest::Approx(0.8).epsilon(1e-13));
    CHECK(t[1].eigenvalue == doctest::Approx(0.2).epsilon(1e-13));
    for (double lam : {t[0].eigenvalue, t[1].eigenvalue}) {
        const Mat2 shifted = tilted - lam * Mat2::identity();
        CHECK(std::abs(det(shifted)) < 1e-13);
    }
    const Mat2 px = pauli_compose({1.0, {1.0, 0.0, 0.0}});
    CHECK(max_abs_diff(t[0].projection, px) < 1e-13);
}

TEST_CASE("eigendecomposition reconstructs and keeps spectral identities") {
    std::mt19937 rng(12);
    for (int i = 0; i < 200; ++i) {
        const Mat2 m = random_hermitian(rng);
        const auto s = eig_hermitian2(m);
        CHECK(s[0].eigenvalue >= s[1].eigenvalue);
        const Mat2 rebuilt = s[0].eigenvalue * s[0].projection + s[1].eigenvalue * s[1].projection;
        CHECK(max_abs_diff(rebuilt, m) <= 1e-12);
        CHECK(s[0].eigenvalue + s[1].eigenvalue ==
              doctest::Approx(std::real(trace(m))).epsilon(1e-12));
        CHECK(s[0].eigenvalue * s[1].eigenvalue ==
              doctest::Approx(std::real(det(m))).epsilon(1e-10));
        for (const auto& pair : s) {
            CHECK(max_abs_diff(pair.projection * pair.projection, pair.projection) <= 1e-12);
            CHECK(std::abs(trace(pair.projection) - Complex(1.0)) <= 1e-12);
        }
        CHECK(max_abs(s[0].projection * s[1].projection) <= 1e-12);
    }
}

TEST_CASE("tiny eigenvalues survive the large one") {
    // (tr - ||u||)/2 would round to zero here; the det route must not.
    const double small = 1e-18;
    const Mat2 m = Mat2::diag(small, 1.0 - small);
    const auto s = eig_hermitian2(m);
    CHECK(s[1].eigenvalue == doctest::Approx(small).epsilon(1e-10));
    CHECK(s[1].eigenvalue > 0.0);
}

TEST_CASE("vectorization follows column stacking") {
    Mat2 m;
    m(0, 0) = 1.0;
    m(1, 0) = 2.0;
    m(0, 1) = 3.0;
    m(1, 1) = 4.0;
    const Vec4 v = vec(m);
    CHECK(v[0] == Complex(1.0));
    CHECK(v[1] == Complex(2.0));
    CHECK(v[2] == Complex(3.0));
    CHECK(v[3] == Complex(4.0));
    CHECK(max_abs_diff(unvec(v), m) == 0.0);

    // vec(A rho B) = (B^T kron A) vec(rho) for random A, rho, B.
    std::mt19937 rng(13);
    std::normal_distribution<double> n;
    for (int i = 0; i < 50; ++i) {
        Mat2 a, b, rho;
        for (auto* mm : {&a, &b, &rho})
            for (auto& z : mm->e) z = Complex(n(rng), n(rng));
        const Vec4 lhs = vec(a * rho * b);
        const Vec4 rhs = sandwich_superop(a, b) * vec(rho);
        for (int k = 0; k < 4; ++k) CHECK(std::abs(lhs[k] - rhs[k]) <= 1e-12);
    }
}

TEST_CASE("expm4 fixed values") {
    Mat4 any;
    any(0, 1) = Complex(2.0, -1.0);
    any(3, 2) = 0.7;
    CHECK(max_abs_diff(expm4(any, 0.0), Mat4::identity()) == 0.0);

    Mat4 diag;
    diag(1, 1) = -1.0;
    diag(2, 2) = -1.0;
    Mat4 expected = Mat4::identity();
    expected(1, 1) = std::exp(-1.0);
    expected(2, 2) = std::exp(-1.0);
    CHECK(max_abs_diff(expm4(diag, 1.0), expected) <= 1e-14);

    // The sigma_3 direction decays at rate 2 nu + eta = 1 for these
    // parameters, so exp(2L) vec(sigma_3) = e^{-2} vec(sigma_3).
    const Mat4 L = superop_from_gks({0.3, 1.0, 0.0, {0.0, 0.0}});
    const Vec4 image = expm4(L, 2.0) * vec(sigma_z());
    const Vec4 want = vec(std::exp(-2.0) * sigma_z());
    for (int k = 0; k < 4; ++k) CHECK(std::abs(image[k] - want[k]) <= 1e-12);
}

TEST_CASE("expm4 rejects non-finite input") {
    Mat4 bad;
    bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(expm4(bad, 1.0), NonFinite);

    Mat4 big;
    big(0, 0) = 1e200;
    CHECK_THROWS_AS(expm4(big, 1e200), NonFinite);
}

TEST_CASE("expm4 satisfies its defining differential equation") {
    // Central differences of exp(t s) against s exp(t s) shrink at second
    // order in the step, down to the rounding floor of the difference
    // quotient itself.
    const Mat4 L = superop_from_gks({0.3, 1.0, 0.5, {0.2, 0.1}});
    const double t = 1.7;
    const Mat4 want = L * expm4(L, t);
    auto fd_residual = [&](double h) {
        const Mat4 fd = (1.0 / (2.0 * h)) * (expm4(L, t + h) - expm4(L, t - h));
        return max_abs_diff(fd, want);
    };
    const double r1 = fd_residual(1e-3);
    const double r2 = fd_residual(1e-4);
    CHECK(r1 <= 1e-5);
    CHECK(r2 <= 1.2e-2 * r1);  // ~h^2 scaling
    CHECK(fd_residual(1e-5) <= 1e-9);
}

TEST_CASE("expm4 satisfies the semigroup law") {
    // Dissipative generators keep the exponential bounded; there the law
    // holds in absolute terms.
    for (const auto& p : testing::gks_grid()) {
        const Mat4 L = superop_from_gks(p);
        const double cap = 50.0 / one_norm(L);
        CHECK(semigroup_law_check(L, 0.3 * cap, 0.6 * cap) <= 1e-10);
        CHECK(semigroup_law_check(L, 1.0, 2.5) <= 1e-10);
    }
    // Random dense matrices can have exponentially large exponentials, so
    // the comparison is relative.
    std::mt19937 rng(14);
    std::normal_distribution<double> n;
    for (int i = 0; i < 25; ++i) {
        Mat4 s;
        for (auto& z : s.e) z = Complex(n(rng), n(rng));
        const double cap = 50.0 / one_norm(s);
        const double t1 = 0.3 * cap, t2 = 0.6 * cap;
        const double scale = max_abs(expm4(s, t1 + t2));
        CHECK(semigroup_law_check(s, t1, t2) <= 1e-10 * std::max(1.0, scale));
    }
}

TEST_CASE("expm2 agrees with an independent Taylor evaluation") {
    std::mt19937 rng(15);
    std::normal_distribution<double> n;
    for (int i = 0; i < 100; ++i) {
        Mat2 a;
        for (auto& z : a.e) z = Complex(2.0 * n(rng), 2.0 * n(rng));
        CHECK(max_abs_diff(expm2(a), expm2_taylor(a)) <=
              1e-11 * std::max(1.0, max_abs(expm2_taylor(a))));
    }
}

TEST_CASE("choi matrix classifies the standard maps") {
    // Identity map: rank-one Choi with eigenvalues (2,0,0,0).
    const auto id_eigs = eig4_hermitian(choi(Mat4::identity()));
    CHECK(id_eigs[0] == doctest::Approx(2.0).epsilon(1e-12));
    for (int i = 1; i < 4; ++i) CHECK(std::abs(id_eigs[i]) <= 1e-12);

    // Kraus conjugation rho -> z rho z+ is completely positive.
    Mat2 z;
    z(1, 0) = 1.0;
    const auto kraus_eigs = eig4_hermitian(choi(sandwich_superop(z, dagger(z))));
    CHECK(kraus_eigs[3] >= -1e-10);

    // Transpose map: swap of the middle vec components; not CP.
    Mat4 transpose;
    transpose(0, 0) = 1.0;
    transpose(1, 2) = 1.0;
    transpose(2, 1) = 1.0;
    transpose(3, 3) = 1.0;
    const auto t_eigs = eig4_hermitian(choi(transpose));
    CHECK(t_eigs[3] < -0.5);
}

TEST_CASE("4x4 Hermitian eigenvalues match the first four moments") {
    std::mt19937 rng(16);
    std::normal_distribution<double> n;
    for (int i = 0; i < 50; ++i) {
        Mat4 a;
        for (auto& z : a.e) z = Complex(n(rng), n(rng));
        Mat4 h;  // (a + a+)/2
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) h(r, c) = 0.5 * (a(r, c) + std::conj(a(c, r)));
        const auto eigs = eig4_hermitian(h);
        Mat4 power = Mat4::identity();
        for (int k = 1; k <= 4; ++k) {
            power = power * h;
            Complex tr(0.0);
            for (int d = 0; d < 4; ++d) tr += power(d, d);
            double moment = 0.0;
            for (double lam : eigs) moment += std::pow(lam, k);
            CHECK(std::abs(tr - Complex(moment)) <= 1e-9 * std::max(1.0, std::abs(tr)));
        }
    }
}

TEST_CASE("choi of the evolved maps stays positive semidefinite") {
    for (const auto& p : testing::gks_grid()) {
        const Mat4 L = superop_from_gks(p);
        for (double t : {0.0, 0.5, 2.0, 10.0, 50.0}) {
            const auto eigs = eig4_hermitian(choi(expm4(L, t)));
            CHECK(eigs[3] >= -1e-10);
        }
    }
}
