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

#include "blochldp/lindblad.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace blochldp {

Mat2 jump_operator_d() {
    Mat2 d;
    d(1, 0) = 1.0;
    return d;
}

void validate(const GKSParams& p) {
    if (!std::isfinite(p.xi) || !std::isfinite(p.eta) || !std::isfinite(p.nu) ||
        !std::isfinite(p.zeta.real()) || !std::isfinite(p.zeta.imag())) {
        throw InvalidParams("gks: non-finite parameter");
    }
    if (!(p.eta > 0.0)) throw InvalidParams("gks: eta must be > 0");
    if (p.nu < 0.0) throw InvalidParams("gks: nu must be >= 0");
    if (std::norm(p.zeta) > p.nu * (p.nu + p.eta) + 1e-12) {
        throw InvalidParams("gks: |zeta|^2 <= nu(nu+eta) violated");
    }
}

bool is_valid(const GKSParams& p) {
    try {
        validate(p);
        return true;
    } catch (const InvalidParams&) {
        return false;
    }
}

bool YZValidation::structural_ok(double tol) const {
    return e_orthonormality <= kHermitianTol && z_annihilation <= tol &&
           y_gauge <= tol && stationarity <= tol;
}

bool YZValidation::markov_ok(double tol) const {
    return structural_ok(tol) && trace_annihilation <= tol;
}

std::string YZValidation::describe_failures(double tol) const {
    std::ostringstream os;
    auto fail = [&os](const char* name, double v) {
        if (!os.str().empty()) os << "; ";
        os << name << " residual " << v;
    };
    if (e_orthonormality > kHermitianTol) fail("e1/e2 orthonormality", e_orthonormality);
    if (z_annihilation > tol) fail("z e1 = 0", z_annihilation);
    if (y_gauge > tol) fail("(y+y*) e1 = 0", y_gauge);
    if (stationarity > tol) fail("stationarity of |e1><e1|", stationarity);
    if (trace_annihilation > tol) fail("trace annihilation", trace_annihilation);
    return os.str();
}

YZValidation validate(const YZGenerator& g) {
    YZValidation v;
    v.e_orthonormality = std::max({std::abs(norm(g.e1) - 1.0), std::abs(norm(g.e2) - 1.0),
                                   std::abs(inner(g.e1, g.e2))});

    Vec2 z1e1 = g.z1 * g.e1;
    Vec2 z2e1 = g.z2 * g.e1;
    v.z_annihilation = std::max(norm(z1e1), norm(z2e1));

    const Mat2 ys = g.y + dagger(g.y);
    v.y_gauge = norm(ys * g.e1);

    const Mat2 p1 = projector(g.e1);
    const Mat2 lp1 = g.y * p1 + p1 * dagger(g.y) + g.z1 * p1 * dagger(g.z1) +
                     g.z2 * p1 * dagger(g.z2);
    v.stationarity = max_abs(lp1);

    v.trace_annihilation = max_abs(ys + dagger(g.z1) * g.z1 + dagger(g.z2) * g.z2);
    return v;
}

Mat4 superop_from_yz_unchecked(const YZGenerator& g) {
    Mat4 s = left_superop(g.y) + right_superop(dagger(g.y));
    s = s + sandwich_superop(g.z1, dagger(g.z1));
    s = s + sandwich_superop(g.z2, dagger(g.z2));
    return s;
}

Mat4 superop_from_yz(const YZGenerator& g) {
    const YZValidation v = validate(g);
    if (!v.markov_ok()) {
        throw InvalidGenerator("yz generator invalid: " + v.describe_failures());
    }
    return superop_from_yz_unchecked(g);
}

Mat4 superop_from_gks(const GKSParams& p) {
    validate(p);
    const Mat2 d = jump_operator_d();
    const Mat2 dd = dagger(d);
    const Mat2 ddd = d * dd;   // D D+
    const Mat2 dd_d = dd * d;  // D+ D
    const Complex i(0.0, 1.0);

    Mat4 s = (i * p.xi) * (left_superop(ddd - dd_d) - right_superop(ddd - dd_d));
    const double g1 = 0.5 * (p.nu + p.eta);
    s = s - g1 * (left_superop(dd_d) + right_superop(dd_d));
    s = s + (2.0 * g1) * sandwich_superop(d, dd);
    const double g2 = 0.5 * p.nu;
    s = s - g2 * (left_superop(ddd) + right_superop(ddd));
    s = s + (2.0 * g2) * sandwich_superop(dd, d);
    s = s + std::conj(p.zeta) * sandwich_superop(d, d);
    s = s + p.zeta * sandwich_superop(dd, dd);
    return s;
}

YZGenerator gks_to_yz(const GKSParams& p) {
    validate(p);
    if (p.nu > 0.0) {
        throw NotPureAbsorbing("gks_to_yz requires nu = 0 (got nu = " +
                               std::to_string(p.nu) + ")");
    }
    YZGenerator g;
    g.y = Mat2::diag(Complex(-0.5 * p.eta, -p.xi), Complex(0.0, p.xi));
    g.z1 = Mat2::zero();
    g.z1(1, 0) = std::sqrt(p.eta);
    g.z2 = Mat2::zero();
    g.e1 = Vec2{0.0, 1.0};
    g.e2 = Vec2{1.0, 0.0};
    return g;
}

RateParams rate_params(const YZGenerator& g) {
    const YZValidation v = validate(g);
    if (!v.structural_ok()) {
        throw InvalidGenerator("rate_params: " + v.describe_failures());
    }
    // -(y+y*) is Hermitian with e1 in its kernel; its greatest eigenvalue.
    const Mat2 neg_ys = -1.0 * (g.y + dagger(g.y));
    const auto spec = eig_hermitian2(neg_ys);
    RateParams r;
    r.eta = spec[0].eigenvalue;
    r.a = std::norm(inner(g.z1 * g.e2, g.e2)) + std::norm(inner(g.z2 * g.e2, g.e2));
    r.gap = r.eta - r.a;
    if (r.gap <= 1e-12) {
        throw NonPositiveGap("eta - a = " + std::to_string(r.gap) +
                             "; the stationary pure state is not attracting");
    }
    return r;
}

Mat2 jstar_on_e1(const YZGenerator& g) {
    const RateParams r = rate_params(g);
    const Mat2 p1 = projector(g.e1);
    const Mat2 image = dagger(g.z1) * p1 * g.z1 + dagger(g.z2) * p1 * g.z2;
    const Mat2 expected = r.gap * projector(g.e2);
    const double defect = max_abs_diff(image, expected);
    if (defect > kIdentityTol) {
        throw IdentityViolation("J*(|e1><e1|) != (eta-a)|e2><e2|, defect " +
                                std::to_string(defect));
    }
    return image;
}

Mat2 absorbing_state(const GKSParams& p) {
    validate(p);
    const double w = p.eta / (2.0 * p.nu + p.eta);
    return pauli_compose(BlochState{1.0, {0.0, 0.0, -w}});
}

}  // namespace blochldp
