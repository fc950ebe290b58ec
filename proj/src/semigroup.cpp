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

#include "blochldp/semigroup.hpp"

#include <cmath>

namespace blochldp {

const char* to_string(BlochCase c) {
    switch (c) {
        case BlochCase::Overdamped: return "overdamped";
        case BlochCase::Underdamped: return "underdamped";
        case BlochCase::Critical: return "critical";
    }
    return "?";
}

BlochCase bloch_case(const GKSParams& p) {
    const double delta = std::norm(p.zeta) - 4.0 * p.xi * p.xi;
    if (std::abs(4.0 * delta) <= 1e-10) return BlochCase::Critical;
    return delta > 0.0 ? BlochCase::Overdamped : BlochCase::Underdamped;
}

Mat2 evolve_exact(const Mat4& generator, const Mat2& rho, double t) {
    if (t < 0.0) throw InvalidArgument("evolve_exact: t must be >= 0");
    if (!is_density_matrix(rho)) throw InvalidArgument("evolve_exact: rho is not a density matrix");
    return apply(expm4(generator, t), rho);
}

std::array<double, 4> bloch_block_propagator(const GKSParams& p, double t) {
    validate(p);
    const double m = -(p.nu + 0.5 * p.eta);
    const double re = p.zeta.real(), im = p.zeta.imag();
    // Traceless part B of the coefficient block; B^2 = delta * I.
    const double b00 = re, b01 = -(2.0 * p.xi + im);
    const double b10 = 2.0 * p.xi - im, b11 = -re;
    const double delta = std::norm(p.zeta) - 4.0 * p.xi * p.xi;

    double ch, shc;  // cosh(w t), sinh(w t)/w  (or their trig/secular analogues)
    if (std::abs(4.0 * delta) <= 1e-10) {
        ch = 1.0;
        shc = t;
    } else if (delta > 0.0) {
        const double w = std::sqrt(delta);
        ch = std::cosh(w * t);
        shc = std::sinh(w * t) / w;
    } else {
        const double w = std::sqrt(-delta);
        ch = std::cos(w * t);
        shc = std::sin(w * t) / w;
    }
    const double s = std::exp(m * t);
    return {s * (ch + shc * b00), s * (shc * b01), s * (shc * b10), s * (ch + shc * b11)};
}

Mat2 evolve_bloch_gks(const GKSParams& p, const Mat2& rho, double t) {
    if (t < 0.0) throw InvalidArgument("evolve_bloch_gks: t must be >= 0");
    const BlochState b0 = pauli_decompose(rho);
    const auto w = bloch_block_propagator(p, t);

    BlochState bt;
    bt.trace = b0.trace;
    bt.u[0] = w[0] * b0.u[0] + w[1] * b0.u[1];
    bt.u[1] = w[2] * b0.u[0] + w[3] * b0.u[1];
    const double r3 = 2.0 * p.nu + p.eta;
    const double u3_inf = -b0.trace * p.eta / r3;
    bt.u[2] = std::exp(-r3 * t) * (b0.u[2] - u3_inf) + u3_inf;
    return pauli_compose(bt);
}

SubordinationReport subordination_check(const YZGenerator& g, const Mat2& rho, double t) {
    if (t < 0.0) throw InvalidArgument("subordination_check: t must be >= 0");
    if (!is_hermitian(rho)) throw InvalidArgument("subordination_check: rho must be Hermitian");
    if (eig_hermitian2(rho)[1].eigenvalue < -kIdentityTol) {
        throw InvalidArgument("subordination_check: rho must be positive semidefinite");
    }
    const Mat4 full = superop_from_yz(g);

    SubordinationReport rep;
    const Mat2 ct = expm2(t * g.y);
    rep.s_t = ct * rho * dagger(ct);
    rep.t_t = apply(expm4(full, t), rho);
    rep.min_eig_s = eig_hermitian2(rep.s_t)[1].eigenvalue;
    rep.min_eig_diff = eig_hermitian2(rep.t_t - rep.s_t)[1].eigenvalue;
    if (rep.min_eig_s < -kIdentityTol) {
        throw OrderingViolation("S_t(rho) not PSD, least eigenvalue " +
                                std::to_string(rep.min_eig_s));
    }
    if (rep.min_eig_diff < -kIdentityTol) {
        throw OrderingViolation("T_t(rho) - S_t(rho) not PSD, least eigenvalue " +
                                std::to_string(rep.min_eig_diff));
    }
    return rep;
}

double integral_equation_residual(const YZGenerator& g, double t, int steps) {
    if (t < 0.0) throw InvalidArgument("integral_equation_residual: t must be >= 0");
    if (steps < 2) throw InvalidArgument("integral_equation_residual: steps must be >= 2");
    const Mat4 full = superop_from_yz(g);
    const Mat4 jpart = sandwich_superop(g.z1, dagger(g.z1)) + sandwich_superop(g.z2, dagger(g.z2));

    auto s_superop = [&g](double s) {
        const Mat2 cs = expm2(s * g.y);
        return sandwich_superop(cs, dagger(cs));
    };

    const Mat4 lhs = expm4(full, t);
    Mat4 integral = Mat4::zero();
    if (t > 0.0) {
        const double h = t / steps;
        for (int k = 0; k <= steps; ++k) {
            const double s = k * h;
            const double w = (k == 0 || k == steps) ? 0.5 * h : h;
            integral = integral + w * (expm4(full, t - s) * jpart * s_superop(s));
        }
    }
    return max_abs_diff(lhs, s_superop(t) + integral);
}

double semigroup_law_check(const Mat4& generator, double t1, double t2) {
    if (t1 < 0.0 || t2 < 0.0) throw InvalidArgument("semigroup_law_check: times must be >= 0");
    return max_abs_diff(expm4(generator, t1 + t2), expm4(generator, t1) * expm4(generator, t2));
}

BlochTrajectory evolve_trajectory(const Mat4& generator, const Mat2& rho0,
                                  const std::vector<double>& times,
                                  const std::string& generator_id) {
    BlochTrajectory traj;
    traj.times = times;
    traj.generator_id = generator_id;
    traj.states.reserve(times.size());
    for (double t : times) {
        traj.states.push_back(pauli_decompose(evolve_exact(generator, rho0, t)));
    }
    return traj;
}

}  // namespace blochldp
