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

#include "blochldp/deviations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace blochldp {

OrthogonalMeasure orthogonal_measure(const Mat2& rho) {
    if (!is_density_matrix(rho)) {
        throw InvalidArgument("orthogonal_measure: input is not a density matrix");
    }
    const auto spec = eig_hermitian2(rho);
    OrthogonalMeasure m;
    m.degenerate = spec[0].degenerate;
    for (const auto& s : spec) {
        double w = s.eigenvalue;
        w = std::clamp(w, 0.0, 1.0);  // tolerance-sized spill only
        m.atoms.push_back({w, s.projection});
    }
    // eig_hermitian2 already sorts eigenvalues descending.
    return m;
}

namespace {

bool is_rank_one_projection(const Mat2& p, double tol) {
    return is_hermitian(p, tol) && max_abs_diff(p * p, p) <= tol &&
           std::abs(trace(p) - Complex(1.0)) <= tol;
}

}  // namespace

RateFunctionValue rate_function(const YZGenerator& g, const Mat2& p) {
    if (!is_rank_one_projection(p, kIdentityTol)) {
        throw NotAProjection("rate_function: p is not a rank-one projection");
    }
    const RateParams r = rate_params(g);
    RateFunctionValue v;
    v.at = p;
    if (op_norm(p - projector(g.e1)) <= kIdentityTol) {
        v.value = 0.0;
    } else if (op_norm(p - projector(g.e2)) <= kIdentityTol) {
        v.value = r.gap;
    } else {
        v.infinite = true;
        v.value = std::numeric_limits<double>::infinity();
    }
    return v;
}

PreparedGenerator prepare(const GKSParams& p) {
    validate(p);
    PreparedGenerator gen;
    gen.superop = superop_from_gks(p);
    gen.absorbing = absorbing_state(p);
    gen.gks = p;
    if (p.nu == 0.0) {
        const YZGenerator yz = gks_to_yz(p);
        gen.yz = yz;
        gen.rate = rate_params(yz);
        gen.trivial_regime = false;
    } else {
        gen.trivial_regime = true;
    }
    std::ostringstream id;
    id << "gks(xi=" << p.xi << ",eta=" << p.eta << ",nu=" << p.nu << ",zeta=("
       << p.zeta.real() << "," << p.zeta.imag() << "))";
    gen.id = id.str();
    return gen;
}

PreparedGenerator prepare(const YZGenerator& g) {
    PreparedGenerator gen;
    gen.superop = superop_from_yz(g);
    gen.absorbing = projector(g.e1);
    gen.yz = g;
    gen.rate = rate_params(g);
    gen.trivial_regime = false;
    gen.id = "yz";
    return gen;
}

RateReport empirical_rate(const PreparedGenerator& gen, const Mat2& rho0,
                          const std::vector<double>& grid) {
    if (!is_density_matrix(rho0)) {
        throw InvalidArgument("empirical_rate: rho0 is not a density matrix");
    }
    if (op_norm(rho0 - gen.absorbing) <= 1e-8) {
        throw DegenerateStart("empirical_rate: rho0 equals the absorbing state");
    }
    if (grid.empty() || !std::is_sorted(grid.begin(), grid.end())) {
        throw InvalidArgument("empirical_rate: grid must be non-empty and ascending");
    }
    if (gen.rate && grid.back() < 10.0 / gen.rate->gap) {
        throw InvalidArgument("empirical_rate: grid max below 10/gap");
    }

    RateReport rep;
    rep.trivial_regime = gen.trivial_regime;
    if (gen.rate) {
        rep.predicted_gap = gen.rate->a - gen.rate->eta;
    }

    for (double t : grid) {
        const Mat2 rho_t = evolve_exact(gen.superop, rho0, t);
        const double a2 = eig_hermitian2(rho_t)[1].eigenvalue;
        if (t <= 0.0) continue;
        if (a2 <= kUnderflowFloor) {
            rep.underflow_truncated = true;
            rep.underflow_at = t;
            break;
        }
        rep.series.push_back({t, std::log(a2) / t, a2});
    }

    if (!rep.series.empty()) {
        rep.final_estimate = rep.series.back().log_rate;
        if (rep.predicted_gap) {
            rep.abs_error = std::abs(rep.final_estimate - *rep.predicted_gap);
        }
        const double a2_start = eig_hermitian2(rho0)[1].eigenvalue;
        rep.faithful_kind = a2_start > kUnderflowFloor
                                ? RateReport::Faithful::Immediately
                                : RateReport::Faithful::AtTime;
        rep.faithful_from = rep.series.front().t;
    } else {
        rep.final_estimate = std::numeric_limits<double>::quiet_NaN();
        rep.faithful_kind = RateReport::Faithful::NeverInWindow;
    }
    return rep;
}

ProjectionDecayReport projection_decay(const PreparedGenerator& gen, const Mat2& omega,
                                       const Mat2& p, const std::vector<double>& grid) {
    if (!is_density_matrix(omega)) {
        throw InvalidArgument("projection_decay: omega is not a density matrix");
    }
    if (op_norm(omega - gen.absorbing) <= 1e-8) {
        throw DegenerateStart("projection_decay: omega equals the absorbing state");
    }
    if (!is_hermitian(p) || max_abs_diff(p * p, p) > kIdentityTol) {
        throw InvalidArgument("projection_decay: p must be an orthogonal projection");
    }

    ProjectionDecayReport rep;
    for (double t : grid) {
        if (t <= 0.0) continue;
        const Mat2 rho_t = evolve_exact(gen.superop, omega, t);
        const double val = std::real(trace(rho_t * p));
        if (val <= kUnderflowFloor) break;
        rep.series.emplace_back(t, std::log(val) / t);
    }
    if (!rep.series.empty()) rep.final_estimate = rep.series.back().second;

    if (gen.rate && gen.yz) {
        const bool is_e2 = op_norm(p - projector(gen.yz->e2)) <= kIdentityTol;
        rep.predicted_limit = is_e2 ? gen.rate->a - gen.rate->eta : 0.0;
        if (!rep.series.empty()) {
            rep.abs_error = std::abs(rep.final_estimate - *rep.predicted_limit);
        }
    }
    return rep;
}

double volterra_identity_check(const YZGenerator& g, const std::vector<double>& grid) {
    const Mat4 full = superop_from_yz(g);
    const RateParams r = rate_params(g);
    const Mat2 p2 = projector(g.e2);
    double worst = 0.0;
    for (double t : grid) {
        if (t < 0.0) throw InvalidArgument("volterra_identity_check: negative time");
        const Mat2 rho_t = apply(expm4(full, t), p2);
        const Complex diag = inner(g.e2, rho_t * g.e2);
        worst = std::max(worst, std::abs(diag - Complex(std::exp(t * (r.a - r.eta)))));
    }
    return worst;
}

GoverningOperatorReport governing_operator_check(const YZGenerator& g,
                                                 const std::vector<double>& grid,
                                                 const std::vector<Mat2>& sample_states) {
    const Mat4 full = superop_from_yz(g);
    const Mat2 governing = expm2(-1.0 * jstar_on_e1(g));
    const auto spec = eig_hermitian2(governing);

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::vector<std::pair<std::string, Mat2>> projections = {
        {"e1", projector(g.e1)},
        {"e2", projector(g.e2)},
        {"identity", Mat2::identity()},
        {"+x", pauli_compose({1.0, {1.0, 0.0, 0.0}})},
        {"-x", pauli_compose({1.0, {-1.0, 0.0, 0.0}})},
        {"+y", pauli_compose({1.0, {0.0, 1.0, 0.0}})},
        {"-y", pauli_compose({1.0, {0.0, -1.0, 0.0}})},
        {"diag-xz", pauli_compose({1.0, {inv_sqrt2, 0.0, inv_sqrt2}})},
        {"diag-yz", pauli_compose({1.0, {0.0, inv_sqrt2, inv_sqrt2}})},
    };

    const double t_final = grid.back();
    GoverningOperatorReport rep;
    for (std::size_t si = 0; si < sample_states.size(); ++si) {
        const Mat2 rho_t = evolve_exact(full, sample_states[si], t_final);
        for (const auto& [label, p] : projections) {
            // sup over eigenvalues of the governing operator whose
            // eigenspace the projection overlaps.
            double predicted = 0.0;
            for (const auto& s : spec) {
                if (max_abs(p * s.projection) > 1e-8) {
                    predicted = std::max(predicted, s.eigenvalue);
                }
            }
            const double observed = std::real(trace(rho_t * p));
            if (observed <= 0.0) continue;
            const double empirical = std::pow(observed, 1.0 / t_final);
            const double disc = std::abs(empirical - predicted);
            rep.entries.push_back({label, static_cast<int>(si), empirical, predicted, disc});
            rep.max_discrepancy = std::max(rep.max_discrepancy, disc);
        }
    }
    return rep;
}

}  // namespace blochldp
