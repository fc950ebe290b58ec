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

#ifndef BLOCHLDP_LINDBLAD_HPP
#define BLOCHLDP_LINDBLAD_HPP

#include <string>
#include <vector>

#include "blochldp/mat2.hpp"
#include "blochldp/superop.hpp"

namespace blochldp {

/// Generator in commutator + dissipator form with the fixed jump operator
/// D = [[0,0],[1,0]]:
///
///   L(rho) = i xi [D D+ - D+ D, rho]
///            - (nu+eta)/2 (D+ D rho - 2 D rho D+ + rho D+ D)
///            - nu/2      (D D+ rho - 2 D+ rho D + rho D D+)
///            + conj(zeta) D rho D + zeta D+ rho D+.
///
/// Admissible iff eta > 0, nu >= 0 and |zeta|^2 <= nu(nu+eta).
struct GKSParams {
    double xi{};
    double eta{};
    double nu{};
    Complex zeta{};
};

/// The fixed jump operator D = [[0,0],[1,0]].
Mat2 jump_operator_d();

/// Checks eta > 0, nu >= 0, |zeta|^2 <= nu(nu+eta) (with 1e-12 slack).
/// Throws InvalidParams naming the violated constraint.
void validate(const GKSParams& p);
bool is_valid(const GKSParams& p);

/// Generator in the form L(rho) = y rho + rho y* + z1 rho z1* + z2 rho z2*,
/// with a distinguished unit vector e1 spanning the stationary pure state
/// and e2 a unit vector orthogonal to it.
///
/// Structural invariants (gauge-relaxed: y e1 need only be a multiple of e1,
/// not zero, so that (y + y*) e1 = 0 and |e1><e1| stays stationary):
///   * ||e1|| = ||e2|| = 1, <e1,e2> = 0
///   * z1 e1 = 0, z2 e1 = 0
///   * (y + y*) e1 = 0
///   * L(|e1><e1|) = 0  (equivalently <e2, y e1> = 0 given the above)
/// A generator of a trace-preserving semigroup additionally satisfies
///   * tr(L(m)) = 0 on the basis {I, sigma_1, sigma_2, sigma_3}
/// which is reported separately: some derived quantities (eta, a, J* image)
/// remain meaningful for sub-Markov generators that drop it.
struct YZGenerator {
    Mat2 y{};
    Mat2 z1{};
    Mat2 z2{};
    Vec2 e1{};
    Vec2 e2{};
};

/// Residuals of the individual YZGenerator invariants.
struct YZValidation {
    double e_orthonormality{};    // max deviation of the e-frame from ON
    double z_annihilation{};      // max ||z_i e1||
    double y_gauge{};             // ||(y+y*) e1||
    double stationarity{};        // max entry of L(|e1><e1|)
    double trace_annihilation{};  // max |tr L(basis)|

    bool structural_ok(double tol = kIdentityTol) const;
    bool markov_ok(double tol = kIdentityTol) const;
    /// Human-readable list of violated invariants; empty when all pass.
    std::string describe_failures(double tol = kIdentityTol) const;
};

YZValidation validate(const YZGenerator& g);

/// 4x4 matrix of rho -> y rho + rho y* + z1 rho z1* + z2 rho z2*.
/// Throws InvalidGenerator (naming the violated invariants) unless the
/// generator passes the full validation including trace annihilation.
Mat4 superop_from_yz(const YZGenerator& g);

/// Same matrix without validation, for generators that are deliberately
/// sub-Markov (e.g. the contraction part alone).
Mat4 superop_from_yz_unchecked(const YZGenerator& g);

/// 4x4 matrix of the commutator + dissipator form. Action on the Pauli
/// basis:
///   L(I)       = -eta sigma_3
///   L(sigma_1) = -(nu + eta/2 - Re zeta) sigma_1 + (2 xi - Im zeta) sigma_2
///   L(sigma_2) = -(2 xi + Im zeta) sigma_1 - (nu + eta/2 + Re zeta) sigma_2
///   L(sigma_3) = -(2 nu + eta) sigma_3
/// Throws InvalidParams on inadmissible parameters.
Mat4 superop_from_gks(const GKSParams& p);

/// Equivalent y/z form for the pure-absorbing case nu = 0:
///   y = diag(-eta/2 - i xi, i xi), z1 = [[0,0],[sqrt(eta),0]], z2 = 0,
///   e1 = (0,1), e2 = (1,0).
/// Throws NotPureAbsorbing if nu > 0.
YZGenerator gks_to_yz(const GKSParams& p);

/// Spectral parameters of the decay rate:
///   eta = greatest eigenvalue of -(y + y*),
///   a   = |<z1 e2, e2>|^2 + |<z2 e2, e2>|^2,
///   gap = eta - a.
struct RateParams {
    double eta{};
    double a{};
    double gap{};
};

/// Throws NonPositiveGap when eta - a <= 1e-12 (the absorbing state is then
/// not pure-attracting).
RateParams rate_params(const YZGenerator& g);

/// z1* |e1><e1| z1 + z2* |e1><e1| z2, asserted equal to (eta-a)|e2><e2|
/// within 1e-10. Throws IdentityViolation on mismatch (an invalid
/// generator, not a numerical bug: the identity is automatic for every
/// trace-annihilating generator with z_i e1 = 0).
Mat2 jstar_on_e1(const YZGenerator& g);

/// Stationary (and absorbing) state (I - eta/(2 nu + eta) sigma_3)/2.
/// Pure iff nu = 0.
Mat2 absorbing_state(const GKSParams& p);

}  // namespace blochldp

#endif  // BLOCHLDP_LINDBLAD_HPP
