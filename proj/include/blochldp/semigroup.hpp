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

#ifndef BLOCHLDP_SEMIGROUP_HPP
#define BLOCHLDP_SEMIGROUP_HPP

#include <string>
#include <vector>

#include "blochldp/lindblad.hpp"
#include "blochldp/mat2.hpp"
#include "blochldp/superop.hpp"

namespace blochldp {

/// Damping regime of the (u1, u2) Bloch block, split on the sign of
/// |zeta|^2 - 4 xi^2 (two distinct real decay rates / damped rotation /
/// a defective double rate with a secular t factor).
enum class BlochCase { Overdamped, Underdamped, Critical };

const char* to_string(BlochCase c);
BlochCase bloch_case(const GKSParams& p);

/// State evolved under exp(t * generator), computed through the
/// superoperator exponential. The input must be a density matrix and
/// t >= 0; trace is preserved to 1e-12.
Mat2 evolve_exact(const Mat4& generator, const Mat2& rho, double t);

/// Same evolution from the closed-form solution of the Bloch equations:
/// u3 relaxes at rate 2 nu + eta toward -eta/(2 nu + eta); (u1, u2) evolve
/// by the exponential of the real 2x2 block
///   [ -(nu + eta/2) + Re zeta   -(2 xi + Im zeta) ]
///   [    2 xi - Im zeta         -(nu + eta/2) - Re zeta ],
/// evaluated per damping regime (|4(|zeta|^2-4xi^2)| <= 1e-10 routes to the
/// critical branch, whose I + tB form is the limit of both neighbors).
Mat2 evolve_bloch_gks(const GKSParams& p, const Mat2& rho, double t);

/// Closed-form (u1,u2) propagator block and the u3 affine update, exposed
/// for tests.
std::array<double, 4> bloch_block_propagator(const GKSParams& p, double t);

/// Result of the ordering check 0 <= S_t(rho) <= T_t(rho), where
/// S_t(rho) = e^{ty} rho e^{ty*}.
struct SubordinationReport {
    Mat2 s_t{};            // e^{ty} rho e^{ty*}
    Mat2 t_t{};            // evolved state
    double min_eig_s{};    // least eigenvalue of S_t(rho)
    double min_eig_diff{}; // least eigenvalue of T_t(rho) - S_t(rho)
};

/// Checks both orderings via the eigenvalues of the differences; throws
/// OrderingViolation (with the offending eigenvalue) below -1e-10.
/// rho must be positive semidefinite, t >= 0.
SubordinationReport subordination_check(const YZGenerator& g, const Mat2& rho, double t);

/// Max-entry residual of the superoperator identity
///   T_t = S_t + integral_0^t T_{t-s} J S_s ds
/// with the integral evaluated by the composite trapezoid rule on `steps`
/// panels. The residual is O(t^2 / steps^2).
double integral_equation_residual(const YZGenerator& g, double t, int steps);

/// || exp((t1+t2) s) - exp(t1 s) exp(t2 s) ||_max.
double semigroup_law_check(const Mat4& generator, double t1, double t2);

/// Bloch coordinates of an evolved state along a time grid.
struct BlochTrajectory {
    std::vector<double> times;
    std::vector<BlochState> states;
    std::string generator_id;
};

BlochTrajectory evolve_trajectory(const Mat4& generator, const Mat2& rho0,
                                  const std::vector<double>& times,
                                  const std::string& generator_id);

}  // namespace blochldp

#endif  // BLOCHLDP_SEMIGROUP_HPP
