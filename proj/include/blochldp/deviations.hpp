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

#ifndef BLOCHLDP_DEVIATIONS_HPP
#define BLOCHLDP_DEVIATIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "blochldp/lindblad.hpp"
#include "blochldp/mat2.hpp"
#include "blochldp/semigroup.hpp"
#include "blochldp/superop.hpp"

namespace blochldp {

/// Least eigenvalue below this counts as underflow; rate series are
/// truncated there instead of producing -inf.
inline constexpr double kUnderflowFloor = 1e-300;

/// Discrete measure on pure states induced by a spectral decomposition:
/// weights are eigenvalues, support points the rank-one eigenprojections.
struct OrthogonalMeasure {
    struct Atom {
        double weight{};
        Mat2 projection{};
    };
    std::vector<Atom> atoms;  // sorted by descending weight
    bool degenerate{};        // eigenbasis not unique (double eigenvalue)
};

OrthogonalMeasure orthogonal_measure(const Mat2& rho);

/// Value of the decay-rate function at a rank-one projection: 0 on the
/// attracting pure state, eta - a on its orthogonal complement, +infinity
/// elsewhere.
struct RateFunctionValue {
    double value{};
    bool infinite{};
    Mat2 at{};
};

/// Throws NotAProjection unless p is a rank-one orthogonal projection to
/// 1e-10; projection matching is in operator norm at 1e-10.
RateFunctionValue rate_function(const YZGenerator& g, const Mat2& p);

/// A generator prepared for evolution/rate work, from either input form.
struct PreparedGenerator {
    Mat4 superop{};
    Mat2 absorbing{};
    std::optional<RateParams> rate;  // absent in the faithful-absorbing regime
    bool trivial_regime{};           // nu > 0: faithful absorbing state
    std::optional<GKSParams> gks;    // present when built from parameters
    std::optional<YZGenerator> yz;   // present when a y/z view exists
    std::string id;
};

PreparedGenerator prepare(const GKSParams& p);
PreparedGenerator prepare(const YZGenerator& g);

/// One sampled point of an eigenvalue decay series.
struct RateRow {
    double t{};
    double log_rate{};  // (1/t) log a2_t
    double eig_min{};   // a2_t
};

/// Empirical decay rate of the least eigenvalue along a time grid, read at
/// the largest grid time (the series carries a known O(1/t) bias, so no
/// fitting is done).
struct RateReport {
    std::optional<double> predicted_gap;  // a - eta (negative); absent when trivial
    std::vector<RateRow> series;
    double final_estimate{};
    std::optional<double> abs_error;  // |final_estimate - (a - eta)|

    enum class Faithful { Immediately, AtTime, NeverInWindow };
    Faithful faithful_kind{Faithful::NeverInWindow};
    double faithful_from{};  // valid when faithful_kind == AtTime

    bool underflow_truncated{};
    double underflow_at{};
    bool trivial_regime{};
};

/// Evolves rho0 on the grid and reports the series (1/t) log a2_t together
/// with the faithfulness onset. Preconditions: rho0 is a density matrix
/// away from the absorbing state (operator-norm distance > 1e-8, else
/// DegenerateStart) and, when a gap is predicted, max(grid) >= 10/gap.
RateReport empirical_rate(const PreparedGenerator& gen, const Mat2& rho0,
                          const std::vector<double>& grid);

/// Decay series of t -> (1/t) log omega(T_t(p)), realized through the
/// predual: omega(T_t(p)) = tr(T*_t(rho) p).
struct ProjectionDecayReport {
    std::vector<std::pair<double, double>> series;
    double final_estimate{};
    std::optional<double> predicted_limit;  // a-eta on |e2><e2|, 0 otherwise
    std::optional<double> abs_error;
};

ProjectionDecayReport projection_decay(const PreparedGenerator& gen, const Mat2& omega,
                                       const Mat2& p, const std::vector<double>& grid);

/// Max residual over the grid of <e2, T*_t(|e2><e2|) e2> against the exact
/// solution e^{t(a-eta)} of its renewal equation.
double volterra_identity_check(const YZGenerator& g, const std::vector<double>& grid);

/// Comparison of empirical projection decay against the spectral data of
/// the positive operator exp(-J*(|e1><e1|)): for each projection p the
/// large-t limit of omega_t(p)^{1/t} equals the largest eigenvalue of that
/// operator whose eigenspace p overlaps.
struct GoverningOperatorReport {
    struct Entry {
        std::string projection;  // label
        int state_index{};
        double empirical{};
        double predicted{};
        double discrepancy{};
    };
    std::vector<Entry> entries;
    double max_discrepancy{};
};

/// The projection set is {|e1><e1|, |e2><e2|, I} plus six fixed rank-one
/// projections along the Bloch axes +x, -x, +y, -y and two diagonal
/// directions, chosen to land in the "otherwise" branch.
GoverningOperatorReport governing_operator_check(const YZGenerator& g,
                                                 const std::vector<double>& grid,
                                                 const std::vector<Mat2>& sample_states);

}  // namespace blochldp

#endif  // BLOCHLDP_DEVIATIONS_HPP
