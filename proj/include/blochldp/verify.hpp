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

#ifndef BLOCHLDP_VERIFY_HPP
#define BLOCHLDP_VERIFY_HPP

#include <string>
#include <vector>

#include "blochldp/deviations.hpp"

namespace blochldp {

/// One structural check: a named residual against a fixed threshold.
/// Checks that do not apply to the given generator form are reported as
/// skipped rather than failed.
struct VerifyCheck {
    std::string name;
    bool pass{};
    bool skipped{};
    double residual{};
    double threshold{};
    std::string note;
};

struct VerifySummary {
    std::vector<VerifyCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks) {
            if (!c.skipped && !c.pass) return false;
        }
        return true;
    }
};

/// Runs the full structural suite on one generator: trace annihilation and
/// preservation, complete positivity of the evolved maps (Choi spectra),
/// the semigroup law, closed-form vs exponential evolution agreement,
/// stationarity of the absorbing state, the contraction-semigroup ordering,
/// the exact diagonal/off-diagonal decay identities, the image of the
/// stationary projection under the dissipative part, and the renewal
/// integral equation.
VerifySummary verify_generator(const PreparedGenerator& gen);

}  // namespace blochldp

#endif  // BLOCHLDP_VERIFY_HPP
