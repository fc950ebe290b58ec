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

#ifndef BLOCHLDP_ERRORS_HPP
#define BLOCHLDP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace blochldp {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A matrix required to be Hermitian is not, beyond tolerance.
struct NonHermitian : Error {
    explicit NonHermitian(const std::string& what) : Error(what) {}
};

/// NaN or Inf encountered where finite values are required.
struct NonFinite : Error {
    explicit NonFinite(const std::string& what) : Error(what) {}
};

/// A generator in y/z form violates one of its structural invariants.
/// The message names the violated invariant(s).
struct InvalidGenerator : Error {
    explicit InvalidGenerator(const std::string& what) : Error(what) {}
};

/// Dissipation parameters violate their admissibility constraint.
struct InvalidParams : Error {
    explicit InvalidParams(const std::string& what) : Error(what) {}
};

/// Conversion to y/z form requested for parameters whose stationary state
/// is not pure (nu > 0).
struct NotPureAbsorbing : Error {
    explicit NotPureAbsorbing(const std::string& what) : Error(what) {}
};

/// The spectral gap eta - a is not strictly positive.
struct NonPositiveGap : Error {
    explicit NonPositiveGap(const std::string& what) : Error(what) {}
};

/// A closed-form operator identity failed; indicates an invalid generator
/// rather than a numerical problem.
struct IdentityViolation : Error {
    explicit IdentityViolation(const std::string& what) : Error(what) {}
};

/// The operator ordering 0 <= S_t(rho) <= T_t(rho) failed.
struct OrderingViolation : Error {
    explicit OrderingViolation(const std::string& what) : Error(what) {}
};

/// Input expected to be a rank-one orthogonal projection is not.
struct NotAProjection : Error {
    explicit NotAProjection(const std::string& what) : Error(what) {}
};

/// Rate estimation started at (or too close to) the absorbing state.
struct DegenerateStart : Error {
    explicit DegenerateStart(const std::string& what) : Error(what) {}
};

/// Generic precondition failure (bad grid, bad range, ...).
struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& what) : Error(what) {}
};

/// Malformed configuration or JSON input.
struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace blochldp

#endif  // BLOCHLDP_ERRORS_HPP
