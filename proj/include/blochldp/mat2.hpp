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

#ifndef BLOCHLDP_MAT2_HPP
#define BLOCHLDP_MAT2_HPP

#include <array>
#include <cmath>
#include <complex>

#include "blochldp/errors.hpp"

namespace blochldp {

using Complex = std::complex<double>;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kIdentityTol = 1e-10;

/// Complex 2x2 matrix with value semantics. Row-major storage.
struct Mat2 {
    std::array<Complex, 4> e{};  // e[2*row + col]

    constexpr Complex& operator()(int r, int c) { return e[2 * r + c]; }
    constexpr const Complex& operator()(int r, int c) const { return e[2 * r + c]; }

    static Mat2 zero() { return Mat2{}; }
    static Mat2 identity() { return Mat2{{Complex(1), Complex(0), Complex(0), Complex(1)}}; }
    static Mat2 diag(Complex a, Complex b) { return Mat2{{a, Complex(0), Complex(0), b}}; }
};

/// Complex 2-vector.
struct Vec2 {
    Complex x{}, y{};
};

Mat2 operator+(const Mat2& a, const Mat2& b);
Mat2 operator-(const Mat2& a, const Mat2& b);
Mat2 operator*(const Mat2& a, const Mat2& b);
Mat2 operator*(Complex s, const Mat2& a);
Mat2 operator*(double s, const Mat2& a);
Vec2 operator*(const Mat2& a, const Vec2& v);

/// Conjugate transpose.
Mat2 dagger(const Mat2& a);
/// Entrywise complex conjugate (no transpose).
Mat2 conj(const Mat2& a);
Complex trace(const Mat2& a);
Complex det(const Mat2& a);
/// Largest entrywise absolute value.
double max_abs(const Mat2& a);
double max_abs_diff(const Mat2& a, const Mat2& b);
/// Operator (spectral) norm; exact closed form for 2x2.
double op_norm(const Mat2& a);
bool all_finite(const Mat2& a);

/// <u, v> with the physics convention: antilinear in the first argument.
Complex inner(const Vec2& u, const Vec2& v);
double norm(const Vec2& v);
/// Rank-one projection |u><u| / <u,u>.
Mat2 projector(const Vec2& u);
/// |u><v| (no normalization).
Mat2 outer(const Vec2& u, const Vec2& v);
/// A unit vector orthogonal to u (canonical choice (-conj(b), conj(a))).
Vec2 orthogonal_unit(const Vec2& u);

/// max |A_ij - conj(A_ji)|.
double hermiticity_defect(const Mat2& a);
bool is_hermitian(const Mat2& a, double tol = kHermitianTol);
/// Hermitian, unit trace, eigenvalues >= -tol.
bool is_density_matrix(const Mat2& a, double tol = kHermitianTol);

// Pauli matrices.
Mat2 sigma_x();
Mat2 sigma_y();
Mat2 sigma_z();

/// Real coordinates (trace, u1, u2, u3) of a self-adjoint 2x2 matrix:
/// m = (trace*I + u.sigma)/2 with u_i = tr(m sigma_i).
struct BlochState {
    double trace{};
    std::array<double, 3> u{};

    double u_norm() const {
        return std::sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
    }
};

/// Decompose a Hermitian matrix into Pauli coordinates.
/// Throws NonHermitian if the Hermiticity check fails.
BlochState pauli_decompose(const Mat2& m, double tol = kHermitianTol);

/// Rebuild the matrix (trace*I + u.sigma)/2. Inverse of pauli_decompose.
Mat2 pauli_compose(const BlochState& b);

/// One spectral atom of a Hermitian 2x2 matrix: eigenvalue plus the rank-one
/// projection onto its eigenspace. `degenerate` is set when the spectrum is
/// (numerically) a double point, in which case the projections are the
/// standard-basis ones and not canonical.
struct SpectralPair {
    double eigenvalue{};
    Mat2 projection{};
    bool degenerate{};
};

/// Spectral decomposition of a Hermitian 2x2 matrix, eigenvalues sorted
/// descending. Eigenvalues are (tr +- ||u||)/2; the small one is computed
/// through det/lambda_max to stay accurate when it underflows the large one
/// (needed for decay-rate estimation at large times). Projections are
/// (I +- (u/||u||).sigma)/2, or the standard basis when ||u|| <= 1e-12
/// (degenerate spectrum, eigenbasis not unique).
std::array<SpectralPair, 2> eig_hermitian2(const Mat2& m, double tol = kHermitianTol);

/// exp(A) for arbitrary complex 2x2 A, by the exact trace/determinant
/// closed form: with B = A - (trA/2) I and mu^2 = B_11^2 + B_12 B_21,
/// exp(A) = e^{trA/2} (cosh(mu) I + sinhc(mu) B).
Mat2 expm2(const Mat2& a);

}  // namespace blochldp

#endif  // BLOCHLDP_MAT2_HPP
