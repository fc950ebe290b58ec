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

#ifndef BLOCHLDP_SUPEROP_HPP
#define BLOCHLDP_SUPEROP_HPP

#include <array>

#include "blochldp/mat2.hpp"

namespace blochldp {

/// Complex 4x4 matrix acting on column-stacked 2x2 matrices.
///
/// Vectorization convention used everywhere in this project:
/// column stacking, vec(rho) = (rho_00, rho_10, rho_01, rho_11),
/// so that vec(A rho B) = (B^T kron A) vec(rho).
struct Mat4 {
    std::array<Complex, 16> e{};  // e[4*row + col]

    constexpr Complex& operator()(int r, int c) { return e[4 * r + c]; }
    constexpr const Complex& operator()(int r, int c) const { return e[4 * r + c]; }

    static Mat4 zero() { return Mat4{}; }
    static Mat4 identity() {
        Mat4 m;
        for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
        return m;
    }
};

using SuperOp4 = Mat4;

/// Complex 4-vector (a column-stacked 2x2 matrix).
using Vec4 = std::array<Complex, 4>;

Mat4 operator+(const Mat4& a, const Mat4& b);
Mat4 operator-(const Mat4& a, const Mat4& b);
Mat4 operator*(const Mat4& a, const Mat4& b);
Mat4 operator*(Complex s, const Mat4& a);
Mat4 operator*(double s, const Mat4& a);
Vec4 operator*(const Mat4& a, const Vec4& v);

double max_abs(const Mat4& a);
double max_abs_diff(const Mat4& a, const Mat4& b);
/// Maximum column absolute sum.
double one_norm(const Mat4& a);
bool all_finite(const Mat4& a);

/// Column-stacking vectorization and its inverse.
Vec4 vec(const Mat2& m);
Mat2 unvec(const Vec4& v);

/// Kronecker product of 2x2 blocks: (a kron b)(2i+k, 2j+l) = a(i,j) b(k,l).
Mat4 kron(const Mat2& a, const Mat2& b);

/// Superoperator of rho -> A rho B under column stacking: B^T kron A.
Mat4 sandwich_superop(const Mat2& a, const Mat2& b);
/// rho -> A rho.
Mat4 left_superop(const Mat2& a);
/// rho -> rho B.
Mat4 right_superop(const Mat2& b);

/// Apply a superoperator to a 2x2 matrix.
Mat2 apply(const Mat4& s, const Mat2& m);

/// exp(t*s) by scaling and squaring with a Taylor kernel; the squaring
/// count comes from the 1-norm of t*s. No eigendecomposition is used, so
/// defective superoperators are handled exactly as well as diagonalizable
/// ones. exp(0) is the identity exactly.
/// Throws NonFinite on NaN/Inf input.
Mat4 expm4(const Mat4& s, double t);

/// Choi matrix sum_ij E_ij kron s(E_ij) over the matrix units E_ij.
/// The represented map is completely positive iff the result is positive
/// semidefinite (all four eigenvalues >= -1e-10 numerically).
Mat4 choi(const Mat4& s);

/// Eigenvalues of a Hermitian 4x4 matrix, sorted descending.
/// Cyclic Jacobi on the real symmetric 8x8 embedding [[X,-Y],[Y,X]].
std::array<double, 4> eig4_hermitian(const Mat4& a);

/// max |tr(s(basis_k))| over the basis {I, sigma_1, sigma_2, sigma_3}:
/// trace-annihilation defect of a generator.
double trace_annihilation_defect(const Mat4& s);

/// max |tr(s(basis_k)) - tr(basis_k)|: trace-preservation defect of a map.
double trace_preservation_defect(const Mat4& s);

}  // namespace blochldp

#endif  // BLOCHLDP_SUPEROP_HPP
