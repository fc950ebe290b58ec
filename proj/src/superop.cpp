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

#include "blochldp/superop.hpp"

#include <algorithm>
#include <cmath>

namespace blochldp {

Mat4 operator+(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < 16; ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
}

Mat4 operator-(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < 16; ++i) r.e[i] = a.e[i] - b.e[i];
    return r;
}

Mat4 operator*(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < 4; ++i) {
        for (int k = 0; k < 4; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0)) continue;
            for (int j = 0; j < 4; ++j) r(i, j) += aik * b(k, j);
        }
    }
    return r;
}

Mat4 operator*(Complex s, const Mat4& a) {
    Mat4 r;
    for (int i = 0; i < 16; ++i) r.e[i] = s * a.e[i];
    return r;
}

Mat4 operator*(double s, const Mat4& a) { return Complex(s, 0.0) * a; }

Vec4 operator*(const Mat4& a, const Vec4& v) {
    Vec4 r{};
    for (int i = 0; i < 4; ++i) {
        Complex acc(0.0);
        for (int j = 0; j < 4; ++j) acc += a(i, j) * v[j];
        r[i] = acc;
    }
    return r;
}

double max_abs(const Mat4& a) {
    double m = 0.0;
    for (const auto& z : a.e) m = std::max(m, std::abs(z));
    return m;
}

double max_abs_diff(const Mat4& a, const Mat4& b) { return max_abs(a - b); }

double one_norm(const Mat4& a) {
    double m = 0.0;
    for (int j = 0; j < 4; ++j) {
        double col = 0.0;
        for (int i = 0; i < 4; ++i) col += std::abs(a(i, j));
        m = std::max(m, col);
    }
    return m;
}

bool all_finite(const Mat4& a) {
    for (const auto& z : a.e) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
}

Vec4 vec(const Mat2& m) {
    return Vec4{m(0, 0), m(1, 0), m(0, 1), m(1, 1)};
}

Mat2 unvec(const Vec4& v) {
    Mat2 m;
    m(0, 0) = v[0];
    m(1, 0) = v[1];
    m(0, 1) = v[2];
    m(1, 1) = v[3];
    return m;
}

Mat4 kron(const Mat2& a, const Mat2& b) {
    Mat4 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return r;
}

Mat4 sandwich_superop(const Mat2& a, const Mat2& b) {
    Mat2 bt;  // B^T
    bt(0, 0) = b(0, 0);
    bt(0, 1) = b(1, 0);
    bt(1, 0) = b(0, 1);
    bt(1, 1) = b(1, 1);
    return kron(bt, a);
}

Mat4 left_superop(const Mat2& a) { return sandwich_superop(a, Mat2::identity()); }

Mat4 right_superop(const Mat2& b) { return sandwich_superop(Mat2::identity(), b); }

Mat2 apply(const Mat4& s, const Mat2& m) { return unvec(s * vec(m)); }

Mat4 expm4(const Mat4& s, double t) {
    if (!all_finite(s) || !std::isfinite(t)) throw NonFinite("expm4: non-finite input");
    Mat4 a = t * s;
    if (!all_finite(a)) throw NonFinite("expm4: t * s overflows");
    const double nrm = one_norm(a);
    if (!std::isfinite(nrm)) throw NonFinite("expm4: t * s overflows");
    if (nrm == 0.0) return Mat4::identity();

    // Scale below 1/2, run the Taylor series (18 terms keeps the kernel at
    // full double precision), then undo by repeated squaring.
    int squarings = 0;
    if (nrm > 0.5) {
        squarings = static_cast<int>(std::ceil(std::log2(nrm / 0.5)));
        a = std::ldexp(1.0, -squarings) * a;
    }

    Mat4 result = Mat4::identity();
    Mat4 term = Mat4::identity();
    for (int k = 1; k <= 18; ++k) {
        term = (1.0 / k) * (term * a);
        result = result + term;
    }
    for (int i = 0; i < squarings; ++i) result = result * result;
    return result;
}

Mat4 choi(const Mat4& s) {
    Mat4 c;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            Mat2 unit;  // E_ij
            unit(i, j) = 1.0;
            const Mat2 image = apply(s, unit);
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) c(2 * i + k, 2 * j + l) = image(k, l);
        }
    }
    return c;
}

namespace {

// Cyclic Jacobi for a real symmetric n x n matrix held in a flat array.
// Only eigenvalues are needed, so no eigenvector accumulation.
template <int N>
void jacobi_eigenvalues(std::array<double, N * N>& m) {
    auto at = [&m](int r, int c) -> double& {
        return m[static_cast<std::size_t>(N) * r + c];
    };
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < N; ++p)
            for (int q = p + 1; q < N; ++q) off += at(p, q) * at(p, q);
        if (off < 1e-30) break;
        for (int p = 0; p < N; ++p) {
            for (int q = p + 1; q < N; ++q) {
                const double apq = at(p, q);
                if (std::abs(apq) < 1e-300) continue;
                const double tau = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double tt = (tau >= 0.0 ? 1.0 : -1.0) /
                                  (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + tt * tt);
                const double sgn = tt * c;
                for (int k = 0; k < N; ++k) {
                    const double mkp = at(k, p), mkq = at(k, q);
                    at(k, p) = c * mkp - sgn * mkq;
                    at(k, q) = sgn * mkp + c * mkq;
                }
                for (int k = 0; k < N; ++k) {
                    const double mpk = at(p, k), mqk = at(q, k);
                    at(p, k) = c * mpk - sgn * mqk;
                    at(q, k) = sgn * mpk + c * mqk;
                }
            }
        }
    }
}

}  // namespace

std::array<double, 4> eig4_hermitian(const Mat4& a) {
    // Real symmetric embedding [[X, -Y], [Y, X]] of X + iY; every eigenvalue
    // of the Hermitian input shows up twice.
    std::array<double, 64> r{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const double x = 0.5 * (a(i, j).real() + a(j, i).real());
            const double y = 0.5 * (a(i, j).imag() - a(j, i).imag());
            r[8 * i + j] = x;
            r[8 * (i + 4) + (j + 4)] = x;
            r[8 * i + (j + 4)] = -y;
            r[8 * (i + 4) + j] = y;
        }
    }
    jacobi_eigenvalues<8>(r);
    std::array<double, 8> diag;
    for (int i = 0; i < 8; ++i) diag[i] = r[8 * i + i];
    std::sort(diag.begin(), diag.end(), std::greater<double>());
    return {diag[0], diag[2], diag[4], diag[6]};
}

double trace_annihilation_defect(const Mat4& s) {
    const Mat2 basis[4] = {Mat2::identity(), sigma_x(), sigma_y(), sigma_z()};
    double d = 0.0;
    for (const auto& b : basis) d = std::max(d, std::abs(trace(apply(s, b))));
    return d;
}

double trace_preservation_defect(const Mat4& s) {
    const Mat2 basis[4] = {Mat2::identity(), sigma_x(), sigma_y(), sigma_z()};
    double d = 0.0;
    for (const auto& b : basis) d = std::max(d, std::abs(trace(apply(s, b)) - trace(b)));
    return d;
}

}  // namespace blochldp
