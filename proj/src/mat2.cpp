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

#include "blochldp/mat2.hpp"

#include <algorithm>

namespace blochldp {

Mat2 operator+(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 4; ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
}

Mat2 operator-(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 4; ++i) r.e[i] = a.e[i] - b.e[i];
    return r;
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
    Mat2 r;
    r(0, 0) = a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0);
    r(0, 1) = a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1);
    r(1, 0) = a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0);
    r(1, 1) = a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1);
    return r;
}

Mat2 operator*(Complex s, const Mat2& a) {
    Mat2 r;
    for (int i = 0; i < 4; ++i) r.e[i] = s * a.e[i];
    return r;
}

Mat2 operator*(double s, const Mat2& a) { return Complex(s, 0.0) * a; }

Vec2 operator*(const Mat2& a, const Vec2& v) {
    return Vec2{a(0, 0) * v.x + a(0, 1) * v.y, a(1, 0) * v.x + a(1, 1) * v.y};
}

Mat2 dagger(const Mat2& a) {
    Mat2 r;
    r(0, 0) = std::conj(a(0, 0));
    r(0, 1) = std::conj(a(1, 0));
    r(1, 0) = std::conj(a(0, 1));
    r(1, 1) = std::conj(a(1, 1));
    return r;
}

Mat2 conj(const Mat2& a) {
    Mat2 r;
    for (int i = 0; i < 4; ++i) r.e[i] = std::conj(a.e[i]);
    return r;
}

Complex trace(const Mat2& a) { return a(0, 0) + a(1, 1); }

Complex det(const Mat2& a) { return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0); }

double max_abs(const Mat2& a) {
    double m = 0.0;
    for (const auto& z : a.e) m = std::max(m, std::abs(z));
    return m;
}

double max_abs_diff(const Mat2& a, const Mat2& b) { return max_abs(a - b); }

double op_norm(const Mat2& a) {
    // Largest singular value: sqrt of the top eigenvalue of A^dagger A.
    const Mat2 g = dagger(a) * a;
    const double tr = std::real(trace(g));
    const double dt = std::real(det(g));
    const double disc = std::max(0.0, tr * tr / 4.0 - dt);
    return std::sqrt(std::max(0.0, tr / 2.0 + std::sqrt(disc)));
}

bool all_finite(const Mat2& a) {
    for (const auto& z : a.e) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
}

Complex inner(const Vec2& u, const Vec2& v) {
    return std::conj(u.x) * v.x + std::conj(u.y) * v.y;
}

double norm(const Vec2& v) { return std::sqrt(std::norm(v.x) + std::norm(v.y)); }

Mat2 projector(const Vec2& u) {
    const double n2 = std::norm(u.x) + std::norm(u.y);
    Mat2 p = outer(u, u);
    return (1.0 / n2) * p;
}

Mat2 outer(const Vec2& u, const Vec2& v) {
    Mat2 r;
    r(0, 0) = u.x * std::conj(v.x);
    r(0, 1) = u.x * std::conj(v.y);
    r(1, 0) = u.y * std::conj(v.x);
    r(1, 1) = u.y * std::conj(v.y);
    return r;
}

Vec2 orthogonal_unit(const Vec2& u) {
    Vec2 w{-std::conj(u.y), std::conj(u.x)};
    const double n = norm(w);
    return Vec2{w.x / n, w.y / n};
}

double hermiticity_defect(const Mat2& a) {
    double d = std::abs(a(0, 1) - std::conj(a(1, 0)));
    d = std::max(d, std::abs(a(0, 0) - std::conj(a(0, 0))));
    d = std::max(d, std::abs(a(1, 1) - std::conj(a(1, 1))));
    return d;
}

bool is_hermitian(const Mat2& a, double tol) { return hermiticity_defect(a) <= tol; }

bool is_density_matrix(const Mat2& a, double tol) {
    if (!is_hermitian(a, tol)) return false;
    if (std::abs(trace(a) - Complex(1.0)) > tol) return false;
    const auto s = eig_hermitian2(a, tol);
    return s[1].eigenvalue >= -tol;
}

Mat2 sigma_x() { return Mat2{{Complex(0), Complex(1), Complex(1), Complex(0)}}; }
Mat2 sigma_y() { return Mat2{{Complex(0), Complex(0, -1), Complex(0, 1), Complex(0)}}; }
Mat2 sigma_z() { return Mat2{{Complex(1), Complex(0), Complex(0), Complex(-1)}}; }

BlochState pauli_decompose(const Mat2& m, double tol) {
    if (const double d = hermiticity_defect(m); d > tol) {
        throw NonHermitian("pauli_decompose: hermiticity defect " + std::to_string(d));
    }
    BlochState b;
    b.trace = std::real(m(0, 0) + m(1, 1));
    b.u[0] = 2.0 * std::real(m(1, 0));
    b.u[1] = 2.0 * std::imag(m(1, 0));
    b.u[2] = std::real(m(0, 0) - m(1, 1));
    return b;
}

Mat2 pauli_compose(const BlochState& b) {
    Mat2 r;
    r(0, 0) = Complex(0.5 * (b.trace + b.u[2]), 0.0);
    r(1, 1) = Complex(0.5 * (b.trace - b.u[2]), 0.0);
    r(0, 1) = Complex(0.5 * b.u[0], -0.5 * b.u[1]);
    r(1, 0) = Complex(0.5 * b.u[0], 0.5 * b.u[1]);
    return r;
}

std::array<SpectralPair, 2> eig_hermitian2(const Mat2& m, double tol) {
    if (const double d = hermiticity_defect(m); d > tol) {
        throw NonHermitian("eig_hermitian2: hermiticity defect " + std::to_string(d));
    }
    const BlochState b = pauli_decompose(m, tol);
    const double r = b.u_norm();
    const double q = 0.5 * b.trace;
    const double h = 0.5 * r;

    // Stable eigenvalues: take the root away from cancellation first, then
    // recover the other one from the determinant (lambda1 * lambda2 = det).
    const double dt = std::real(m(0, 0)) * std::real(m(1, 1)) - std::norm(m(0, 1));
    double lam1, lam2;
    if (q > 0.0 && q + h > 0.0) {
        lam1 = q + h;
        lam2 = dt / lam1;
    } else if (q < 0.0 && q - h < 0.0) {
        lam2 = q - h;
        lam1 = dt / lam2;
    } else {
        lam1 = q + h;
        lam2 = q - h;
    }
    if (lam1 < lam2) std::swap(lam1, lam2);

    std::array<SpectralPair, 2> out;
    if (r <= 1e-12) {
        out[0] = SpectralPair{lam1, Mat2::diag(1.0, 0.0), true};
        out[1] = SpectralPair{lam2, Mat2::diag(0.0, 1.0), true};
        return out;
    }
    BlochState n1{1.0, {b.u[0] / r, b.u[1] / r, b.u[2] / r}};
    BlochState n2{1.0, {-n1.u[0], -n1.u[1], -n1.u[2]}};
    out[0] = SpectralPair{lam1, pauli_compose(n1), false};
    out[1] = SpectralPair{lam2, pauli_compose(n2), false};
    return out;
}

Mat2 expm2(const Mat2& a) {
    if (!all_finite(a)) throw NonFinite("expm2: non-finite entry");
    const Complex half_tr = 0.5 * trace(a);
    Mat2 b = a;
    b(0, 0) -= half_tr;
    b(1, 1) -= half_tr;
    // b is traceless, so b^2 = mu^2 I.
    const Complex mu2 = b(0, 0) * b(0, 0) + b(0, 1) * b(1, 0);
    const Complex mu = std::sqrt(mu2);
    Complex ch, shc;  // cosh(mu), sinh(mu)/mu
    if (std::abs(mu) < 1e-4) {
        ch = 1.0 + mu2 * (0.5 + mu2 * (1.0 / 24.0 + mu2 / 720.0));
        shc = 1.0 + mu2 * (1.0 / 6.0 + mu2 * (1.0 / 120.0 + mu2 / 5040.0));
    } else {
        ch = std::cosh(mu);
        shc = std::sinh(mu) / mu;
    }
    const Complex scale = std::exp(half_tr);
    Mat2 r = shc * b;
    r(0, 0) += ch;
    r(1, 1) += ch;
    return scale * r;
}

}  // namespace blochldp
