#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <utility>
#include <vector>

namespace solv3 {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

// 2x2 rotation by angle s.
inline Mat2 rot2(double s) {
    Mat2 r;
    const double c = std::cos(s), sn = std::sin(s);
    r << c, -sn, sn, c;
    return r;
}

// Eigenvalues of a real 2x2 matrix in closed form.
inline std::pair<std::complex<double>, std::complex<double>> eig2(const Mat2& m) {
    const double tr = m.trace();
    const double det = m.determinant();
    const std::complex<double> disc = std::sqrt(std::complex<double>(tr * tr / 4.0 - det, 0.0));
    const std::complex<double> half(tr / 2.0, 0.0);
    return {half + disc, half - disc};
}

// Matrix exponential of a real 2x2 matrix via the Cayley–Hamilton
// decomposition M = aI + N with N^2 = (a^2 - det M) I.
inline Mat2 expm2(const Mat2& m) {
    const double a = m.trace() / 2.0;
    const Mat2 n = m - a * Mat2::Identity();
    const double q = a * a - m.determinant();  // n^2 = q I
    double c, s;                               // e^N = c I + s N
    const double aq = std::sqrt(std::abs(q));
    if (aq < 1e-8) {
        // Nilpotent to working precision: e^N = I + N + O(q).
        c = 1.0 + q / 2.0;
        s = 1.0 + q / 6.0;
    } else if (q > 0.0) {
        c = std::cosh(aq);
        s = std::sinh(aq) / aq;
    } else {
        c = std::cos(aq);
        s = std::sin(aq) / aq;
    }
    return std::exp(a) * (c * Mat2::Identity() + s * n);
}

// phi1(M) = (e^M - I) M^{-1}, extended continuously over singular M by the
// power series sum_{k>=0} M^k / (k+1)!.
inline Mat2 phi1m(const Mat2& m) {
    if (std::abs(m.determinant()) > 1e-12 && m.norm() > 1e-6) {
        return (expm2(m) - Mat2::Identity()) * m.inverse();
    }
    // Singular (or nearly singular) argument: evaluate the series at a
    // scaled-down argument and undo the scaling with the doubling identity
    // phi1(2A) = phi1(A) (e^A + I) / 2, keeping the truncation error at
    // machine precision for any argument size.
    int doublings = 0;
    Mat2 a = m;
    while (a.norm() > 0.5) {
        a *= 0.5;
        ++doublings;
    }
    Mat2 acc = Mat2::Identity();
    Mat2 term = Mat2::Identity();
    double fact = 1.0;
    for (int k = 1; k <= 40; ++k) {
        term = term * a;
        fact *= static_cast<double>(k + 1);
        acc += term / fact;
        if (term.norm() / fact < 1e-18) break;
    }
    Mat2 ea = expm2(a);
    for (int j = 0; j < doublings; ++j) {
        acc = 0.5 * acc * (ea + Mat2::Identity());
        ea = ea * ea;
    }
    return acc;
}

// Canonical representative of x modulo 2L in the interval (-L, L].
inline double wrap_to(double x, double L) {
    double r = std::remainder(x, 2.0 * L);  // in [-L, L]
    if (r <= -L) r += 2.0 * L;
    return r;
}

// Real eigenvectors (unit length) of a real 2x2 matrix, paired with their
// eigenvalues; empty when the spectrum is non-real.
inline std::vector<std::pair<double, Vec2>> real_eigvecs(const Mat2& m, double tol = 1e-9) {
    std::vector<std::pair<double, Vec2>> out;
    auto [l1, l2] = eig2(m);
    if (std::abs(l1.imag()) > tol) return out;
    for (double lam : {l1.real(), l2.real()}) {
        const Mat2 a = m - lam * Mat2::Identity();
        // Kernel vector of a rank<=1 matrix: take the better-conditioned row.
        Vec2 r0 = a.row(0), r1 = a.row(1);
        Vec2 v;
        if (r0.norm() >= r1.norm() && r0.norm() > tol) {
            v = Vec2(-r0.y(), r0.x());
        } else if (r1.norm() > tol) {
            v = Vec2(-r1.y(), r1.x());
        } else {
            v = Vec2(1.0, 0.0);  // a == 0: whole plane
        }
        v.normalize();
        const bool dup = !out.empty() && std::abs(out.front().first - lam) < tol &&
                         std::abs(std::abs(out.front().second.dot(v)) - 1.0) < tol;
        if (!dup) out.emplace_back(lam, v);
        if (a.norm() <= tol && out.size() == 1) {
            out.emplace_back(lam, Vec2(0.0, 1.0));  // scalar matrix: add e2
        }
    }
    return out;
}

}  // namespace solv3
