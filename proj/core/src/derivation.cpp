#include "solv3/derivation.hpp"

#include <algorithm>
#include <cmath>

#include "solv3/errors.hpp"

namespace solv3 {

namespace {

// D as a 3x3 matrix acting on (a, w1, w2).
Mat3 derivation_matrix(const Derivation& d) {
    Mat3 m = Mat3::Zero();
    m(1, 0) = d.xi.x();
    m(2, 0) = d.xi.y();
    m.block<2, 2>(1, 1) = d.dstar;
    return m;
}

std::vector<AlgebraElement> kernel_basis3(const Mat3& m, double tol) {
    Eigen::JacobiSVD<Mat3> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double scale = std::max(sv(0), 1.0);
    std::vector<AlgebraElement> out;
    for (int i = 0; i < 3; ++i) {
        if (sv(i) <= tol * scale) {
            out.push_back(AlgebraElement::from_vec3(svd.matrixV().col(i)));
        }
    }
    return out;
}

}  // namespace

Derivation make_derivation(const GroupClass& cls, const Mat2& dstar, const Vec2& xi, double tol) {
    const Mat2 th = theta_of(cls);
    if ((dstar * th - th * dstar).norm() > tol * std::max(1.0, dstar.norm())) {
        throw SemanticError("dstar must commute with the structure matrix of the group class");
    }
    if (dstar.norm() == 0.0 && xi.norm() == 0.0) {
        throw SemanticError("derivation must be nonzero");
    }
    if (cls.kind == GroupKind::R2 && (dstar * Vec2(1, 0)).norm() > tol) {
        throw SemanticError(
            "on the plane quotient the first nilradical coordinate is periodic; "
            "the induced vector field descends only when dstar annihilates e1");
    }
    return {cls, dstar, xi};
}

AlgebraElement apply_derivation(const Derivation& d, const AlgebraElement& x) {
    return {0.0, x.a * d.xi + d.dstar * x.w};
}

StructuralPredicates structural_predicates(const Derivation& d, double tol) {
    StructuralPredicates p;
    const double scale = std::max(1.0, d.dstar.norm());
    p.dstar_zero = d.dstar.norm() <= tol;
    p.dstar_invertible = std::abs(d.dstar.determinant()) > tol * scale * scale;
    p.complex_pair = std::abs(eig2(d.dstar).first.imag()) > tol;
    Eigen::JacobiSVD<Mat2> svd(d.dstar, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    for (int i = 0; i < 2; ++i) {
        if (sv(i) <= tol * std::max(sv(0), 1.0)) p.ker_dstar_basis.push_back(svd.matrixV().col(i));
    }
    return p;
}

Decomposition decompose(const Derivation& d, double tol) {
    Decomposition out;
    auto [l1, l2] = eig2(d.dstar);
    out.spectrum = {std::complex<double>(0.0, 0.0), l1, l2};
    std::sort(out.spectrum.begin(), out.spectrum.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });

    const Mat3 m = derivation_matrix(d);
    // Generalized eigenspace for a real-part class = kernel of the product of
    // (M - mu I) over the eigenvalues of the class, with algebraic
    // multiplicity (complex conjugates combined into a real quadratic
    // factor).
    auto subspace = [&](int want_sign) {
        std::vector<std::complex<double>> inside;
        for (const auto& mu : out.spectrum) {
            const int sgn = (mu.real() > tol) ? 1 : (mu.real() < -tol ? -1 : 0);
            if (sgn == want_sign) inside.push_back(mu);
        }
        if (inside.empty()) return std::vector<AlgebraElement>{};
        Mat3 q = Mat3::Identity();
        for (std::size_t i = 0; i < inside.size(); ++i) {
            const auto& mu = inside[i];
            if (std::abs(mu.imag()) <= tol) {
                q = q * (m - mu.real() * Mat3::Identity());
            } else if (i + 1 < inside.size() &&
                       std::abs(inside[i + 1].imag() + mu.imag()) <= tol &&
                       std::abs(inside[i + 1].real() - mu.real()) <= tol) {
                q = q * (m * m - 2.0 * mu.real() * m + std::norm(mu) * Mat3::Identity());
                ++i;
            } else {
                // Unpaired complex eigenvalue cannot occur for a real matrix.
                q = q * (m * m - 2.0 * mu.real() * m + std::norm(mu) * Mat3::Identity());
            }
        }
        return kernel_basis3(q, tol);
    };

    out.gplus = subspace(1);
    out.gzero = subspace(0);
    out.gminus = subspace(-1);
    out.gzero_dim = static_cast<int>(out.gzero.size());
    out.g_equals_gzero = out.gzero_dim == 3;
    if (out.gzero_dim == 2) {
        const AlgebraElement br = bracket(d.cls, out.gzero[0], out.gzero[1]);
        out.gzero_is_aff = br.norm() > tol;
    }
    return out;
}

}  // namespace solv3
