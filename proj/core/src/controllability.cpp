#include "solv3/controllability.hpp"

#include <algorithm>
#include <cmath>

#include "solv3/errors.hpp"

namespace solv3 {

namespace {

bool is_e_family(const GroupClass& cls) {
    return cls.kind == GroupKind::ETilde || cls.kind == GroupKind::En;
}

std::string class_label(const GroupClass& cls) {
    switch (cls.kind) {
        case GroupKind::R2Tilde:
            return "R2Tilde";
        case GroupKind::R2:
            return "R2";
        case GroupKind::R3:
            return "R3";
        case GroupKind::R3Lambda:
            return "R3Lambda";
        case GroupKind::R3PrimeLambda:
            return "R3Prime";
        case GroupKind::ETilde:
        case GroupKind::En:
            return "E";
    }
    return "?";
}

// True when every kernel direction of dstar lies inside the control
// distribution.
bool kernel_inside_delta(const LinearSystem& sys, const DistributionInfo& info,
                         const StructuralPredicates& preds, double tol) {
    (void)sys;
    for (const Vec2& k : preds.ker_dstar_basis) {
        Eigen::MatrixXd m(3, static_cast<Eigen::Index>(info.delta_basis.size()) + 1);
        for (std::size_t i = 0; i < info.delta_basis.size(); ++i) {
            m.col(static_cast<Eigen::Index>(i)) = info.delta_basis[i].as_vec3();
        }
        m.col(m.cols() - 1) = AlgebraElement(0.0, k).as_vec3();
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
        const auto& sv = svd.singularValues();
        int rank = 0;
        for (Eigen::Index i = 0; i < sv.size(); ++i) {
            if (sv(i) > tol * std::max(sv(0), 1.0)) ++rank;
        }
        if (rank > info.delta_dim) return false;
    }
    return true;
}

struct EigPair {
    double value = 0.0;
    Vec2 vec = Vec2::Zero();
};

// n is accepted as a left eigenvector of m when m^T n is parallel to n.
std::optional<double> left_eigenvalue(const Mat2& m, const Vec2& n, double tol) {
    const Vec2 mn = m.transpose() * n;
    const double mu = mn.dot(n) / n.squaredNorm();
    if ((mn - mu * n).norm() > tol * std::max(1.0, m.norm())) return std::nullopt;
    return mu;
}

std::optional<BarrierCertificate> half_plane_certificate(const LinearSystem& ns, const Vec2& shift,
                                                         double tol) {
    const Mat2 th = theta_of(ns.cls());
    const Mat2& ds = ns.drift.dstar;
    std::vector<Vec2> candidates;
    for (const auto& [val, vec] : real_eigvecs(th.transpose())) {
        (void)val;
        candidates.push_back(vec);
    }
    for (const auto& [val, vec] : real_eigvecs(ds.transpose())) {
        (void)val;
        candidates.push_back(vec);
    }

    std::optional<BarrierCertificate> best;
    double best_score = -1.0;
    for (const Vec2& n : candidates) {
        const auto eta = left_eigenvalue(th, n, tol);
        if (!eta || std::abs(*eta) <= tol) continue;
        const auto mu = left_eigenvalue(ds, n, tol);
        if (!mu) continue;
        bool controls_ok = true;
        for (std::size_t i = 1; i < ns.controls.size(); ++i) {
            if (std::abs((ds * ns.controls[i].w).dot(n)) > tol) controls_ok = false;
        }
        if (!controls_ok) continue;
        const double kappa = ns.drift.xi.dot(n) / *eta;
        const double score = std::abs(*mu * kappa);
        if (score > best_score) {
            BarrierCertificate cert;
            cert.kind = BarrierKind::HalfPlaneF;
            cert.drift = ns.drift;
            cert.shift = shift;
            cert.n = n;
            cert.kappa = kappa;
            cert.sigma = (*mu * kappa >= 0.0) ? 1.0 : -1.0;
            best = cert;
            best_score = score;
        }
    }
    if (best && best_score <= tol) {
        // A boundary with zero normal speed certifies invariance of the line
        // itself; keep it only if nothing one-sided exists.
        return best;
    }
    return best;
}

std::optional<BarrierCertificate> expanding_disk_certificate(const LinearSystem& ns,
                                                             const Vec2& shift, double tol) {
    const Mat2& ds = ns.drift.dstar;
    const double alpha = ds.trace() / 2.0;
    if (std::abs(alpha) <= tol) return std::nullopt;
    const Vec2 xi = ns.drift.xi;
    // Controls rotate the chart about q; the drift grows (alpha > 0) or
    // shrinks (alpha < 0) the distance to q outside radius |ds q| / |alpha|.
    const Vec2 q(xi.y(), -xi.x());
    const double r0 = (ds * q).norm() / (2.0 * std::abs(alpha));
    BarrierCertificate cert;
    cert.kind = BarrierKind::ExpandingDisk;
    cert.drift = ns.drift;
    cert.shift = shift;
    cert.center = q;
    cert.radius = 2.0 * r0 + xi.norm() + 1.0;
    cert.sigma = (alpha > 0.0) ? 1.0 : -1.0;
    return cert;
}

std::optional<BarrierCertificate> monotone_certificate(const LinearSystem& ns, const Vec2& shift,
                                                       double tol) {
    // Valid only when no control moves the nilradical directly.
    for (const auto& c : ns.controls) {
        if (c.w.norm() > tol) return std::nullopt;
    }
    const Vec2 xi = ns.drift.xi;
    const Mat2 th = theta_of(ns.cls());
    std::vector<Vec2> w0s = {xi, th * xi, Vec2(xi.y(), -xi.x()), Vec2(1, 0), Vec2(0, 1)};
    if (std::abs(th.determinant()) > tol) w0s.push_back(th.inverse() * xi);
    if (std::abs(xi.x()) > tol && std::abs(xi.y()) > tol) {
        w0s.emplace_back(1.0 / xi.y(), 1.0 / xi.x());
        w0s.emplace_back(-1.0 / xi.y(), 1.0 / xi.x());
    }
    for (const Vec2& w0 : w0s) {
        if (w0.norm() <= tol) continue;
        const Vec2 v0(w0.y(), -w0.x());
        for (double sigma : {1.0, -1.0}) {
            double lo = 0.0, hi = 0.0;
            for (double t = -30.0; t <= 30.0; t += 0.01) {
                const double f = sigma * (lambda_kernel(ns.cls(), t) * xi).dot(v0);
                lo = std::min(lo, f);
                hi = std::max(hi, std::abs(f));
            }
            if (lo >= -1e-9 && hi > 1e-9) {
                BarrierCertificate cert;
                cert.kind = BarrierKind::MonotoneCoordinate;
                cert.drift = ns.drift;
                cert.shift = shift;
                cert.v0 = v0;
                cert.sigma = sigma;
                return cert;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

Vec2 chart_point_f(const Derivation& d, const GroupElement& g) {
    const FlowKernel k = kernels(d.cls, -g.t);
    return k.rho * (d.dstar * g.v) - k.lam * d.xi;
}

Vec2 ProjectedSystem::project(const GroupElement& g) const {
    switch (space) {
        case ChartSpace::PlaneF:
            return chart_point_f(system.drift, g);
        case ChartSpace::PlaneH:
            return Vec2(g.t, g.v.dot(v0));
        case ChartSpace::CylinderH:
            return Vec2(g.t, wrap_to(g.v.dot(v0) / w0.y(), 3.141592653589793238462643383279502884));
    }
    return Vec2::Zero();
}

Vec2 ProjectedSystem::field(const Vec2& p, const std::vector<double>& u) const {
    if (u.size() != system.controls.size()) {
        throw SemanticError("control value count does not match the system");
    }
    const Mat2 th = theta_of(system.cls());
    if (space == ChartSpace::PlaneF) {
        Vec2 dp = system.drift.dstar * p;
        for (std::size_t i = 0; i < u.size(); ++i) {
            const auto& c = system.controls[i];
            dp += u[i] * (-c.a * (th * p - system.drift.xi) + system.drift.dstar * c.w);
        }
        return dp;
    }
    const double t = p.x();
    const FlowKernel k = kernels(system.cls(), t);
    double dt = 0.0;
    double dz = (k.lam * system.drift.xi).dot(v0);
    for (std::size_t i = 0; i < u.size(); ++i) {
        const auto& c = system.controls[i];
        dt += u[i] * c.a;
        dz += u[i] * (k.rho * c.w).dot(v0);
    }
    if (space == ChartSpace::CylinderH) dz /= w0.y();
    return Vec2(dt, dz);
}

ProjectedSystem projected_system(const LinearSystem& sys, double tol) {
    const auto preds = structural_predicates(sys.drift, tol);
    ProjectedSystem out;
    out.system = sys;
    if (preds.dstar_invertible) {
        out.space = ChartSpace::PlaneF;
        return out;
    }
    if (!preds.dstar_zero) {
        throw SemanticError(
            "no chart regime: the derivation is singular but nonzero on the nilradical");
    }
    const Vec2 xi = sys.drift.xi;
    if (sys.cls().kind == GroupKind::R2) {
        out.space = ChartSpace::CylinderH;
        out.w0 = (std::abs(xi.y()) > tol) ? xi : Vec2(0, 1);
    } else {
        out.space = ChartSpace::PlaneH;
        out.w0 = (xi.norm() > tol) ? xi : Vec2(1, 0);
    }
    out.v0 = Vec2(out.w0.y(), -out.w0.x());
    return out;
}

std::optional<BarrierCertificate> barrier_certificate(const LinearSystem& sys, double tol) {
    const NormalizeResult norm = normalize(sys);
    if (!norm.changed) return std::nullopt;
    const LinearSystem& ns = norm.system;
    const auto preds = structural_predicates(ns.drift, tol);
    if (preds.dstar_zero) return monotone_certificate(ns, norm.shift, tol);
    if (is_e_family(ns.cls())) {
        if (auto c = expanding_disk_certificate(ns, norm.shift, tol)) return c;
    }
    return half_plane_certificate(ns, norm.shift, tol);
}

Verdict decide(const LinearSystem& sys, double tol) {
    const NormalizeResult norm = normalize(sys);
    const LinearSystem& ns = norm.changed ? norm.system : sys;

    Verdict v;
    v.distribution = distribution_info(ns);
    v.predicates = structural_predicates(ns.drift, tol);
    v.decomposition = decompose(ns.drift, tol);

    if (!v.distribution.larc) {
        v.controllable = false;
        v.clause = "LARC-FAIL";
        v.explanation =
            "the control fields together with the drift do not span the algebra, so the "
            "reachable set stays inside a proper subgroup";
        return v;
    }
    if (v.distribution.delta_dim == 3) {
        v.controllable = true;
        v.clause = "DIM3-TRIVIAL";
        v.explanation = "the control fields alone generate the whole algebra";
        return v;
    }

    const GroupClass& cls = ns.cls();
    const std::string label = class_label(cls);
    const int dim = v.distribution.delta_dim;
    bool c = false;
    std::string why;

    if (dim == 1) {
        switch (cls.kind) {
            case GroupKind::R2Tilde:
                c = v.decomposition.gzero_is_aff;
                why = c ? "the neutral part of the splitting is a nonabelian plane"
                        : "the neutral part of the splitting is not a nonabelian plane";
                break;
            case GroupKind::R2:
                c = v.decomposition.gzero_is_aff || v.decomposition.g_equals_gzero;
                why = c ? "on the plane quotient a neutral splitting (nonabelian plane or the "
                          "whole algebra) forces controllability"
                        : "the splitting has a nontrivial expanding or contracting part";
                break;
            case GroupKind::R3:
            case GroupKind::ETilde:
            case GroupKind::En:
                c = v.decomposition.g_equals_gzero && !v.predicates.dstar_zero;
                why = c ? "the derivation has purely neutral spectrum but acts nontrivially on "
                          "the nilradical"
                        : "the derivation either has a nonneutral direction or vanishes on the "
                          "nilradical";
                break;
            case GroupKind::R3Lambda:
                c = std::abs(cls.lambda - 1.0) <= tol && v.predicates.complex_pair;
                why = c ? "isotropic scaling with rotating derivation spectrum"
                        : "the derivation spectrum is real or the scaling is anisotropic";
                break;
            case GroupKind::R3PrimeLambda:
                c = true;
                why = "single-input systems on this class are always controllable once the rank "
                      "condition holds";
                break;
        }
        v.clause = "T1." + label;
    } else {  // dim == 2
        switch (cls.kind) {
            case GroupKind::R2Tilde:
            case GroupKind::R2:
                c = v.decomposition.gzero_dim > 1 ||
                    (v.decomposition.gzero_dim == 1 && v.distribution.delta_is_aff);
                why = c ? "the neutral part is large enough (or the control plane is nonabelian)"
                        : "the neutral part is a line and the control plane is abelian";
                break;
            case GroupKind::R3:
                c = v.decomposition.g_equals_gzero;
                why = c ? "the derivation has purely neutral spectrum"
                        : "the derivation has an expanding or contracting direction";
                break;
            case GroupKind::R3Lambda:
                c = !kernel_inside_delta(ns, v.distribution, v.predicates, tol) ||
                    v.predicates.complex_pair;
                why = c ? "a kernel direction of the derivation escapes the control plane, or "
                          "the spectrum rotates"
                        : "the kernel of the derivation lies inside the control plane and the "
                          "spectrum is real";
                break;
            case GroupKind::R3PrimeLambda:
            case GroupKind::ETilde:
            case GroupKind::En:
                c = true;
                why = "two-input systems on this class are controllable once the rank condition "
                      "holds";
                break;
        }
        v.clause = "T2." + label;
    }

    v.controllable = c;
    v.explanation = why;
    if (!v.controllable) v.certificate = barrier_certificate(sys, tol);
    return v;
}

}  // namespace solv3
