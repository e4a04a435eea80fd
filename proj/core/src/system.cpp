#include "solv3/system.hpp"

#include <cmath>

#include "solv3/errors.hpp"

namespace solv3 {

namespace {

// Rank and an orthonormal spanning set of a list of algebra elements.
std::vector<AlgebraElement> span_basis(const std::vector<AlgebraElement>& elems, double tol) {
    if (elems.empty()) return {};
    Eigen::MatrixXd m(3, static_cast<Eigen::Index>(elems.size()));
    for (Eigen::Index i = 0; i < m.cols(); ++i) m.col(i) = elems[static_cast<std::size_t>(i)].as_vec3();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullU);
    const auto& sv = svd.singularValues();
    const double scale = std::max(sv(0), 1.0);
    std::vector<AlgebraElement> out;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > tol * scale) out.push_back(AlgebraElement::from_vec3(svd.matrixU().col(i)));
    }
    return out;
}

}  // namespace

LinearSystem make_system(const Derivation& drift, std::vector<AlgebraElement> controls) {
    if (controls.empty()) throw SemanticError("system requires at least one control field");
    for (const auto& c : controls) {
        if (c.norm() <= 1e-14) throw SemanticError("control fields must be nonzero");
    }
    return {drift, std::move(controls)};
}

std::vector<AlgebraElement> generated_subalgebra(const GroupClass& cls,
                                                 const std::vector<AlgebraElement>& gens,
                                                 double tol) {
    std::vector<AlgebraElement> basis = span_basis(gens, tol);
    for (int round = 0; round < 6; ++round) {
        std::vector<AlgebraElement> next = basis;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            for (std::size_t j = i + 1; j < basis.size(); ++j) {
                next.push_back(bracket(cls, basis[i], basis[j]));
            }
        }
        auto reduced = span_basis(next, tol);
        if (reduced.size() == basis.size()) return reduced;
        basis = std::move(reduced);
    }
    return basis;
}

DistributionInfo distribution_info(const LinearSystem& sys, double tol) {
    DistributionInfo info;
    info.delta_basis = generated_subalgebra(sys.cls(), sys.controls, tol);
    info.delta_dim = static_cast<int>(info.delta_basis.size());
    if (info.delta_dim == 2) {
        info.delta_is_aff =
            bracket(sys.cls(), info.delta_basis[0], info.delta_basis[1]).norm() > tol;
    }

    // LARC: close the control distribution under bracket and the derivation.
    std::vector<AlgebraElement> basis = info.delta_basis;
    for (int round = 0; round < 6; ++round) {
        std::vector<AlgebraElement> next = basis;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            next.push_back(apply_derivation(sys.drift, basis[i]));
            for (std::size_t j = i + 1; j < basis.size(); ++j) {
                next.push_back(bracket(sys.cls(), basis[i], basis[j]));
            }
        }
        auto reduced = span_basis(next, tol);
        if (reduced.size() == basis.size()) break;
        basis = std::move(reduced);
    }
    info.larc = basis.size() == 3;

    // ad-rank: span of { D^k Y_i } without brackets.
    std::vector<AlgebraElement> iter;
    for (const auto& y : sys.controls) {
        AlgebraElement cur = y;
        for (int k = 0; k <= 3; ++k) {
            iter.push_back(cur);
            cur = apply_derivation(sys.drift, cur);
        }
    }
    info.ad_rank = static_cast<int>(span_basis(iter, tol).size());
    return info;
}

NormalizeResult normalize(const LinearSystem& sys, double tol) {
    NormalizeResult res{sys, Vec2::Zero(), false};
    std::size_t pivot = sys.controls.size();
    double best = tol;
    for (std::size_t i = 0; i < sys.controls.size(); ++i) {
        if (std::abs(sys.controls[i].a) > best) {
            best = std::abs(sys.controls[i].a);
            pivot = i;
        }
    }
    if (pivot == sys.controls.size()) return res;  // controls lie in the nilradical

    const AlgebraElement& y = sys.controls[pivot];
    const Vec2 v0 = y.w / y.a;
    Derivation drift = sys.drift;
    drift.xi = sys.drift.xi + sys.drift.dstar * v0;

    std::vector<AlgebraElement> controls;
    controls.emplace_back(1.0, Vec2::Zero());
    std::vector<AlgebraElement> nil;
    for (std::size_t i = 0; i < sys.controls.size(); ++i) {
        if (i == pivot) continue;
        const AlgebraElement& c = sys.controls[i];
        const Vec2 w = c.w - c.a * v0;  // conjugated control minus its (1,0) part
        if (w.norm() > tol) nil.emplace_back(0.0, w);
    }
    for (const auto& b : span_basis(nil, tol)) controls.push_back(b);

    res.system = {drift, std::move(controls)};
    res.shift = v0;
    res.changed = true;
    return res;
}

}  // namespace solv3
