#pragma once

// Curated matrix of control systems with hand-computed expected verdicts.
// Each entry fixes a group class, a derivation, and control fields, together
// with the expected decision (clause from the fixed catalogue) and, for
// noncontrollable systems passing the rank condition, the expected
// certificate kind.

#include <optional>
#include <string>
#include <vector>

#include "solv3/controllability.hpp"
#include "solv3/system.hpp"

namespace solv3::testing {

struct MatrixEntry {
    std::string name;
    LinearSystem system;
    bool controllable = false;
    std::string clause;
    std::optional<BarrierKind> certificate;
};

inline LinearSystem sys(const GroupClass& cls, double d00, double d01, double d10, double d11,
                        double x1, double x2, std::vector<AlgebraElement> controls) {
    Mat2 ds;
    ds << d00, d01, d10, d11;
    return make_system(make_derivation(cls, ds, Vec2(x1, x2)), std::move(controls));
}

inline const std::vector<MatrixEntry>& curated_matrix() {
    static const std::vector<MatrixEntry> entries = [] {
        using K = BarrierKind;
        const AlgebraElement X{1.0, 0.0, 0.0};
        const AlgebraElement E1{0.0, 1.0, 0.0};
        const AlgebraElement E2{0.0, 0.0, 1.0};
        std::vector<MatrixEntry> m;

        const auto r2t = GroupClass::r2_tilde();
        const auto r2q = GroupClass::r2();
        const auto r3 = GroupClass::r3();
        const auto et = GroupClass::e_tilde();

        // --- single control field ---
        m.push_back({"r2t-neutral-aff", sys(r2t, 2, 0, 0, 0, 1, 1, {X}), true, "T1.R2Tilde", {}});
        m.push_back({"r2t-neutral-abelian", sys(r2t, 0, 0, 0, 2, 1, 1, {X}), false, "T1.R2Tilde",
                     K::HalfPlaneF});
        m.push_back({"r2t-hyperbolic", sys(r2t, 1, 0, 0, 2, 1, 1, {X}), false, "T1.R2Tilde",
                     K::HalfPlaneF});
        m.push_back({"r2t-contracting", sys(r2t, -1, 0, 0, -2, 1, 1, {X}), false, "T1.R2Tilde",
                     K::HalfPlaneF});
        m.push_back({"r2t-translation-drift", sys(r2t, 0, 0, 0, 0, 1, 1, {X}), false,
                     "T1.R2Tilde", K::MonotoneCoordinate});
        m.push_back({"r2q-translation-drift", sys(r2q, 0, 0, 0, 0, 1, 1, {X}), true, "T1.R2", {}});
        m.push_back(
            {"r2q-vertical-scaling", sys(r2q, 0, 0, 0, 1, 1, 1, {X}), false, "T1.R2",
             K::HalfPlaneF});
        m.push_back({"r3-nilpotent", sys(r3, 0, 1, 0, 0, 0, 1, {X}), true, "T1.R3", {}});
        m.push_back({"r3-scaling", sys(r3, 1, 0, 0, 1, 1, 1, {X}), false, "T1.R3", K::HalfPlaneF});
        m.push_back({"r3-translation-drift", sys(r3, 0, 0, 0, 0, 1, 1, {X}), false, "T1.R3",
                     K::MonotoneCoordinate});
        m.push_back({"r3l-hyperbolic", sys(GroupClass::r3_lambda(0.5), 1, 0, 0, 0.5, 1, 1, {X}),
                     false, "T1.R3Lambda", K::HalfPlaneF});
        m.push_back({"r3l-rank-one", sys(GroupClass::r3_lambda(0.5), 1, 0, 0, 0, 1, 1, {X}),
                     false, "T1.R3Lambda", K::HalfPlaneF});
        m.push_back({"r3l-negative-ratio", sys(GroupClass::r3_lambda(-1.0), 0.5, 0, 0, 0.5, 1, 1,
                                               {X}),
                     false, "T1.R3Lambda", K::HalfPlaneF});
        m.push_back({"r3l-iso-rotating", sys(GroupClass::r3_lambda(1.0), 0, -2, 2, 0, 1, 0, {X}),
                     true, "T1.R3Lambda", {}});
        m.push_back({"r3l-iso-hyperbolic", sys(GroupClass::r3_lambda(1.0), 1, 0, 0, 2, 1, 1, {X}),
                     false, "T1.R3Lambda", K::HalfPlaneF});
        m.push_back({"r3l-translation-drift",
                     sys(GroupClass::r3_lambda(0.5), 0, 0, 0, 0, 1, 1, {X}), false, "T1.R3Lambda",
                     K::MonotoneCoordinate});
        m.push_back({"r3p-minimal", sys(GroupClass::r3_prime(1.0), 0, 0, 0, 0, 1, 0, {X}), true,
                     "T1.R3Prime", {}});
        m.push_back({"r3p-spiral", sys(GroupClass::r3_prime(-0.5), 0.3, -0.4, 0.4, 0.3, 0, 1, {X}),
                     true, "T1.R3Prime", {}});
        m.push_back({"r3p-rotating", sys(GroupClass::r3_prime(1.0), 0, -1, 1, 0, 1, 0, {X}), true,
                     "T1.R3Prime", {}});
        m.push_back({"et-expanding", sys(et, 0.5, -1, 1, 0.5, 1, 0, {X}), false, "T1.E",
                     K::ExpandingDisk});
        m.push_back({"et-contracting", sys(et, -0.5, 0, 0, -0.5, 1, 0, {X}), false, "T1.E",
                     K::ExpandingDisk});
        m.push_back({"et-rotating", sys(et, 0, -1, 1, 0, 1, 0, {X}), true, "T1.E", {}});
        m.push_back({"et-translation-drift", sys(et, 0, 0, 0, 0, 1, 0, {X}), false, "T1.E",
                     K::MonotoneCoordinate});
        m.push_back({"e1-rotating", sys(GroupClass::e_n(1), 0, -0.7, 0.7, 0, 1, 0, {X}), true,
                     "T1.E", {}});
        m.push_back({"e2-expanding", sys(GroupClass::e_n(2), 0.4, 0, 0, 0.4, 0, 1, {X}), false,
                     "T1.E", K::ExpandingDisk});
        m.push_back({"e1-translation-drift", sys(GroupClass::e_n(1), 0, 0, 0, 0, 0, 1, {X}),
                     false, "T1.E", K::MonotoneCoordinate});
        m.push_back({"e3-rotating", sys(GroupClass::e_n(3), 0, -1, 1, 0, 2, 0, {X}), true, "T1.E",
                     {}});

        // --- two control fields ---
        m.push_back({"r2t-plane-neutral", sys(r2t, 0, 0, 0, 1, 1, 1, {X, E2}), true, "T2.R2Tilde",
                     {}});
        m.push_back({"r2t-plane-abelian", sys(r2t, 1, 0, 0, 2, 1, 1, {X, E1}), false,
                     "T2.R2Tilde", K::HalfPlaneF});
        m.push_back({"r2t-plane-aff", sys(r2t, 1, 0, 0, 2, 1, 1, {X, E2}), true, "T2.R2Tilde",
                     {}});
        m.push_back({"r2q-plane-neutral", sys(r2q, 0, 0, 0, 1, 1, 1, {X, E2}), true, "T2.R2", {}});
        m.push_back({"r3-plane-neutral", sys(r3, 0, 1, 0, 0, 1, 1, {X, E1}), true, "T2.R3", {}});
        m.push_back({"r3-plane-scaling", sys(r3, 1, 0, 0, 1, 1, 1, {X, E1}), false, "T2.R3",
                     K::HalfPlaneF});
        m.push_back({"r3l-plane-kernel-escapes",
                     sys(GroupClass::r3_lambda(0.5), 1, 0, 0, 0, 1, 1, {X, E1}), true,
                     "T2.R3Lambda", {}});
        m.push_back({"r3l-plane-kernel-inside",
                     sys(GroupClass::r3_lambda(0.5), 1, 0, 0, 2, 1, 1, {X, E2}), false,
                     "T2.R3Lambda", K::HalfPlaneF});
        m.push_back({"r3l-iso-plane-real",
                     sys(GroupClass::r3_lambda(1.0), 1, 0, 0, 2, 1, 1, {X, E1}), false,
                     "T2.R3Lambda", K::HalfPlaneF});
        m.push_back({"r3l-iso-plane-rotating",
                     sys(GroupClass::r3_lambda(1.0), 0, -1, 1, 0, 1, 1, {X, E1}), true,
                     "T2.R3Lambda", {}});

        // --- rank-condition failures and full-rank controls ---
        m.push_back({"r3-rank-fail", sys(r3, 0, 0, 0, 0, 1, 0, {X}), false, "LARC-FAIL", {}});
        m.push_back({"et-nilradical-controls", sys(et, 0, -1, 1, 0, 0, 0, {E1, E2}), false,
                     "LARC-FAIL", {}});
        m.push_back({"r3p-nilradical-controls",
                     sys(GroupClass::r3_prime(0.5), 0.2, 0, 0, 0.2, 1, 0, {E1, E2}), false,
                     "LARC-FAIL", {}});
        m.push_back({"r3-full-rank",
                     sys(r3, 1, 0, 0, 1, 1, 1, {X, AlgebraElement{0.0, 1.0, 1.0}}), true,
                     "DIM3-TRIVIAL", {}});
        m.push_back({"e2-full-rank", sys(GroupClass::e_n(2), 0.3, 0, 0, 0.3, 1, 0, {X, E1}), true,
                     "DIM3-TRIVIAL", {}});

        return m;
    }();
    return entries;
}

}  // namespace solv3::testing
