#pragma once

#include <vector>

#include "solv3/derivation.hpp"

namespace solv3 {

// A linear control system on a model group: drift given by the vector field
// induced by a derivation D, plus left-invariant control fields Y_i.
struct LinearSystem {
    Derivation drift;
    std::vector<AlgebraElement> controls;

    const GroupClass& cls() const { return drift.cls; }
};

LinearSystem make_system(const Derivation& drift, std::vector<AlgebraElement> controls);

// Smallest subalgebra containing the given elements (closure under bracket).
std::vector<AlgebraElement> generated_subalgebra(const GroupClass& cls,
                                                 const std::vector<AlgebraElement>& gens,
                                                 double tol = 1e-10);

struct DistributionInfo {
    std::vector<AlgebraElement> delta_basis;  // subalgebra generated by controls
    int delta_dim = 0;
    bool delta_is_aff = false;  // 2-dimensional and nonabelian
    bool larc = false;          // closure of Delta under bracket and D is all of g
    int ad_rank = 0;            // dim span{ D^k Y_i : k >= 0 } (no brackets)
};

DistributionInfo distribution_info(const LinearSystem& sys, double tol = 1e-10);

// Conjugation by the automorphism (t, v) -> (t, v - Lambda_t v0), which fixes
// dstar and maps xi to xi + dstar*v0.  Used to put single-input systems into
// the normalized form Y = (1, 0).
struct NormalizeResult {
    LinearSystem system;    // normalized system
    Vec2 shift = Vec2::Zero();  // the v0 used
    bool changed = false;
};

NormalizeResult normalize(const LinearSystem& sys, double tol = 1e-10);

}  // namespace solv3
