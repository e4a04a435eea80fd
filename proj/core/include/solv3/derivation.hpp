#pragma once

#include <complex>
#include <vector>

#include "solv3/group.hpp"

namespace solv3 {

// A derivation of the algebra R x_theta R^2 with image in the nilradical:
// D(a, w) = (0, a*xi + Dstar*w), where Dstar commutes with theta.
struct Derivation {
    GroupClass cls;
    Mat2 dstar = Mat2::Zero();
    Vec2 xi = Vec2::Zero();
};

// Validates the commutation constraint Dstar*theta == theta*Dstar (and, for
// the plane quotient R2, that the flow of D descends: Dstar*e1 == 0).
// Throws SemanticError on violation or when D == 0.
Derivation make_derivation(const GroupClass& cls, const Mat2& dstar, const Vec2& xi,
                           double tol = 1e-12);

AlgebraElement apply_derivation(const Derivation& d, const AlgebraElement& x);

// Structural predicates of Dstar used by the decision procedure.
struct StructuralPredicates {
    bool dstar_zero = false;
    bool dstar_invertible = false;
    bool complex_pair = false;  // non-real spectrum of Dstar
    std::vector<Vec2> ker_dstar_basis;
};

StructuralPredicates structural_predicates(const Derivation& d, double tol = 1e-9);

// Splitting of the algebra by the real parts of the eigenvalues of D:
// g = g+ ⊕ g0 ⊕ g-, with g0 the sum of generalized eigenspaces for
// eigenvalues on the imaginary axis.
struct Decomposition {
    std::vector<std::complex<double>> spectrum;  // {0} ∪ spec(Dstar), 3 values
    std::vector<AlgebraElement> gplus;
    std::vector<AlgebraElement> gzero;
    std::vector<AlgebraElement> gminus;
    int gzero_dim = 0;
    bool g_equals_gzero = false;
    bool gzero_is_aff = false;  // g0 is 2-dimensional and nonabelian
};

Decomposition decompose(const Derivation& d, double tol = 1e-9);

}  // namespace solv3
