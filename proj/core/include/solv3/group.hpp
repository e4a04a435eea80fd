#pragma once

#include <optional>
#include <string>

#include "solv3/linalg.hpp"

namespace solv3 {

// The nonnilpotent solvable 3D model groups R x_rho R^2, together with the
// two proper quotients that carry the same local structure: the cylinder
// groups E_n (circle component of circumference 2*pi*n) and the plane group
// R2 (first fibre coordinate wrapped to (-pi, pi]).
enum class GroupKind {
    R2Tilde,        // theta = [[0,0],[0,1]]
    R2,             // quotient of R2Tilde by {(2*pi*k, 0)}... wrapped v.x
    R3,             // theta = [[1,1],[0,1]]
    R3Lambda,       // theta = [[1,0],[0,lambda]], 0 < |lambda| <= 1
    R3PrimeLambda,  // theta = [[lambda,-1],[1,lambda]], lambda != 0
    ETilde,         // theta = [[0,-1],[1,0]]
    En,             // quotient of ETilde by {(2*pi*n*k, 0)}
};

struct GroupClass {
    GroupKind kind = GroupKind::R3;
    double lambda = 0.0;  // used by R3Lambda, R3PrimeLambda
    int n = 0;            // used by En

    static GroupClass r2_tilde();
    static GroupClass r2();
    static GroupClass r3();
    static GroupClass r3_lambda(double lambda);
    static GroupClass r3_prime(double lambda);
    static GroupClass e_tilde();
    static GroupClass e_n(int n);

    bool operator==(const GroupClass&) const = default;

    // True for the two quotient groups, whose fibre coordinate is periodic.
    bool is_quotient() const { return kind == GroupKind::R2 || kind == GroupKind::En; }
    // Half-period of the periodic coordinate (R2: v.x in (-pi,pi];
    // En: t in (-n*pi, n*pi]).
    double period_half() const;
    std::string name() const;
};

// Structure matrix theta defining the semidirect product.
Mat2 theta_of(const GroupClass& cls);

struct FlowKernel {
    double s = 0.0;
    Mat2 rho;  // e^{s theta}
    Mat2 lam;  // the cocycle kernel: (rho - I) theta^{-1} when theta is
               // invertible, diag(s, e^s - 1) for the R2 family
};

// Closed-form kernels for the one-parameter flow of theta.
FlowKernel kernels(const GroupClass& cls, double s);
Mat2 rho_kernel(const GroupClass& cls, double s);
Mat2 lambda_kernel(const GroupClass& cls, double s);

// Reference implementations by truncated power series (oracles for tests).
Mat2 rho_series(const GroupClass& cls, double s, int terms = 30);
Mat2 lambda_series(const GroupClass& cls, double s, int terms = 30);

struct AlgebraElement {
    double a = 0.0;  // component along the acting direction X
    Vec2 w = Vec2::Zero();

    AlgebraElement() = default;
    AlgebraElement(double a_, const Vec2& w_) : a(a_), w(w_) {}
    AlgebraElement(double a_, double w1, double w2) : a(a_), w(w1, w2) {}
    double norm() const { return std::sqrt(a * a + w.squaredNorm()); }
    Vec3 as_vec3() const { return Vec3(a, w.x(), w.y()); }
    static AlgebraElement from_vec3(const Vec3& v) { return {v(0), Vec2(v(1), v(2))}; }
};

struct GroupElement {
    double t = 0.0;
    Vec2 v = Vec2::Zero();

    GroupElement() = default;
    GroupElement(double t_, const Vec2& v_) : t(t_), v(v_) {}
    GroupElement(double t_, double v1, double v2) : t(t_), v(v1, v2) {}
};

// Canonical representative of a group element (wraps the periodic
// coordinate on quotient groups; identity on the simply connected ones).
GroupElement canonicalize(const GroupClass& cls, const GroupElement& g);

GroupElement identity_element();
GroupElement group_mul(const GroupClass& cls, const GroupElement& g, const GroupElement& h);
GroupElement group_inv(const GroupClass& cls, const GroupElement& g);

// Exponential map exp(a, w) = (a, Lambda_a w / a), continuously extended
// through a = 0.
GroupElement exp_map(const GroupClass& cls, const AlgebraElement& x);

// Lie bracket [(a,w),(b,v)] = (0, a theta v - b theta w).
AlgebraElement bracket(const GroupClass& cls, const AlgebraElement& x, const AlgebraElement& y);

// Left/right invariant vector fields evaluated at g, for algebra value y.
AlgebraElement left_invariant_field(const GroupClass& cls, const GroupElement& g,
                                    const AlgebraElement& y);
AlgebraElement right_invariant_field(const GroupClass& cls, const GroupElement& g,
                                     const AlgebraElement& y);

}  // namespace solv3
