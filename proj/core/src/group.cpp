#include "solv3/group.hpp"

#include <cmath>

#include "solv3/errors.hpp"

namespace solv3 {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

GroupClass GroupClass::r2_tilde() { return {GroupKind::R2Tilde, 0.0, 0}; }
GroupClass GroupClass::r2() { return {GroupKind::R2, 0.0, 0}; }
GroupClass GroupClass::r3() { return {GroupKind::R3, 0.0, 0}; }

GroupClass GroupClass::r3_lambda(double lambda) {
    if (!(std::abs(lambda) > 0.0) || std::abs(lambda) > 1.0 || !std::isfinite(lambda)) {
        throw SemanticError("r3_lambda requires 0 < |lambda| <= 1");
    }
    return {GroupKind::R3Lambda, lambda, 0};
}

GroupClass GroupClass::r3_prime(double lambda) {
    if (lambda == 0.0 || !std::isfinite(lambda)) {
        throw SemanticError("r3_prime requires lambda != 0");
    }
    return {GroupKind::R3PrimeLambda, lambda, 0};
}

GroupClass GroupClass::e_tilde() { return {GroupKind::ETilde, 0.0, 0}; }

GroupClass GroupClass::e_n(int n) {
    if (n < 1) throw SemanticError("e_n requires n >= 1");
    return {GroupKind::En, 0.0, n};
}

double GroupClass::period_half() const {
    switch (kind) {
        case GroupKind::R2:
            return kPi;
        case GroupKind::En:
            return kPi * static_cast<double>(n);
        default:
            return 0.0;
    }
}

std::string GroupClass::name() const {
    switch (kind) {
        case GroupKind::R2Tilde:
            return "r2_tilde";
        case GroupKind::R2:
            return "r2";
        case GroupKind::R3:
            return "r3";
        case GroupKind::R3Lambda:
            return "r3_lambda";
        case GroupKind::R3PrimeLambda:
            return "r3_prime";
        case GroupKind::ETilde:
            return "e_tilde";
        case GroupKind::En:
            return "e_n";
    }
    return "?";
}

Mat2 theta_of(const GroupClass& cls) {
    Mat2 th;
    switch (cls.kind) {
        case GroupKind::R2Tilde:
        case GroupKind::R2:
            th << 0, 0, 0, 1;
            break;
        case GroupKind::R3:
            th << 1, 1, 0, 1;
            break;
        case GroupKind::R3Lambda:
            th << 1, 0, 0, cls.lambda;
            break;
        case GroupKind::R3PrimeLambda:
            th << cls.lambda, -1, 1, cls.lambda;
            break;
        case GroupKind::ETilde:
        case GroupKind::En:
            th << 0, -1, 1, 0;
            break;
    }
    return th;
}

Mat2 rho_kernel(const GroupClass& cls, double s) {
    Mat2 r;
    const double es = std::exp(s);
    switch (cls.kind) {
        case GroupKind::R2Tilde:
        case GroupKind::R2:
            r << 1, 0, 0, es;
            break;
        case GroupKind::R3:
            r << es, s * es, 0, es;
            break;
        case GroupKind::R3Lambda:
            r << es, 0, 0, std::exp(cls.lambda * s);
            break;
        case GroupKind::R3PrimeLambda:
            r = std::exp(cls.lambda * s) * rot2(s);
            break;
        case GroupKind::ETilde:
        case GroupKind::En:
            r = rot2(s);
            break;
    }
    return r;
}

Mat2 lambda_kernel(const GroupClass& cls, double s) {
    Mat2 l;
    const double es = std::exp(s);
    switch (cls.kind) {
        case GroupKind::R2Tilde:
        case GroupKind::R2:
            l << s, 0, 0, es - 1.0;
            break;
        case GroupKind::R3:
            l << es - 1.0, s * es - es + 1.0, 0, es - 1.0;
            break;
        case GroupKind::R3Lambda: {
            const double el = std::exp(cls.lambda * s);
            l << es - 1.0, 0, 0, (el - 1.0) / cls.lambda;
            break;
        }
        case GroupKind::R3PrimeLambda: {
            const Mat2 th = theta_of(cls);
            l = (rho_kernel(cls, s) - Mat2::Identity()) * th.inverse();
            break;
        }
        case GroupKind::ETilde:
        case GroupKind::En: {
            // theta = J (rotation generator): (rho_s - I) J^{-1}.
            const double c = std::cos(s), sn = std::sin(s);
            l << sn, c - 1.0, 1.0 - c, sn;
            break;
        }
    }
    return l;
}

FlowKernel kernels(const GroupClass& cls, double s) {
    FlowKernel k;
    k.s = s;
    switch (cls.kind) {
        case GroupKind::R2Tilde:
        case GroupKind::R2: {
            const double es = std::exp(s);
            k.rho << 1, 0, 0, es;
            k.lam << s, 0, 0, es - 1.0;
            break;
        }
        case GroupKind::R3: {
            const double es = std::exp(s);
            k.rho << es, s * es, 0, es;
            k.lam << es - 1.0, s * es - es + 1.0, 0, es - 1.0;
            break;
        }
        case GroupKind::R3Lambda: {
            const double es = std::exp(s);
            const double el = std::exp(cls.lambda * s);
            k.rho << es, 0, 0, el;
            k.lam << es - 1.0, 0, 0, (el - 1.0) / cls.lambda;
            break;
        }
        case GroupKind::R3PrimeLambda: {
            const double el = std::exp(cls.lambda * s);
            const double c = std::cos(s), sn = std::sin(s);
            k.rho << el * c, -el * sn, el * sn, el * c;
            // (rho - I) theta^{-1} with theta = lambda I + J.
            const double den = cls.lambda * cls.lambda + 1.0;
            const double a = (el * c - 1.0), b = el * sn;
            k.lam << (a * cls.lambda + b) / den, (a - b * cls.lambda) / den,
                (b * cls.lambda - a) / den, (a * cls.lambda + b) / den;
            break;
        }
        case GroupKind::ETilde:
        case GroupKind::En: {
            const double c = std::cos(s), sn = std::sin(s);
            k.rho << c, -sn, sn, c;
            k.lam << sn, c - 1.0, 1.0 - c, sn;
            break;
        }
    }
    return k;
}

Mat2 rho_series(const GroupClass& cls, double s, int terms) {
    const Mat2 th = theta_of(cls);
    Mat2 acc = Mat2::Identity();
    Mat2 term = Mat2::Identity();
    for (int k = 1; k <= terms; ++k) {
        term = term * (s / static_cast<double>(k) * th);
        acc += term;
    }
    return acc;
}

Mat2 lambda_series(const GroupClass& cls, double s, int terms) {
    // Lambda_s = sum_{k>=1} s^k theta^{k-1} / k!
    const Mat2 th = theta_of(cls);
    Mat2 acc = Mat2::Zero();
    Mat2 term = s * Mat2::Identity();
    acc += term;
    for (int k = 2; k <= terms; ++k) {
        term = term * (s / static_cast<double>(k) * th);
        acc += term;
    }
    return acc;
}

GroupElement canonicalize(const GroupClass& cls, const GroupElement& g) {
    GroupElement out = g;
    if (cls.kind == GroupKind::R2) {
        out.v.x() = wrap_to(out.v.x(), kPi);
    } else if (cls.kind == GroupKind::En) {
        out.t = wrap_to(out.t, kPi * static_cast<double>(cls.n));
    }
    return out;
}

GroupElement identity_element() { return {}; }

GroupElement group_mul(const GroupClass& cls, const GroupElement& g, const GroupElement& h) {
    const GroupElement r(g.t + h.t, g.v + rho_kernel(cls, g.t) * h.v);
    return canonicalize(cls, r);
}

GroupElement group_inv(const GroupClass& cls, const GroupElement& g) {
    const GroupElement r(-g.t, -(rho_kernel(cls, -g.t) * g.v));
    return canonicalize(cls, r);
}

GroupElement exp_map(const GroupClass& cls, const AlgebraElement& x) {
    if (x.a == 0.0) return canonicalize(cls, {0.0, x.w});
    Vec2 v;
    if (std::abs(x.a) < 1e-8) {
        // Lambda_s / s = I + (s/2) theta + O(s^2).
        v = x.w + (x.a / 2.0) * (theta_of(cls) * x.w);
    } else {
        v = lambda_kernel(cls, x.a) * x.w / x.a;
    }
    return canonicalize(cls, {x.a, v});
}

AlgebraElement bracket(const GroupClass& cls, const AlgebraElement& x, const AlgebraElement& y) {
    const Mat2 th = theta_of(cls);
    return {0.0, x.a * (th * y.w) - y.a * (th * x.w)};
}

AlgebraElement left_invariant_field(const GroupClass& cls, const GroupElement& g,
                                    const AlgebraElement& y) {
    return {y.a, rho_kernel(cls, g.t) * y.w};
}

AlgebraElement right_invariant_field(const GroupClass& cls, const GroupElement& g,
                                     const AlgebraElement& y) {
    return {y.a, y.w + y.a * (theta_of(cls) * g.v)};
}

}  // namespace solv3
