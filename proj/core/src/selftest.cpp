#include "solv3/selftest.hpp"

#include <cmath>
#include <random>

#include "solv3/controllability.hpp"
#include "solv3/simulate.hpp"
#include "solv3/system.hpp"

namespace solv3 {

namespace {

std::vector<GroupClass> sample_classes() {
    return {GroupClass::r2_tilde(),      GroupClass::r2(),
            GroupClass::r3(),            GroupClass::r3_lambda(0.5),
            GroupClass::r3_lambda(-1.0), GroupClass::r3_prime(1.0),
            GroupClass::e_tilde(),       GroupClass::e_n(2)};
}

}  // namespace

SelfTestResult run_selftest(unsigned seed) {
    SelfTestResult res;
    auto fail = [&](const std::string& msg) {
        res.passed = false;
        res.failures.push_back(msg);
    };
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> us(-4.0, 4.0);

    for (const auto& cls : sample_classes()) {
        const Mat2 th = theta_of(cls);
        for (int i = 0; i < 50; ++i) {
            const double s = us(rng), t = us(rng);
            const FlowKernel k = kernels(cls, s);
            if ((k.rho - rho_series(cls, s)).norm() > 1e-9 * std::max(1.0, k.rho.norm())) {
                fail(cls.name() + ": flow kernel disagrees with its power series");
            }
            if ((k.lam - lambda_series(cls, s)).norm() > 1e-9 * std::max(1.0, k.lam.norm())) {
                fail(cls.name() + ": cocycle kernel disagrees with its power series");
            }
            if ((k.rho - th * k.lam - Mat2::Identity()).norm() > 1e-9) {
                fail(cls.name() + ": rho - theta*Lambda != I");
            }
            const Mat2 lts = lambda_kernel(cls, t + s);
            if ((lts - lambda_kernel(cls, t) - rho_kernel(cls, t) * k.lam).norm() >
                1e-9 * std::max(1.0, lts.norm())) {
                fail(cls.name() + ": cocycle law fails");
            }
        }
        // Group law associativity and inverses on random elements.
        for (int i = 0; i < 20; ++i) {
            const GroupElement a(us(rng), us(rng), us(rng));
            const GroupElement b(us(rng), us(rng), us(rng));
            const GroupElement c(us(rng), us(rng), us(rng));
            const GroupElement ab_c = group_mul(cls, group_mul(cls, a, b), c);
            const GroupElement a_bc = group_mul(cls, a, group_mul(cls, b, c));
            if (std::abs(ab_c.t - a_bc.t) > 1e-8 || (ab_c.v - a_bc.v).norm() > 1e-8) {
                fail(cls.name() + ": group multiplication is not associative");
            }
            const GroupElement e = group_mul(cls, a, group_inv(cls, a));
            if (std::abs(e.t) > 1e-8 || e.v.norm() > 1e-8) {
                fail(cls.name() + ": inverse law fails");
            }
        }
    }

    // Drift-flow law: the closed-form flow satisfies the one-parameter rule.
    {
        const GroupClass cls = GroupClass::r3();
        Mat2 ds;
        ds << 0.3, 0.2, 0.0, 0.3;
        const Derivation d = make_derivation(cls, ds, Vec2(0.4, -0.7));
        const GroupElement g(0.8, -0.3, 0.5);
        const GroupElement two_steps = linear_flow(d, 0.7, linear_flow(d, 0.4, g));
        const GroupElement one_step = linear_flow(d, 1.1, g);
        if (std::abs(two_steps.t - one_step.t) > 1e-9 ||
            (two_steps.v - one_step.v).norm() > 1e-9) {
            fail("drift flow violates the one-parameter law");
        }
    }

    // Decision sanity: a full-rank control plane is trivially controllable.
    {
        const GroupClass cls = GroupClass::r3();
        Mat2 ds = Mat2::Identity();
        const Derivation d = make_derivation(cls, ds, Vec2(1.0, 1.0));
        const LinearSystem sys = make_system(d, {{1.0, 0.0, 0.0}, {0.0, 1.0, 1.0}});
        const Verdict v = decide(sys);
        if (!v.controllable || v.clause != "DIM3-TRIVIAL") {
            fail("full-rank control plane was not decided controllable");
        }
    }

    return res;
}

}  // namespace solv3
