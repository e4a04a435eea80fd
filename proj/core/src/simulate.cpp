#include "solv3/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <random>

#include "solv3/errors.hpp"

namespace solv3 {

namespace {

constexpr double kBlowUp = 1e12;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// One classical fourth-order step of the controlled field.
inline void rk4_step(const LinearSystem& sys, double h, double& tau, Vec2& v,
                     const std::vector<double>& u, double dir) {
    double dt1, dt2, dt3, dt4;
    Vec2 k1, k2, k3, k4;
    system_field(sys, tau, v, u, dt1, k1);
    system_field(sys, tau + dir * 0.5 * h * dt1, v + dir * (0.5 * h) * k1, u, dt2, k2);
    system_field(sys, tau + dir * 0.5 * h * dt2, v + dir * (0.5 * h) * k2, u, dt3, k3);
    system_field(sys, tau + dir * h * dt3, v + dir * h * k3, u, dt4, k4);
    tau += dir * (h / 6.0) * (dt1 + 2.0 * dt2 + 2.0 * dt3 + dt4);
    v += dir * (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

template <typename Observer>
bool run_signal(const LinearSystem& sys, GroupElement g, const ControlSignal& signal, double dt,
                bool backward, Observer&& observe) {
    const double dir = backward ? -1.0 : 1.0;
    double s = 0.0;
    observe(s, g);
    for (const auto& seg : signal) {
        if (seg.u.size() != sys.controls.size()) {
            throw SemanticError("control segment width does not match the system");
        }
        double remaining = seg.duration;
        while (remaining > 1e-15) {
            const double h = std::min(dt, remaining);
            rk4_step(sys, h, g.t, g.v, seg.u, dir);
            g = canonicalize(sys.cls(), g);
            remaining -= h;
            s += h;
            if (!std::isfinite(g.t) || !g.v.allFinite() || std::abs(g.t) > kBlowUp ||
                g.v.norm() > kBlowUp) {
                observe(s, g);
                return false;
            }
            observe(s, g);
        }
    }
    return true;
}

}  // namespace

GroupElement linear_flow(const Derivation& d, double s, const GroupElement& g) {
    const Mat2 es = expm2(s * d.dstar);
    const Mat2 fs = s * phi1m(s * d.dstar);
    const Vec2 v = es * g.v + fs * (lambda_kernel(d.cls, g.t) * d.xi);
    return canonicalize(d.cls, {g.t, v});
}

AlgebraElement derivation_flow(const Derivation& d, double s, const AlgebraElement& x) {
    const Mat2 es = expm2(s * d.dstar);
    const Mat2 fs = s * phi1m(s * d.dstar);
    return {x.a, es * x.w + x.a * (fs * d.xi)};
}

void system_field(const LinearSystem& sys, double tau, const Vec2& v,
                  const std::vector<double>& u, double& dtau, Vec2& dv) {
    const FlowKernel k = kernels(sys.cls(), tau);
    dtau = 0.0;
    dv = sys.drift.dstar * v + k.lam * sys.drift.xi;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const auto& c = sys.controls[i];
        dtau += u[i] * c.a;
        if (c.w.x() != 0.0 || c.w.y() != 0.0) dv += u[i] * (k.rho * c.w);
    }
}

Trajectory integrate(const LinearSystem& sys, const GroupElement& start,
                     const ControlSignal& signal, double dt, bool backward) {
    if (!(dt > 0.0)) throw SemanticError("integration step must be positive");
    Trajectory traj;
    traj.dt = dt;
    double total = 0.0;
    for (const auto& seg : signal) total += seg.duration;
    traj.samples.reserve(static_cast<std::size_t>(total / dt) + signal.size() + 2);
    const bool ok = run_signal(sys, canonicalize(sys.cls(), start), signal, dt, backward,
                               [&](double s, const GroupElement& g) {
                                   traj.samples.push_back({s, g});
                               });
    traj.blew_up = !ok;
    return traj;
}

double monitor_barrier(const LinearSystem& sys, const BarrierCertificate& cert,
                       const Trajectory& traj) {
    (void)sys;
    const GroupClass& cls = cert.drift.cls;
    double violation = 0.0;
    bool entered = false;
    double run_max = -std::numeric_limits<double>::infinity();
    for (const auto& sample : traj.samples) {
        // Undo the normalizing automorphism, then evaluate in the chart of
        // the normalized drift.
        const GroupElement g(sample.g.t,
                             sample.g.v - lambda_kernel(cls, sample.g.t) * cert.shift);
        double b = 0.0;
        switch (cert.kind) {
            case BarrierKind::HalfPlaneF:
                b = cert.sigma * (chart_point_f(cert.drift, g).dot(cert.n) - cert.kappa);
                break;
            case BarrierKind::ExpandingDisk:
                b = cert.sigma * ((chart_point_f(cert.drift, g) - cert.center).norm() -
                                  cert.radius);
                break;
            case BarrierKind::MonotoneCoordinate: {
                const double z = cert.sigma * g.v.dot(cert.v0);
                run_max = std::max(run_max, z);
                violation = std::max(violation, run_max - z);
                continue;
            }
        }
        if (entered) {
            violation = std::max(violation, -b);
        } else if (b >= 0.0) {
            entered = true;
        }
    }
    return violation;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed ^ splitmix64(index + 0x51a9b70d5c3ULL));
}

ControlSignal random_bang_bang(std::size_t channels, double horizon, double u_bound,
                               std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::exponential_distribution<double> exp_dist(1.0);
    std::bernoulli_distribution coin(0.5);
    std::vector<double> sign(channels);
    std::vector<double> next(channels);
    for (std::size_t i = 0; i < channels; ++i) {
        sign[i] = coin(rng) ? 1.0 : -1.0;
        next[i] = exp_dist(rng);
    }
    ControlSignal signal;
    double t = 0.0;
    while (t < horizon) {
        double event = horizon;
        for (std::size_t i = 0; i < channels; ++i) event = std::min(event, next[i]);
        ControlSegment seg;
        seg.duration = event - t;
        seg.u.resize(channels);
        for (std::size_t i = 0; i < channels; ++i) seg.u[i] = sign[i] * u_bound;
        if (seg.duration > 0.0) signal.push_back(std::move(seg));
        t = event;
        for (std::size_t i = 0; i < channels; ++i) {
            if (next[i] <= t + 1e-15 && next[i] < horizon) {
                sign[i] = -sign[i];
                next[i] += std::max(exp_dist(rng), 1e-9);
            }
        }
    }
    return signal;
}

ReachSample reachable_sample(const LinearSystem& sys, const ReachParams& params) {
    const GridSpec& g = params.grid;
    if (g.nx <= 0 || g.ny <= 0 || g.nz <= 0) throw SemanticError("grid resolution must be positive");
    ReachSample out;
    out.total = static_cast<long>(g.nx) * g.ny * g.nz;
    std::vector<char> cells(static_cast<std::size_t>(out.total), 0);
    const Vec3 span = g.hi - g.lo;
    long visited = 0;
    auto mark = [&](double tau, const Vec2& v) {
        const double xs[3] = {tau, v.x(), v.y()};
        long idx = 0;
        const long dims[3] = {g.nx, g.ny, g.nz};
        for (int i = 0; i < 3; ++i) {
            const double f = (xs[i] - g.lo(i)) / span(i);
            if (f < 0.0 || f >= 1.0) return;
            idx = idx * dims[i] + static_cast<long>(f * static_cast<double>(dims[i]));
        }
        if (!cells[static_cast<std::size_t>(idx)]) {
            cells[static_cast<std::size_t>(idx)] = 1;
            ++visited;
        }
    };
    for (int i = 0; i < params.trajectories; ++i) {
        const ControlSignal signal = random_bang_bang(
            sys.controls.size(), params.horizon, params.u_bound,
            mix_seed(params.seed, static_cast<std::uint64_t>(i)));
        const bool ok = run_signal(sys, identity_element(), signal, params.dt, params.backward,
                                   [&](double, const GroupElement& p) { mark(p.t, p.v); });
        if (!ok) ++out.blown_up;
    }
    out.visited = visited;
    out.occupancy = static_cast<double>(visited) / static_cast<double>(out.total);
    return out;
}

void write_trajectory_csv(const std::string& path, const Trajectory& traj) {
    std::ofstream f(path);
    if (!f) throw NumericError("cannot open output file: " + path);
    f.precision(17);
    f << "s,tau,v1,v2\n";
    for (const auto& s : traj.samples) {
        f << s.s << ',' << s.g.t << ',' << s.g.v.x() << ',' << s.g.v.y() << '\n';
    }
}

}  // namespace solv3
