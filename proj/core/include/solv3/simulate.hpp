#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "solv3/controllability.hpp"
#include "solv3/system.hpp"

namespace solv3 {

// Closed-form flow of the drift field through time s.
GroupElement linear_flow(const Derivation& d, double s, const GroupElement& g);

// Flow of the derivation on the algebra: e^{sD}.
AlgebraElement derivation_flow(const Derivation& d, double s, const AlgebraElement& x);

// Full control vector field (drift plus scaled control fields) at (tau, v).
void system_field(const LinearSystem& sys, double tau, const Vec2& v,
                  const std::vector<double>& u, double& dtau, Vec2& dv);

struct ControlSegment {
    double duration = 0.0;
    std::vector<double> u;
};
using ControlSignal = std::vector<ControlSegment>;

struct TrajectorySample {
    double s = 0.0;
    GroupElement g;
};

struct Trajectory {
    std::vector<TrajectorySample> samples;
    double dt = 0.0;
    bool blew_up = false;
};

// Fixed-step fourth-order integration; segment boundaries are hit exactly and
// the state is canonicalized after every step.  Stops early (and flags the
// trajectory) if the state exceeds the blow-up guard.
Trajectory integrate(const LinearSystem& sys, const GroupElement& start,
                     const ControlSignal& signal, double dt, bool backward = false);

// Largest certificate violation along a trajectory.  Half-plane and disk
// certificates use entered-then-stays semantics: once a sample satisfies
// B >= 0, the violation is the deepest later excursion below zero.  Monotone
// certificates report the largest drawdown of the monotone coordinate.
double monitor_barrier(const LinearSystem& sys, const BarrierCertificate& cert,
                       const Trajectory& traj);

struct GridSpec {
    Vec3 lo = Vec3(-2, -2, -2);
    Vec3 hi = Vec3(2, 2, 2);
    int nx = 20, ny = 20, nz = 20;
};

struct ReachParams {
    int trajectories = 1000;
    double horizon = 10.0;
    double u_bound = 1.0;
    double dt = 1e-2;
    std::uint64_t seed = 0;
    GridSpec grid;
    bool backward = false;
};

struct ReachSample {
    long visited = 0;
    long total = 0;
    double occupancy = 0.0;
    long blown_up = 0;
};

// Randomized reachable-set sampling: bang-bang controls with exponentially
// distributed switching times (mean 1), deterministic for a fixed seed.
// Occupancy is the fraction of grid cells visited by any sampled point
// (tau, v1, v2).
ReachSample reachable_sample(const LinearSystem& sys, const ReachParams& params);

// Random bang-bang signal on [0, horizon] (used by the sampler; exposed for
// tests and the certificate monitor).
ControlSignal random_bang_bang(std::size_t channels, double horizon, double u_bound,
                               std::uint64_t seed);

// Deterministic per-trajectory seed derivation.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

void write_trajectory_csv(const std::string& path, const Trajectory& traj);

}  // namespace solv3
