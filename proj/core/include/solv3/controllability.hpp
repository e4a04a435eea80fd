#pragma once

#include <optional>
#include <string>
#include <vector>

#include "solv3/system.hpp"

namespace solv3 {

// Invariant-region certificates witnessing noncontrollability.
enum class BarrierKind {
    HalfPlaneF,          // half-plane in the derivation chart, bounded by an
                         // invariant line through a common left eigenvector
    ExpandingDisk,       // disk boundary in the derivation chart whose
                         // exterior (or interior) is invariant
    MonotoneCoordinate,  // a nilradical coordinate whose drift component has
                         // one sign, so it never decreases (or increases)
};

struct BarrierCertificate {
    BarrierKind kind = BarrierKind::HalfPlaneF;
    // Normalized drift (same dstar as the input system; xi shifted by the
    // normalizing automorphism) and the shift v0 used, so the certificate can
    // be evaluated on trajectories of the original system.
    Derivation drift;
    Vec2 shift = Vec2::Zero();

    // HalfPlaneF: invariant set { sigma * (<p, n> - kappa) >= 0 }.
    Vec2 n = Vec2::Zero();
    double kappa = 0.0;
    // ExpandingDisk: invariant set { sigma * (|p - center| - radius) >= 0 }.
    Vec2 center = Vec2::Zero();
    double radius = 0.0;
    // MonotoneCoordinate: sigma * <v, v0> never decreases along trajectories.
    Vec2 v0 = Vec2::Zero();

    double sigma = 1.0;
};

struct Verdict {
    bool controllable = false;
    std::string clause;  // identifier from the fixed clause catalogue
    std::string explanation;
    std::optional<BarrierCertificate> certificate;
    DistributionInfo distribution;
    Decomposition decomposition;
    StructuralPredicates predicates;
};

// Full decision procedure.  Returns the verdict with a barrier certificate
// whenever the system is noncontrollable but satisfies the rank condition.
Verdict decide(const LinearSystem& sys, double tol = 1e-9);

// Search for a certificate for a (presumed noncontrollable) system.
std::optional<BarrierCertificate> barrier_certificate(const LinearSystem& sys, double tol = 1e-9);

// Projection charts that semi-conjugate the group dynamics onto a plane (or
// cylinder) where the certificates live.
enum class ChartSpace {
    PlaneF,     // p = rho_{-t} dstar v - Lambda_{-t} xi (dstar invertible)
    PlaneH,     // (t, <v, v0>) for dstar == 0
    CylinderH,  // (t, <v, v0>/w0.y mod 2*pi) for dstar == 0 on the plane quotient
};

struct ProjectedSystem {
    ChartSpace space = ChartSpace::PlaneF;
    LinearSystem system;
    Vec2 w0 = Vec2::Zero();  // chart data for PlaneH / CylinderH
    Vec2 v0 = Vec2::Zero();  // perpendicular of w0

    Vec2 project(const GroupElement& g) const;
    // Chart vector field at chart point p for control values u (one per
    // control of the system).
    Vec2 field(const Vec2& p, const std::vector<double>& u) const;
};

// Builds the chart for the regime of the system's derivation.  Throws
// SemanticError when the derivation fits no chart regime (dstar singular but
// nonzero).
ProjectedSystem projected_system(const LinearSystem& sys, double tol = 1e-9);

// Chart point of the derivation chart, defined for any dstar (used
// internally when monitoring half-plane certificates with singular dstar).
Vec2 chart_point_f(const Derivation& d, const GroupElement& g);

}  // namespace solv3
