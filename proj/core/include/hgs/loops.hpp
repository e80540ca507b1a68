#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hgs/schottky.hpp"
#include "hgs/special.hpp"

namespace hgs {

/// The four deformation loops of the moduli space, named after what travels:
/// the fixed-point disk D_alpha around D_0 or around D_1, or the multiplier
/// argument of one generator around 0.
enum class LoopKind { AlphaAroundD0, AlphaAroundD1, MultiplierGamma2, MultiplierGamma1 };

std::string to_string(LoopKind k);
std::optional<LoopKind> loop_kind_from_string(std::string_view s);

struct LoopProfile {
    double theta0 = 0.0;
    double theta1 = 0.0;
    double theta2 = 0.0;       // derived for AlphaAroundD0/D1, explicit otherwise
    double theta_prime = 0.0;  // AlphaAroundD1 only, negative
    int samples = 64;
    double tol = 1e-9;
    double required_margin = 1e-6;

    static LoopProfile defaults(LoopKind k);
};

struct AuditItem {
    std::string name;
    double value;
    double slack;  // positive = satisfied
    bool pass;
};

struct ProfileAudit {
    std::vector<AuditItem> items;
    bool pass = false;
    // derived constants (meaning depends on the loop kind)
    double eps = 0.0, r = 0.0, R = 0.0;
    double s = 0.0;        // AlphaAroundD1
    double theta = 0.0;    // MultiplierGamma1/2 angle sum
    double psi_max = 0.0;  // AlphaAroundD0
    double ring = 0.0;     // MultiplierGamma1/2 hole factor used by the disk recipe
};

ProfileAudit audit_profile(LoopKind kind, const LoopProfile& profile);

struct PhiPsi {
    double phi, psi;
};

/// Branch-continuous solve of R e^{-2 pi i t} = g(1/2 + phi - (i/2)(theta0 + psi))
/// by continuation from t = 0 (phi(0) = 0, psi(0) = 1), subdividing whenever a
/// log argument would step by more than pi/2. The traversal runs the g-image
/// clockwise; that is the direction with phi increasing from 0 to 1.
PhiPsi solve_phi_psi(const LoopProfile& profile, double t);

/// Parameter path of the loop at time t. Throws ProfileNotAudited when the
/// profile fails its audit.
HGParams loop_params(LoopKind kind, const LoopProfile& profile, double t);

struct DiskSet {
    GeneralizedDisk d1, d1p, d2, d2p;
};

/// Marked disks at time t: the concentric pair for the scaling generator per
/// the explicit recipes, and the pairing pair for the other generator.
DiskSet loop_disks(LoopKind kind, const LoopProfile& profile, double t,
                   const HGParams& params);

/// Full candidate configuration at time t.
SchottkyConfig sample_config(LoopKind kind, const LoopProfile& profile, double t);

struct LoopSample {
    double t = 0.0;
    HGParams params;
    Complex alpha;
    Complex mult_gamma1, mult_gamma2;  // contracting multipliers
    PhiPsi phipsi{0.0, 0.0};           // AlphaAroundD0 only
    DiskSet disks;
    Certificate cert;
    bool refined = false;  // inserted by adaptive refinement
};

struct LoopAggregates {
    int winding_alpha_about_0 = 0;
    int winding_alpha_about_1 = 0;
    double winding_residual = 0.0;       // worst |sum/2pi - integer| of the two
    double darg_deformed_multiplier = 0.0;
    double endpoint_generator_distance = 0.0;
    double endpoint_disk_distance = 0.0;
    double endpoint_alpha_distance = 0.0;
    double min_certificate_margin = 0.0;
    double max_circle_residual = 0.0;
    bool all_certificates_pass = false;
    std::vector<AuditItem> per_kind_checks;
    bool per_kind_checks_pass = false;
    double empirical_min_theta1 = 0.0;  // AlphaAroundD1: smallest theta1 that still certifies
};

struct LoopReport {
    LoopKind kind = LoopKind::AlphaAroundD0;
    LoopProfile profile;
    ProfileAudit audit;
    std::vector<LoopSample> samples;
    LoopAggregates aggregates;
    bool pass = false;
};

/// Traces the loop on a uniform grid of profile.samples steps (plus adaptive
/// refinement where a certificate margin dips under 10x the requirement),
/// certifies every sample, and accumulates windings, multiplier argument
/// change, and endpoint agreement.
LoopReport trace_loop(LoopKind kind, const LoopProfile& profile);

/// Certified configuration of the pure-imaginary base family.
SchottkyConfig base_point(double theta0, double theta1, double theta2);

/// Smallest theta1 for which the AlphaAroundD1 loop still certifies on a
/// coarse probe grid, found by bisection against the profile's own theta1.
double minimal_theta1_for_certificates(const LoopProfile& profile, int probe_samples = 16);

} // namespace hgs
