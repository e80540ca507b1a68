#pragma once

#include <optional>

#include "hgs/disk.hpp"
#include "hgs/sphere.hpp"

namespace hgs {

/// The unique pair of points (F in D, F' in D') whose transport to infinity
/// renders the two boundary circles concentric.
struct ConcentricPair {
    SpherePoint f;   // in D
    SpherePoint fp;  // in D'
};

/// Solves the concentric-center problem for two disjoint generalized disks.
/// Unbounded or half-plane inputs are moved to a bounded general position
/// first; the reduced real quadratic is solved in the normalized variable and
/// its roots are checked against their separating intervals.
ConcentricPair concentric_centers(const GeneralizedDisk& d, const GeneralizedDisk& dp);

/// Data of the one-circle family of loxodromic maps sending D onto the
/// complementary disk of D' while fixing fp (an interior point of D'):
/// the locus circle for the second fixed point, and the forced |multiplier|.
class ApolloniusData {
public:
    bool degenerate() const { return degenerate_; }  // fp == F': locus blown up to a phase circle
    double multiplier_modulus() const { return abs_m_; }
    /// Bounded-side disk whose boundary is the fixed-point locus circle;
    /// only for the non-degenerate case.
    const GeneralizedDisk& circle() const;

    friend ApolloniusData apollonius_family(const GeneralizedDisk&, const GeneralizedDisk&,
                                            const SpherePoint&);
    friend MoebiusMap pairing_map(const ApolloniusData&, double phase);
    friend MoebiusMap pairing_map(const ApolloniusData&, const SpherePoint& f);

private:
    bool degenerate_ = false;
    double abs_m_ = 0.0;
    std::optional<GeneralizedDisk> circle_;
    MoebiusMap transport_;  // sends fp to infinity; D, D' become bounded
    Complex c_, cp_;        // transported centers of D and of complement(D')
    double r_ = 0.0;        // transported radius of D
    SpherePoint fp_;
    std::optional<GeneralizedDisk> d_, dp_;
};

ApolloniusData apollonius_family(const GeneralizedDisk& d, const GeneralizedDisk& dp,
                                 const SpherePoint& fp);

/// Member of the family selected by the multiplier phase; the returned map is
/// loxodromic, fixes fp, and sends D exactly onto the complementary disk of
/// D'. Phase 0 points along the positive real axis in the transported frame.
MoebiusMap pairing_map(const ApolloniusData& data, double phase);

/// Member selected by the second fixed point, which must lie on the locus
/// circle. Rejected in the degenerate case (PhaseRequired).
MoebiusMap pairing_map(const ApolloniusData& data, const SpherePoint& f);

} // namespace hgs
