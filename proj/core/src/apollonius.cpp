#include "hgs/apollonius.hpp"

#include <cmath>

#include "hgs/errors.hpp"

namespace hgs {

namespace {

// Möbius map after which both disks are bounded. Identity when they already
// are. Otherwise pivot around an interior point of d to put its complement
// around a bounded hole, pick a point s in the gap between dp and that hole,
// and pivot around s.
MoebiusMap bounding_transport(const GeneralizedDisk& d, const GeneralizedDisk& dp) {
    if (d.bounded() && dp.bounded()) return MoebiusMap::identity();

    MoebiusMap t0 = MoebiusMap::pivot(d.interior_point());
    GeneralizedDisk d1 = map_disk(t0, d);    // contains infinity in its interior
    GeneralizedDisk dp1 = map_disk(t0, dp);  // bounded, inside the hole of d1
    GeneralizedDisk hole = d1.complement();  // bounded disk containing dp1

    Complex ch = hole.center(), cp = dp1.center();
    double rh = hole.radius(), rp = dp1.radius();
    Complex u = (std::abs(cp - ch) > 0.0) ? (cp - ch) / std::abs(cp - ch) : Complex(1.0);
    double reach = rh - std::abs(cp - ch);  // distance from cp to the hole boundary along u
    Complex s = cp + u * ((rp + reach) / 2.0);
    return compose(MoebiusMap::pivot(SpherePoint(s)), t0);
}

struct BoundedPair {
    MoebiusMap map;          // the transport used
    Complex c, cp;           // centers
    double r, rp;            // radii
};

BoundedPair to_bounded(const GeneralizedDisk& d, const GeneralizedDisk& dp) {
    MoebiusMap t = bounding_transport(d, dp);
    GeneralizedDisk dt = map_disk(t, d), dpt = map_disk(t, dp);
    return BoundedPair{t, dt.center(), dpt.center(), dt.radius(), dpt.radius()};
}

} // namespace

ConcentricPair concentric_centers(const GeneralizedDisk& d, const GeneralizedDisk& dp) {
    if (!disjoint(d, dp).disjoint) throw DisksNotDisjoint("concentric_centers: disks intersect");

    BoundedPair bp = to_bounded(d, dp);
    double dist = std::abs(bp.c - bp.cp);
    if (!(dist > bp.r + bp.rp))
        throw DisksNotDisjoint("concentric_centers: transported disks not separated");

    // eta^2 + (-1 + (r^2 - r'^2)/dist^2) eta + r'^2/dist^2 = 0,
    // with zeta = (c - c') eta + c'; eta = 0 and 1 are the centers of D' and D
    double pq = -1.0 + (bp.r * bp.r - bp.rp * bp.rp) / (dist * dist);
    double q = (bp.rp * bp.rp) / (dist * dist);
    double disc = pq * pq - 4.0 * q;
    if (disc <= 0.0) throw DisksNotDisjoint("concentric_centers: no real separation roots");
    double eta_big = (-pq + std::sqrt(disc)) / 2.0;
    double eta_small = q / eta_big;

    if (!(eta_small > 0.0 && eta_small < bp.rp / dist))
        throw NumericalRootOutsideInterval("concentric_centers: eta root left (0, r'/dist)");
    if (!(eta_big > 1.0 - bp.r / dist && eta_big < 1.0))
        throw NumericalRootOutsideInterval("concentric_centers: eta root left (1 - r/dist, 1)");

    Complex span = bp.c - bp.cp;
    MoebiusMap back = bp.map.inverse();
    return ConcentricPair{back.apply(SpherePoint(span * eta_big + bp.cp)),
                          back.apply(SpherePoint(span * eta_small + bp.cp))};
}

const GeneralizedDisk& ApolloniusData::circle() const {
    if (!circle_) throw PhaseRequired("locus circle is blown up in the degenerate case");
    return *circle_;
}

ApolloniusData apollonius_family(const GeneralizedDisk& d, const GeneralizedDisk& dp,
                                 const SpherePoint& fp) {
    if (!disjoint(d, dp).disjoint) throw DisksNotDisjoint("apollonius_family: disks intersect");
    if (dp.classify(fp) != Region::Inside)
        throw PointNotInterior("apollonius_family: fp must be strictly inside D'");

    ApolloniusData out;
    out.fp_ = fp;
    out.d_ = d;
    out.dp_ = dp;

    // transport fp -> infinity; D and the complement of D' both become bounded
    MoebiusMap v = MoebiusMap::pivot(fp);
    GeneralizedDisk dt = map_disk(v, d);
    GeneralizedDisk kt = map_disk(v, dp).complement();
    out.transport_ = v;
    out.c_ = dt.center();
    out.cp_ = kt.center();
    out.r_ = dt.radius();
    out.abs_m_ = kt.radius() / dt.radius();

    ConcentricPair cc = concentric_centers(d, dp);
    out.degenerate_ = chordal_distance(fp, cc.fp) < 1e-8;
    if (!out.degenerate_) {
        // bounded side of |z - c'| = |m| |z - c|, i.e. k^2 |z-c|^2 <= |z-c'|^2
        double k2 = out.abs_m_ * out.abs_m_;
        GeneralizedDisk locus = GeneralizedDisk::from_hermitian(
            k2 - 1.0, std::conj(out.cp_) - k2 * std::conj(out.c_),
            k2 * std::norm(out.c_) - std::norm(out.cp_));
        out.circle_ = map_disk(v.inverse(), locus);
    }
    return out;
}

MoebiusMap pairing_map(const ApolloniusData& data, double phase) {
    Complex m = data.abs_m_ * std::exp(Complex(0.0, phase));
    // fixed point forced by m(c - f) + f = c'; the concentric case frees it
    Complex f_t = data.degenerate_ ? data.c_ : (data.cp_ - m * data.c_) / (1.0 - m);
    MoebiusMap aff = MoebiusMap::affine(m, f_t * (1.0 - m));
    return aff.conjugated_by(data.transport_.inverse());
}

MoebiusMap pairing_map(const ApolloniusData& data, const SpherePoint& f) {
    if (data.degenerate_)
        throw PhaseRequired("pairing_map: degenerate family is parametrized by phase only");
    if (data.circle().classify(f, 1e-7) != Region::Boundary)
        throw PointNotOnA("pairing_map: f is not on the locus circle");
    Complex f_t = data.transport_.apply(f).to_complex();
    Complex m = (data.cp_ - f_t) / (data.c_ - f_t);
    MoebiusMap aff = MoebiusMap::affine(m, f_t * (1.0 - m));
    return aff.conjugated_by(data.transport_.inverse());
}

} // namespace hgs
