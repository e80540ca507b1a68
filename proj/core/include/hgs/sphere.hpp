#pragma once

#include <complex>
#include <utility>

namespace hgs {

using Complex = std::complex<double>;

inline constexpr double kProjectiveTol = 1e-9;  // default chordal comparison tolerance
inline constexpr double kParabolicTol = 1e-10;  // |tr^2 - 4| classification threshold

/// Point of the Riemann sphere in homogeneous coordinates (z0 : z1),
/// rescaled so the larger coordinate has modulus 1. Infinity is (1 : 0).
class SpherePoint {
public:
    SpherePoint() : z0_(0.0), z1_(1.0) {}
    SpherePoint(Complex z);  // finite point (z : 1); infinities map to (1 : 0)
    SpherePoint(double x) : SpherePoint(Complex(x, 0.0)) {}

    static SpherePoint infinity() { return SpherePoint(Complex(1.0), Complex(0.0), 0); }
    static SpherePoint from_homogeneous(Complex z0, Complex z1);

    Complex hom0() const { return z0_; }
    Complex hom1() const { return z1_; }

    bool is_infinity(double tol = kProjectiveTol) const;
    /// Affine coordinate z0/z1. Huge (or inf) for points at/near infinity.
    Complex to_complex() const { return z0_ / z1_; }

private:
    SpherePoint(Complex z0, Complex z1, int) : z0_(z0), z1_(z1) {}
    Complex z0_, z1_;
};

/// Chordal metric on the sphere of diameter 2. Range [0, 2]; handles infinity.
double chordal_distance(const SpherePoint& a, const SpherePoint& b);

inline bool projectively_equal(const SpherePoint& a, const SpherePoint& b,
                               double tol = kProjectiveTol) {
    return chordal_distance(a, b) <= tol;
}

enum class MapClass { Identity, Parabolic, Elliptic, Loxodromic };

/// Fractional linear map z -> (p z + q)/(r z + s), stored normalized to
/// determinant 1 (the matrix sign stays ambiguous; all observables here are
/// insensitive to it).
///
/// Conventions, fixed once:
///  - fixed_points() returns (repelling, attracting) for loxodromic maps;
///  - multiplier() is the eigenvalue ratio tied to that order: conjugating the
///    map so that the first point goes to 0 and the second to infinity yields
///    z -> m z. Hence |m| > 1 exactly when the second stored point attracts,
///    and for the canonical loxodromic order |multiplier()| > 1 always;
///  - contracting_multiplier() = 1/multiplier() is the derivative at the
///    attracting fixed point, the normalization used in monodromy reports.
class MoebiusMap {
public:
    MoebiusMap() : p_(1.0), q_(0.0), r_(0.0), s_(1.0) {}
    MoebiusMap(Complex p, Complex q, Complex r, Complex s);

    /// Entries trusted to have determinant 1 already; no renormalization.
    /// The numeric determinant of an ill-conditioned matrix (|multiplier|
    /// near 1/machine-epsilon) cancels catastrophically, so operations whose
    /// results are determinant-1 by construction must come through here.
    static MoebiusMap from_unit_determinant(Complex p, Complex q, Complex r, Complex s) {
        MoebiusMap m;
        m.p_ = p;
        m.q_ = q;
        m.r_ = r;
        m.s_ = s;
        return m;
    }

    /// Translate a matrix acting on row vectors (u1, u2) from the right into
    /// the induced map on z = u1 : u2. For ((m00, m01), (m10, m11)) that map is
    /// z -> (m00 z + m10)/(m01 z + m11); this is the one place where the
    /// row-action convention of the circuit matrices is converted.
    static MoebiusMap from_right_action(Complex m00, Complex m01, Complex m10, Complex m11) {
        return MoebiusMap(m00, m10, m01, m11);
    }

    static MoebiusMap identity() { return MoebiusMap(); }
    static MoebiusMap scaling(Complex k);                 // z -> k z
    static MoebiusMap affine(Complex k, Complex b);       // z -> k z + b
    static MoebiusMap translation(Complex b) { return affine(1.0, b); }
    /// z -> 1/(z - p); sends p to infinity. For p = infinity returns identity.
    static MoebiusMap pivot(const SpherePoint& p);
    /// The unique map fixing f1 and f2 with multiplier m relative to the pair
    /// order (f1, f2). Throws CoincidentFixedPoints.
    static MoebiusMap from_fixed_points_multiplier(const SpherePoint& f1,
                                                   const SpherePoint& f2, Complex m);

    Complex p() const { return p_; }
    Complex q() const { return q_; }
    Complex r() const { return r_; }
    Complex s() const { return s_; }

    SpherePoint apply(const SpherePoint& z) const;
    Complex apply(Complex z) const { return apply(SpherePoint(z)).to_complex(); }

    MoebiusMap inverse() const { return from_unit_determinant(s_, -q_, -r_, p_); }
    MoebiusMap conjugated_by(const MoebiusMap& t) const;  // t * this * t^-1

    Complex trace() const { return p_ + s_; }
    MapClass classify(double parabolic_tol = kParabolicTol) const;
    bool is_loxodromic() const { return classify() == MapClass::Loxodromic; }

    /// (repelling, attracting) for loxodromic maps; the double point twice for
    /// parabolic; a deterministic order for elliptic. Throws IdentityMapError.
    std::pair<SpherePoint, SpherePoint> fixed_points() const;
    Complex multiplier() const;
    Complex contracting_multiplier() const { return 1.0 / multiplier(); }

    /// Projective distance between maps: normalized matrices compared up to
    /// the overall sign, max-norm.
    friend double projective_distance(const MoebiusMap& a, const MoebiusMap& b);

private:
    Complex p_, q_, r_, s_;
};

/// apply(compose(a, b), z) == a.apply(b.apply(z)).
MoebiusMap compose(const MoebiusMap& a, const MoebiusMap& b);

} // namespace hgs
