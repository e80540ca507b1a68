#include "hgs/sphere.hpp"

#include <algorithm>
#include <cmath>

#include "hgs/errors.hpp"

namespace hgs {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// eigenvalues of a det-1 matrix with trace tr, (larger modulus first),
// avoiding cancellation in tr +/- sqrt(tr^2 - 4)
std::pair<Complex, Complex> det1_eigenvalues(Complex tr) {
    Complex disc = std::sqrt(tr * tr - 4.0);
    if (tr.real() * disc.real() + tr.imag() * disc.imag() < 0.0) disc = -disc;
    Complex big = (tr + disc) / 2.0;
    return {big, 1.0 / big};
}

} // namespace

SpherePoint::SpherePoint(Complex z) {
    if (!finite(z)) {
        z0_ = 1.0;
        z1_ = 0.0;
        return;
    }
    double m = std::abs(z);
    if (m <= 1.0) {
        z0_ = z;
        z1_ = 1.0;
    } else {
        z0_ = z / m;
        z1_ = 1.0 / m;
    }
}

SpherePoint SpherePoint::from_homogeneous(Complex z0, Complex z1) {
    double m0 = std::abs(z0), m1 = std::abs(z1);
    double m = std::max(m0, m1);
    if (m == 0.0 || !std::isfinite(m)) throw Error("SpherePoint: invalid homogeneous pair");
    return SpherePoint(z0 / m, z1 / m, 0);
}

bool SpherePoint::is_infinity(double tol) const {
    return chordal_distance(*this, infinity()) <= tol;
}

double chordal_distance(const SpherePoint& a, const SpherePoint& b) {
    double na = std::sqrt(std::norm(a.hom0()) + std::norm(a.hom1()));
    double nb = std::sqrt(std::norm(b.hom0()) + std::norm(b.hom1()));
    return 2.0 * std::abs(a.hom0() * b.hom1() - a.hom1() * b.hom0()) / (na * nb);
}

MoebiusMap::MoebiusMap(Complex p, Complex q, Complex r, Complex s) {
    Complex det = p * s - q * r;
    if (std::abs(det) == 0.0 || !finite(det)) throw Error("MoebiusMap: singular matrix");
    Complex scale = std::sqrt(det);
    p_ = p / scale;
    q_ = q / scale;
    r_ = r / scale;
    s_ = s / scale;
}

MoebiusMap MoebiusMap::scaling(Complex k) { return affine(k, 0.0); }

MoebiusMap MoebiusMap::affine(Complex k, Complex b) {
    Complex rk = std::sqrt(k);
    return from_unit_determinant(rk, b / rk, 0.0, 1.0 / rk);
}

MoebiusMap MoebiusMap::pivot(const SpherePoint& p) {
    if (p.is_infinity()) return identity();
    const Complex mi(0.0, -1.0);
    return from_unit_determinant(0.0, mi, mi, mi * -p.to_complex());
}

SpherePoint MoebiusMap::apply(const SpherePoint& z) const {
    return SpherePoint::from_homogeneous(p_ * z.hom0() + q_ * z.hom1(),
                                         r_ * z.hom0() + s_ * z.hom1());
}

MoebiusMap compose(const MoebiusMap& a, const MoebiusMap& b) {
    // product of determinant-1 matrices, determinant 1 by construction
    return MoebiusMap::from_unit_determinant(
        a.p() * b.p() + a.q() * b.r(), a.p() * b.q() + a.q() * b.s(),
        a.r() * b.p() + a.s() * b.r(), a.r() * b.q() + a.s() * b.s());
}

MoebiusMap MoebiusMap::conjugated_by(const MoebiusMap& t) const {
    return compose(compose(t, *this), t.inverse());
}

MapClass MoebiusMap::classify(double parabolic_tol) const {
    Complex t2 = trace() * trace();
    if (std::abs(t2 - 4.0) < parabolic_tol) {
        double off = std::abs(q_) + std::abs(r_) + std::abs(p_ - s_);
        return off < parabolic_tol ? MapClass::Identity : MapClass::Parabolic;
    }
    if (std::abs(t2.imag()) < parabolic_tol && t2.real() >= 0.0 && t2.real() < 4.0)
        return MapClass::Elliptic;
    return MapClass::Loxodromic;
}

std::pair<SpherePoint, SpherePoint> MoebiusMap::fixed_points() const {
    MapClass cls = classify();
    if (cls == MapClass::Identity) throw IdentityMapError("fixed_points: identity map");

    Complex tr = trace();
    auto [l1, l2] = det1_eigenvalues(tr);

    auto eigenvector = [&](Complex lam) {
        // rows of (M - lam I) are (p-lam, q) and (r, s-lam); each row, when
        // nonzero, determines the kernel: v = (-q, p-lam) or (s-lam, -r)
        Complex v0a = -q_, v1a = p_ - lam;
        Complex v0b = s_ - lam, v1b = -r_;
        double na = std::norm(v0a) + std::norm(v1a);
        double nb = std::norm(v0b) + std::norm(v1b);
        if (na >= nb) return SpherePoint::from_homogeneous(v0a, v1a);
        return SpherePoint::from_homogeneous(v0b, v1b);
    };

    if (cls == MapClass::Parabolic) {
        Complex lam = std::abs(tr - 2.0) < std::abs(tr + 2.0) ? Complex(1.0) : Complex(-1.0);
        SpherePoint f = eigenvector(lam);
        return {f, f};
    }

    SpherePoint f1 = eigenvector(l1);
    SpherePoint f2 = eigenvector(l2);
    if (cls == MapClass::Loxodromic) {
        // attracting fixed point carries the larger-modulus eigenvalue, which
        // det1_eigenvalues puts first
        return {f2, f1};  // (repelling, attracting)
    }
    // elliptic: no dynamical order; sort eigenvalues lexicographically
    bool swap = (l1.real() > l2.real()) ||
                (l1.real() == l2.real() && l1.imag() > l2.imag());
    if (swap) std::swap(f1, f2);
    return {f1, f2};
}

Complex MoebiusMap::multiplier() const {
    MapClass cls = classify();
    if (cls == MapClass::Identity || cls == MapClass::Parabolic) return 1.0;
    auto [l1, l2] = det1_eigenvalues(trace());
    // pair order per fixed_points(): m = (eigenvalue at second point)^2
    if (cls == MapClass::Loxodromic) return l1 * l1;
    bool swap = (l1.real() > l2.real()) ||
                (l1.real() == l2.real() && l1.imag() > l2.imag());
    Complex second = swap ? l1 : l2;
    return second * second;
}

MoebiusMap MoebiusMap::from_fixed_points_multiplier(const SpherePoint& f1,
                                                    const SpherePoint& f2, Complex m) {
    if (std::abs(m) == 0.0 || !std::isfinite(std::abs(m)))
        throw Error("from_fixed_points_multiplier: multiplier must be nonzero finite");
    if (chordal_distance(f1, f2) <= kProjectiveTol)
        throw CoincidentFixedPoints("from_fixed_points_multiplier: fixed points coincide");
    // V diag(m^-1/2, m^1/2) V^-1 with V columns the homogeneous fixed points
    Complex rm = std::sqrt(m);
    Complex a0 = f1.hom0(), a1 = f1.hom1();
    Complex b0 = f2.hom0(), b1 = f2.hom1();
    Complex det = a0 * b1 - b0 * a1;
    Complex l1 = 1.0 / rm, l2 = rm;
    return from_unit_determinant((l1 * a0 * b1 - l2 * b0 * a1) / det,
                                 (l2 - l1) * a0 * b0 / det, (l1 - l2) * a1 * b1 / det,
                                 (l2 * a0 * b1 - l1 * b0 * a1) / det);
}

double projective_distance(const MoebiusMap& a, const MoebiusMap& b) {
    auto dist = [&](double sign) {
        double d = 0.0;
        d = std::max(d, std::abs(a.p_ - sign * b.p_));
        d = std::max(d, std::abs(a.q_ - sign * b.q_));
        d = std::max(d, std::abs(a.r_ - sign * b.r_));
        d = std::max(d, std::abs(a.s_ - sign * b.s_));
        return d;
    };
    // relative to the entry scale, so maps with huge multipliers (entries far
    // above 1 even at determinant 1) compare by agreement, not magnitude
    double scale = std::max({1.0, std::abs(a.p_), std::abs(a.q_), std::abs(a.r_),
                             std::abs(a.s_), std::abs(b.p_), std::abs(b.q_), std::abs(b.r_),
                             std::abs(b.s_)});
    return std::min(dist(1.0), dist(-1.0)) / scale;
}

} // namespace hgs
