#include "hgs/disk.hpp"

#include <algorithm>
#include <cmath>

#include "hgs/errors.hpp"

namespace hgs {

void GeneralizedDisk::normalize() {
    double m = std::max({std::abs(a_), std::abs(b_), std::abs(d_)});
    if (m == 0.0 || !std::isfinite(m)) throw InvalidDisk("degenerate Hermitian triple");
    if (std::abs(m - 1.0) < 1e-14) return;  // keeps reloaded triples bit-stable
    a_ /= m;
    b_ /= m;
    d_ /= m;
}

GeneralizedDisk GeneralizedDisk::from_hermitian(double a, Complex b, double d) {
    GeneralizedDisk x(a, b, d);
    x.normalize();
    if (x.a_ * x.d_ - std::norm(x.b_) >= 0.0)
        throw InvalidDisk("Hermitian triple has nonnegative determinant");
    return x;
}

GeneralizedDisk GeneralizedDisk::from_center_radius(Complex center, double radius) {
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw NonpositiveRadius("disk radius must be positive and finite");
    return from_hermitian(1.0, -std::conj(center), std::norm(center) - radius * radius);
}

GeneralizedDisk GeneralizedDisk::complement() const {
    GeneralizedDisk x(-a_, -b_, -d_);
    return x;
}

Complex GeneralizedDisk::center() const {
    if (!bounded()) throw InvalidDisk("center(): disk is not bounded");
    return -std::conj(b_) / a_;
}

double GeneralizedDisk::radius() const {
    if (!bounded()) throw InvalidDisk("radius(): disk is not bounded");
    return std::sqrt(std::norm(b_) - a_ * d_) / a_;
}

double GeneralizedDisk::evaluate(const SpherePoint& p) const {
    Complex z0 = p.hom0(), z1 = p.hom1();
    return a_ * std::norm(z0) + 2.0 * (b_ * z0 * std::conj(z1)).real() + d_ * std::norm(z1);
}

Region GeneralizedDisk::classify(const SpherePoint& p, double tol) const {
    Complex z0 = p.hom0(), z1 = p.hom1();
    double v = evaluate(p);
    // first-order distance estimate: |grad| of the form along either chart
    double g0 = std::abs(a_ * std::conj(z0) + b_ * std::conj(z1));
    double g1 = std::abs(std::conj(b_) * std::conj(z0) + d_ * std::conj(z1));
    double g = 2.0 * std::max(g0, g1);
    double dist = v / std::max(g, 1e-300);
    if (std::abs(dist) <= tol) return Region::Boundary;
    return v < 0.0 ? Region::Inside : Region::Outside;
}

SpherePoint GeneralizedDisk::interior_point() const {
    if (a_ > 0.0) return SpherePoint(center());
    if (a_ < 0.0) return SpherePoint::infinity();
    // half-plane: foot point of the boundary line, pushed inward
    Complex foot = -d_ * std::conj(b_) / (2.0 * std::norm(b_));
    return SpherePoint(foot - std::conj(b_) / std::abs(b_));
}

SpherePoint GeneralizedDisk::boundary_point() const {
    if (a_ != 0.0) {
        Complex c = -std::conj(b_) / a_;
        double r = std::sqrt(std::norm(b_) - a_ * d_) / std::abs(a_);
        return SpherePoint(c + r);
    }
    return SpherePoint(-d_ * std::conj(b_) / (2.0 * std::norm(b_)));
}

namespace {

// Compensated (double-double) arithmetic for the Hermitian congruence. When
// the map has entries ~1e8 (multiplier moduli near 1/machine-epsilon), the
// congruence terms reach ~1e16 and cancel to O(1) results; plain doubles lose
// the disk. FMA-based error-free products keep ~32 digits through the two
// matrix multiplies.
struct DD {
    double hi = 0.0, lo = 0.0;
};

DD two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

DD two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

DD dd_add(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    double lo = s.lo + a.lo + b.lo;
    DD r = two_sum(s.hi, lo);
    return r;
}

DD dd_mul(DD a, double b) {
    DD p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return dd_add({p.hi, 0.0}, {p.lo, 0.0});
}

DD dd_neg(DD a) { return {-a.hi, -a.lo}; }

struct CDD {
    DD re, im;
};

CDD cdd_add(CDD a, CDD b) { return {dd_add(a.re, b.re), dd_add(a.im, b.im)}; }

// product of two ordinary complex doubles, kept in double-double
CDD cdd_prod(Complex a, Complex b) {
    DD re = dd_add(two_prod(a.real(), b.real()), dd_neg(two_prod(a.imag(), b.imag())));
    DD im = dd_add(two_prod(a.real(), b.imag()), two_prod(a.imag(), b.real()));
    return {re, im};
}

// product of a double-double complex with an ordinary complex double
CDD cdd_prod(CDD a, Complex b) {
    DD re = dd_add(dd_mul(a.re, b.real()), dd_neg(dd_mul(a.im, b.imag())));
    DD im = dd_add(dd_mul(a.re, b.imag()), dd_mul(a.im, b.real()));
    return {re, im};
}

} // namespace

GeneralizedDisk map_disk(const MoebiusMap& m, const GeneralizedDisk& x) {
    // congruence by N = m^-1: H' = N^* H N with H = [[a, conj(b)], [b, d]]
    MoebiusMap n = m.inverse();
    Complex np = n.p(), nq = n.q(), nr = n.r(), ns = n.s();
    Complex a(x.coef_a(), 0.0), d(x.coef_d(), 0.0);
    Complex b = x.coef_b(), bc = std::conj(x.coef_b());

    // G = H N
    CDD g00 = cdd_add(cdd_prod(a, np), cdd_prod(bc, nr));
    CDD g01 = cdd_add(cdd_prod(a, nq), cdd_prod(bc, ns));
    CDD g10 = cdd_add(cdd_prod(b, np), cdd_prod(d, nr));
    CDD g11 = cdd_add(cdd_prod(b, nq), cdd_prod(d, ns));

    // H' = N^* G
    CDD h00 = cdd_add(cdd_prod(g00, std::conj(np)), cdd_prod(g10, std::conj(nr)));
    CDD h10 = cdd_add(cdd_prod(g00, std::conj(nq)), cdd_prod(g10, std::conj(ns)));
    CDD h11 = cdd_add(cdd_prod(g01, std::conj(nq)), cdd_prod(g11, std::conj(ns)));

    double ap = h00.re.hi;
    Complex bp(h10.re.hi, h10.im.hi);
    double dp = h11.re.hi;
    return GeneralizedDisk::from_hermitian(ap, bp, dp);
}

double inversive_product(const GeneralizedDisk& x, const GeneralizedDisk& y) {
    double sx = std::sqrt(std::norm(x.coef_b()) - x.coef_a() * x.coef_d());
    double sy = std::sqrt(std::norm(y.coef_b()) - y.coef_a() * y.coef_d());
    double num = x.coef_a() * y.coef_d() + y.coef_a() * x.coef_d() -
                 2.0 * (x.coef_b() * std::conj(y.coef_b())).real();
    return num / (2.0 * sx * sy);
}

DisjointResult disjoint(const GeneralizedDisk& x, const GeneralizedDisk& y, double tol) {
    double gap = inversive_product(x, y) - 1.0;
    if (gap <= tol) return {false, gap};
    // gap > 0 leaves two cases: disjoint disks, or the pair covering the whole
    // sphere; they are told apart by where the boundary of y sits.
    if (x.classify(y.boundary_point()) == Region::Inside) return {false, -gap};
    return {true, gap};
}

DisjointResult contains_disk(const GeneralizedDisk& outer, const GeneralizedDisk& inner,
                             double tol) {
    return disjoint(inner, outer.complement(), tol);
}

double circle_distance(const GeneralizedDisk& x, const GeneralizedDisk& y) {
    auto dist = [&](double s) {
        return std::max({std::abs(x.coef_a() - s * y.coef_a()),
                         std::abs(x.coef_b() - s * y.coef_b()),
                         std::abs(x.coef_d() - s * y.coef_d())});
    };
    return std::min(dist(1.0), dist(-1.0));
}

bool same_circle(const GeneralizedDisk& x, const GeneralizedDisk& y, double tol) {
    return circle_distance(x, y) <= tol;
}

} // namespace hgs
