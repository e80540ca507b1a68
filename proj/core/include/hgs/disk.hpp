#pragma once

#include "hgs/sphere.hpp"

namespace hgs {

enum class Region { Inside, Boundary, Outside };

struct DisjointResult {
    bool disjoint;
    double margin;  // inversive gap, positive when separated; scale-free
};

/// Closed generalized disk on the Riemann sphere, stored as a Hermitian
/// coefficient triple (A real, B complex, D real):
///
///   { z : A |z|^2 + B z + conj(B) conj(z) + D <= 0 },
///
/// homogeneously  A |z0|^2 + 2 Re(B z0 conj(z1)) + D |z1|^2 <= 0,  with
/// A*D - |B|^2 < 0. A > 0 is a bounded disk (center -conj(B)/A, radius
/// sqrt(|B|^2 - A*D)/A), A < 0 contains infinity in its interior, A = 0 is a
/// closed half-plane. Coefficients are kept scaled so max(|A|,|B|,|D|) = 1;
/// only positive rescaling is allowed, the sign carries the orientation and
/// complement() is an exact sign flip.
class GeneralizedDisk {
public:
    GeneralizedDisk() : a_(1.0), b_(0.0), d_(-1.0) {}  // unit disk

    static GeneralizedDisk from_center_radius(Complex center, double radius);
    static GeneralizedDisk from_hermitian(double a, Complex b, double d);

    double coef_a() const { return a_; }
    Complex coef_b() const { return b_; }
    double coef_d() const { return d_; }

    GeneralizedDisk complement() const;

    bool bounded() const { return a_ > 0.0; }
    bool contains_infinity() const { return a_ <= 0.0; }  // boundary counts, disks are closed
    bool is_halfplane() const { return a_ == 0.0; }

    Complex center() const;  // requires bounded()
    double radius() const;   // requires bounded()

    /// Hermitian form value at a normalized homogeneous point.
    double evaluate(const SpherePoint& p) const;
    /// Sign classification using a first-order distance estimate, so the
    /// tolerance reads as a euclidean-like distance even for tiny disks.
    Region classify(const SpherePoint& p, double tol = kProjectiveTol) const;
    bool contains(const SpherePoint& p, double tol = kProjectiveTol) const {
        return classify(p, tol) != Region::Outside;
    }

    /// A point strictly interior: the center, infinity, or an offset foot
    /// point for half-planes.
    SpherePoint interior_point() const;
    SpherePoint boundary_point() const;

private:
    GeneralizedDisk(double a, Complex b, double d) : a_(a), b_(b), d_(d) {}
    void normalize();

    double a_;
    Complex b_;
    double d_;
};

/// Exact Hermitian congruence transport: z in X  <=>  M(z) in map_disk(M, X).
GeneralizedDisk map_disk(const MoebiusMap& m, const GeneralizedDisk& x);

/// Oriented inversive product of the det-normalized triples. For two bounded
/// disks this is the classical inversive distance of the boundary circles.
double inversive_product(const GeneralizedDisk& x, const GeneralizedDisk& y);

/// Closed-set disjointness with a scale-free margin certificate. Tangency is
/// not disjoint.
DisjointResult disjoint(const GeneralizedDisk& x, const GeneralizedDisk& y,
                        double tol = 1e-10);

/// inner contained in the open interior of outer, with the same margin metric.
DisjointResult contains_disk(const GeneralizedDisk& outer, const GeneralizedDisk& inner,
                             double tol = 1e-10);

/// Distance between boundary circles: max-norm of normalized triples, ignoring
/// orientation.
double circle_distance(const GeneralizedDisk& x, const GeneralizedDisk& y);

bool same_circle(const GeneralizedDisk& x, const GeneralizedDisk& y, double tol);

} // namespace hgs
