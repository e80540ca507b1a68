#pragma once

#include <string>
#include <utility>

#include "hgs/sphere.hpp"

namespace hgs {

/// Gamma function on the complex plane, Lanczos approximation (g = 7, 9
/// coefficients) with the reflection formula for Re z < 1/2. Relative error
/// is ~1e-13 for |Re z|, |Im z| <= 50 away from poles. Arguments within 1e-8
/// of a non-positive integer throw GammaPole.
Complex complex_gamma(Complex z);

/// complex_gamma with the argument's role in the caller's formula attached to
/// the pole diagnostic.
Complex complex_gamma_named(Complex z, const std::string& name);

/// Hypergeometric parameter triple with the derived exponent differences.
struct HGParams {
    Complex a, b, c;

    Complex lambda() const { return 1.0 - c; }   // exponent difference at 0
    Complex mu() const { return c - a - b; }     // at 1
    Complex nu() const { return b - a; }         // at infinity

    /// Throws GammaPole (naming the argument) if any Gamma argument of the
    /// connection matrix sits within the pole guard radius.
    void validate() const;
};

/// Pure-imaginary exponent regime: lambda = i*theta0, mu = i*theta1,
/// nu = i*theta2 with all angles positive.
struct AngleTriple {
    double theta0, theta1, theta2;

    double epsilon() const;  // e^{-pi theta0}, in (0,1)
    HGParams params() const;
};

/// Plain 2x2 complex matrix, used for the connection matrix and its algebra.
struct Mat2c {
    Complex m00, m01, m10, m11;

    Complex det() const { return m00 * m11 - m01 * m10; }
    Complex trace() const { return m00 + m11; }
    Mat2c inverse() const;
};
Mat2c operator*(const Mat2c& a, const Mat2c& b);

/// Connection matrix between the local solution bases at 0, entries are the
/// four Gamma ratios. Throws GammaPole naming the offending argument.
Mat2c connection_matrix(const HGParams& p);

/// Circuit maps around x = 0 and x = 1 induced on the projective solution
/// coordinate. The row-action matrices are translated through
/// MoebiusMap::from_right_action; gamma1 always fixes {0, infinity}.
std::pair<MoebiusMap, MoebiusMap> circuit_matrices(const HGParams& p);

/// Fixed points (f2, f2p) of the circuit map around 1, by the closed Gamma
/// formulas. f2 is the repelling one whenever the map is loxodromic with the
/// monodromy orientation used here.
std::pair<Complex, Complex> gamma2_fixed_points(const HGParams& p);

/// g(x) = sin(pi c - pi x) / sin(pi x). Throws SinePole when sin(pi x) ~ 0.
Complex g_function(Complex x, Complex c);

/// alpha = g(a) g(b) = f2p / f2, the second fixed point of gamma2 after the
/// coordinate is rescaled so the first goes to 1.
Complex normalized_alpha(const HGParams& p);

struct NormalizedSystem {
    MoebiusMap gamma1, gamma2;  // gamma1 fixes {0, inf}; gamma2 fixes {1, alpha}
    Complex alpha;
    Complex f2, f2p;
};

/// Conjugates the circuit maps by z -> z / f2. Throws DegenerateNormalization
/// when f2 vanishes.
NormalizedSystem normalize_generators(const HGParams& p);

/// Same normalized generators assembled from the closed-form data alone:
/// gamma1 = z -> e^{-2 pi i lambda} z and gamma2 from (1, alpha) with
/// multiplier e^{-2 pi i mu} relative to that pair order. Numerically robust
/// for large |Im| parameters where the Gamma-ratio route loses digits.
NormalizedSystem normalized_system_direct(const HGParams& p);

} // namespace hgs
