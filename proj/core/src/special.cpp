#include "hgs/special.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hgs/errors.hpp"

namespace hgs {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPoleGuard = 1e-8;

// Lanczos (g = 7, n = 9) coefficients
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

bool near_nonpositive_integer(Complex z, double guard) {
    if (z.real() > 0.5) return false;
    double k = std::round(z.real());
    if (k > 0.0) return false;
    return std::abs(z - Complex(k, 0.0)) < guard;
}

Complex lanczos_gamma(Complex z) {
    // valid for Re z >= 0.5
    z -= 1.0;
    Complex acc = kLanczos[0];
    for (std::size_t k = 1; k < kLanczos.size(); ++k)
        acc += kLanczos[k] / (z + static_cast<double>(k));
    Complex t = z + kLanczosG + 0.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

std::string fmt_complex(Complex z) {
    std::ostringstream os;
    os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return os.str();
}

} // namespace

Complex complex_gamma(Complex z) { return complex_gamma_named(z, "z"); }

Complex complex_gamma_named(Complex z, const std::string& name) {
    if (near_nonpositive_integer(z, kPoleGuard))
        throw GammaPole("Gamma pole at " + name + " = " + fmt_complex(z));
    if (z.real() < 0.5) {
        // Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return kPi / (std::sin(kPi * z) * lanczos_gamma(1.0 - z));
    }
    return lanczos_gamma(z);
}

void HGParams::validate() const {
    complex_gamma_named(a, "a");
    complex_gamma_named(b, "b");
    complex_gamma_named(c, "c");
    complex_gamma_named(2.0 - c, "2-c");
    complex_gamma_named(c - a, "c-a");
    complex_gamma_named(c - b, "c-b");
    complex_gamma_named(1.0 - a, "1-a");
    complex_gamma_named(1.0 - b, "1-b");
    complex_gamma_named(c - a - b, "c-a-b");
    complex_gamma_named(a + b - c, "a+b-c");
    complex_gamma_named(a - c + 1.0, "a-c+1");
    complex_gamma_named(b - c + 1.0, "b-c+1");
}

double AngleTriple::epsilon() const { return std::exp(-kPi * theta0); }

HGParams AngleTriple::params() const {
    return HGParams{Complex(0.5, -0.5 * (theta0 + theta1 + theta2)),
                    Complex(0.5, -0.5 * (theta0 + theta1 - theta2)),
                    Complex(1.0, -theta0)};
}

Mat2c Mat2c::inverse() const {
    Complex dt = det();
    return Mat2c{m11 / dt, -m01 / dt, -m10 / dt, m00 / dt};
}

Mat2c operator*(const Mat2c& a, const Mat2c& b) {
    return Mat2c{a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
                 a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
}

Mat2c connection_matrix(const HGParams& p) {
    const Complex a = p.a, b = p.b, c = p.c;
    auto G = [](Complex z, const char* name) { return complex_gamma_named(z, name); };
    Complex gc = G(c, "c");
    Complex g2c = G(2.0 - c, "2-c");
    Complex gcab = G(c - a - b, "c-a-b");
    Complex gabc = G(a + b - c, "a+b-c");
    return Mat2c{
        gc * gcab / (G(c - a, "c-a") * G(c - b, "c-b")),
        g2c * gcab / (G(1.0 - a, "1-a") * G(1.0 - b, "1-b")),
        gc * gabc / (G(a, "a") * G(b, "b")),
        g2c * gabc / (G(a - c + 1.0, "a-c+1") * G(b - c + 1.0, "b-c+1")),
    };
}

std::pair<MoebiusMap, MoebiusMap> circuit_matrices(const HGParams& p) {
    const Complex ipi(0.0, kPi);
    // determinants are known in closed form (e^{2 pi i lambda}, e^{2 pi i mu});
    // dividing by them analytically avoids renormalizing against numerically
    // cancelled determinants when a multiplier is extreme
    Complex sl = std::exp(ipi * p.lambda());
    MoebiusMap g1 = MoebiusMap::from_unit_determinant(1.0 / sl, 0.0, 0.0, sl);
    Mat2c cm = connection_matrix(p);
    double scale = std::abs(cm.m00 * cm.m11) + std::abs(cm.m01 * cm.m10);
    if (std::abs(cm.det()) < 1e-12 * scale)
        throw DegenerateNormalization(
            "circuit_matrices: connection matrix is singular (resonant parameters)");
    Mat2c d{1.0, 0.0, 0.0, std::exp(2.0 * ipi * p.mu())};
    Mat2c m2 = cm.inverse() * d * cm;
    Complex sm = std::exp(ipi * p.mu());
    MoebiusMap g2 = MoebiusMap::from_right_action(m2.m00 / sm, m2.m01 / sm, m2.m10 / sm,
                                                  m2.m11 / sm);
    return {g1, g2};
}

std::pair<Complex, Complex> gamma2_fixed_points(const HGParams& p) {
    const Complex a = p.a, b = p.b, c = p.c;
    auto G = [](Complex z, const char* name) { return complex_gamma_named(z, name); };
    Complex gc = G(c, "c");
    Complex g2c = G(2.0 - c, "2-c");
    Complex f2 = gc * G(a - c + 1.0, "a-c+1") * G(b - c + 1.0, "b-c+1") /
                 (g2c * G(a, "a") * G(b, "b"));
    Complex f2p = gc * G(1.0 - a, "1-a") * G(1.0 - b, "1-b") /
                  (g2c * G(c - a, "c-a") * G(c - b, "c-b"));
    return {f2, f2p};
}

Complex g_function(Complex x, Complex c) {
    Complex s = std::sin(kPi * x);
    if (std::abs(s) < 1e-12)
        throw SinePole("g(x): sin(pi x) vanishes at x = " + fmt_complex(x));
    return std::sin(kPi * c - kPi * x) / s;
}

Complex normalized_alpha(const HGParams& p) { return g_function(p.a, p.c) * g_function(p.b, p.c); }

NormalizedSystem normalize_generators(const HGParams& p) {
    auto [g1, g2] = circuit_matrices(p);
    auto [f2, f2p] = gamma2_fixed_points(p);
    if (std::abs(f2) < 1e-14)
        throw DegenerateNormalization("normalize_generators: f2 vanishes");
    MoebiusMap t = MoebiusMap::scaling(1.0 / f2);
    return NormalizedSystem{g1.conjugated_by(t), g2.conjugated_by(t), f2p / f2, f2, f2p};
}

NormalizedSystem normalized_system_direct(const HGParams& p) {
    const Complex i2pi(0.0, 2.0 * kPi);
    Complex alpha = normalized_alpha(p);
    MoebiusMap g1 = MoebiusMap::scaling(std::exp(-i2pi * p.lambda()));
    // multiplier relative to the pair (1, alpha); e^{2 pi i mu} is the
    // eigenvalue attached to f2, so the pair-order ratio is its inverse
    MoebiusMap g2 = MoebiusMap::from_fixed_points_multiplier(
        SpherePoint(Complex(1.0)), SpherePoint(alpha), std::exp(-i2pi * p.mu()));
    auto [f2, f2p] = gamma2_fixed_points(p);
    return NormalizedSystem{g1, g2, alpha, f2, f2p};
}

} // namespace hgs
