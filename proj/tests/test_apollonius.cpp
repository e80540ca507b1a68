#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hgs/apollonius.hpp"
#include "hgs/errors.hpp"

using namespace hgs;

namespace {

constexpr double pi = std::numbers::pi;

std::mt19937_64 rng(53419);

double uniform(double lo, double hi) {
    std::uniform_real_distribution<double> u(lo, hi);
    return u(rng);
}

Complex rand_complex(double lo = -2.0, double hi = 2.0) { return {uniform(lo, hi), uniform(lo, hi)}; }

struct DiskPair {
    GeneralizedDisk d, dp;
};

DiskPair rand_disjoint_pair() {
    Complex c1 = rand_complex(-2.0, 2.0);
    double r1 = uniform(0.2, 1.5), r2 = uniform(0.2, 1.5);
    double gap = uniform(0.05, 3.0);
    double angle = uniform(0.0, 2.0 * pi);
    Complex c2 = c1 + std::polar(r1 + r2 + gap, angle);
    return {GeneralizedDisk::from_center_radius(c1, r1),
            GeneralizedDisk::from_center_radius(c2, r2)};
}

// offset of the transported circle centers after sending f to infinity,
// relative to the smaller radius
double concentricity_defect(const GeneralizedDisk& d, const GeneralizedDisk& dp,
                            const SpherePoint& f, const MoebiusMap& extra = MoebiusMap()) {
    MoebiusMap t = compose(extra, MoebiusMap::pivot(f));
    GeneralizedDisk a = map_disk(t, d), b = map_disk(t, dp);
    if (!a.bounded()) a = a.complement();  // the transported disk around f holds infinity;
    if (!b.bounded()) b = b.complement();  // only its boundary circle matters here
    return std::abs(a.center() - b.center()) / std::min(a.radius(), b.radius());
}

} // namespace

TEST_CASE("concentric centers of a symmetric pair") {
    GeneralizedDisk d = GeneralizedDisk::from_center_radius(-2.0, 1.0);
    GeneralizedDisk dp = GeneralizedDisk::from_center_radius(2.0, 1.0);
    ConcentricPair cc = concentric_centers(d, dp);
    Complex f = cc.f.to_complex(), fp = cc.fp.to_complex();
    CHECK(std::abs(f.imag()) < 1e-12);
    CHECK(std::abs(fp.imag()) < 1e-12);
    CHECK(std::abs(f + fp) < 1e-12);  // symmetric about 0
    CHECK(std::abs(f - Complex(-std::sqrt(3.0))) < 1e-12);
    CHECK(d.classify(cc.f) == Region::Inside);
    CHECK(dp.classify(cc.fp) == Region::Inside);
}

TEST_CASE("concentric centers: frozen quadratic solution") {
    GeneralizedDisk d = GeneralizedDisk::from_center_radius(0.0, 1.0);
    GeneralizedDisk dp = GeneralizedDisk::from_center_radius(5.0, 2.0);
    ConcentricPair cc = concentric_centers(d, dp);
    // roots of eta^2 - 1.12 eta + 0.16, mapped through zeta = -5 eta + 5
    CHECK(std::abs(cc.f.to_complex() - Complex(0.24040820577345752)) < 1e-12);
    CHECK(std::abs(cc.fp.to_complex() - Complex(4.1595917942265425)) < 1e-12);
}

TEST_CASE("transport to infinity makes the circles concentric") {
    for (int i = 0; i < 25; ++i) {
        DiskPair pair = rand_disjoint_pair();
        ConcentricPair cc = concentric_centers(pair.d, pair.dp);
        CHECK(concentricity_defect(pair.d, pair.dp, cc.f) < 1e-8);
        CHECK(concentricity_defect(pair.d, pair.dp, cc.fp) < 1e-8);
        // any map sending f to infinity works, not just the pivot
        MoebiusMap extra = MoebiusMap::affine(rand_complex(0.5, 2.0), rand_complex());
        CHECK(concentricity_defect(pair.d, pair.dp, cc.f, extra) < 1e-8);
    }
}

TEST_CASE("concentric centers: uniqueness is strict") {
    DiskPair pair = rand_disjoint_pair();
    ConcentricPair cc = concentric_centers(pair.d, pair.dp);
    for (Complex dir : {Complex(1.0, 0.0), Complex(0.0, 1.0), Complex(-0.7, 0.7)}) {
        SpherePoint perturbed(cc.f.to_complex() + 1e-3 * dir);
        CHECK(concentricity_defect(pair.d, pair.dp, perturbed) > 1e-5);
    }
}

TEST_CASE("concentric centers with an unbounded disk") {
    GeneralizedDisk d = GeneralizedDisk::from_center_radius(0.0, 1.0);
    GeneralizedDisk dp = GeneralizedDisk::from_center_radius(0.0, 2.0).complement();
    ConcentricPair cc = concentric_centers(d, dp);
    CHECK(chordal_distance(cc.f, SpherePoint(Complex(0.0))) < 1e-9);
    CHECK(cc.fp.is_infinity(1e-9));

    // half-plane partner: Re z >= 3
    GeneralizedDisk half = GeneralizedDisk::from_hermitian(0.0, Complex(-0.5), 3.0);
    ConcentricPair cc2 = concentric_centers(d, half);
    CHECK(d.classify(cc2.f) == Region::Inside);
    CHECK(half.classify(cc2.fp) == Region::Inside);
    CHECK(concentricity_defect(d, half, cc2.f) < 1e-8);
}

TEST_CASE("concentric centers reject intersecting disks") {
    GeneralizedDisk d = GeneralizedDisk::from_center_radius(0.0, 1.0);
    CHECK_THROWS_AS(concentric_centers(d, GeneralizedDisk::from_center_radius(1.0, 1.0)),
                    DisksNotDisjoint);
}

TEST_CASE("boundary circles are distance-ratio level sets of the two centers") {
    for (int i = 0; i < 10; ++i) {
        DiskPair pair = rand_disjoint_pair();
        ConcentricPair cc = concentric_centers(pair.d, pair.dp);
        Complex f = cc.f.to_complex(), fp = cc.fp.to_complex();
        for (const GeneralizedDisk* disk : {&pair.d, &pair.dp}) {
            double lo = 1e300, hi = 0.0;
            for (int k = 0; k < 16; ++k) {
                Complex z = disk->center() + std::polar(disk->radius(), 2.0 * pi * k / 16.0);
                double ratio = std::abs(z - f) / std::abs(z - fp);
                lo = std::min(lo, ratio);
                hi = std::max(hi, ratio);
            }
            CHECK((hi - lo) / lo < 1e-8);
        }
    }
}

TEST_CASE("pairing family: normalized case with the marked point at infinity") {
    GeneralizedDisk d = GeneralizedDisk::from_center_radius(1.0, 0.5);
    GeneralizedDisk dp = GeneralizedDisk::from_center_radius(0.0, 4.0).complement();
    ApolloniusData fam = apollonius_family(d, dp, SpherePoint::infinity());
    CHECK_FALSE(fam.degenerate());
    CHECK(fam.multiplier_modulus() == doctest::Approx(8.0));
    // locus |z| = 8 |z - 1|: center 64/63, radius 8/63, contained in d
    CHECK(std::abs(fam.circle().center() - Complex(64.0 / 63.0)) < 1e-10);
    CHECK(fam.circle().radius() == doctest::Approx(8.0 / 63.0));
    CHECK(contains_disk(d, fam.circle()).disjoint);

    for (int k = 0; k < 8; ++k) {
        double phase = 2.0 * pi * k / 8.0;
        MoebiusMap g = pairing_map(fam, phase);
        CHECK(g.is_loxodromic());
        CHECK(circle_distance(map_disk(g, d), dp.complement()) < 1e-9);
        CHECK(std::abs(std::abs(g.multiplier()) - 8.0) < 1e-9);
        // infinity stays fixed and the other fixed point is on the locus
        auto [rep, att] = g.fixed_points();
        CHECK(att.is_infinity(1e-8));
        CHECK(fam.circle().classify(rep, 1e-8) == Region::Boundary);
        CHECK(d.classify(rep) == Region::Inside);
    }
}

TEST_CASE("pairing family: degenerate marked point frees the phase") {
    GeneralizedDisk d = GeneralizedDisk::from_center_radius(0.0, 1.0);
    GeneralizedDisk dp = GeneralizedDisk::from_center_radius(5.0, 2.0);
    ConcentricPair cc = concentric_centers(d, dp);
    ApolloniusData fam = apollonius_family(d, dp, cc.fp);
    CHECK(fam.degenerate());
    CHECK_THROWS_AS(fam.circle(), PhaseRequired);
    CHECK_THROWS_AS(pairing_map(fam, SpherePoint(Complex(0.2))), PhaseRequired);
    // |m| equals the concentric radius ratio
    MoebiusMap to_inf = MoebiusMap::pivot(cc.fp);
    double ratio = map_disk(to_inf, dp).complement().radius() / map_disk(to_inf, d).radius();
    CHECK(fam.multiplier_modulus() == doctest::Approx(ratio));

    for (double phase : {0.0, 1.0, 2.5, 4.0}) {
        MoebiusMap g = pairing_map(fam, phase);
        CHECK(g.is_loxodromic());
        CHECK(circle_distance(map_disk(g, d), dp.complement()) < 1e-9);
        auto [rep, att] = g.fixed_points();
        CHECK(chordal_distance(att, cc.fp) < 1e-8);
        CHECK(chordal_distance(rep, cc.f) < 1e-8);
    }
}

TEST_CASE("pairing family on random data") {
    for (int i = 0; i < 10; ++i) {
        DiskPair pair = rand_disjoint_pair();
        Complex fp_affine =
            pair.dp.center() + std::polar(uniform(0.0, 0.8) * pair.dp.radius(),
                                          uniform(0.0, 2.0 * pi));
        SpherePoint fp(fp_affine);
        ApolloniusData fam = apollonius_family(pair.d, pair.dp, fp);
        REQUIRE_FALSE(fam.degenerate());
        CHECK(contains_disk(pair.d, fam.circle()).disjoint);

        double m_lo = 1e300, m_hi = 0.0;
        for (int k = 0; k < 16; ++k) {
            double phase = 2.0 * pi * k / 16.0;
            MoebiusMap g = pairing_map(fam, phase);
            CHECK(circle_distance(map_disk(g, pair.d), pair.dp.complement()) < 1e-9);
            CHECK(chordal_distance(g.apply(fp), fp) < 1e-9);
            auto [rep, att] = g.fixed_points();
            CHECK(pair.d.classify(rep) == Region::Inside);
            CHECK(pair.dp.classify(att) == Region::Inside);
            CHECK(fam.circle().classify(rep, 1e-7) == Region::Boundary);
            double mm = std::abs(g.multiplier());
            m_lo = std::min(m_lo, mm);
            m_hi = std::max(m_hi, mm);

            // rebuilding from the extracted data pairs the disks again
            MoebiusMap rebuilt =
                MoebiusMap::from_fixed_points_multiplier(rep, att, g.multiplier());
            CHECK(circle_distance(map_disk(rebuilt, pair.d), pair.dp.complement()) < 1e-8);

            // a point selects the same family member
            MoebiusMap by_point = pairing_map(fam, rep);
            CHECK(projective_distance(by_point, g) < 1e-7);
        }
        CHECK((m_hi - m_lo) / m_hi < 1e-10);
        CHECK(std::abs(m_hi - fam.multiplier_modulus()) < 1e-9 * m_hi);
    }
}

TEST_CASE("pairing family: |m| is transport-invariant") {
    for (int i = 0; i < 10; ++i) {
        DiskPair pair = rand_disjoint_pair();
        SpherePoint fp(pair.dp.center() + 0.3 * pair.dp.radius());
        ApolloniusData fam = apollonius_family(pair.d, pair.dp, fp);
        MoebiusMap t(rand_complex(), rand_complex(), rand_complex(0.1, 0.5), Complex(1.0));
        ApolloniusData fam2 =
            apollonius_family(map_disk(t, pair.d), map_disk(t, pair.dp), t.apply(fp));
        CHECK(std::abs(fam.multiplier_modulus() - fam2.multiplier_modulus()) <
              1e-10 * fam.multiplier_modulus());
    }
}

TEST_CASE("phase to fixed point is a degree-one circle map") {
    GeneralizedDisk d = GeneralizedDisk::from_center_radius(Complex(-1.0, 0.5), 1.2);
    GeneralizedDisk dp = GeneralizedDisk::from_center_radius(Complex(3.0, -0.5), 0.8);
    ApolloniusData fam = apollonius_family(d, dp, SpherePoint(Complex(3.1, -0.4)));
    Complex center = fam.circle().center();
    double total = 0.0;
    Complex prev;
    for (int k = 0; k <= 64; ++k) {
        double phase = 2.0 * pi * k / 64.0;
        auto [rep, att] = pairing_map(fam, phase).fixed_points();
        Complex v = rep.to_complex() - center;
        if (k > 0) total += std::arg(v / prev);
        prev = v;
    }
    CHECK(std::abs(std::abs(total) - 2.0 * pi) < 1e-6);
}

TEST_CASE("pairing family input validation") {
    DiskPair pair = rand_disjoint_pair();
    CHECK_THROWS_AS(apollonius_family(pair.d, pair.dp, SpherePoint(pair.d.center())),
                    PointNotInterior);
    ApolloniusData fam =
        apollonius_family(pair.d, pair.dp, SpherePoint(pair.dp.center()));
    if (!fam.degenerate()) {
        CHECK_THROWS_AS(pairing_map(fam, SpherePoint(pair.dp.center())), PointNotOnA);
    }
}
