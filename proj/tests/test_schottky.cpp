#include <doctest.h>

#include <cmath>
#include <random>

#include "hgs/apollonius.hpp"
#include "hgs/errors.hpp"
#include "hgs/loops.hpp"
#include "hgs/schottky.hpp"

using namespace hgs;

namespace {

std::mt19937_64 rng(662607);

Complex rand_complex(double lo = -1.0, double hi = 1.0) {
    std::uniform_real_distribution<double> u(lo, hi);
    return {u(rng), u(rng)};
}

MoebiusMap rand_moebius() {
    while (true) {
        Complex p = 1.0 + 0.3 * rand_complex(), q = 0.3 * rand_complex();
        Complex r = 0.3 * rand_complex(), s = 1.0 + 0.3 * rand_complex();
        if (std::abs(p * s - q * r) > 0.2) return MoebiusMap(p, q, r, s);
    }
}

SchottkyConfig base_cfg() {
    static SchottkyConfig cfg = base_point(0.2, 5.0, 4.0);
    return cfg;
}

} // namespace

TEST_CASE("base configuration certifies with comfortable margins") {
    SchottkyConfig cfg = base_cfg();
    Certificate cert = certify(cfg);
    CHECK(cert.pass);
    CHECK(cert.min_margin() > 1e-6);
    for (int i = 0; i < 2; ++i) {
        CHECK(cert.circle_residual[i] < 1e-9);
        CHECK(cert.orientation_pass[i]);
    }
    for (int i = 0; i < 4; ++i) CHECK(cert.localization_pass[i]);
}

TEST_CASE("certificate flags an inflated disk") {
    SchottkyConfig cfg = base_cfg();
    // grow d1 until it swallows the gamma2 fixed-point disk at alpha
    cfg.d1 = GeneralizedDisk::from_center_radius(0.0, std::abs(cfg.f2p.to_complex()) + 0.01);
    Certificate cert = certify(cfg);
    CHECK_FALSE(cert.pass);
    bool disjoint_failed = false;
    for (const PairCheck& p : cert.disjoint_pairs) disjoint_failed |= !p.pass;
    CHECK(disjoint_failed);
}

TEST_CASE("certificate catches a generator pointing the wrong way") {
    SchottkyConfig cfg = base_cfg();
    cfg.gamma2 = cfg.gamma2.inverse();  // without swapping d2 and d2p
    Certificate cert = certify(cfg);
    CHECK_FALSE(cert.pass);
    CHECK((!cert.circle_pass[1] || !cert.orientation_pass[1]));
}

TEST_CASE("certificate requires loxodromic generators") {
    SchottkyConfig cfg = base_cfg();
    cfg.gamma1 = MoebiusMap::translation(1.0);
    CHECK_THROWS_AS(certify(cfg), NonLoxodromicGenerator);
}

TEST_CASE("certificate is invariant under conjugation") {
    SchottkyConfig cfg = base_cfg();
    Certificate before = certify(cfg);
    for (int i = 0; i < 20; ++i) {
        MoebiusMap t = rand_moebius();
        Certificate after = certify(conjugate_config(cfg, t));
        CHECK(after.pass == before.pass);
        CHECK(after.circle_residual[0] < 10.0 * before.tol);
        CHECK(after.circle_residual[1] < 10.0 * before.tol);
    }
}

TEST_CASE("ping-pong nesting: gamma1 pushes the other disks into d1p") {
    SchottkyConfig cfg = base_cfg();
    for (const GeneralizedDisk* x : {&cfg.d1p, &cfg.d2, &cfg.d2p}) {
        DisjointResult r = contains_disk(cfg.d1p, map_disk(cfg.gamma1, *x));
        CHECK(r.disjoint);
        CHECK(r.margin > 0.0);
    }
    for (const GeneralizedDisk* x : {&cfg.d1, &cfg.d2, &cfg.d2p}) {
        DisjointResult r = contains_disk(cfg.d1, map_disk(cfg.gamma1.inverse(), *x));
        CHECK(r.disjoint);
        CHECK(r.margin > 0.0);
    }
}

TEST_CASE("reduced words: counts and lexicographic order") {
    std::vector<Word> words = reduced_words(3);
    CHECK(words.size() == 1 + 4 + 12 + 36);
    int by_len[4] = {0, 0, 0, 0};
    for (const Word& w : words) {
        by_len[w.size()]++;
        for (std::size_t i = 1; i < w.size(); ++i) CHECK((w[i - 1] ^ 1) != w[i]);
    }
    CHECK(by_len[0] == 1);
    CHECK(by_len[1] == 4);
    CHECK(by_len[2] == 12);
    CHECK(by_len[3] == 36);
    CHECK(words[1] == Word{0});
    CHECK(words[5] == Word{0, 0});
    CHECK(words[6] == Word{0, 2});
    CHECK(words[7] == Word{0, 3});
    CHECK(words[8] == Word{1, 1});
}

namespace {

// four interleaved disks on the real line with mild multipliers, so that even
// depth-4 word disks stay representable
SchottkyConfig interleaved_cfg() {
    GeneralizedDisk d1 = GeneralizedDisk::from_center_radius(0.0, 0.48);
    GeneralizedDisk d2 = GeneralizedDisk::from_center_radius(1.0, 0.48);
    GeneralizedDisk d1p = GeneralizedDisk::from_center_radius(2.0, 0.48);
    GeneralizedDisk d2p = GeneralizedDisk::from_center_radius(3.0, 0.48);
    ApolloniusData fam1 = apollonius_family(d1, d1p, SpherePoint(Complex(2.0)));
    ApolloniusData fam2 = apollonius_family(d2, d2p, SpherePoint(Complex(3.0)));
    MoebiusMap g1 = pairing_map(fam1, 0.7), g2 = pairing_map(fam2, -0.4);
    auto [f1, f1p] = g1.fixed_points();
    auto [f2, f2p] = g2.fixed_points();
    return SchottkyConfig{g1, g2, d1, d1p, d2, d2p, f1, f1p, f2, f2p};
}

} // namespace

TEST_CASE("word disks nest along prefixes") {
    SchottkyConfig cfg = interleaved_cfg();
    REQUIRE(certify(cfg).pass);
    for (const Word& w : reduced_words(4)) {
        if (w.size() < 2) continue;
        Word prefix(w.begin(), w.end() - 1);
        DisjointResult r = contains_disk(word_disk(cfg, prefix), word_disk(cfg, w));
        CHECK(r.disjoint);
    }
}

TEST_CASE("orbit: seeds, depth-1 containment, and word counts") {
    SchottkyConfig cfg = base_cfg();
    std::vector<SpherePoint> depth0 = orbit_sample(cfg, 0);
    REQUIRE(depth0.size() == 4);
    CHECK(chordal_distance(depth0[0], cfg.d1.interior_point()) < 1e-12);
    CHECK(chordal_distance(depth0[1], cfg.d1p.interior_point()) < 1e-12);
    CHECK(chordal_distance(depth0[2], cfg.d2.interior_point()) < 1e-12);
    CHECK(chordal_distance(depth0[3], cfg.d2p.interior_point()) < 1e-12);

    std::vector<SpherePoint> depth1 = orbit_sample(cfg, 1);
    REQUIRE(depth1.size() == 20);  // empty word + 4 letters, 4 seeds each
    const GeneralizedDisk* disks[4] = {&cfg.d1, &cfg.d1p, &cfg.d2, &cfg.d2p};
    for (const SpherePoint& p : depth1) {
        bool inside_some = false;
        for (const GeneralizedDisk* d : disks)
            inside_some = inside_some || d->contains(p);
        CHECK(inside_some);
    }

    CHECK_THROWS_AS(orbit_sample(cfg, 13), DepthTooLarge);
}

TEST_CASE("orbit is deterministic") {
    SchottkyConfig cfg = base_cfg();
    std::vector<SpherePoint> a = orbit_sample(cfg, 3);
    std::vector<SpherePoint> b = orbit_sample(cfg, 3);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(chordal_distance(a[i], b[i]) == 0.0);
}

TEST_CASE("separating circle exists for the base configuration") {
    SchottkyConfig cfg = base_cfg();
    SeparatingCircle sc = separating_circle_check(cfg);
    REQUIRE(sc.found);
    const GeneralizedDisk* disks[4] = {&cfg.d1, &cfg.d1p, &cfg.d2, &cfg.d2p};
    const int sides[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    const int* side = sides[sc.partition];
    CHECK(contains_disk(sc.circle, *disks[side[0]]).disjoint);
    CHECK(contains_disk(sc.circle, *disks[side[1]]).disjoint);
    CHECK(disjoint(sc.circle, *disks[side[2]]).disjoint);
    CHECK(disjoint(sc.circle, *disks[side[3]]).disjoint);
}

TEST_CASE("separating circle: interlocked tetrahedral caps admit none") {
    // spherical caps of angular radius 50 degrees around the vertices of a
    // regular tetrahedron: pairwise disjoint (separation 109.47 degrees), but
    // every balanced 2+2 split is blocked -- the bisecting circles clear the
    // centers by only ~33.6 degrees
    auto cap = [](double vx, double vy, double vz, double cos_rho) {
        return GeneralizedDisk::from_hermitian(cos_rho - vz, Complex(-vx, vy), vz + cos_rho);
    };
    double s = 1.0 / std::sqrt(3.0);
    double c50 = std::cos(50.0 * 3.14159265358979323846 / 180.0);
    GeneralizedDisk d1 = cap(s, s, s, c50);
    GeneralizedDisk d1p = cap(s, -s, -s, c50);
    GeneralizedDisk d2 = cap(-s, s, -s, c50);
    GeneralizedDisk d2p = cap(-s, -s, s, c50);

    ApolloniusData fam1 = apollonius_family(d1, d1p, d1p.interior_point());
    ApolloniusData fam2 = apollonius_family(d2, d2p, d2p.interior_point());
    MoebiusMap g1 = pairing_map(fam1, 0.3), g2 = pairing_map(fam2, 1.1);
    auto [f1, f1p] = g1.fixed_points();
    auto [f2, f2p] = g2.fixed_points();
    SchottkyConfig cfg{g1, g2, d1, d1p, d2, d2p, f1, f1p, f2, f2p};
    REQUIRE(certify(cfg).pass);
    CHECK_FALSE(separating_circle_check(cfg).found);
}

TEST_CASE("separating circle: symmetric square configuration") {
    // four unit disks at the corners of a big square, paired across the sides
    double a = 10.0;
    GeneralizedDisk d1 = GeneralizedDisk::from_center_radius(Complex(-a, a), 1.0);
    GeneralizedDisk d1p = GeneralizedDisk::from_center_radius(Complex(-a, -a), 1.0);
    GeneralizedDisk d2 = GeneralizedDisk::from_center_radius(Complex(a, a), 1.0);
    GeneralizedDisk d2p = GeneralizedDisk::from_center_radius(Complex(a, -a), 1.0);
    ApolloniusData fam1 = apollonius_family(d1, d1p, SpherePoint(Complex(-a, -a)));
    ApolloniusData fam2 = apollonius_family(d2, d2p, SpherePoint(Complex(a, -a)));
    MoebiusMap g1 = pairing_map(fam1, 0.0), g2 = pairing_map(fam2, 0.0);
    auto [f1, f1p] = g1.fixed_points();
    auto [f2, f2p] = g2.fixed_points();
    SchottkyConfig cfg{g1, g2, d1, d1p, d2, d2p, f1, f1p, f2, f2p};
    REQUIRE(certify(cfg).pass);
    SeparatingCircle sc = separating_circle_check(cfg);
    CHECK(sc.found);
    CHECK(sc.partition == 0);  // {d1, d1p} vs {d2, d2p} across the imaginary axis
}
