#pragma once

#include <array>
#include <vector>

#include "hgs/disk.hpp"
#include "hgs/sphere.hpp"

namespace hgs {

/// Candidate point of the moduli space: generator pair, four marked disks,
/// and the marked fixed points (repelling in d1/d2, attracting in d1p/d2p).
/// May be constructed unverified; certify() decides.
struct SchottkyConfig {
    MoebiusMap gamma1, gamma2;
    GeneralizedDisk d1, d1p, d2, d2p;
    SpherePoint f1, f1p, f2, f2p;
};

struct PairCheck {
    int first, second;  // disk indices, order d1, d1p, d2, d2p
    double margin;
    bool pass;
};

struct Certificate {
    std::array<PairCheck, 6> disjoint_pairs;
    std::array<double, 2> circle_residual;   // gamma_i(D_i) vs complement(D_i')
    std::array<bool, 2> circle_pass;
    std::array<bool, 2> orientation_pass;    // interior maps to interior of the image side
    std::array<Region, 4> fixed_point_region;
    std::array<bool, 4> localization_pass;
    double tol = 0.0;
    double required_margin = 0.0;
    bool pass = false;

    double min_margin() const;
};

/// Numerical Schottky certificate: 6 pairwise disjointness margins, exact-
/// transport circle matching for both pairings, an interior-orientation probe,
/// and fixed-point localization. Throws NonLoxodromicGenerator.
Certificate certify(const SchottkyConfig& cfg, double tol = 1e-9,
                    double required_margin = 1e-6);

struct SeparatingCircle {
    bool found = false;
    int partition = -1;  // 0: {d1,d1p}|{d2,d2p}, 1: {d1,d2}|{d1p,d2p}, 2: {d1,d2p}|{d1p,d2}
    GeneralizedDisk circle;
};

/// Searches the three balanced partitions of the four disks for a circle
/// separating one pair from the other, scanning concentric radii after the
/// concentric-centers transport of the candidate pair. A miss is a valid
/// outcome, not an error.
SeparatingCircle separating_circle_check(const SchottkyConfig& cfg);

/// Letters of reduced words: 0 = gamma1, 1 = gamma1^-1, 2 = gamma2, 3 = gamma2^-1.
using Word = std::vector<int>;

/// All reduced words of length <= depth, grouped by length, lexicographic
/// within each length.
std::vector<Word> reduced_words(int depth);

MoebiusMap word_map(const SchottkyConfig& cfg, const Word& w);

/// Nested word disk: the image region a reduced word pushes points into.
/// For a single letter these are d1p, d1, d2p, d2; longer words transport the
/// tail disk by the head letters. Word disks shrink like |multiplier|^-length
/// and stop being representable in double Hermitian triples once their radius
/// falls under ~1e-8 of their center scale (InvalidDisk); deep nesting checks
/// should walk the suffix chain of points instead.
GeneralizedDisk word_disk(const SchottkyConfig& cfg, const Word& w);

/// Orbit scatter: images of the four disk centers (canonical interior point
/// for disks holding infinity) under every reduced word of length <= depth,
/// in enumeration order (four points per word). depth must not exceed 12.
std::vector<SpherePoint> orbit_sample(const SchottkyConfig& cfg, int depth);

/// Conjugated configuration: generators, disks, and marked points transported
/// by t. Preserves the certificate verdict.
SchottkyConfig conjugate_config(const SchottkyConfig& cfg, const MoebiusMap& t);

} // namespace hgs
