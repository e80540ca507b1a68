#include "hgs/schottky.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hgs/apollonius.hpp"
#include "hgs/errors.hpp"

namespace hgs {

double Certificate::min_margin() const {
    double m = disjoint_pairs[0].margin;
    for (const auto& p : disjoint_pairs) m = std::min(m, p.margin);
    return m;
}

Certificate certify(const SchottkyConfig& cfg, double tol, double required_margin) {
    if (!cfg.gamma1.is_loxodromic() || !cfg.gamma2.is_loxodromic())
        throw NonLoxodromicGenerator("certify: generators must be loxodromic");

    Certificate cert;
    cert.tol = tol;
    cert.required_margin = required_margin;

    const GeneralizedDisk* disks[4] = {&cfg.d1, &cfg.d1p, &cfg.d2, &cfg.d2p};
    int k = 0;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            DisjointResult r = disjoint(*disks[i], *disks[j]);
            cert.disjoint_pairs[k++] = PairCheck{i, j, r.margin,
                                                 r.disjoint && r.margin > required_margin};
        }
    }

    const MoebiusMap* gens[2] = {&cfg.gamma1, &cfg.gamma2};
    const GeneralizedDisk* src[2] = {&cfg.d1, &cfg.d2};
    const GeneralizedDisk* dst[2] = {&cfg.d1p, &cfg.d2p};
    for (int i = 0; i < 2; ++i) {
        GeneralizedDisk target = dst[i]->complement();
        SpherePoint probe = gens[i]->apply(src[i]->interior_point());
        cert.orientation_pass[i] = target.classify(probe) == Region::Inside;
        try {
            GeneralizedDisk image = map_disk(*gens[i], *src[i]);
            cert.circle_residual[i] = circle_distance(image, target);
        } catch (const InvalidDisk&) {
            // image too degenerate to represent: certainly not the target circle
            cert.circle_residual[i] = std::numeric_limits<double>::infinity();
        }
        cert.circle_pass[i] = cert.circle_residual[i] <= tol;
    }

    const SpherePoint* marks[4] = {&cfg.f1, &cfg.f1p, &cfg.f2, &cfg.f2p};
    for (int i = 0; i < 4; ++i) {
        cert.fixed_point_region[i] = disks[i]->classify(*marks[i]);
        cert.localization_pass[i] = cert.fixed_point_region[i] == Region::Inside;
    }

    bool ok = true;
    for (const auto& p : cert.disjoint_pairs) ok = ok && p.pass;
    for (int i = 0; i < 2; ++i) ok = ok && cert.circle_pass[i] && cert.orientation_pass[i];
    for (int i = 0; i < 4; ++i) ok = ok && cert.localization_pass[i];
    cert.pass = ok;
    return cert;
}

SeparatingCircle separating_circle_check(const SchottkyConfig& cfg) {
    const GeneralizedDisk* disks[4] = {&cfg.d1, &cfg.d1p, &cfg.d2, &cfg.d2p};
    // partitions as index pairs: {0,x} vs the rest
    const int sides[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};

    for (int pi = 0; pi < 3; ++pi) {
        const GeneralizedDisk& a0 = *disks[sides[pi][0]];
        const GeneralizedDisk& a1 = *disks[sides[pi][1]];
        const GeneralizedDisk& b0 = *disks[sides[pi][2]];
        const GeneralizedDisk& b1 = *disks[sides[pi][3]];

        // axis from the concentric transport of one disk per side, then a
        // radius scan through the annulus between them
        MoebiusMap t;
        try {
            ConcentricPair cc = concentric_centers(a0, b0);
            t = MoebiusMap::pivot(cc.fp);
        } catch (const Error&) {
            continue;
        }
        GeneralizedDisk ta0 = map_disk(t, a0), ta1 = map_disk(t, a1);
        GeneralizedDisk tb0 = map_disk(t, b0), tb1 = map_disk(t, b1);
        if (!ta0.bounded()) continue;
        GeneralizedDisk hole = tb0.complement();
        if (!hole.bounded()) continue;

        Complex center = ta0.center();
        double lo = ta0.radius(), hi = hole.radius();
        if (!(hi > lo)) continue;
        for (int step = 1; step < 64; ++step) {
            double rho = lo + (hi - lo) * step / 64.0;
            GeneralizedDisk cand = GeneralizedDisk::from_center_radius(center, rho);
            bool a_in = contains_disk(cand, ta0).disjoint && contains_disk(cand, ta1).disjoint;
            bool b_out = disjoint(cand, tb0).disjoint && disjoint(cand, tb1).disjoint;
            if (a_in && b_out) {
                SeparatingCircle out;
                out.found = true;
                out.partition = pi;
                out.circle = map_disk(t.inverse(), cand);
                return out;
            }
        }
    }
    return SeparatingCircle{};
}

std::vector<Word> reduced_words(int depth) {
    std::vector<Word> words;
    words.push_back({});
    std::vector<Word> frontier = {{}};
    for (int d = 1; d <= depth; ++d) {
        std::vector<Word> next;
        for (const Word& w : frontier) {
            for (int letter = 0; letter < 4; ++letter) {
                if (!w.empty()) {
                    int last = w.back();
                    if ((last ^ 1) == letter) continue;  // cancellation
                }
                Word nw = w;
                nw.push_back(letter);
                next.push_back(std::move(nw));
            }
        }
        for (const Word& w : next) words.push_back(w);
        frontier = std::move(next);
    }
    return words;
}

namespace {

MoebiusMap letter_map(const SchottkyConfig& cfg, int letter) {
    switch (letter) {
        case 0: return cfg.gamma1;
        case 1: return cfg.gamma1.inverse();
        case 2: return cfg.gamma2;
        default: return cfg.gamma2.inverse();
    }
}

const GeneralizedDisk& letter_range(const SchottkyConfig& cfg, int letter) {
    // gamma1 pushes everything outside d1 into d1p, and so on
    switch (letter) {
        case 0: return cfg.d1p;
        case 1: return cfg.d1;
        case 2: return cfg.d2p;
        default: return cfg.d2;
    }
}

} // namespace

MoebiusMap word_map(const SchottkyConfig& cfg, const Word& w) {
    MoebiusMap m = MoebiusMap::identity();
    for (int letter : w) m = compose(m, letter_map(cfg, letter));
    return m;
}

GeneralizedDisk word_disk(const SchottkyConfig& cfg, const Word& w) {
    if (w.empty()) throw Error("word_disk: empty word has no disk");
    GeneralizedDisk disk = letter_range(cfg, w.back());
    for (int i = static_cast<int>(w.size()) - 2; i >= 0; --i)
        disk = map_disk(letter_map(cfg, w[i]), disk);
    return disk;
}

std::vector<SpherePoint> orbit_sample(const SchottkyConfig& cfg, int depth) {
    if (depth < 0 || depth > 12) throw DepthTooLarge("orbit_sample: depth must be in [0, 12]");
    // seeds are the disk centers (the canonical interior point when a disk
    // holds infinity); letters are applied one at a time, innermost first --
    // the ping-pong contraction then keeps the evaluation stable at depths
    // where the fully composed matrices would have lost the point
    const SpherePoint seeds[4] = {cfg.d1.interior_point(), cfg.d1p.interior_point(),
                                  cfg.d2.interior_point(), cfg.d2p.interior_point()};
    std::vector<SpherePoint> points;
    for (const Word& w : reduced_words(depth)) {
        for (const SpherePoint& s : seeds) {
            SpherePoint p = s;
            for (int k = static_cast<int>(w.size()) - 1; k >= 0; --k)
                p = letter_map(cfg, w[k]).apply(p);
            points.push_back(p);
        }
    }
    return points;
}

SchottkyConfig conjugate_config(const SchottkyConfig& cfg, const MoebiusMap& t) {
    return SchottkyConfig{cfg.gamma1.conjugated_by(t),
                          cfg.gamma2.conjugated_by(t),
                          map_disk(t, cfg.d1),
                          map_disk(t, cfg.d1p),
                          map_disk(t, cfg.d2),
                          map_disk(t, cfg.d2p),
                          t.apply(cfg.f1),
                          t.apply(cfg.f1p),
                          t.apply(cfg.f2),
                          t.apply(cfg.f2p)};
}

} // namespace hgs
