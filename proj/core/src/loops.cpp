#include "hgs/loops.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "hgs/errors.hpp"

namespace hgs {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI2Pi(0.0, 2.0 * kPi);

double eps_of(double theta0) { return std::exp(-kPi * theta0); }

// g(1/2 - (i/2)(theta0 + k)) in closed form, real for real k
double g_pure(double eps, double k) {
    double ek = std::exp(kPi * k);
    return eps * (ek + 1.0 / eps) / (ek + eps);
}

double r_alpha_d0(double eps) { return g_pure(eps, 2.0); }
double R_alpha_d0(double eps) { return g_pure(eps, 1.0); }

void push(std::vector<AuditItem>& items, std::string name, double value, double slack) {
    items.push_back(AuditItem{std::move(name), value, slack, slack > 0.0});
}

struct PhiPsiSolver {
    double eps, R, theta0;

    // track both log arguments continuously from t = 0 along w = R e^{-2 pi i t}
    PhiPsi solve(double t) const {
        double arg1 = kPi;  // arg(R - 1/eps), R < 1/eps
        double arg2 = 0.0;  // arg(R - eps),   R > eps
        Complex prev1(R - 1.0 / eps, 0.0), prev2(R - eps, 0.0);
        double tau = 0.0;

        std::function<void(double, double, int)> advance = [&](double from, double to,
                                                               int depth) {
            Complex w = R * std::exp(-kI2Pi * to);
            Complex c1 = w - 1.0 / eps, c2 = w - eps;
            double d1 = std::arg(c1 / prev1), d2 = std::arg(c2 / prev2);
            if (std::abs(d1) > kPi / 2.0 || std::abs(d2) > kPi / 2.0) {
                if (depth > 48)
                    throw BranchJump("solve_phi_psi: branch tracking exhausted subdivision");
                double mid = (from + to) / 2.0;
                advance(from, mid, depth + 1);
                advance(mid, to, depth + 1);
                return;
            }
            arg1 += d1;
            arg2 += d2;
            prev1 = c1;
            prev2 = c2;
            tau = to;
        };

        int steps = std::max(1, static_cast<int>(std::ceil(std::abs(t) * 256.0)));
        for (int i = 1; i <= steps; ++i) advance(tau, t * i / steps, 0);

        Complex w = R * std::exp(-kI2Pi * t);
        double phi = ((arg1 - arg2) - kPi) / (2.0 * kPi);
        double psi = (std::log(std::abs(w - 1.0 / eps)) - std::log(std::abs(w - eps))) / kPi -
                     theta0;
        return PhiPsi{phi, psi};
    }
};

PhiPsiSolver phi_psi_solver(const LoopProfile& p) {
    double eps = eps_of(p.theta0);
    return PhiPsiSolver{eps, R_alpha_d0(eps), p.theta0};
}

// ---------------------------------------------------------------------------
// audits

ProfileAudit audit_alpha_d0(const LoopProfile& p) {
    ProfileAudit a;
    a.eps = eps_of(p.theta0);
    a.r = r_alpha_d0(a.eps);
    a.R = R_alpha_d0(a.eps);
    push(a.items, "theta0 > 0", p.theta0, p.theta0);
    push(a.items, "eps < r", a.r, a.r - a.eps);
    push(a.items, "r < R", a.R, a.R - a.r);
    push(a.items, "R < 1", a.R, 1.0 - a.R);
    if (p.theta0 > 0.0) {
        PhiPsiSolver solver = phi_psi_solver(p);
        double psi_max = 0.0;
        for (int i = 0; i <= 128; ++i)
            psi_max = std::max(psi_max, solver.solve(i / 128.0).psi);
        a.psi_max = psi_max;
        push(a.items, "theta1 > max psi", p.theta1, p.theta1 - psi_max);
    } else {
        push(a.items, "theta1 > max psi", p.theta1, -1.0);
    }
    a.pass = std::all_of(a.items.begin(), a.items.end(),
                         [](const AuditItem& it) { return it.pass; });
    return a;
}

ProfileAudit audit_alpha_d1(const LoopProfile& p) {
    ProfileAudit a;
    a.eps = eps_of(p.theta0);
    double q = std::exp(kPi * p.theta_prime);
    double ie = 1.0 / a.eps;
    a.r = a.eps + (ie - a.eps) / (1.0 + q);
    a.R = a.eps + (ie - a.eps) / (1.0 - q);
    push(a.items, "theta0 > 0", p.theta0, p.theta0);
    push(a.items, "theta_prime < 0", p.theta_prime, -p.theta_prime);
    push(a.items, "(1): q(1+q)/(1-q) < eps^-2", q * (1.0 + q) / (1.0 - q),
         ie * ie - q * (1.0 + q) / (1.0 - q));
    double smax = std::min({a.r, (1.0 - a.eps * a.r) / a.r,
                            (ie * a.r - a.eps * a.R) / (ie + a.R)});
    a.s = 0.9 * smax;
    push(a.items, "s > 0", a.s, a.s);
    push(a.items, "(2a): (eps+s) r < 1", (a.eps + a.s) * a.r, 1.0 - (a.eps + a.s) * a.r);
    push(a.items, "(2b): (eps+s) R < eps^-1 (r-s)", (a.eps + a.s) * a.R,
         ie * (a.r - a.s) - (a.eps + a.s) * a.R);
    double lhs3 = (ie - a.eps) / (1.0 + std::exp(kPi * (p.theta0 + p.theta1)));
    push(a.items, "(3): theta1 large enough", lhs3, a.s - lhs3);
    a.pass = std::all_of(a.items.begin(), a.items.end(),
                         [](const AuditItem& it) { return it.pass; });
    return a;
}

// shared by MultiplierGamma2 and (after the angle exchange) MultiplierGamma1
ProfileAudit audit_multiplier(double theta0, double theta1, double theta2) {
    ProfileAudit a;
    a.eps = eps_of(theta0);
    a.theta = theta0 + theta1 + theta2;
    a.r = (1.0 / a.eps - a.eps) / (std::exp(kPi * a.theta) - 1.0);
    a.ring = (1.0 + 1.0 / a.eps) / 2.0;
    push(a.items, "theta0 > 0", theta0, theta0);
    push(a.items, "theta1 = theta2", theta1 - theta2, 1e-12 - std::abs(theta1 - theta2));
    push(a.items, "r < 1 - eps", a.r, 1.0 - a.eps - a.r);
    push(a.items, "r < 1/(1 + eps^-1)", a.r, 1.0 / (1.0 + 1.0 / a.eps) - a.r);
    push(a.items, "eps^2 (1+r) < eps - r", a.eps * a.eps * (1.0 + a.r),
         (a.eps - a.r) - a.eps * a.eps * (1.0 + a.r));
    a.pass = std::all_of(a.items.begin(), a.items.end(),
                         [](const AuditItem& it) { return it.pass; });
    return a;
}

// ---------------------------------------------------------------------------
// disks

GeneralizedDisk disk_origin(double radius) {
    return GeneralizedDisk::from_center_radius(Complex(0.0), radius);
}

struct IsometricPair {
    GeneralizedDisk source, target;
};

// Isometric disks of a det-1 map: |r z + s| = 1 bounds the source (around the
// repelling fixed point), |r z - p| = 1 the target; the map sends the source
// exactly onto the complement of the target.
IsometricPair isometric_disks(const MoebiusMap& m, const char* who) {
    double rm = std::abs(m.r());
    if (rm < 1e-300)
        throw DiskConstructionFailed(std::string(who) +
                                     ": generator is affine, isometric disks undefined");
    if (std::abs(m.trace()) <= 2.0)
        throw DiskConstructionFailed(std::string(who) +
                                     ": isometric disks overlap; raise theta1");
    double rad = 1.0 / rm;
    try {
        return IsometricPair{GeneralizedDisk::from_center_radius(-m.s() / m.r(), rad),
                             GeneralizedDisk::from_center_radius(m.p() / m.r(), rad)};
    } catch (const InvalidDisk&) {
        throw DiskConstructionFailed(
            std::string(who) +
            ": isometric disks too thin for double-precision Hermitian storage; lower theta1");
    }
}

void require_disjoint(const GeneralizedDisk& a, const GeneralizedDisk& b, const char* what) {
    if (!disjoint(a, b).disjoint)
        throw DiskConstructionFailed(std::string("loop disks collide (") + what +
                                     "); raise theta1");
}

DiskSet assemble(const GeneralizedDisk& d0, const GeneralizedDisk& dinf,
                 const IsometricPair& pair) {
    DiskSet ds{d0, dinf, pair.source, pair.target};
    require_disjoint(ds.d1, ds.d2, "d0 vs d1");
    require_disjoint(ds.d1, ds.d2p, "d0 vs d_alpha");
    require_disjoint(ds.d1p, ds.d2, "d_inf vs d1");
    require_disjoint(ds.d1p, ds.d2p, "d_inf vs d_alpha");
    require_disjoint(ds.d2, ds.d2p, "d1 vs d_alpha");
    return ds;
}

} // namespace

std::string to_string(LoopKind k) {
    switch (k) {
        case LoopKind::AlphaAroundD0: return "alpha-around-d0";
        case LoopKind::AlphaAroundD1: return "alpha-around-d1";
        case LoopKind::MultiplierGamma2: return "multiplier-gamma2";
        case LoopKind::MultiplierGamma1: return "multiplier-gamma1";
    }
    return "unknown";
}

std::optional<LoopKind> loop_kind_from_string(std::string_view s) {
    if (s == "alpha-around-d0") return LoopKind::AlphaAroundD0;
    if (s == "alpha-around-d1") return LoopKind::AlphaAroundD1;
    if (s == "multiplier-gamma2") return LoopKind::MultiplierGamma2;
    if (s == "multiplier-gamma1") return LoopKind::MultiplierGamma1;
    return std::nullopt;
}

LoopProfile LoopProfile::defaults(LoopKind k) {
    LoopProfile p;
    switch (k) {
        case LoopKind::AlphaAroundD0:
            // theta1 = 5 is the largest comfortable default: the paired disks
            // around 1 and alpha have radius product ~ e^{-2 pi theta1}, and
            // beyond ~5.5 that falls under the double-precision floor of the
            // Hermitian disk representation
            p.theta0 = 0.2;
            p.theta1 = 5.0;
            p.theta2 = 4.0;  // value at t = 0, derived as theta1 - psi(t) while tracing
            break;
        case LoopKind::AlphaAroundD1: {
            p.theta0 = 0.2;
            p.theta_prime = -0.15;
            double eps = eps_of(p.theta0);
            double q = std::exp(kPi * p.theta_prime);
            double ie = 1.0 / eps;
            double r = eps + (ie - eps) / (1.0 + q);
            double R = eps + (ie - eps) / (1.0 - q);
            double s = 0.9 * std::min({r, (1.0 - eps * r) / r, (ie * r - eps * R) / (ie + R)});
            // smallest theta1 satisfying (3), plus margin 1
            p.theta1 = std::log((ie - eps) / s - 1.0) / kPi - p.theta0 + 1.0;
            p.theta2 = p.theta0 + p.theta1 - p.theta_prime;
            break;
        }
        case LoopKind::MultiplierGamma2:
            p.theta0 = 0.3;
            p.theta1 = 4.0;
            p.theta2 = 4.0;
            break;
        case LoopKind::MultiplierGamma1:
            p.theta0 = 4.0;  // exchanged MultiplierGamma2 defaults; theta0 = theta2
            p.theta1 = 0.3;
            p.theta2 = 4.0;
            break;
    }
    return p;
}

ProfileAudit audit_profile(LoopKind kind, const LoopProfile& p) {
    switch (kind) {
        case LoopKind::AlphaAroundD0: return audit_alpha_d0(p);
        case LoopKind::AlphaAroundD1: return audit_alpha_d1(p);
        case LoopKind::MultiplierGamma2: return audit_multiplier(p.theta0, p.theta1, p.theta2);
        case LoopKind::MultiplierGamma1:
            // the variable exchange turns this into the previous case with
            // theta0 <-> theta1; theta0 = theta2 takes over the role theta1 = theta2
            return audit_multiplier(p.theta1, p.theta0, p.theta2);
    }
    throw Error("audit_profile: unknown kind");
}

PhiPsi solve_phi_psi(const LoopProfile& profile, double t) {
    return phi_psi_solver(profile).solve(t);
}

namespace {

HGParams params_impl(LoopKind kind, const LoopProfile& p, double t) {
    switch (kind) {
        case LoopKind::AlphaAroundD0: {
            PhiPsi pp = solve_phi_psi(p, t);
            return HGParams{Complex(0.5, -0.5 * (p.theta0 + 2.0 * p.theta1 - pp.psi)),
                            Complex(0.5 + pp.phi, -0.5 * (p.theta0 + pp.psi)),
                            Complex(1.0, -p.theta0)};
        }
        case LoopKind::AlphaAroundD1: {
            double theta2 = p.theta0 + p.theta1 - p.theta_prime;
            return HGParams{Complex(0.5, -0.5 * (p.theta0 + p.theta1 + theta2)),
                            Complex(0.5 + t, -0.5 * p.theta_prime),
                            Complex(1.0, -p.theta0)};
        }
        case LoopKind::MultiplierGamma2: {
            double theta = p.theta0 + p.theta1 + p.theta2;
            return HGParams{Complex(0.5 + t, -0.5 * theta), Complex(0.5, -0.5 * p.theta0),
                            Complex(1.0, -p.theta0)};
        }
        case LoopKind::MultiplierGamma1: {
            double theta = p.theta0 + p.theta1 + p.theta2;
            return HGParams{Complex(0.5 + t, -0.5 * theta), Complex(0.5, -0.5 * p.theta1),
                            Complex(1.0 + t, -0.5 * (p.theta0 + p.theta2))};
        }
    }
    throw Error("loop_params: unknown kind");
}

DiskSet disks_impl(LoopKind kind, const ProfileAudit& audit, const NormalizedSystem& sys) {
    switch (kind) {
        case LoopKind::AlphaAroundD0:
            return assemble(disk_origin(audit.eps * audit.r),
                            disk_origin(audit.r / audit.eps).complement(),
                            isometric_disks(sys.gamma2, "alpha-around-d0"));
        case LoopKind::AlphaAroundD1:
            return assemble(disk_origin(audit.eps * (audit.r - audit.s)),
                            disk_origin((audit.r - audit.s) / audit.eps).complement(),
                            isometric_disks(sys.gamma2, "alpha-around-d1"));
        case LoopKind::MultiplierGamma2:
            return assemble(disk_origin(audit.eps * audit.eps * audit.ring),
                            disk_origin(audit.ring).complement(),
                            isometric_disks(sys.gamma2, "multiplier-gamma2"));
        case LoopKind::MultiplierGamma1: {
            // mirror frame: send (1, alpha, 0) to (0, infinity, 1); gamma2
            // becomes the scaling generator there, gamma1 the paired one
            Complex alpha = sys.alpha;
            MoebiusMap w(alpha, -alpha, 1.0, -alpha);
            MoebiusMap wi = w.inverse();
            MoebiusMap g1_tilde = sys.gamma1.conjugated_by(w);
            IsometricPair iso = isometric_disks(g1_tilde, "multiplier-gamma1");
            GeneralizedDisk td0 = disk_origin(audit.eps * audit.eps * audit.ring);
            GeneralizedDisk tdinf = disk_origin(audit.ring).complement();

            DiskSet ds{map_disk(wi, iso.source), map_disk(wi, iso.target),
                       map_disk(wi, td0), map_disk(wi, tdinf)};
            require_disjoint(ds.d1, ds.d2, "d0 vs d1");
            require_disjoint(ds.d1, ds.d2p, "d0 vs d_alpha");
            require_disjoint(ds.d1p, ds.d2, "d_inf vs d1");
            require_disjoint(ds.d1p, ds.d2p, "d_inf vs d_alpha");
            require_disjoint(ds.d1, ds.d1p, "d0 vs d_inf");
            return ds;
        }
    }
    throw Error("loop_disks: unknown kind");
}

SchottkyConfig config_impl(LoopKind kind, const ProfileAudit& audit, const HGParams& params) {
    NormalizedSystem sys = normalized_system_direct(params);
    DiskSet ds = disks_impl(kind, audit, sys);
    return SchottkyConfig{sys.gamma1,
                          sys.gamma2,
                          ds.d1,
                          ds.d1p,
                          ds.d2,
                          ds.d2p,
                          SpherePoint(Complex(0.0)),
                          SpherePoint::infinity(),
                          SpherePoint(Complex(1.0)),
                          SpherePoint(sys.alpha)};
}

ProfileAudit audited(LoopKind kind, const LoopProfile& p, const char* who) {
    ProfileAudit a = audit_profile(kind, p);
    if (!a.pass) throw ProfileNotAudited(std::string(who) + ": profile fails its audit");
    return a;
}

} // namespace

HGParams loop_params(LoopKind kind, const LoopProfile& p, double t) {
    audited(kind, p, "loop_params");
    return params_impl(kind, p, t);
}

DiskSet loop_disks(LoopKind kind, const LoopProfile& p, double t, const HGParams& params) {
    ProfileAudit audit = audited(kind, p, "loop_disks");
    (void)t;
    return disks_impl(kind, audit, normalized_system_direct(params));
}

SchottkyConfig sample_config(LoopKind kind, const LoopProfile& p, double t) {
    ProfileAudit audit = audited(kind, p, "sample_config");
    return config_impl(kind, audit, params_impl(kind, p, t));
}

namespace {

// contracting multiplier of the deformed generator, in closed form
Complex deformed_multiplier(LoopKind kind, const HGParams& params) {
    if (kind == LoopKind::MultiplierGamma1) return std::exp(kI2Pi * params.lambda());
    return std::exp(kI2Pi * params.mu());
}

// total continuous argument change of f along [0, 1], bisecting any step > pi/2
double total_arg_change(const std::function<Complex(double)>& f, int n) {
    double total = 0.0;
    std::function<void(double, Complex, double, Complex, int)> segment =
        [&](double t0, Complex v0, double t1, Complex v1, int depth) {
            double d = std::arg(v1 / v0);
            if (std::abs(d) > kPi / 2.0 && depth < 40) {
                double tm = (t0 + t1) / 2.0;
                Complex vm = f(tm);
                segment(t0, v0, tm, vm, depth + 1);
                segment(tm, vm, t1, v1, depth + 1);
                return;
            }
            total += d;
        };
    Complex prev = f(0.0);
    for (int i = 1; i <= n; ++i) {
        Complex cur = f(static_cast<double>(i) / n);
        segment((i - 1.0) / n, prev, static_cast<double>(i) / n, cur, 0);
        prev = cur;
    }
    return total;
}

bool certifies_along(LoopKind kind, const LoopProfile& p, int n) {
    try {
        ProfileAudit audit = audit_profile(kind, p);
        if (!audit.pass) return false;
        for (int i = 0; i <= n; ++i) {
            SchottkyConfig cfg =
                config_impl(kind, audit, params_impl(kind, p, static_cast<double>(i) / n));
            if (!certify(cfg, p.tol, p.required_margin).pass) return false;
        }
    } catch (const Error&) {
        return false;
    }
    return true;
}

} // namespace

double minimal_theta1_for_certificates(const LoopProfile& profile, int probe_samples) {
    if (!certifies_along(LoopKind::AlphaAroundD1, profile, probe_samples))
        return profile.theta1;  // profile itself fails; nothing smaller to report
    double hi = profile.theta1;
    double lo = hi / 64.0;
    auto ok = [&](double th1) {
        LoopProfile q = profile;
        q.theta1 = th1;
        q.theta2 = q.theta0 + q.theta1 - q.theta_prime;
        return audit_profile(LoopKind::AlphaAroundD1, q).pass &&
               certifies_along(LoopKind::AlphaAroundD1, q, probe_samples);
    };
    while (!ok(lo) && lo < hi - 1e-9) lo = std::min(hi, lo * 1.5);
    if (lo >= hi) return hi;
    double bad = lo / 1.5;
    for (int i = 0; i < 40; ++i) {
        double mid = (bad + lo) / 2.0;
        if (ok(mid)) lo = mid; else bad = mid;
    }
    return lo;
}

LoopReport trace_loop(LoopKind kind, const LoopProfile& profile) {
    LoopReport rep;
    rep.kind = kind;
    rep.profile = profile;
    rep.audit = audit_profile(kind, profile);
    if (!rep.audit.pass) throw ProfileNotAudited("trace_loop: profile fails its audit");

    const int n = std::max(16, profile.samples);

    auto make_sample = [&](double t, bool refined) {
        LoopSample s;
        s.t = t;
        s.params = params_impl(kind, profile, t);
        s.refined = refined;
        if (kind == LoopKind::AlphaAroundD0) s.phipsi = solve_phi_psi(profile, t);
        NormalizedSystem sys = normalized_system_direct(s.params);
        s.alpha = sys.alpha;
        s.mult_gamma1 = std::exp(kI2Pi * s.params.lambda());
        s.mult_gamma2 = std::exp(kI2Pi * s.params.mu());
        s.disks = disks_impl(kind, rep.audit, sys);
        SchottkyConfig cfg{sys.gamma1,
                           sys.gamma2,
                           s.disks.d1,
                           s.disks.d1p,
                           s.disks.d2,
                           s.disks.d2p,
                           SpherePoint(Complex(0.0)),
                           SpherePoint::infinity(),
                           SpherePoint(Complex(1.0)),
                           SpherePoint(sys.alpha)};
        s.cert = certify(cfg, profile.tol, profile.required_margin);
        return s;
    };

    for (int i = 0; i <= n; ++i) rep.samples.push_back(make_sample(static_cast<double>(i) / n, false));

    // refine around any sample whose margin is within 10x of the requirement
    std::vector<double> refine_at;
    for (std::size_t i = 0; i < rep.samples.size(); ++i) {
        if (rep.samples[i].cert.min_margin() < 10.0 * profile.required_margin) {
            double t = rep.samples[i].t;
            if (t > 0.0) refine_at.push_back(t - 0.5 / n);
            if (t < 1.0) refine_at.push_back(t + 0.5 / n);
        }
    }
    for (double t : refine_at) rep.samples.push_back(make_sample(t, true));
    std::sort(rep.samples.begin(), rep.samples.end(),
              [](const LoopSample& a, const LoopSample& b) { return a.t < b.t; });

    LoopAggregates& agg = rep.aggregates;

    auto alpha_of = [&](double t) {
        return normalized_alpha(params_impl(kind, profile, t));
    };
    auto mult_of = [&](double t) {
        return deformed_multiplier(kind, params_impl(kind, profile, t));
    };

    double w0 = total_arg_change([&](double t) { return alpha_of(t); }, n) / (2.0 * kPi);
    double w1 = total_arg_change([&](double t) { return alpha_of(t) - 1.0; }, n) / (2.0 * kPi);
    agg.winding_alpha_about_0 = static_cast<int>(std::lround(w0));
    agg.winding_alpha_about_1 = static_cast<int>(std::lround(w1));
    agg.winding_residual = std::max(std::abs(w0 - std::lround(w0)), std::abs(w1 - std::lround(w1)));
    agg.darg_deformed_multiplier = total_arg_change(mult_of, n);

    const LoopSample& first = rep.samples.front();
    const LoopSample& last = rep.samples.back();
    {
        NormalizedSystem s0 = normalized_system_direct(first.params);
        NormalizedSystem s1 = normalized_system_direct(last.params);
        agg.endpoint_generator_distance = std::max(projective_distance(s0.gamma1, s1.gamma1),
                                                   projective_distance(s0.gamma2, s1.gamma2));
        agg.endpoint_alpha_distance = std::abs(s0.alpha - s1.alpha);
    }
    agg.endpoint_disk_distance = std::max(
        {circle_distance(first.disks.d1, last.disks.d1),
         circle_distance(first.disks.d1p, last.disks.d1p),
         circle_distance(first.disks.d2, last.disks.d2),
         circle_distance(first.disks.d2p, last.disks.d2p)});

    agg.min_certificate_margin = rep.samples.front().cert.min_margin();
    agg.max_circle_residual = 0.0;
    agg.all_certificates_pass = true;
    for (const LoopSample& s : rep.samples) {
        agg.min_certificate_margin = std::min(agg.min_certificate_margin, s.cert.min_margin());
        agg.max_circle_residual = std::max({agg.max_circle_residual, s.cert.circle_residual[0],
                                            s.cert.circle_residual[1]});
        agg.all_certificates_pass = agg.all_certificates_pass && s.cert.pass;
    }

    // per-kind path checks
    auto& checks = agg.per_kind_checks;
    const double pad = 1e-10;
    switch (kind) {
        case LoopKind::AlphaAroundD0: {
            double ring_lo = 1.0, ring_hi = 1.0, gb_res = 0.0;
            for (const LoopSample& s : rep.samples) {
                double m = std::abs(s.alpha);
                ring_lo = std::min(ring_lo, m / (rep.audit.eps * rep.audit.R));
                ring_hi = std::min(ring_hi, rep.audit.R / m);
                Complex gb = g_function(s.params.b, s.params.c);
                Complex want = rep.audit.R * std::exp(-kI2Pi * s.t);
                gb_res = std::max(gb_res, std::abs(gb - want));
            }
            push(checks, "ring: |alpha| >= eps R", ring_lo, ring_lo - (1.0 - pad));
            push(checks, "ring: |alpha| <= R", ring_hi, ring_hi - (1.0 - pad));
            push(checks, "g(b(t)) = R e^{-2 pi i t}", gb_res, 1e-9 - gb_res);
            PhiPsi p0 = solve_phi_psi(profile, 0.0);
            PhiPsi p1 = solve_phi_psi(profile, 1.0);
            push(checks, "phi(0) = 0", p0.phi, 1e-8 - std::abs(p0.phi));
            push(checks, "phi(1) = 1", p1.phi, 1e-8 - std::abs(p1.phi - 1.0));
            push(checks, "psi(0) = 1", p0.psi, 1e-8 - std::abs(p0.psi - 1.0));
            push(checks, "psi(1) = 1", p1.psi, 1e-8 - std::abs(p1.psi - 1.0));
            double min_step = 1.0;
            for (std::size_t i = 1; i < rep.samples.size(); ++i)
                min_step = std::min(min_step, rep.samples[i].phipsi.phi -
                                                  rep.samples[i - 1].phipsi.phi);
            push(checks, "phi monotone increasing", min_step, min_step + 1e-12);
            break;
        }
        case LoopKind::AlphaAroundD1: {
            double lo = 1e300, hi = -1e300;
            double ga_lo = 1e300, ga_hi = -1e300;
            for (const LoopSample& s : rep.samples) {
                double gb = std::abs(g_function(s.params.b, s.params.c));
                lo = std::min(lo, gb);
                hi = std::max(hi, gb);
                double ga = g_function(s.params.a, s.params.c).real();
                ga_lo = std::min(ga_lo, ga);
                ga_hi = std::max(ga_hi, ga);
            }
            push(checks, "r <= |g(b)|", lo, lo - rep.audit.r + pad);
            push(checks, "|g(b)| <= R", hi, rep.audit.R - hi + pad);
            push(checks, "eps < g(a)", ga_lo, ga_lo - rep.audit.eps);
            push(checks, "g(a) < eps + s", ga_hi, rep.audit.eps + rep.audit.s - ga_hi);
            Complex a0 = alpha_of(0.0), ah = alpha_of(0.5);
            push(checks, "alpha(0) < 1", std::abs(a0), 1.0 - std::abs(a0));
            push(checks, "1 < |alpha(1/2)|", std::abs(ah), std::abs(ah) - 1.0);
            push(checks, "eps R <= |alpha(1/2)|", std::abs(ah),
                 std::abs(ah) - rep.audit.eps * rep.audit.R + pad);
            break;
        }
        case LoopKind::MultiplierGamma2:
        case LoopKind::MultiplierGamma1: {
            // alpha stays inside the locus disk with center eps~, radius r~
            double worst = -1e300;
            for (const LoopSample& s : rep.samples)
                worst = std::max(worst, std::abs(s.alpha - rep.audit.eps) - rep.audit.r);
            push(checks, "alpha in disk(eps, r)", worst, pad - worst + 1e-15);
            double chain_lo = 1e300, chain_hi = -1e300;
            for (const LoopSample& s : rep.samples) {
                chain_lo = std::min(chain_lo, std::abs(s.alpha));
                chain_hi = std::max(chain_hi, std::abs(s.alpha));
            }
            double e2 = rep.audit.eps * rep.audit.eps;
            push(checks, "eps^2 (1+r) < eps - r <= |alpha|", chain_lo,
                 chain_lo - (rep.audit.eps - rep.audit.r) + pad);
            push(checks, "|alpha| <= eps + r < 1", chain_hi,
                 rep.audit.eps + rep.audit.r - chain_hi + pad);
            push(checks, "eps^2 (1+r) < eps - r", e2 * (1.0 + rep.audit.r),
                 rep.audit.eps - rep.audit.r - e2 * (1.0 + rep.audit.r));
            break;
        }
    }
    agg.per_kind_checks_pass = std::all_of(checks.begin(), checks.end(),
                                           [](const AuditItem& it) { return it.pass; });

    if (kind == LoopKind::AlphaAroundD1)
        agg.empirical_min_theta1 = minimal_theta1_for_certificates(profile);

    // winding/darg expectations per kind
    bool winding_ok = true;
    switch (kind) {
        case LoopKind::AlphaAroundD0:
            winding_ok = std::abs(agg.winding_alpha_about_0) == 1 &&
                         std::abs(agg.darg_deformed_multiplier + 2.0 * kPi) < 1e-6;
            break;
        case LoopKind::AlphaAroundD1:
            winding_ok = std::abs(agg.winding_alpha_about_1) == 1 &&
                         std::abs(agg.darg_deformed_multiplier + 2.0 * kPi) < 1e-6;
            break;
        case LoopKind::MultiplierGamma2:
        case LoopKind::MultiplierGamma1:
            winding_ok = agg.winding_alpha_about_0 == 0 &&
                         std::abs(agg.darg_deformed_multiplier + 2.0 * kPi) < 1e-6;
            break;
    }

    rep.pass = rep.audit.pass && agg.all_certificates_pass && agg.per_kind_checks_pass &&
               winding_ok && agg.winding_residual < 1e-6 &&
               agg.endpoint_generator_distance < 1e-8 && agg.endpoint_disk_distance < 1e-8;
    return rep;
}

SchottkyConfig base_point(double theta0, double theta1, double theta2) {
    if (!(theta0 > 0.0 && theta1 > 0.0 && theta2 > 0.0))
        throw Error("base_point: angles must be positive");
    AngleTriple angles{theta0, theta1, theta2};
    HGParams params = angles.params();
    NormalizedSystem sys = normalized_system_direct(params);
    double eps = angles.epsilon();
    double r = r_alpha_d0(eps);
    IsometricPair iso = isometric_disks(sys.gamma2, "base_point");
    DiskSet ds = assemble(disk_origin(eps * r), disk_origin(r / eps).complement(), iso);
    SchottkyConfig cfg{sys.gamma1,
                       sys.gamma2,
                       ds.d1,
                       ds.d1p,
                       ds.d2,
                       ds.d2p,
                       SpherePoint(Complex(0.0)),
                       SpherePoint::infinity(),
                       SpherePoint(Complex(1.0)),
                       SpherePoint(sys.alpha)};
    if (!certify(cfg).pass)
        throw DiskConstructionFailed("base_point: configuration fails certification");
    return cfg;
}

} // namespace hgs
