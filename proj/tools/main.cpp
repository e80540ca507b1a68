// hgschottky: builds hypergeometric monodromy pairs as genus-2 Schottky
// groups, certifies the disk conditions, traces the four deformation loops of
// the moduli space, and emits JSON reports and SVG figures.
//
// Exit codes: 0 success / certificate passed, 1 mathematical failure
// (certificate or verdict fail, Gamma pole, construction failure), 2 usage or
// input error.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "hgs/apollonius.hpp"
#include "hgs/errors.hpp"
#include "hgs/loops.hpp"
#include "hgs/serialization.hpp"
#include "hgs/special.hpp"
#include "hgs/svg.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMathFail = 1;
constexpr int kExitInput = 2;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt(hgs::Complex z) {
    return fmt(z.real()) + (z.imag() < 0 ? " - " : " + ") + fmt(std::abs(z.imag())) + "i";
}

hgs::Complex parse_complex(const std::string& s) {
    double re = 0.0, im = 0.0;
    auto comma = s.find(',');
    try {
        if (comma == std::string::npos) {
            re = std::stod(s);
        } else {
            re = std::stod(s.substr(0, comma));
            im = std::stod(s.substr(comma + 1));
        }
    } catch (const std::exception&) {
        throw hgs::ParseError("cannot parse complex number '" + s + "' (want re or re,im)");
    }
    return {re, im};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw hgs::ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw hgs::ParseError("cannot write " + path);
    out << text;
}

double default_tol() {
    if (const char* env = std::getenv("HGSCHOTTKY_TOL")) {
        try {
            return std::stod(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring malformed HGSCHOTTKY_TOL\n";
        }
    }
    return 1e-9;
}

void print_map(const char* name, const hgs::MoebiusMap& m) {
    std::cout << name << ": [" << fmt(m.p()) << ", " << fmt(m.q()) << "; " << fmt(m.r())
              << ", " << fmt(m.s()) << "]\n";
}

void print_certificate(const hgs::Certificate& cert) {
    static const char* disk_names[4] = {"D1", "D1'", "D2", "D2'"};
    for (const hgs::PairCheck& p : cert.disjoint_pairs)
        std::cout << "  disjoint " << disk_names[p.first] << " vs " << disk_names[p.second]
                  << ": margin " << fmt(p.margin) << (p.pass ? "" : "  FAIL") << "\n";
    for (int i = 0; i < 2; ++i)
        std::cout << "  pairing gamma" << i + 1 << ": circle residual "
                  << fmt(cert.circle_residual[i]) << (cert.circle_pass[i] ? "" : "  FAIL")
                  << (cert.orientation_pass[i] ? "" : "  ORIENTATION FAIL") << "\n";
    static const char* region_names[3] = {"inside", "boundary", "outside"};
    for (int i = 0; i < 4; ++i)
        std::cout << "  fixed point in " << disk_names[i] << ": "
                  << region_names[static_cast<int>(cert.fixed_point_region[i])]
                  << (cert.localization_pass[i] ? "" : "  FAIL") << "\n";
    std::cout << "  verdict: " << (cert.pass ? "pass" : "fail") << " (min margin "
              << fmt(cert.min_margin()) << ")\n";
}

struct LoopArgs {
    std::string kind_str;
    double theta0 = 0.0, theta1 = 0.0, theta2 = 0.0, theta_prime = 0.0;
    int n = 0;
    double tol = 0.0, margin = 0.0;
};

// overrides apply only for flags the user actually passed; absent options on
// the subcommand count as not passed
bool given(const CLI::App* cmd, const std::string& name) {
    const CLI::Option* opt = cmd->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
}

hgs::LoopProfile resolve_profile(hgs::LoopKind kind, const LoopArgs& a, const CLI::App* cmd) {
    hgs::LoopProfile p = hgs::LoopProfile::defaults(kind);
    p.tol = default_tol();
    bool theta_given = false;
    if (given(cmd, "--theta0")) { p.theta0 = a.theta0; theta_given = true; }
    if (given(cmd, "--theta1")) { p.theta1 = a.theta1; theta_given = true; }
    if (given(cmd, "--theta2")) p.theta2 = a.theta2;
    if (given(cmd, "--theta-prime")) { p.theta_prime = a.theta_prime; theta_given = true; }
    if (kind == hgs::LoopKind::AlphaAroundD1 && theta_given)
        p.theta2 = p.theta0 + p.theta1 - p.theta_prime;
    if (given(cmd, "--n")) p.samples = a.n;
    if (given(cmd, "--tol")) p.tol = a.tol;
    if (given(cmd, "--margin")) p.required_margin = a.margin;
    return p;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypergeometric Schottky groups: monodromy, certificates, loops, figures"};
    app.require_subcommand(1);

    // ---- monodromy ----
    std::string arg_a, arg_b, arg_c, out_path;
    auto* monodromy = app.add_subcommand(
        "monodromy", "circuit maps, connection matrix, fixed points for parameters (a, b, c)");
    monodromy->add_option("--a", arg_a, "parameter a as re or re,im")->required();
    monodromy->add_option("--b", arg_b, "parameter b")->required();
    monodromy->add_option("--c", arg_c, "parameter c")->required();
    monodromy->add_option("--out", out_path, "also write a JSON report to this path");

    // ---- certify ----
    std::string cfg_path, cert_out;
    double tol = default_tol(), margin = 1e-6;
    auto* certify_cmd = app.add_subcommand("certify", "run the Schottky certificate on a config");
    certify_cmd->add_option("--config", cfg_path, "configuration JSON file")->required();
    certify_cmd->add_option("--tol", tol, "residual tolerance");
    certify_cmd->add_option("--margin", margin, "required disjointness margin");
    certify_cmd->add_option("--out", cert_out, "write the certificate JSON here");

    // ---- loop ----
    LoopArgs largs;
    largs.tol = 0.0;
    std::string loop_out, loop_svg, loop_config_out;
    auto* loop_cmd = app.add_subcommand("loop", "trace and certify one deformation loop");
    loop_cmd->add_option("--kind", largs.kind_str,
                         "alpha-around-d0 | alpha-around-d1 | multiplier-gamma2 | multiplier-gamma1")
        ->required();
    loop_cmd->add_option("--theta0", largs.theta0, "angle of the exponent difference at 0");
    loop_cmd->add_option("--theta1", largs.theta1, "angle of the exponent difference at 1");
    loop_cmd->add_option("--theta2", largs.theta2, "angle of the exponent difference at infinity");
    loop_cmd->add_option("--theta-prime", largs.theta_prime, "imaginary-part parameter (alpha-around-d1)");
    loop_cmd->add_option("--n", largs.n, "sample count (default 64)");
    loop_cmd->add_option("--tol", largs.tol, "certificate tolerance");
    loop_cmd->add_option("--margin", largs.margin, "required margin");
    loop_cmd->add_option("--out", loop_out, "write the loop report JSON here");
    loop_cmd->add_option("--svg", loop_svg, "write an SVG of the loop here");
    loop_cmd->add_option("--out-config", loop_config_out, "write the t=0 configuration JSON here");

    // ---- audit ----
    LoopArgs aargs;
    auto* audit_cmd = app.add_subcommand("audit", "evaluate the loop profile inequalities");
    audit_cmd->add_option("--kind", aargs.kind_str, "loop kind")->required();
    audit_cmd->add_option("--theta0", aargs.theta0, "");
    audit_cmd->add_option("--theta1", aargs.theta1, "");
    audit_cmd->add_option("--theta2", aargs.theta2, "");
    audit_cmd->add_option("--theta-prime", aargs.theta_prime, "");

    // ---- apollonius ----
    std::string d_spec, dp_spec, fp_spec;
    double phase = 0.0;
    auto* apo = app.add_subcommand(
        "apollonius", "concentric centers of two disks; pairing family for a marked point");
    apo->add_option("--d", d_spec, "first disk as cx,cy,r")->required();
    apo->add_option("--dp", dp_spec, "second disk as cx,cy,r")->required();
    apo->add_option("--fp", fp_spec, "marked interior point of the second disk, as x,y");
    apo->add_option("--phase", phase, "multiplier phase for the pairing map");

    // ---- plot ----
    std::string plot_config, plot_report, plot_out;
    int orbit_depth = 0;
    auto* plot = app.add_subcommand("plot", "render a configuration or loop report as SVG");
    plot->add_option("--config", plot_config, "configuration JSON");
    plot->add_option("--report", plot_report, "loop report JSON");
    plot->add_option("--out", plot_out, "output SVG path")->required();
    plot->add_option("--orbit-depth", orbit_depth, "overlay orbit points up to this word length");

    unsigned long seed = 0;
    app.add_option("--seed", seed, "seed recorded for property-test reruns (unused by the CLI)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (*monodromy) {
            hgs::HGParams params{parse_complex(arg_a), parse_complex(arg_b), parse_complex(arg_c)};
            params.validate();
            auto [g1, g2] = hgs::circuit_matrices(params);
            for (const auto* g : {&g1, &g2}) {
                hgs::MapClass cls = g->classify();
                if (cls == hgs::MapClass::Identity || cls == hgs::MapClass::Parabolic) {
                    std::cerr << "error: degenerate parameters, a circuit map is "
                              << (cls == hgs::MapClass::Identity ? "the identity" : "parabolic")
                              << " (integer exponent difference)\n";
                    return kExitMathFail;
                }
            }
            hgs::Mat2c p = hgs::connection_matrix(params);
            auto [f2, f2p] = hgs::gamma2_fixed_points(params);
            hgs::Complex alpha = hgs::normalized_alpha(params);
            std::cout << "lambda: " << fmt(params.lambda()) << "\nmu: " << fmt(params.mu())
                      << "\nnu: " << fmt(params.nu()) << "\n";
            print_map("gamma1", g1);
            print_map("gamma2", g2);
            std::cout << "P: [" << fmt(p.m00) << ", " << fmt(p.m01) << "; " << fmt(p.m10)
                      << ", " << fmt(p.m11) << "]\n";
            std::cout << "f2: " << fmt(f2) << "\nf2': " << fmt(f2p) << "\nalpha: " << fmt(alpha)
                      << "\n";
            std::cout << "multiplier gamma1 (contracting): " << fmt(g1.contracting_multiplier())
                      << "\nmultiplier gamma2 (contracting): "
                      << fmt(g2.contracting_multiplier()) << "\n";
            if (!out_path.empty()) {
                hgs::NormalizedSystem sys = hgs::normalize_generators(params);
                std::ostringstream ss;
                ss << "{\n  \"alpha\": [" << fmt(sys.alpha.real()) << ", "
                   << fmt(sys.alpha.imag()) << "],\n  \"f2\": [" << fmt(f2.real()) << ", "
                   << fmt(f2.imag()) << "],\n  \"f2p\": [" << fmt(f2p.real()) << ", "
                   << fmt(f2p.imag()) << "]\n}\n";
                write_file(out_path, ss.str());
            }
            return kExitPass;
        }

        if (*certify_cmd) {
            hgs::SchottkyConfig cfg = hgs::config_from_json(read_file(cfg_path));
            hgs::Certificate cert = hgs::certify(cfg, tol, margin);
            print_certificate(cert);
            if (!cert_out.empty()) write_file(cert_out, hgs::certificate_to_json(cert));
            return cert.pass ? kExitPass : kExitMathFail;
        }

        if (*loop_cmd || *audit_cmd) {
            const LoopArgs& la = *loop_cmd ? largs : aargs;
            auto kind = hgs::loop_kind_from_string(la.kind_str);
            if (!kind) {
                std::cerr << "unknown loop kind '" << la.kind_str << "'\n";
                return kExitInput;
            }
            hgs::LoopProfile profile = resolve_profile(*kind, la, *loop_cmd ? loop_cmd : audit_cmd);
            hgs::ProfileAudit audit = hgs::audit_profile(*kind, profile);
            std::cout << "profile: theta0 " << fmt(profile.theta0) << ", theta1 "
                      << fmt(profile.theta1) << ", theta2 " << fmt(profile.theta2);
            if (*kind == hgs::LoopKind::AlphaAroundD1)
                std::cout << ", theta' " << fmt(profile.theta_prime);
            std::cout << "\n";
            for (const hgs::AuditItem& it : audit.items)
                std::cout << "  " << (it.pass ? "ok   " : "FAIL ") << it.name << " (value "
                          << fmt(it.value) << ", slack " << fmt(it.slack) << ")\n";
            if (*audit_cmd) return audit.pass ? kExitPass : kExitMathFail;
            if (!audit.pass) {
                std::cout << "audit failed; not tracing\n";
                return kExitMathFail;
            }

            hgs::LoopReport rep = hgs::trace_loop(*kind, profile);
            std::cout << "samples: " << rep.samples.size() << "\n"
                      << "winding of alpha about 0: " << rep.aggregates.winding_alpha_about_0
                      << "\nwinding of alpha about 1: " << rep.aggregates.winding_alpha_about_1
                      << "\ndelta arg of deformed multiplier: "
                      << fmt(rep.aggregates.darg_deformed_multiplier) << "\nmin margin: "
                      << fmt(rep.aggregates.min_certificate_margin) << "\nmax circle residual: "
                      << fmt(rep.aggregates.max_circle_residual) << "\nendpoint agreement: "
                      << fmt(std::max(rep.aggregates.endpoint_generator_distance,
                                      rep.aggregates.endpoint_disk_distance))
                      << "\n";
            for (const hgs::AuditItem& it : rep.aggregates.per_kind_checks)
                std::cout << "  " << (it.pass ? "ok   " : "FAIL ") << it.name << "\n";
            if (*kind == hgs::LoopKind::AlphaAroundD1)
                std::cout << "empirical minimal theta1: "
                          << fmt(rep.aggregates.empirical_min_theta1) << "\n";
            std::cout << "verdict: " << (rep.pass ? "pass" : "fail") << "\n";
            if (!loop_out.empty()) write_file(loop_out, hgs::report_to_json(rep));
            if (!loop_svg.empty()) write_file(loop_svg, hgs::render_report_svg(rep));
            if (!loop_config_out.empty())
                write_file(loop_config_out,
                           hgs::config_to_json(hgs::sample_config(*kind, profile, 0.0)));
            return rep.pass ? kExitPass : kExitMathFail;
        }

        if (*apo) {
            auto parse_disk = [](const std::string& s) {
                auto c1 = s.find(','), c2 = s.rfind(',');
                if (c1 == std::string::npos || c2 == c1)
                    throw hgs::ParseError("disk must be cx,cy,r");
                double cx = std::stod(s.substr(0, c1));
                double cy = std::stod(s.substr(c1 + 1, c2 - c1 - 1));
                double r = std::stod(s.substr(c2 + 1));
                return hgs::GeneralizedDisk::from_center_radius({cx, cy}, r);
            };
            hgs::GeneralizedDisk d = parse_disk(d_spec), dp = parse_disk(dp_spec);
            hgs::ConcentricPair cc = hgs::concentric_centers(d, dp);
            std::cout << "F:  " << fmt(cc.f.to_complex()) << "\nF': " << fmt(cc.fp.to_complex())
                      << "\n";
            if (!fp_spec.empty()) {
                hgs::SpherePoint fp{parse_complex(fp_spec)};
                hgs::ApolloniusData fam = hgs::apollonius_family(d, dp, fp);
                std::cout << "|m|: " << fmt(fam.multiplier_modulus()) << "\n";
                if (fam.degenerate()) {
                    std::cout << "locus: degenerate (marked point is the concentric center); "
                                 "phase parametrizes the family\n";
                } else {
                    std::cout << "locus circle: center " << fmt(fam.circle().center())
                              << ", radius " << fmt(fam.circle().radius()) << "\n";
                }
                hgs::MoebiusMap g = hgs::pairing_map(fam, phase);
                print_map("pairing map", g);
                double residual =
                    hgs::circle_distance(hgs::map_disk(g, d), dp.complement());
                std::cout << "pairing residual: " << fmt(residual) << "\n";
            } else if (apo->count("--phase")) {
                std::cerr << "--phase requires --fp\n";
                return kExitInput;
            }
            return kExitPass;
        }

        if (*plot) {
            if (plot_config.empty() == plot_report.empty()) {
                std::cerr << "plot needs exactly one of --config or --report\n";
                return kExitInput;
            }
            hgs::PlotOptions opts;
            opts.orbit_depth = orbit_depth;
            std::string svg;
            if (!plot_config.empty()) {
                svg = hgs::render_config_svg(hgs::config_from_json(read_file(plot_config)), opts);
            } else {
                svg = hgs::render_report_svg(hgs::report_from_json(read_file(plot_report)), opts);
            }
            write_file(plot_out, svg);
            std::cout << "wrote " << plot_out << "\n";
            return kExitPass;
        }
    } catch (const hgs::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const hgs::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathFail;
    }
    return kExitInput;
}
