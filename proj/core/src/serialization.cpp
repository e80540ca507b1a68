#include "hgs/serialization.hpp"

#include <json.hpp>

#include "hgs/errors.hpp"

namespace hgs {

namespace {

using nlohmann::json;

json put_complex(Complex z) { return json::array({z.real(), z.imag()}); }

Complex get_complex(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError(std::string(what) + ": expected [re, im]");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

json put_point(const SpherePoint& p) {
    if (p.is_infinity()) return json("inf");
    return put_complex(p.to_complex());
}

SpherePoint get_point(const json& j, const char* what) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return SpherePoint::infinity();
        throw ParseError(std::string(what) + ": expected [re, im] or \"inf\"");
    }
    return SpherePoint(get_complex(j, what));
}

json put_map(const MoebiusMap& m) {
    return json::array({put_complex(m.p()), put_complex(m.q()), put_complex(m.r()),
                        put_complex(m.s())});
}

MoebiusMap get_map(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 4)
        throw ParseError(std::string(what) + ": expected four matrix entries");
    // entries were written from a determinant-1 matrix; renormalizing against
    // the numerically recomputed determinant would wreck ill-conditioned maps
    return MoebiusMap::from_unit_determinant(get_complex(j[0], what), get_complex(j[1], what),
                                             get_complex(j[2], what),
                                             get_complex(j[3], what));
}

json put_disk(const GeneralizedDisk& d) {
    return json{{"a", d.coef_a()}, {"b", put_complex(d.coef_b())}, {"d", d.coef_d()}};
}

void check_keys(const json& j, std::initializer_list<const char*> allowed, const char* what) {
    if (!j.is_object()) throw ParseError(std::string(what) + ": expected an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed) ok = ok || it.key() == k;
        if (!ok) throw ParseError(std::string(what) + ": unknown key '" + it.key() + "'");
    }
    for (const char* k : allowed)
        if (!j.contains(k)) throw ParseError(std::string(what) + ": missing key '" + k + "'");
}

GeneralizedDisk get_disk(const json& j, const char* what) {
    check_keys(j, {"a", "b", "d"}, what);
    try {
        return GeneralizedDisk::from_hermitian(j["a"].get<double>(),
                                               get_complex(j["b"], what),
                                               j["d"].get<double>());
    } catch (const InvalidDisk& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

json parse_text(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError(std::string(what) + ": malformed JSON");
    return j;
}

} // namespace

std::string config_to_json(const SchottkyConfig& cfg) {
    json j{{"gamma1", put_map(cfg.gamma1)},
           {"gamma2", put_map(cfg.gamma2)},
           {"disks",
            {{"d1", put_disk(cfg.d1)},
             {"d1p", put_disk(cfg.d1p)},
             {"d2", put_disk(cfg.d2)},
             {"d2p", put_disk(cfg.d2p)}}},
           {"fixed_points",
            {{"f1", put_point(cfg.f1)},
             {"f1p", put_point(cfg.f1p)},
             {"f2", put_point(cfg.f2)},
             {"f2p", put_point(cfg.f2p)}}}};
    return j.dump(2) + "\n";
}

SchottkyConfig config_from_json(const std::string& text) {
    json j = parse_text(text, "config");
    check_keys(j, {"gamma1", "gamma2", "disks", "fixed_points"}, "config");
    check_keys(j["disks"], {"d1", "d1p", "d2", "d2p"}, "config.disks");
    check_keys(j["fixed_points"], {"f1", "f1p", "f2", "f2p"}, "config.fixed_points");
    const json& d = j["disks"];
    const json& f = j["fixed_points"];
    return SchottkyConfig{get_map(j["gamma1"], "gamma1"),
                          get_map(j["gamma2"], "gamma2"),
                          get_disk(d["d1"], "d1"),
                          get_disk(d["d1p"], "d1p"),
                          get_disk(d["d2"], "d2"),
                          get_disk(d["d2p"], "d2p"),
                          get_point(f["f1"], "f1"),
                          get_point(f["f1p"], "f1p"),
                          get_point(f["f2"], "f2"),
                          get_point(f["f2p"], "f2p")};
}

namespace {

json put_certificate(const Certificate& cert) {
    json pairs = json::array();
    for (const PairCheck& p : cert.disjoint_pairs)
        pairs.push_back(json{{"pair", json::array({p.first, p.second})},
                             {"margin", p.margin},
                             {"pass", p.pass}});
    const char* region_names[] = {"inside", "boundary", "outside"};
    json localization = json::array();
    for (int i = 0; i < 4; ++i)
        localization.push_back(json{
            {"region", region_names[static_cast<int>(cert.fixed_point_region[i])]},
            {"pass", cert.localization_pass[i]}});
    return json{{"disjoint", pairs},
                {"circle_residuals", json::array({cert.circle_residual[0], cert.circle_residual[1]})},
                {"circle_pass", json::array({cert.circle_pass[0], cert.circle_pass[1]})},
                {"orientation_pass",
                 json::array({cert.orientation_pass[0], cert.orientation_pass[1]})},
                {"fixed_point_localization", localization},
                {"tol", cert.tol},
                {"required_margin", cert.required_margin},
                {"min_margin", cert.min_margin()},
                {"pass", cert.pass}};
}

Certificate get_certificate(const json& j) {
    check_keys(j,
               {"disjoint", "circle_residuals", "circle_pass", "orientation_pass",
                "fixed_point_localization", "tol", "required_margin", "min_margin", "pass"},
               "certificate");
    Certificate c;
    const json& pairs = j["disjoint"];
    if (!pairs.is_array() || pairs.size() != 6) throw ParseError("certificate: 6 pairs expected");
    for (int i = 0; i < 6; ++i) {
        const json& p = pairs[i];
        c.disjoint_pairs[i] = PairCheck{p["pair"][0].get<int>(), p["pair"][1].get<int>(),
                                        p["margin"].get<double>(), p["pass"].get<bool>()};
    }
    for (int i = 0; i < 2; ++i) {
        c.circle_residual[i] = j["circle_residuals"][i].get<double>();
        c.circle_pass[i] = j["circle_pass"][i].get<bool>();
        c.orientation_pass[i] = j["orientation_pass"][i].get<bool>();
    }
    for (int i = 0; i < 4; ++i) {
        const json& l = j["fixed_point_localization"][i];
        std::string r = l["region"].get<std::string>();
        c.fixed_point_region[i] = r == "inside"     ? Region::Inside
                                  : r == "boundary" ? Region::Boundary
                                                    : Region::Outside;
        c.localization_pass[i] = l["pass"].get<bool>();
    }
    c.tol = j["tol"].get<double>();
    c.required_margin = j["required_margin"].get<double>();
    c.pass = j["pass"].get<bool>();
    return c;
}

json put_profile(const LoopProfile& p) {
    return json{{"theta0", p.theta0},
                {"theta1", p.theta1},
                {"theta2", p.theta2},
                {"theta_prime", p.theta_prime},
                {"samples", p.samples},
                {"tol", p.tol},
                {"required_margin", p.required_margin}};
}

LoopProfile get_profile(const json& j) {
    check_keys(j, {"theta0", "theta1", "theta2", "theta_prime", "samples", "tol",
                   "required_margin"},
               "profile");
    LoopProfile p;
    p.theta0 = j["theta0"].get<double>();
    p.theta1 = j["theta1"].get<double>();
    p.theta2 = j["theta2"].get<double>();
    p.theta_prime = j["theta_prime"].get<double>();
    p.samples = j["samples"].get<int>();
    p.tol = j["tol"].get<double>();
    p.required_margin = j["required_margin"].get<double>();
    return p;
}

json put_items(const std::vector<AuditItem>& items) {
    json arr = json::array();
    for (const AuditItem& it : items)
        arr.push_back(json{{"name", it.name}, {"value", it.value}, {"slack", it.slack},
                           {"pass", it.pass}});
    return arr;
}

std::vector<AuditItem> get_items(const json& j) {
    std::vector<AuditItem> items;
    for (const json& e : j) {
        check_keys(e, {"name", "value", "slack", "pass"}, "audit item");
        items.push_back(AuditItem{e["name"].get<std::string>(), e["value"].get<double>(),
                                  e["slack"].get<double>(), e["pass"].get<bool>()});
    }
    return items;
}

json put_audit(const ProfileAudit& a) {
    return json{{"items", put_items(a.items)}, {"pass", a.pass},   {"eps", a.eps},
                {"r", a.r},                    {"R", a.R},         {"s", a.s},
                {"theta", a.theta},            {"psi_max", a.psi_max}, {"ring", a.ring}};
}

ProfileAudit get_audit(const json& j) {
    check_keys(j, {"items", "pass", "eps", "r", "R", "s", "theta", "psi_max", "ring"}, "audit");
    ProfileAudit a;
    a.items = get_items(j["items"]);
    a.pass = j["pass"].get<bool>();
    a.eps = j["eps"].get<double>();
    a.r = j["r"].get<double>();
    a.R = j["R"].get<double>();
    a.s = j["s"].get<double>();
    a.theta = j["theta"].get<double>();
    a.psi_max = j["psi_max"].get<double>();
    a.ring = j["ring"].get<double>();
    return a;
}

json put_sample(const LoopSample& s) {
    return json{{"t", s.t},
                {"a", put_complex(s.params.a)},
                {"b", put_complex(s.params.b)},
                {"c", put_complex(s.params.c)},
                {"alpha", put_complex(s.alpha)},
                {"mult_gamma1", put_complex(s.mult_gamma1)},
                {"mult_gamma2", put_complex(s.mult_gamma2)},
                {"phi", s.phipsi.phi},
                {"psi", s.phipsi.psi},
                {"disks",
                 {{"d1", put_disk(s.disks.d1)},
                  {"d1p", put_disk(s.disks.d1p)},
                  {"d2", put_disk(s.disks.d2)},
                  {"d2p", put_disk(s.disks.d2p)}}},
                {"certificate", put_certificate(s.cert)},
                {"refined", s.refined}};
}

LoopSample get_sample(const json& j) {
    check_keys(j, {"t", "a", "b", "c", "alpha", "mult_gamma1", "mult_gamma2", "phi", "psi",
                   "disks", "certificate", "refined"},
               "sample");
    check_keys(j["disks"], {"d1", "d1p", "d2", "d2p"}, "sample.disks");
    LoopSample s;
    s.t = j["t"].get<double>();
    s.params = HGParams{get_complex(j["a"], "a"), get_complex(j["b"], "b"),
                        get_complex(j["c"], "c")};
    s.alpha = get_complex(j["alpha"], "alpha");
    s.mult_gamma1 = get_complex(j["mult_gamma1"], "mult_gamma1");
    s.mult_gamma2 = get_complex(j["mult_gamma2"], "mult_gamma2");
    s.phipsi = PhiPsi{j["phi"].get<double>(), j["psi"].get<double>()};
    const json& d = j["disks"];
    s.disks = DiskSet{get_disk(d["d1"], "d1"), get_disk(d["d1p"], "d1p"),
                      get_disk(d["d2"], "d2"), get_disk(d["d2p"], "d2p")};
    s.cert = get_certificate(j["certificate"]);
    s.refined = j["refined"].get<bool>();
    return s;
}

json put_aggregates(const LoopAggregates& a) {
    return json{{"winding_alpha_about_0", a.winding_alpha_about_0},
                {"winding_alpha_about_1", a.winding_alpha_about_1},
                {"winding_residual", a.winding_residual},
                {"darg_deformed_multiplier", a.darg_deformed_multiplier},
                {"endpoint_generator_distance", a.endpoint_generator_distance},
                {"endpoint_disk_distance", a.endpoint_disk_distance},
                {"endpoint_alpha_distance", a.endpoint_alpha_distance},
                {"min_certificate_margin", a.min_certificate_margin},
                {"max_circle_residual", a.max_circle_residual},
                {"all_certificates_pass", a.all_certificates_pass},
                {"per_kind_checks", put_items(a.per_kind_checks)},
                {"per_kind_checks_pass", a.per_kind_checks_pass},
                {"empirical_min_theta1", a.empirical_min_theta1}};
}

LoopAggregates get_aggregates(const json& j) {
    check_keys(j,
               {"winding_alpha_about_0", "winding_alpha_about_1", "winding_residual",
                "darg_deformed_multiplier", "endpoint_generator_distance",
                "endpoint_disk_distance", "endpoint_alpha_distance", "min_certificate_margin",
                "max_circle_residual", "all_certificates_pass", "per_kind_checks",
                "per_kind_checks_pass", "empirical_min_theta1"},
               "aggregates");
    LoopAggregates a;
    a.winding_alpha_about_0 = j["winding_alpha_about_0"].get<int>();
    a.winding_alpha_about_1 = j["winding_alpha_about_1"].get<int>();
    a.winding_residual = j["winding_residual"].get<double>();
    a.darg_deformed_multiplier = j["darg_deformed_multiplier"].get<double>();
    a.endpoint_generator_distance = j["endpoint_generator_distance"].get<double>();
    a.endpoint_disk_distance = j["endpoint_disk_distance"].get<double>();
    a.endpoint_alpha_distance = j["endpoint_alpha_distance"].get<double>();
    a.min_certificate_margin = j["min_certificate_margin"].get<double>();
    a.max_circle_residual = j["max_circle_residual"].get<double>();
    a.all_certificates_pass = j["all_certificates_pass"].get<bool>();
    a.per_kind_checks = get_items(j["per_kind_checks"]);
    a.per_kind_checks_pass = j["per_kind_checks_pass"].get<bool>();
    a.empirical_min_theta1 = j["empirical_min_theta1"].get<double>();
    return a;
}

} // namespace

std::string certificate_to_json(const Certificate& cert) {
    return put_certificate(cert).dump(2) + "\n";
}

std::string report_to_json(const LoopReport& report) {
    json samples = json::array();
    for (const LoopSample& s : report.samples) samples.push_back(put_sample(s));
    json j{{"kind", to_string(report.kind)},
           {"profile", put_profile(report.profile)},
           {"audit", put_audit(report.audit)},
           {"samples", samples},
           {"aggregates", put_aggregates(report.aggregates)},
           {"pass", report.pass}};
    return j.dump(2) + "\n";
}

LoopReport report_from_json(const std::string& text) {
    json j = parse_text(text, "report");
    check_keys(j, {"kind", "profile", "audit", "samples", "aggregates", "pass"}, "report");
    LoopReport rep;
    auto kind = loop_kind_from_string(j["kind"].get<std::string>());
    if (!kind) throw ParseError("report: unknown loop kind");
    rep.kind = *kind;
    rep.profile = get_profile(j["profile"]);
    rep.audit = get_audit(j["audit"]);
    for (const json& s : j["samples"]) rep.samples.push_back(get_sample(s));
    rep.aggregates = get_aggregates(j["aggregates"]);
    rep.pass = j["pass"].get<bool>();
    return rep;
}

} // namespace hgs
