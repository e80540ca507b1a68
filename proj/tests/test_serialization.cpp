#include <doctest.h>

#include <string>

#include "hgs/errors.hpp"
#include "hgs/loops.hpp"
#include "hgs/serialization.hpp"
#include "hgs/svg.hpp"

using namespace hgs;

namespace {

SchottkyConfig base_cfg() {
    static SchottkyConfig cfg = base_point(0.2, 5.0, 4.0);
    return cfg;
}

LoopReport small_report() {
    LoopProfile p = LoopProfile::defaults(LoopKind::MultiplierGamma2);
    p.samples = 16;
    static LoopReport rep = trace_loop(LoopKind::MultiplierGamma2, p);
    return rep;
}

} // namespace

TEST_CASE("config JSON survives write-read-write byte-identically") {
    std::string once = config_to_json(base_cfg());
    SchottkyConfig parsed = config_from_json(once);
    std::string twice = config_to_json(parsed);
    CHECK(once == twice);
    CHECK(certify(parsed).pass);
}

TEST_CASE("report JSON survives write-read-write byte-identically") {
    std::string once = report_to_json(small_report());
    LoopReport parsed = report_from_json(once);
    std::string twice = report_to_json(parsed);
    CHECK(once == twice);
    CHECK(parsed.pass == small_report().pass);
    CHECK(parsed.samples.size() == small_report().samples.size());
}

TEST_CASE("strict schemas: unknown keys and malformed input are rejected") {
    CHECK_THROWS_AS(config_from_json("{"), ParseError);
    CHECK_THROWS_AS(config_from_json("{\"gamma1\": []}"), ParseError);

    std::string good = config_to_json(base_cfg());
    std::string padded = good;
    padded.insert(padded.find("\"gamma1\""), "\"extra\": 1, ");
    CHECK_THROWS_AS(config_from_json(padded), ParseError);

    CHECK_THROWS_AS(report_from_json("[1, 2, 3]"), ParseError);
}

TEST_CASE("certificate JSON is emitted with the full condition table") {
    std::string text = certificate_to_json(certify(base_cfg()));
    CHECK(text.find("\"disjoint\"") != std::string::npos);
    CHECK(text.find("\"circle_residuals\"") != std::string::npos);
    CHECK(text.find("\"fixed_point_localization\"") != std::string::npos);
    CHECK(text.find("\"min_margin\"") != std::string::npos);
}

TEST_CASE("config SVG is deterministic and structurally sound") {
    PlotOptions opts;
    std::string a = render_config_svg(base_cfg(), opts);
    std::string b = render_config_svg(base_cfg(), opts);
    CHECK(a == b);
    CHECK(a.find("viewBox") != std::string::npos);
    // outlines for all four disks plus the fill circles for the bounded ones
    int circles = 0;
    for (std::size_t pos = a.find("<circle"); pos != std::string::npos;
         pos = a.find("<circle", pos + 1))
        ++circles;
    CHECK(circles >= 4);
    // the unbounded disk is drawn as an even-odd frame
    CHECK(a.find("evenodd") != std::string::npos);
    CHECK(a.substr(a.size() - 7) == "</svg>\n");
}

TEST_CASE("orbit layer adds scatter points") {
    PlotOptions plain, with_orbit;
    with_orbit.orbit_depth = 2;
    std::string a = render_config_svg(base_cfg(), plain);
    std::string b = render_config_svg(base_cfg(), with_orbit);
    CHECK(b.size() > a.size());
}

TEST_CASE("report SVG includes the closed alpha trajectory") {
    std::string svg = render_report_svg(small_report());
    CHECK(svg.find(" Z\"") != std::string::npos);
    std::string again = render_report_svg(small_report());
    CHECK(svg == again);
}

TEST_CASE("report SVG refuses an empty report") {
    LoopReport empty;
    CHECK_THROWS_AS(render_report_svg(empty), Error);
}
