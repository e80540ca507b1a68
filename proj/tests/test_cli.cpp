#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "hgs/loops.hpp"
#include "hgs/serialization.hpp"

using namespace hgs;

namespace {

const std::string cli = HGS_CLI_PATH;
const std::string scratch = HGS_SCRATCH_DIR;

int run(const std::string& args) {
    std::string cmd = "'" + cli + "' " + args + " > " + scratch + "/out.txt 2> " + scratch +
                      "/err.txt";
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return text;
}

void write(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

} // namespace

TEST_CASE("cli monodromy: healthy parameters exit 0, degenerate exit 1, garbage exit 2") {
    CHECK(run("monodromy --a 0.5,-1.0 --b 0.5,-0.5 --c 1.0,-0.6") == 0);
    std::string out = slurp(scratch + "/out.txt");
    CHECK(out.find("gamma1") != std::string::npos);
    CHECK(out.find("f2") != std::string::npos);
    CHECK(out.find("alpha") != std::string::npos);

    CHECK(run("monodromy --a 0.3,0.4 --b -0.2,0.1 --c 1.0") == 1);
    CHECK(run("monodromy --a 0.25 --b 0.25 --c 0.5") == 1);  // Gamma pole in c-a-b
    CHECK(run("monodromy --a nonsense --b 0.5 --c 0.9") == 2);
    CHECK(run("monodromy --b 0.5 --c 0.9") == 2);  // missing required flag
}

TEST_CASE("cli monodromy is symmetric under swapping a and b") {
    HGParams p{Complex(0.5, -1.0), Complex(0.5, -0.5), Complex(1.0, -0.6)};
    auto [f2, f2p] = gamma2_fixed_points(p);
    auto [s2, s2p] = gamma2_fixed_points(HGParams{p.b, p.a, p.c});
    CHECK(std::abs(f2 - s2) < 1e-12 * std::abs(f2));
    CHECK(std::abs(f2p - s2p) < 1e-12 * std::abs(f2p));
    CHECK(std::abs(normalized_alpha(p) - normalized_alpha(HGParams{p.b, p.a, p.c})) < 1e-12);
}

TEST_CASE("cli certify: pass, fail, and input-error exit codes") {
    SchottkyConfig cfg = base_point(0.2, 5.0, 4.0);
    write(scratch + "/good.json", config_to_json(cfg));
    CHECK(run("certify --config " + scratch + "/good.json") == 0);

    // overlap two disks
    SchottkyConfig broken = cfg;
    broken.d2 = GeneralizedDisk::from_center_radius(0.0, 0.5);
    write(scratch + "/broken.json", config_to_json(broken));
    CHECK(run("certify --config " + scratch + "/broken.json") == 1);

    write(scratch + "/malformed.json", "{ not json");
    CHECK(run("certify --config " + scratch + "/malformed.json") == 2);
    CHECK(run("certify --config " + scratch + "/missing.json") == 2);
}

TEST_CASE("cli certify writes the certificate file when asked") {
    SchottkyConfig cfg = base_point(0.2, 5.0, 4.0);
    write(scratch + "/cfg.json", config_to_json(cfg));
    CHECK(run("certify --config " + scratch + "/cfg.json --out " + scratch + "/cert.json") ==
          0);
    std::string cert = slurp(scratch + "/cert.json");
    CHECK(cert.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("cli loop: quick multiplier loop passes and writes a report") {
    int code = run("loop --kind multiplier-gamma2 --n 16 --out " + scratch +
                   "/report.json --svg " + scratch + "/loop.svg --out-config " + scratch +
                   "/t0.json");
    CHECK(code == 0);
    LoopReport rep = report_from_json(slurp(scratch + "/report.json"));
    CHECK(rep.pass);
    CHECK(slurp(scratch + "/loop.svg").find("<svg") == 0);
    CHECK(certify(config_from_json(slurp(scratch + "/t0.json"))).pass);
    std::string out = slurp(scratch + "/out.txt");
    CHECK(out.find("delta arg of deformed multiplier") != std::string::npos);
    CHECK(out.find("verdict: pass") != std::string::npos);
}

TEST_CASE("cli audit: good and bad profiles") {
    CHECK(run("audit --kind alpha-around-d1") == 0);
    std::string out = slurp(scratch + "/out.txt");
    CHECK(out.find("(1)") != std::string::npos);
    CHECK(run("audit --kind alpha-around-d1 --theta-prime 0.1") == 1);
    CHECK(run("audit --kind bogus") == 2);
}

TEST_CASE("cli apollonius: centers and pairing family") {
    CHECK(run("apollonius --d 0,0,1 --dp 5,0,2") == 0);
    std::string out = slurp(scratch + "/out.txt");
    CHECK(out.find("F:") != std::string::npos);
    CHECK(out.find("0.2404082") != std::string::npos);

    CHECK(run("apollonius --d 0,0,1 --dp 5,0,2 --fp 4.5,0.3 --phase 1.0") == 0);
    out = slurp(scratch + "/out.txt");
    CHECK(out.find("|m|:") != std::string::npos);
    CHECK(out.find("pairing residual") != std::string::npos);

    CHECK(run("apollonius --d 0,0,1 --dp 1,0,1") == 1);    // overlapping disks
    CHECK(run("apollonius --d 0,0,1 --dp 5,0,2 --phase 1.0") == 2);  // phase without fp
}

TEST_CASE("cli plot: config and report rendering") {
    SchottkyConfig cfg = base_point(0.2, 5.0, 4.0);
    write(scratch + "/plotcfg.json", config_to_json(cfg));
    CHECK(run("plot --config " + scratch + "/plotcfg.json --out " + scratch +
              "/fig.svg --orbit-depth 2") == 0);
    std::string svg = slurp(scratch + "/fig.svg");
    CHECK(svg.find("<svg") == 0);

    CHECK(run("plot --out " + scratch + "/fig.svg") == 2);  // neither config nor report
    write(scratch + "/empty.json", "{ not json");
    CHECK(run("plot --report " + scratch + "/empty.json --out " + scratch + "/fig.svg") == 2);
}
