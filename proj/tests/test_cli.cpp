#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "panofold/cli.hpp"
#include "panofold/image_io.hpp"
#include "panofold/raster.hpp"
#include "panofold/version.hpp"

using namespace panofold;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

// Full-size default chart written once per process.
const std::string& chart_path() {
    static oracle::TempDir dir;
    static const std::string path = [] {
        const std::string p = dir.file("chart.png");
        write_file(p, encode_png(make_latlon_chart(2048, 1024).image()));
        return p;
    }();
    return path;
}

std::string golden(const std::string& name) { return oracle::slurp(std::string(PANOFOLD_GOLDEN_DIR) + "/" + name); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli({}).code == cli::kExitUsage);
    CHECK(run_cli({"bogus"}).code == cli::kExitUsage);
    CHECK(run_cli({"net", "--input", "x.png"}).code == cli::kExitUsage);
    CHECK(run_cli({"net", "-i", "x.png", "-o", "y.svg", "--frobnicate"}).code == cli::kExitUsage);
    CHECK(run_cli({"net", "-i", "x.png", "-o", "y.svg", "--yaw", "abc"}).code == cli::kExitUsage);

    const Run fov = run_cli({"flat", "-i", chart_path(), "-o", "-", "--fov", "200"});
    CHECK(fov.code == cli::kExitUsage);
    CHECK(fov.out.empty());
    CHECK(fov.err.find("--fov") != std::string::npos);

    const Run shape = run_cli({"net", "-i", chart_path(), "-o", "-", "--shape", "icosahedron"});
    CHECK(shape.code == cli::kExitUsage);
    CHECK(shape.err.find("--shape") != std::string::npos);

    const Run frac = run_cli({"flat", "-i", chart_path(), "-o", "-", "--minimap-fraction", "0.1"});
    CHECK(frac.code == cli::kExitUsage);
    CHECK(frac.err.find("--minimap-fraction") != std::string::npos);
}

TEST_CASE("version and help") {
    const Run v = run_cli({"--version"});
    CHECK(v.code == 0);
    CHECK(v.out == std::string(kVersion) + "\n");
    const Run h = run_cli({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("net") != std::string::npos);
}

TEST_CASE("runtime failures exit 1 and name the path") {
    oracle::TempDir dir;
    const Run missing = run_cli({"net", "-i", dir.file("nope.png"), "-o", dir.file("n.svg")});
    CHECK(missing.code == cli::kExitRuntime);
    CHECK(missing.err.find("nope.png") != std::string::npos);

    const std::string junk = dir.file("junk.png");
    write_file(junk, std::vector<std::uint8_t>{0x89, 'P', 'N', 'G', 1, 2, 3});
    const Run bad = run_cli({"net", "-i", junk, "-o", dir.file("n.svg")});
    CHECK(bad.code == cli::kExitRuntime);
    CHECK(bad.err.find("junk.png") != std::string::npos);
    CHECK_FALSE(std::filesystem::exists(dir.file("n.svg")));

    const Run unwritable = run_cli({"chart", "-o", dir.file("no/such/dir/c.png"), "--width", "8"});
    CHECK(unwritable.code == cli::kExitRuntime);

    // a tall perspective cannot be laid out
    const Run tall = run_cli({"flat", "-i", chart_path(), "-o", "-", "--width", "100", "--height", "400",
                              "--dpi", "30"});
    CHECK(tall.code == cli::kExitRuntime);
}

TEST_CASE("chart pixels follow the formula") {
    const Run r = run_cli({"chart", "--width", "360", "--height", "180", "-o", "-"});
    REQUIRE(r.code == 0);
    const Image img = decode_image({reinterpret_cast<const std::uint8_t*>(r.out.data()), r.out.size()});
    REQUIRE(img.width() == 360);
    REQUIRE(img.height() == 180);
    for (int v : {0, 45, 179})
        for (int u : {0, 100, 359}) {
            const double lon = 2 * oracle::kPi * (u + 0.5) / 360 - oracle::kPi;
            const double lat = oracle::kPi / 2 - oracle::kPi * (v + 0.5) / 180;
            CHECK(img.at(u, v).r == std::lround(oracle::chart_r(lon)));
            CHECK(img.at(u, v).g == std::lround(oracle::chart_g(lat)));
            CHECK(img.at(u, v).b == 0);
            CHECK(img.at(u, v).a == 255);
        }
    CHECK(img.at(0, 0).r == 0);
    CHECK(img.at(0, 0).g == 254);
}

TEST_CASE("non 2:1 inputs warn but render") {
    oracle::TempDir dir;
    const std::string sq = dir.file("square.png");
    write_file(sq, encode_png(Image(64, 64, {9, 9, 9, 255})));
    const Run r = run_cli({"preview", "-i", sq, "-o", "-", "--width", "16", "--height", "12"});
    CHECK(r.code == 0);
    CHECK(r.err.find("warning") != std::string::npos);
    CHECK(r.out.substr(1, 3) == "PNG");
}

TEST_CASE("stdout and file outputs are identical and deterministic") {
    oracle::TempDir dir;
    const std::vector<std::string> base{"net", "-i", chart_path(), "--shape", "cuboctahedron", "--dpi", "60",
                                        "--yaw", "30"};
    auto with_out = [&](const std::string& o) {
        auto a = base;
        a.insert(a.end(), {"-o", o});
        return a;
    };
    const Run s = run_cli(with_out("-"));
    REQUIRE(s.code == 0);
    CHECK(run_cli(with_out(dir.file("a.svg"))).code == 0);
    CHECK(oracle::slurp(dir.file("a.svg")) == s.out);
    CHECK(run_cli(with_out("-")).out == s.out);
    CHECK(oracle::count(s.out, "class=\"fold\"") == 13);
    CHECK(oracle::well_formed_xml(s.out));

    const Run planet = run_cli({"planet", "-i", chart_path(), "-o", "-", "--size", "257", "--spin", "10"});
    REQUIRE(planet.code == 0);
    const Image pi = decode_image({reinterpret_cast<const std::uint8_t*>(planet.out.data()), planet.out.size()});
    CHECK(pi.width() == 257);
    CHECK(pi.at(128, 128).g <= 2);
}

TEST_CASE("flat sheet from the command line") {
    const Run r = run_cli({"flat", "-i", chart_path(), "-o", "-", "--dpi", "60", "--caption", "Test hall",
                           "--minimap-projection", "little-planet"});
    REQUIRE(r.code == 0);
    CHECK(oracle::count(r.out, "<image ") == 2);
    CHECK(oracle::count(r.out, "class=\"minimap-border\"") == 1);
    CHECK(r.out.find(">Test hall</text>") != std::string::npos);
    CHECK(oracle::well_formed_xml(r.out));
}

TEST_CASE("golden cube net at default settings") {
    // net --shape cube --input chart.png --yaw 0 --out net.svg
    oracle::TempDir dir;
    const Run r = run_cli({"net", "--shape", "cube", "--input", chart_path(), "--yaw", "0", "--out", dir.file("net.svg")});
    REQUIRE(r.code == 0);
    const std::string svg = oracle::slurp(dir.file("net.svg"));
    CHECK(oracle::count(svg, "<image ") == 6);
    CHECK(oracle::count(svg, "class=\"fold\"") == 5);
    CHECK(oracle::count(svg, "class=\"tab\"") == 7);
    CHECK(svg == golden("cube_net_a4_300dpi.svg"));
}

TEST_CASE("golden fixtures at 150 dpi") {
    const std::vector<std::pair<std::vector<std::string>, std::string>> cases{
        {{"net", "--shape", "cube"}, "cube_net.svg"},
        {{"net", "--shape", "cuboctahedron"}, "cuboctahedron_net.svg"},
        {{"flat"}, "flat.svg"},
    };
    for (const auto& [args, name] : cases) {
        auto a = args;
        a.insert(a.end(), {"-i", chart_path(), "-o", "-", "--dpi", "150"});
        const Run r = run_cli(a);
        REQUIRE(r.code == 0);
        CHECK_MESSAGE(r.out == golden(name), name);
    }
}

}  // TEST_SUITE
