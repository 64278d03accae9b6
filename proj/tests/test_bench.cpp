#include <cmath>
#include <cstdio>
#include <doctest.h>
#include <fstream>
#include <sstream>

#include "raycut/benchlib.hpp"
#include "raycut/gen.hpp"
#include "raycut/particle_io.hpp"
#include "raycut/render.hpp"

using namespace raycut;

namespace {

struct TempPath {
    std::string path;
    explicit TempPath(const std::string& name) : path("raycut_test_" + name) {}
    ~TempPath() { std::remove(path.c_str()); }
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string token;
    while (std::getline(ss, token, sep)) out.push_back(token);
    return out;
}

}  // namespace

TEST_CASE("method list parsing") {
    const auto all = parse_methods("all");
    REQUIRE(all.size() == 5);
    CHECK(all[0].label() == "sphere");
    CHECK(all[1].label() == "squares");
    CHECK(all[2].label() == "aabb");
    CHECK(all[3].label() == "aabb-sorted");
    CHECK(all[4].label() == "grid");

    const auto two = parse_methods("grid,aabb-sorted");
    REQUIRE(two.size() == 2);
    CHECK(two[0].method == Method::Grid);
    CHECK(two[1].method == Method::CustomAabb);
    CHECK(two[1].sorted);

    CHECK_THROWS_AS(parse_methods("warp"), std::invalid_argument);
}

TEST_CASE("bench records carry the pinned CSV schema") {
    const Generated g = gen_uniform({4, 2, 9});
    BenchConfig cfg;
    cfg.distribution = "uniform";
    cfg.param = 4;
    cfg.p = 2;
    cfg.seed = 9;
    cfg.reps = 3;
    cfg.methods = parse_methods("grid,aabb");
    const auto records = run_bench(g.positions, g.cutoff, cfg);
    REQUIRE(records.size() == 2);
    CHECK(records[0].checksum == records[1].checksum);  // methods agree
    CHECK(records[0].pairs == records[1].pairs);
    CHECK(records[0].n == 128);
    for (const auto& r : records) {
        CHECK(r.build_ms_mean >= 0.0);
        CHECK(r.compute_ms_mean >= 0.0);
        CHECK(r.build_ms_median >= 0.0);
    }

    const std::string csv = csv_string(records);
    const auto lines = split(csv, '\n');
    REQUIRE(lines.size() >= 3);
    CHECK(lines[0] == "method,distribution,param,p,N,seed,build_ms,compute_ms,checksum,pairs");
    const auto row = split(lines[1], ',');
    REQUIRE(row.size() == 10);
    CHECK(row[0] == "grid");
    CHECK(row[1] == "uniform");
    CHECK(row[2] == "4");
    CHECK(row[3] == "2");
    CHECK(row[4] == "128");
    CHECK(row[5] == "9");
    CHECK(row[8] == row[9]);  // count checksum equals accepted pairs
}

TEST_CASE("all methods produce five rows and equal checksums") {
    const Generated g = gen_surface({8, 1, 2});
    BenchConfig cfg;
    cfg.distribution = "surface";
    cfg.param = 8;
    cfg.reps = 1;
    cfg.methods = parse_methods("all");
    const auto records = run_bench(g.positions, g.cutoff, cfg);
    REQUIRE(records.size() == 5);
    for (const auto& r : records) {
        CHECK(r.checksum == records[0].checksum);
    }
}

TEST_CASE("markdown table reports speedups against the grid row") {
    const Generated g = gen_uniform({2, 2, 4});
    BenchConfig cfg;
    cfg.methods = parse_methods("aabb,grid");
    cfg.reps = 1;
    const std::string md = markdown_table(run_bench(g.positions, g.cutoff, cfg));
    CHECK(md.find("| method |") == 0);
    CHECK(md.find("x-grid") != std::string::npos);
    CHECK(md.find("| aabb |") != std::string::npos);
    CHECK(md.find("| grid |") != std::string::npos);
}

TEST_CASE("verification accepts correct engines") {
    const Generated g = gen_uniform({4, 1, 5});
    const auto err = verify_against_oracle(g.positions, g.cutoff, parse_methods("all"), 1);
    CHECK(!err.has_value());
}

TEST_CASE("particle CSV round-trip") {
    TempPath tmp("particles.csv");
    const Generated g = gen_uniform({2, 2, 12});
    save_particles(tmp.path, g.positions);
    const auto loaded = load_particles(tmp.path);
    REQUIRE(loaded.size() == g.positions.size());
    for (std::size_t i = 0; i < loaded.size(); ++i) {
        REQUIRE(loaded[i].x == g.positions[i].x);
        REQUIRE(loaded[i].y == g.positions[i].y);
        REQUIRE(loaded[i].z == g.positions[i].z);
    }
    CHECK_THROWS_AS(load_particles("raycut_test_missing.csv"), std::runtime_error);

    TempPath bad("bad.csv");
    std::ofstream(bad.path) << "x,y,z\n0,0,0\n";
    CHECK_THROWS_AS(load_particles(bad.path), std::runtime_error);
}

TEST_CASE("empty scene renders an all-zero image") {
    ProblemSpec spec;
    spec.cutoff = 1.0f;
    const DepthImage img = render_depth(sphere_scene_build(spec), 0, 32);
    REQUIRE(img.pixels.size() == 32 * 32);
    for (std::uint8_t px : img.pixels) REQUIRE(px == 0);
}

TEST_CASE("single sphere renders a centered disk") {
    ProblemSpec spec;
    spec.positions = {{0, 0, 0}};
    spec.cutoff = 1.0f;
    const int res = 128;
    const DepthImage img = render_depth(sphere_scene_build(spec), 2, res);

    int nonzero = 0;
    for (std::uint8_t px : img.pixels) nonzero += px != 0;
    // The view box is the sphere's bounding box, so the disk is inscribed:
    // area ~ pi/4 of the image, with a perimeter's worth of slack.
    const double expected = 3.14159265 / 4.0 * res * res;
    CHECK(std::fabs(nonzero - expected) < 4.0 * res);
    // Center pixel hits, corner pixels do not.
    CHECK(img.at(res / 2, res / 2) != 0);
    CHECK(img.at(0, 0) == 0);
    CHECK(img.at(res - 1, res - 1) == 0);
}

TEST_CASE("squares scene viewed down x renders filled rectangles") {
    ProblemSpec spec;
    spec.positions = {{0, 0, 0}};
    spec.cutoff = 1.0f;
    spec.epsilon = 1e-4f;
    const int res = 64;
    const DepthImage img = render_depth(squares_scene_build(spec), 0, res);
    // Both faces project onto the full (y, z) extent of the scene box.
    int nonzero = 0;
    for (std::uint8_t px : img.pixels) nonzero += px != 0;
    CHECK(nonzero == res * res);
}

TEST_CASE("pgm writer emits a valid P5 header") {
    TempPath tmp("image.pgm");
    DepthImage img;
    img.width = 4;
    img.height = 2;
    img.pixels = {0, 1, 2, 3, 4, 5, 6, 7};
    write_pgm(tmp.path, img);

    std::ifstream in(tmp.path, std::ios::binary);
    std::string magic;
    int w, h, maxval;
    in >> magic >> w >> h >> maxval;
    CHECK(magic == "P5");
    CHECK(w == 4);
    CHECK(h == 2);
    CHECK(maxval == 255);
    in.get();  // single whitespace after the header
    std::vector<char> data(8);
    in.read(data.data(), 8);
    CHECK(in.gcount() == 8);
    CHECK(data[7] == 7);
}
