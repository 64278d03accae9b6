#include <algorithm>
#include <cmath>
#include <doctest.h>
#include <numeric>

#include "raycut/gen.hpp"
#include "raycut/method_grid.hpp"
#include "raycut/oracle.hpp"
#include "test_util.hpp"

using namespace raycut;
using testutil::point_in_box;

namespace {
const Aabb kUnitBox{{0, 0, 0}, {1, 1, 1}};
}

TEST_CASE("cell indexing floors position over cell width") {
    const std::vector<Vec3> positions{{0.3f, 0.7f, 0.9f}};
    const Grid grid = grid_build(positions, 0.5f, kUnitBox);
    int cx, cy, cz;
    grid.cell_of(positions[0], cx, cy, cz);
    CHECK(cx == 0);
    CHECK(cy == 1);
    CHECK(cz == 1);
}

TEST_CASE("far boundary clamps to the last cell") {
    const std::vector<Vec3> positions{{1.0f, 1.0f, 1.0f}, {0.1f, 0.1f, 0.1f}};
    const Grid grid = grid_build(positions, 0.25f, kUnitBox);
    int cx, cy, cz;
    grid.cell_of(positions[0], cx, cy, cz);
    CHECK(cx == 3);
    CHECK(cy == 3);
    CHECK(cz == 3);
    // No particle may be lost to the clamp.
    CHECK(grid.cell_offsets.back() == positions.size());
}

TEST_CASE("a beta=4 uniform box yields a 4x4x4 grid") {
    const Generated g = gen_uniform({4, 2, 1});
    const Grid grid = grid_build(g.positions, g.cutoff, kUnitBox);
    CHECK(grid.nx == 4);
    CHECK(grid.ny == 4);
    CHECK(grid.nz == 4);
    CHECK(grid.cell_count() == 64);
}

TEST_CASE("binning partitions the particles") {
    Pcg32 rng(3);
    std::vector<Vec3> positions;
    for (int i = 0; i < 500; ++i) positions.push_back(point_in_box(rng, 0.0f, 1.0f));
    const Grid grid = grid_build(positions, 0.2f, kUnitBox);

    REQUIRE(grid.cell_offsets.size() == grid.cell_count() + 1);
    CHECK(std::is_sorted(grid.cell_offsets.begin(), grid.cell_offsets.end()));
    CHECK(grid.cell_offsets.back() == positions.size());

    auto order = grid.particle_order;
    std::sort(order.begin(), order.end());
    std::vector<std::uint32_t> expected(positions.size());
    std::iota(expected.begin(), expected.end(), 0u);
    CHECK(order == expected);

    // Binned copies hold the same coordinates.
    for (std::size_t s = 0; s < positions.size(); ++s) {
        const Vec3& p = positions[grid.particle_order[s]];
        REQUIRE(grid.binned_positions[s].x == p.x);
    }
}

TEST_CASE("in-cutoff pairs never span more than one cell per axis") {
    Pcg32 rng(8);
    std::vector<Vec3> positions;
    for (int i = 0; i < 300; ++i) positions.push_back(point_in_box(rng, 0.0f, 1.0f));
    const float cutoff = 0.21f;
    const Grid grid = grid_build(positions, cutoff, kUnitBox);
    const float c2 = cutoff * cutoff;
    for (std::size_t a = 0; a < positions.size(); ++a) {
        for (std::size_t b = a + 1; b < positions.size(); ++b) {
            if (dist_squared(positions[a], positions[b]) >= c2) continue;
            int ax, ay, az, bx, by, bz;
            grid.cell_of(positions[a], ax, ay, az);
            grid.cell_of(positions[b], bx, by, bz);
            REQUIRE(std::abs(ax - bx) <= 1);
            REQUIRE(std::abs(ay - by) <= 1);
            REQUIRE(std::abs(az - bz) <= 1);
        }
    }
}

TEST_CASE("grid_build rejects non-finite positions") {
    std::vector<Vec3> positions{{0.5f, 0.5f, std::numeric_limits<float>::infinity()}};
    CHECK_THROWS_AS(grid_build(positions, 0.5f, kUnitBox), std::invalid_argument);
}

TEST_CASE("single particle has no interactions") {
    ProblemSpec spec;
    spec.positions = {{0.5f, 0.5f, 0.5f}};
    spec.cutoff = 0.25f;
    const NeighborResult r = run_engine(Method::Grid, spec, Kernel::Count);
    CHECK(r.counts == std::vector<std::uint32_t>{0});
    CHECK(r.pair_visits == 0);
}

TEST_CASE("adjacent cells interact within the cutoff") {
    ProblemSpec spec;
    spec.cutoff = 0.25f;
    // Distance 0.9 C across a cell boundary.
    spec.positions = {{0.24f, 0.1f, 0.1f}, {0.465f, 0.1f, 0.1f}};
    const NeighborResult r = run_engine(Method::Grid, spec, Kernel::Count);
    CHECK(r.counts == std::vector<std::uint32_t>{1, 1});
}

TEST_CASE("grid equals brute force on a random cloud") {
    Pcg32 rng(500);
    ProblemSpec spec;
    spec.cutoff = 0.18f;
    for (int i = 0; i < 500; ++i) spec.positions.push_back(point_in_box(rng, 0.0f, 1.0f));
    const NeighborResult expected = brute_force(spec, Kernel::Record);
    const NeighborResult got = run_engine(Method::Grid, spec, Kernel::Record);
    REQUIRE(got.lists == expected.lists);
}
