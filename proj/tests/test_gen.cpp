#include <cmath>
#include <doctest.h>

#include "raycut/engine.hpp"
#include "raycut/gen.hpp"
#include "raycut/method_grid.hpp"

using namespace raycut;

TEST_CASE("uniform generator sizes and cutoffs") {
    const Generated a = gen_uniform({4, 2, 1});
    CHECK(a.positions.size() == 128);
    CHECK(a.cutoff == doctest::Approx(0.25f));

    const Generated b = gen_uniform({2, 1, 1});
    CHECK(b.positions.size() == 8);
    CHECK(b.cutoff == doctest::Approx(0.5f));

    for (const Vec3& p : a.positions) {
        REQUIRE(p.x >= 0.0f);
        REQUIRE(p.x < 1.0f);
        REQUIRE(p.y >= 0.0f);
        REQUIRE(p.y < 1.0f);
        REQUIRE(p.z >= 0.0f);
        REQUIRE(p.z < 1.0f);
    }
}

TEST_CASE("identical seeds reproduce identical point sets") {
    const Generated a = gen_uniform({4, 4, 99});
    const Generated b = gen_uniform({4, 4, 99});
    REQUIRE(a.positions.size() == b.positions.size());
    for (std::size_t i = 0; i < a.positions.size(); ++i) {
        REQUIRE(a.positions[i].x == b.positions[i].x);
        REQUIRE(a.positions[i].y == b.positions[i].y);
        REQUIRE(a.positions[i].z == b.positions[i].z);
    }
    const Generated c = gen_uniform({4, 4, 100});
    CHECK(a.positions[0].x != c.positions[0].x);

    const Generated s1 = gen_surface({8, 1, 5});
    const Generated s2 = gen_surface({8, 1, 5});
    for (std::size_t i = 0; i < s1.positions.size(); ++i) {
        REQUIRE(s1.positions[i].x == s2.positions[i].x);
    }
}

TEST_CASE("generated points respect the minimum separation") {
    const Generated g = gen_uniform({2, 4, 7});
    const float eps = g.cutoff * 1e-4f;
    for (std::size_t a = 0; a < g.positions.size(); ++a) {
        for (std::size_t b = a + 1; b < g.positions.size(); ++b) {
            REQUIRE(dist_squared(g.positions[a], g.positions[b]) > eps * eps);
        }
    }
}

TEST_CASE("surface cutoff follows the neighbor-budget formula") {
    // alpha=8, p=1: N=512, expected=9, coef = 1 - 18/512.
    const float c1 = surface_cutoff(8, 1);
    CHECK(c1 == doctest::Approx(std::acos(1.0 - 18.0 / 512.0)).epsilon(1e-6));
    CHECK(c1 == doctest::Approx(0.2659f).epsilon(1e-3));

    // expected/N is constant in p for fixed alpha, so the cutoff repeats.
    const float c32 = surface_cutoff(8, 32);
    CHECK(c32 == doctest::Approx(c1).epsilon(1e-6));

    const Generated g = gen_surface({8, 1, 1});
    CHECK(g.positions.size() == 512);
    CHECK(g.cutoff == c1);
}

TEST_CASE("surface points lie on the unit sphere") {
    const Generated g = gen_surface({8, 2, 3});
    for (const Vec3& p : g.positions) {
        REQUIRE(std::fabs(length(p) - 1.0f) <= 1e-6f);
    }
}

TEST_CASE("surface neighbor counts land near the 9p budget") {
    // Statistical check over 3 seeds: mean neighbor count within +/-30% of
    // 9p for alpha >= 16.
    for (int p : {1, 2}) {
        double total = 0.0;
        std::size_t n_total = 0;
        for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
            const Generated g = gen_surface({16, p, seed});
            ProblemSpec spec;
            spec.positions = g.positions;
            spec.cutoff = g.cutoff;
            const NeighborResult r = run_engine(Method::Grid, spec, Kernel::Count);
            total += static_cast<double>(r.pair_visits);
            n_total += g.positions.size();
        }
        const double mean = total / static_cast<double>(n_total);
        const double budget = 9.0 * p;
        CAPTURE(p);
        CAPTURE(mean);
        CHECK(mean > 0.7 * budget);
        CHECK(mean < 1.3 * budget);
    }
}

TEST_CASE("uniform per-cell occupancy averages p") {
    for (int p : {1, 4}) {
        const Generated g = gen_uniform({8, p, 11});
        const Grid grid = grid_build(g.positions, g.cutoff, Aabb{{0, 0, 0}, {1, 1, 1}});
        const double mean =
            static_cast<double>(g.positions.size()) / static_cast<double>(grid.cell_count());
        CHECK(mean > 0.9 * p);
        CHECK(mean < 1.1 * p);
    }
}

TEST_CASE("generator rejects bad parameters") {
    CHECK_THROWS_AS(gen_uniform({0, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(gen_surface({8, 0, 1}), std::invalid_argument);
}
