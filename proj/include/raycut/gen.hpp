#pragma once

#include <cstdint>
#include <vector>

#include "raycut/vec3.hpp"

namespace raycut {

// PCG-XSH-RR 32-bit generator (64-bit LCG state, fixed odd increment).
// Chosen over std::mt19937 + distributions because its output is defined
// bit-for-bit, so the generated point sets are reproducible across
// implementations from the seed alone.
struct Pcg32 {
    std::uint64_t state = 0;

    explicit Pcg32(std::uint64_t seed) {
        state = 0;
        next();
        state += seed;
        next();
    }

    std::uint32_t next() {
        const std::uint64_t old = state;
        state = old * 6364136223846793005ull + 1442695040888963407ull;
        const auto xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
        const auto rot = static_cast<std::uint32_t>(old >> 59u);
        return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
    }

    // Uniform in [0, 1) with 24 bits of mantissa.
    float next_float() { return static_cast<float>(next() >> 8) * 0x1.0p-24f; }

    // Uniform in [0, 1) with 53 bits, from two draws (high word first).
    double next_double() {
        const std::uint64_t hi = next();
        const std::uint64_t lo = next();
        return static_cast<double>(((hi << 32) | lo) >> 11) * 0x1.0p-53;
    }
};

struct Generated {
    std::vector<Vec3> positions;
    float cutoff = 0.0f;
};

// Uniform workload: N = p * beta^3 points drawn i.i.d. from [0,1)^3 with
// cutoff 1/beta, so the matching grid has beta^3 cells with p particles per
// cell on average.
struct UniformConfig {
    int beta = 2;
    int p = 1;
    std::uint64_t seed = 1;
};
Generated gen_uniform(const UniformConfig& cfg);

// Sphere-surface workload: N = p * alpha^3 points on the unit sphere. The
// cutoff is sized so each particle has about 9*p neighbors:
//   expected = 9*p, coef = clamp(1 - 2*expected/N, -1, 1), cutoff = acos(coef)
struct SurfaceConfig {
    int alpha = 8;
    int p = 1;
    std::uint64_t seed = 1;
};
Generated gen_surface(const SurfaceConfig& cfg);
float surface_cutoff(int alpha, int p);

}  // namespace raycut
