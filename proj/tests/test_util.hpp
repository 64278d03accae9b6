#pragma once

// Deterministic random helpers for the tests, seeded per test case so runs
// are reproducible.

#include <cmath>

#include "raycut/gen.hpp"
#include "raycut/geom.hpp"

namespace testutil {

using raycut::Pcg32;
using raycut::Vec3;

inline float uniform(Pcg32& rng, float lo, float hi) {
    return lo + (hi - lo) * rng.next_float();
}

inline Vec3 point_in_box(Pcg32& rng, float lo, float hi) {
    return {uniform(rng, lo, hi), uniform(rng, lo, hi), uniform(rng, lo, hi)};
}

inline Vec3 unit_vector(Pcg32& rng) {
    for (;;) {
        const Vec3 v = point_in_box(rng, -1.0f, 1.0f);
        const float len2 = raycut::length_squared(v);
        if (len2 > 0.01f && len2 <= 1.0f) {
            const float inv = 1.0f / std::sqrt(len2);
            return v * inv;
        }
    }
}

inline raycut::Aabb random_box(Pcg32& rng, float lo, float hi) {
    const Vec3 a = point_in_box(rng, lo, hi);
    const Vec3 b = point_in_box(rng, lo, hi);
    return {raycut::min3(a, b), raycut::max3(a, b)};
}

}  // namespace testutil
