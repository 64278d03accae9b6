#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "raycut/geom.hpp"

namespace raycut {

// 30-bit Morton code: 10 bits per axis quantized over the given box,
// x in the least significant interleave position.
std::uint32_t morton30(const Vec3& p, const Aabb& box);

struct MortonSorted {
    std::vector<Vec3> positions;       // reordered by ascending Morton code
    std::vector<std::uint32_t> perm;   // perm[new_index] = original index
};

// Stable sort by Morton code over the points' own bounding box, so results
// computed in sorted space can be mapped back to original indices exactly.
MortonSorted morton_sort(std::span<const Vec3> positions);

}  // namespace raycut
