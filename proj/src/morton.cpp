#include "raycut/morton.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace raycut {

namespace {

// Spread the low 10 bits of v so they occupy every third bit.
std::uint32_t spread10(std::uint32_t v) {
    v &= 0x3ffu;
    v = (v | (v << 16)) & 0x030000ffu;
    v = (v | (v << 8)) & 0x0300f00fu;
    v = (v | (v << 4)) & 0x030c30c3u;
    v = (v | (v << 2)) & 0x09249249u;
    return v;
}

std::uint32_t quantize10(float value, float lo, float ext) {
    if (ext <= 0.0f) return 0;
    const float norm = (value - lo) / ext;
    const std::int32_t cell = static_cast<std::int32_t>(norm * 1024.0f);
    return static_cast<std::uint32_t>(std::clamp(cell, 0, 1023));
}

}  // namespace

std::uint32_t morton30(const Vec3& p, const Aabb& box) {
    const Vec3 ext = box.extent();
    const std::uint32_t ix = quantize10(p.x, box.min.x, ext.x);
    const std::uint32_t iy = quantize10(p.y, box.min.y, ext.y);
    const std::uint32_t iz = quantize10(p.z, box.min.z, ext.z);
    return spread10(ix) | (spread10(iy) << 1) | (spread10(iz) << 2);
}

MortonSorted morton_sort(std::span<const Vec3> positions) {
    Aabb box = empty_aabb();
    for (const Vec3& p : positions) box.grow(p);

    const std::size_t n = positions.size();
    std::vector<std::uint32_t> codes(n);
    for (std::size_t i = 0; i < n; ++i) codes[i] = morton30(positions[i], box);

    MortonSorted out;
    out.perm.resize(n);
    std::iota(out.perm.begin(), out.perm.end(), 0u);
    std::stable_sort(out.perm.begin(), out.perm.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return codes[a] < codes[b]; });

    out.positions.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.positions[i] = positions[out.perm[i]];
    return out;
}

}  // namespace raycut
