#include "raycut/method_sphere.hpp"

#include <cmath>
#include <numbers>

#include "accumulate.hpp"

namespace raycut {

SphereParams sphere_params(float cutoff, float epsilon) {
    // A particle at distance C in the cube-corner direction projects to
    // C/sqrt(3) on each axis and sits C*sqrt(2)/sqrt(3) away from each axis
    // line; that distance fixes both the radius and the ray half-length.
    const float axis_reach = cutoff * std::numbers::sqrt2_v<float> / std::numbers::sqrt3_v<float>;
    return SphereParams{axis_reach + epsilon, axis_reach};
}

SphereScene sphere_scene_build(const ProblemSpec& spec) {
    SphereScene scene;
    scene.params = sphere_params(spec.cutoff, resolved_epsilon(spec));
    const float r = scene.params.radius;

    const std::size_t n = spec.positions.size();
    scene.spheres.reserve(n);
    std::vector<Aabb> boxes;
    boxes.reserve(n);
    // Enclosing boxes get a > 1 ulp outward guard against rounding of p +/- r.
    const auto pad_down = [](float v) { return v - std::fabs(v) * 3e-7f - 1e-37f; };
    const auto pad_up = [](float v) { return v + std::fabs(v) * 3e-7f + 1e-37f; };
    for (std::size_t i = 0; i < n; ++i) {
        const Vec3& p = spec.positions[i];
        scene.spheres.push_back(SpherePrim{p, r, static_cast<std::uint32_t>(i)});
        Aabb box;
        box.min = {pad_down(p.x - r), pad_down(p.y - r), pad_down(p.z - r)};
        box.max = {pad_up(p.x + r), pad_up(p.y + r), pad_up(p.z + r)};
        boxes.push_back(box);
    }
    if (!boxes.empty()) scene.bvh = bvh_build(boxes, 4, BvhBuild::MortonOrdered);
    return scene;
}

std::array<RaySeg, 3> sphere_rays(const Vec3& target, const SphereParams& params) {
    const float l = params.half_len;
    return {RaySeg{target, {1, 0, 0}, -l, l}, RaySeg{target, {0, 1, 0}, -l, l},
            RaySeg{target, {0, 0, 1}, -l, l}};
}

int closest_axis(float dax2, float day2, float daz2) {
    if (dax2 <= day2 && dax2 <= daz2) return 0;
    return day2 <= daz2 ? 1 : 2;
}

bool sphere_filter_accept(const Vec3& target, const Vec3& source, int ray_axis, float cutoff) {
    const float dx = target.x - source.x;
    const float dy = target.y - source.y;
    const float dz = target.z - source.z;
    const float dx2 = dx * dx, dy2 = dy * dy, dz2 = dz * dz;
    if (!(dx2 + dy2 + dz2 < cutoff * cutoff)) return false;
    return closest_axis(dy2 + dz2, dx2 + dz2, dx2 + dy2) == ray_axis;
}

void SphereEngine::build(const ProblemSpec& spec) {
    positions_ = spec.positions;
    cutoff_ = spec.cutoff;
    scene_ = sphere_scene_build(spec);
}

NeighborResult SphereEngine::compute(Kernel kernel, int threads) const {
    return detail::compute_over_targets(*this, kernel, cutoff_, threads);
}

}  // namespace raycut
