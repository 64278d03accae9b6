#include "raycut/method_aabb.hpp"

#include <cmath>

#include "accumulate.hpp"

namespace raycut {

namespace {

// Outward rounding guards (> 1 ulp each way) so the containment region
// never loses a boundary pair to rounding of p +/- C.
inline float pad_down(float v) { return v - std::fabs(v) * 3e-7f - 1e-37f; }
inline float pad_up(float v) { return v + std::fabs(v) * 3e-7f + 1e-37f; }

}  // namespace

AabbScene aabb_scene_build(const ProblemSpec& spec) {
    AabbScene scene;
    const float c = spec.cutoff;
    scene.boxes.resize(spec.positions.size());
    for (std::size_t i = 0; i < spec.positions.size(); ++i) {
        const Vec3& p = spec.positions[i];
        scene.boxes[i].min = {pad_down(p.x - c), pad_down(p.y - c), pad_down(p.z - c)};
        scene.boxes[i].max = {pad_up(p.x + c), pad_up(p.y + c), pad_up(p.z + c)};
    }
    if (!scene.boxes.empty()) scene.bvh = bvh_build(scene.boxes, 4, BvhBuild::MortonOrdered);
    return scene;
}

void AabbEngine::build(const ProblemSpec& spec) {
    positions_ = spec.positions;
    cutoff_ = spec.cutoff;
    scene_ = aabb_scene_build(spec);
}

NeighborResult AabbEngine::compute(Kernel kernel, int threads) const {
    return detail::compute_over_targets(*this, kernel, cutoff_, threads);
}

}  // namespace raycut
