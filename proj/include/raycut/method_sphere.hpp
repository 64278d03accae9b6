#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "raycut/bvh.hpp"
#include "raycut/engine.hpp"

namespace raycut {

// Sphere encoding: one sphere of radius r = C*sqrt(2)/sqrt(3) + eps per
// particle and three axis-aligned rays of half-length l = C*sqrt(2)/sqrt(3)
// per target. r = l + eps guarantees every in-cutoff pair produces a surface
// hit on at least one ray as long as particles stay farther apart than eps;
// the closest-axis rule then accepts exactly one (ray, sphere) candidate.
struct SphereParams {
    float radius = 0.0f;    // r = C * sqrt(2/3) + eps
    float half_len = 0.0f;  // l = C * sqrt(2/3); r > l so a sphere can never
                            // swallow all three rays of a distant target
};

SphereParams sphere_params(float cutoff, float epsilon);

struct SphereScene {
    SphereParams params;
    std::vector<SpherePrim> spheres;  // primitive index == particle index
    Bvh bvh;
};

SphereScene sphere_scene_build(const ProblemSpec& spec);

// Three symmetric segments through the target, one per coordinate axis,
// t in [-l, +l]. Directions are +x, +y, +z for axis 0, 1, 2.
std::array<RaySeg, 3> sphere_rays(const Vec3& target, const SphereParams& params);

// Axis whose line through the target passes closest to the source, from the
// per-axis squared perpendicular distances {dy2+dz2, dx2+dz2, dx2+dy2}.
// Ties resolve by the fixed priority x < y < z; tests must use the same
// comparator.
int closest_axis(float dax2, float day2, float daz2);

// Acceptance rule for one (ray, sphere-overlap) candidate: the pair must be
// within the cutoff and the ray's axis must be the closest axis.
bool sphere_filter_accept(const Vec3& target, const Vec3& source, int ray_axis, float cutoff);

class SphereEngine : public NeighborEngine {
public:
    void build(const ProblemSpec& spec) override;
    NeighborResult compute(Kernel kernel, int threads) const override;
    Method method() const override { return Method::Sphere; }

    std::size_t size() const { return positions_.size(); }

    template <class F>
    void neighbors_of(std::uint32_t target, F&& fn) const {
        const Vec3 tp = positions_[target];
        const float c2 = cutoff_ * cutoff_;
        const auto rays = sphere_rays(tp, scene_.params);
        for (int axis = 0; axis < 3; ++axis) {
            const RaySeg& seg = rays[axis];
            bvh_traverse_anyhit(scene_.bvh, seg, [&](std::uint32_t prim) {
                const SpherePrim& s = scene_.spheres[prim];
                if (s.particle_id == target) return true;
                // One candidate per (ray, sphere): the closest in-interval
                // surface crossing. Processing the second root as well would
                // double-count pairs close to the cutoff along cube-diagonal
                // directions, where both crossings fall inside the segment.
                if (ray_sphere(seg, s).count == 0) return true;
                const float dx = tp.x - s.center.x;
                const float dy = tp.y - s.center.y;
                const float dz = tp.z - s.center.z;
                const float dx2 = dx * dx, dy2 = dy * dy, dz2 = dz * dz;
                const float d2 = dx2 + dy2 + dz2;
                if (d2 < c2 && closest_axis(dy2 + dz2, dx2 + dz2, dx2 + dy2) == axis) {
                    fn(s.particle_id, d2);
                }
                return true;
            });
        }
    }

    const SphereScene& scene() const { return scene_; }

private:
    std::vector<Vec3> positions_;
    float cutoff_ = 0.0f;
    SphereScene scene_;
};

}  // namespace raycut
