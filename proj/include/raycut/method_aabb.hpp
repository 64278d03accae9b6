#pragma once

#include <cstdint>
#include <vector>

#include "raycut/bvh.hpp"
#include "raycut/engine.hpp"

namespace raycut {

// Custom-box encoding: one axis-aligned box of half-extent C per particle
// and a point query per target. The box containment region is a strict
// superset of the cutoff ball, so the visitor applies the distance test and
// the interaction directly; there is no separate filtering phase.
struct AabbScene {
    std::vector<Aabb> boxes;  // primitive index == particle index
    Bvh bvh;
};

AabbScene aabb_scene_build(const ProblemSpec& spec);

class AabbEngine : public NeighborEngine {
public:
    void build(const ProblemSpec& spec) override;
    NeighborResult compute(Kernel kernel, int threads) const override;
    Method method() const override { return Method::CustomAabb; }

    std::size_t size() const { return positions_.size(); }
    template <class F>
    void neighbors_of(std::uint32_t target, F&& fn) const {
        // Source positions are read back from the shared particle array by
        // primitive index; the scene stores no per-primitive payload.
        const Vec3 tp = positions_[target];
        const float c2 = cutoff_ * cutoff_;
        bvh_traverse_point(scene_.bvh, tp, [&](std::uint32_t src) {
            if (src != target) {
                const float d2 = dist_squared(tp, positions_[src]);
                if (d2 < c2) fn(src, d2);
            }
            return true;
        });
    }

    const AabbScene& scene() const { return scene_; }

private:
    std::vector<Vec3> positions_;
    float cutoff_ = 0.0f;
    AabbScene scene_;
};

}  // namespace raycut
