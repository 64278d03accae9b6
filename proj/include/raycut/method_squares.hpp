#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "raycut/bvh.hpp"
#include "raycut/engine.hpp"

namespace raycut {

// Double-squares encoding: each particle carries two x-facing squares of
// half-extent C/2 + eps in y/z, split into two triangles each, placed at
// x -/+ C/2. Each target casts four +x rays of length C + eps positioned at
// the square corners (offset +/- C/2 in y and z). Two particle boxes overlap
// iff some corner ray of one crosses a face square of the other; an index
// rule then accepts exactly one (ray, triangle) candidate per pair.
struct SquaresParams {
    float cutoff = 0.0f;
    float epsilon = 0.0f;
    float half_x = 0.0f;        // C/2, face plane offset
    float half_yz = 0.0f;       // C/2 + eps, square half-extent
    float ray_half_span = 0.0f; // (C + eps)/2, ray x-reach around the target
};

SquaresParams squares_params(float cutoff, float epsilon);

struct SquaresScene {
    SquaresParams params;
    std::vector<TrianglePrim> tris;  // 4 per particle, prim_idx = 4*id + k
    Bvh bvh;
};

SquaresScene squares_scene_build(const ProblemSpec& spec);

// Four +x segments with t in [0, C + eps]. The ray index encodes the corner
// offset signs (sy, sz): 0 -> (+,+), 1 -> (-,+), 2 -> (+,-), 3 -> (-,-).
// This map is the unique assignment consistent with the filter's equal-
// coordinate rules and is a normative constant of the artifact.
std::array<RaySeg, 4> squares_rays(const Vec3& target, const SquaresParams& params);

// Reconstructs the generating particle position from a face triangle:
// y and z are the midranges of the vertex coordinates, x is vertices[0].x
// shifted by +/- C/2 according to which face the triangle belongs to
// (prim_idx % 4 < 2 is the -x face).
Vec3 squares_recover_source(const TrianglePrim& tri, float cutoff);

// The ray index whose crossing counts for this pair. Coordinate equality in
// y/z means |delta| <= eps/2, which keeps every accepted crossing at least
// eps/2 inside the square: edge-exact hits are never load-bearing, only
// robustly rejected. Cases:
//   y and z differ  -> the corner ray pointing toward the source
//   y equal only    -> 0 if target.z < source.z else 2
//   z equal only    -> 0 if target.y < source.y else 1
//   both equal      -> 0
int squares_select_ray(const Vec3& target, const Vec3& source, float epsilon);

// When the target sits within eps/2 of the source's x plane its rays cross
// both faces; only the face turned toward the target counts. The rule is a
// pure sign test so both face hits of one pair always agree on a single
// winner, and the chosen face is crossed with at least eps/2 of margin.
inline bool squares_face_accept(float source_x_minus_target_x, bool neg_x_face) {
    return (source_x_minus_target_x >= 0.0f) == neg_x_face;
}

// Full acceptance rule for one triangle hit: cutoff test, face rule, and
// ray selection combined.
bool squares_filter_accept(const Vec3& target, const Vec3& source, int ray_idx,
                           bool neg_x_face, float cutoff, float epsilon);

class SquaresEngine : public NeighborEngine {
public:
    void build(const ProblemSpec& spec) override;
    NeighborResult compute(Kernel kernel, int threads) const override;
    Method method() const override { return Method::Squares; }

    std::size_t size() const { return positions_.size(); }

    template <class F>
    void neighbors_of(std::uint32_t target, F&& fn) const {
        const Vec3 tp = positions_[target];
        const float c2 = cutoff_ * cutoff_;
        const auto rays = squares_rays(tp, scene_.params);
        for (int ray_idx = 0; ray_idx < 4; ++ray_idx) {
            const RaySeg& seg = rays[ray_idx];
            bvh_traverse_anyhit(scene_.bvh, seg, [&](std::uint32_t prim) {
                const TrianglePrim& tri = scene_.tris[prim];
                const std::uint32_t pid = tri.particle_id();
                if (pid == target) return true;  // self-hits occur; indices filter them
                if (!ray_triangle(seg, tri)) return true;
                const std::uint32_t k = prim & 3u;
                if (k & 1u) {
                    // The two triangles of a face share the corner-to-corner
                    // diagonal; a crossing on it hits both. Count such a
                    // crossing through the even triangle only.
                    if (ray_triangle(seg, scene_.tris[prim - 1])) return true;
                }
                // Cutoff predicate and face rule use the stored particle
                // position so they are exact and identical for both faces;
                // the ray selection follows the recovered position.
                const Vec3 src = positions_[pid];
                const float d2 = dist_squared(tp, src);
                if (!(d2 < c2)) return true;
                if (!squares_face_accept(src.x - tp.x, k < 2u)) return true;
                const Vec3 recovered = squares_recover_source(tri, cutoff_);
                if (squares_select_ray(tp, recovered, scene_.params.epsilon) != ray_idx) {
                    return true;
                }
                fn(pid, d2);
                return true;
            });
        }
    }

    const SquaresScene& scene() const { return scene_; }

private:
    std::vector<Vec3> positions_;
    float cutoff_ = 0.0f;
    SquaresScene scene_;
};

}  // namespace raycut
