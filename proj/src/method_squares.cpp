#include "raycut/method_squares.hpp"

#include <algorithm>
#include <cmath>

#include "accumulate.hpp"

namespace raycut {

SquaresParams squares_params(float cutoff, float epsilon) {
    SquaresParams p;
    p.cutoff = cutoff;
    p.epsilon = epsilon;
    p.half_x = 0.5f * cutoff;
    p.half_yz = 0.5f * cutoff + epsilon;
    p.ray_half_span = 0.5f * (cutoff + epsilon);
    return p;
}

SquaresScene squares_scene_build(const ProblemSpec& spec) {
    SquaresScene scene;
    scene.params = squares_params(spec.cutoff, resolved_epsilon(spec));
    const float hx = scene.params.half_x;
    const float hyz = scene.params.half_yz;

    const std::size_t n = spec.positions.size();
    scene.tris.reserve(4 * n);
    std::vector<Aabb> boxes;
    boxes.reserve(4 * n);

    for (std::size_t i = 0; i < n; ++i) {
        const Vec3& p = spec.positions[i];
        // Corner k: bit 0 picks the z sign, bit 1 the y sign, bit 2 the x
        // sign. Corners 0..3 form the -x face, 4..7 the +x face.
        Vec3 corners[8];
        for (int k = 0; k < 8; ++k) {
            corners[k].z = p.z + ((k & 1) ? hyz : -hyz);
            corners[k].y = p.y + ((k & 2) ? hyz : -hyz);
            corners[k].x = p.x + ((k & 4) ? hx : -hx);
        }
        const int face_tris[4][3] = {{0, 1, 3}, {0, 2, 3}, {4, 5, 7}, {4, 6, 7}};
        for (int k = 0; k < 4; ++k) {
            TrianglePrim tri;
            tri.v0 = corners[face_tris[k][0]];
            tri.v1 = corners[face_tris[k][1]];
            tri.v2 = corners[face_tris[k][2]];
            tri.prim_idx = static_cast<std::uint32_t>(4 * i + k);
            scene.tris.push_back(tri);
            Aabb box = empty_aabb();
            box.grow(tri.v0);
            box.grow(tri.v1);
            box.grow(tri.v2);
            boxes.push_back(box);
        }
    }
    if (!boxes.empty()) scene.bvh = bvh_build(boxes, 4, BvhBuild::MortonOrdered);
    return scene;
}

std::array<RaySeg, 4> squares_rays(const Vec3& target, const SquaresParams& params) {
    const float span = 2.0f * params.ray_half_span;
    const float x0 = target.x - params.ray_half_span;
    const float off = params.half_x;  // corner offsets sit strictly inside the squares
    const Vec3 dir{1, 0, 0};
    return {
        RaySeg{{x0, target.y + off, target.z + off}, dir, 0.0f, span},  // (+,+)
        RaySeg{{x0, target.y - off, target.z + off}, dir, 0.0f, span},  // (-,+)
        RaySeg{{x0, target.y + off, target.z - off}, dir, 0.0f, span},  // (+,-)
        RaySeg{{x0, target.y - off, target.z - off}, dir, 0.0f, span},  // (-,-)
    };
}

Vec3 squares_recover_source(const TrianglePrim& tri, float cutoff) {
    Vec3 q;
    q.y = (std::max({tri.v0.y, tri.v1.y, tri.v2.y}) + std::min({tri.v0.y, tri.v1.y, tri.v2.y})) *
          0.5f;
    q.z = (std::max({tri.v0.z, tri.v1.z, tri.v2.z}) + std::min({tri.v0.z, tri.v1.z, tri.v2.z})) *
          0.5f;
    if (tri.prim_idx % 4 < 2) {
        q.x = tri.v0.x + 0.5f * cutoff;  // -x face
    } else {
        q.x = tri.v0.x - 0.5f * cutoff;  // +x face
    }
    return q;
}

int squares_select_ray(const Vec3& target, const Vec3& source, float epsilon) {
    const float dy = source.y - target.y;
    const float dz = source.z - target.z;
    const float tol = 0.5f * epsilon;
    const bool y_eq = std::fabs(dy) <= tol;
    const bool z_eq = std::fabs(dz) <= tol;
    if (!y_eq && !z_eq) {
        // Unique toward-source corner: (+,+)=0, (-,+)=1, (+,-)=2, (-,-)=3.
        return (dy > 0.0f ? 0 : 1) + (dz > 0.0f ? 0 : 2);
    }
    if (y_eq && !z_eq) return dz > 0.0f ? 0 : 2;
    if (!y_eq && z_eq) return dy > 0.0f ? 0 : 1;
    return 0;
}

bool squares_filter_accept(const Vec3& target, const Vec3& source, int ray_idx,
                           bool neg_x_face, float cutoff, float epsilon) {
    if (!(dist_squared(target, source) < cutoff * cutoff)) return false;
    if (!squares_face_accept(source.x - target.x, neg_x_face)) return false;
    return squares_select_ray(target, source, epsilon) == ray_idx;
}

void SquaresEngine::build(const ProblemSpec& spec) {
    positions_ = spec.positions;
    cutoff_ = spec.cutoff;
    scene_ = squares_scene_build(spec);
}

NeighborResult SquaresEngine::compute(Kernel kernel, int threads) const {
    return detail::compute_over_targets(*this, kernel, cutoff_, threads);
}

}  // namespace raycut
