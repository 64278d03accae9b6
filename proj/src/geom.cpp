#include "raycut/geom.hpp"

#include <algorithm>
#include <cmath>

namespace raycut {

std::optional<Interval> ray_aabb(const RaySeg& seg, const Aabb& box) {
    float t0 = seg.t_start;
    float t1 = seg.t_end;
    for (int axis = 0; axis < 3; ++axis) {
        const float o = seg.origin[axis];
        const float d = seg.dir[axis];
        if (d == 0.0f) {
            if (o < box.min[axis] || o > box.max[axis]) return std::nullopt;
            continue;
        }
        float ta = (box.min[axis] - o) / d;
        float tb = (box.max[axis] - o) / d;
        if (ta > tb) std::swap(ta, tb);
        t0 = std::max(t0, ta);
        t1 = std::min(t1, tb);
        if (t0 > t1) return std::nullopt;
    }
    return Interval{t0, t1};
}

SphereHits ray_sphere(const RaySeg& seg, const SpherePrim& sphere) {
    // |origin + t*dir - center|^2 = r^2 with |dir| = 1:
    //   t^2 + 2*b*t + c0 = 0
    const Vec3 oc = seg.origin - sphere.center;
    const float b = dot(oc, seg.dir);
    const float c0 = dot(oc, oc) - sphere.radius * sphere.radius;
    const float disc = b * b - c0;

    SphereHits out;
    if (disc < 0.0f) return out;

    const float sq = std::sqrt(disc);
    const float roots[2] = {-b - sq, -b + sq};
    const int nroots = disc == 0.0f ? 1 : 2;
    for (int i = 0; i < nroots; ++i) {
        if (roots[i] >= seg.t_start && roots[i] <= seg.t_end) {
            out.hit[out.count++] = Hit{roots[i], sphere.particle_id};
        }
    }
    return out;
}

std::optional<Hit> ray_triangle(const RaySeg& seg, const TrianglePrim& tri) {
    // Moller-Trumbore with inclusive barycentric bounds.
    const Vec3 edge1 = tri.v1 - tri.v0;
    const Vec3 edge2 = tri.v2 - tri.v0;
    const Vec3 pvec = cross(seg.dir, edge2);
    const float det = dot(edge1, pvec);
    if (std::fabs(det) <= 1e-9f) return std::nullopt;

    const float inv_det = 1.0f / det;
    const Vec3 tvec = seg.origin - tri.v0;
    const float u = dot(tvec, pvec) * inv_det;
    if (u < 0.0f || u > 1.0f) return std::nullopt;

    const Vec3 qvec = cross(tvec, edge1);
    const float v = dot(seg.dir, qvec) * inv_det;
    if (v < 0.0f || u + v > 1.0f) return std::nullopt;

    const float t = dot(edge2, qvec) * inv_det;
    if (t < seg.t_start || t > seg.t_end) return std::nullopt;
    return Hit{t, tri.prim_idx};
}

}  // namespace raycut
