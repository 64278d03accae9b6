#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "raycut/vec3.hpp"

namespace raycut {

// Axis-aligned bounding box, closed on all faces. Zero-extent boxes are
// legal and behave as planes/segments/points.
struct Aabb {
    Vec3 min{0, 0, 0};
    Vec3 max{0, 0, 0};

    bool valid() const { return min.x <= max.x && min.y <= max.y && min.z <= max.z; }

    bool contains(const Vec3& p) const {
        return min.x <= p.x && p.x <= max.x && min.y <= p.y && p.y <= max.y &&
               min.z <= p.z && p.z <= max.z;
    }

    bool contains(const Aabb& other) const {
        return min.x <= other.min.x && other.max.x <= max.x && min.y <= other.min.y &&
               other.max.y <= max.y && min.z <= other.min.z && other.max.z <= max.z;
    }

    void grow(const Vec3& p) {
        min = min3(min, p);
        max = max3(max, p);
    }

    void grow(const Aabb& b) {
        min = min3(min, b.min);
        max = max3(max, b.max);
    }

    Vec3 extent() const { return max - min; }
};

inline Aabb empty_aabb() {
    return {{3.4e38f, 3.4e38f, 3.4e38f}, {-3.4e38f, -3.4e38f, -3.4e38f}};
}

// Parametric ray segment: point(t) = origin + t * dir for t in
// [t_start, t_end]. dir is a unit vector; the encodings only ever produce
// axis-aligned directions but the tests below accept any unit vector.
struct RaySeg {
    Vec3 origin;
    Vec3 dir;
    float t_start = 0.0f;
    float t_end = 0.0f;

    Vec3 point_at(float t) const { return origin + t * dir; }
};

struct SpherePrim {
    Vec3 center;
    float radius = 0.0f;
    std::uint32_t particle_id = 0;
};

// One of the four triangles generated per particle by the squares encoding.
// prim_idx / 4 recovers the particle, prim_idx % 4 the triangle within it.
struct TrianglePrim {
    Vec3 v0, v1, v2;
    std::uint32_t prim_idx = 0;

    std::uint32_t particle_id() const { return prim_idx / 4; }
};

struct Hit {
    float t = 0.0f;
    std::uint32_t prim_idx = 0;
};

struct Interval {
    float enter = 0.0f;
    float exit = 0.0f;
};

// Slab test clipped to the segment's parameter range. All boundaries are
// inclusive: touching a face counts as entering. An axis with zero direction
// degenerates to containment of the origin coordinate in that slab.
std::optional<Interval> ray_aabb(const RaySeg& seg, const Aabb& box);

// Surface intersections of a segment with a sphere, ascending in t.
// A segment entirely inside the sphere reports no hits; a tangential graze
// (zero discriminant) reports one.
struct SphereHits {
    std::array<Hit, 2> hit{};
    int count = 0;
};
SphereHits ray_sphere(const RaySeg& seg, const SpherePrim& sphere);

// Intersection with the closed triangle region (edges and vertices count).
// Rays parallel to the triangle plane report no hit; the parallel rejection
// threshold on the determinant is 1e-9.
std::optional<Hit> ray_triangle(const RaySeg& seg, const TrianglePrim& tri);

}  // namespace raycut
