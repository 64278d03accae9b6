#include "raycut/render.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace raycut {

namespace {

// Shared pixel loop over any closest-hit intersector.
template <class Intersect>
DepthImage render_axis(const Bvh& bvh, int axis, int resolution, Intersect&& intersect) {
    if (axis < 0 || axis > 2) throw std::invalid_argument("render: axis must be 0, 1, or 2");
    if (resolution < 1) throw std::invalid_argument("render: resolution must be >= 1");

    DepthImage img;
    img.width = resolution;
    img.height = resolution;
    img.pixels.assign(static_cast<std::size_t>(resolution) * resolution, 0);
    if (bvh.empty()) return img;

    const Aabb& box = bvh.nodes[0].box;
    const int u_axis = axis == 0 ? 1 : 0;            // image columns
    const int v_axis = axis == 2 ? 1 : 2;            // image rows
    const float depth = box.max[axis] - box.min[axis];
    const float pad = 1e-3f * (depth > 0.0f ? depth : 1.0f);
    const float t0 = -pad;
    const float t1 = depth + pad;

    Vec3 dir{0, 0, 0};
    dir[axis] = 1.0f;
    for (int row = 0; row < resolution; ++row) {
        for (int col = 0; col < resolution; ++col) {
            Vec3 origin;
            origin[axis] = box.min[axis];
            origin[u_axis] = box.min[u_axis] +
                             (col + 0.5f) / resolution * (box.max[u_axis] - box.min[u_axis]);
            origin[v_axis] = box.min[v_axis] +
                             (row + 0.5f) / resolution * (box.max[v_axis] - box.min[v_axis]);
            const RaySeg seg{origin, dir, t0, t1};
            if (auto hit = bvh_closest_hit(bvh, seg, intersect)) {
                const float norm = std::clamp((hit->t - t0) / (t1 - t0), 0.0f, 1.0f);
                img.pixels[static_cast<std::size_t>(row) * resolution + col] =
                    static_cast<std::uint8_t>(255.0f - 230.0f * norm);
            }
        }
    }
    return img;
}

}  // namespace

DepthImage render_depth(const SphereScene& scene, int axis, int resolution) {
    return render_axis(scene.bvh, axis, resolution,
                       [&](std::uint32_t prim, const RaySeg& seg) -> std::optional<Hit> {
                           const SphereHits hits = ray_sphere(seg, scene.spheres[prim]);
                           if (hits.count == 0) return std::nullopt;
                           return hits.hit[0];
                       });
}

DepthImage render_depth(const SquaresScene& scene, int axis, int resolution) {
    return render_axis(scene.bvh, axis, resolution,
                       [&](std::uint32_t prim, const RaySeg& seg) {
                           return ray_triangle(seg, scene.tris[prim]);
                       });
}

void write_pgm(const std::string& path, const DepthImage& image) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "P5\n" << image.width << " " << image.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(image.pixels.data()),
              static_cast<std::streamsize>(image.pixels.size()));
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace raycut
