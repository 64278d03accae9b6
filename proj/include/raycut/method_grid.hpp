#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "raycut/engine.hpp"
#include "raycut/geom.hpp"

namespace raycut {

// Uniform grid of cells with width equal to the cutoff distance, built with
// a three-pass counting sort (histogram, exclusive prefix sum, scatter).
// Build cost is O(N + #cells); on sparse inputs the #cells term dominates.
struct Grid {
    Vec3 origin;
    float cell_width = 0.0f;
    int nx = 0, ny = 0, nz = 0;
    std::vector<std::uint32_t> cell_offsets;      // size nx*ny*nz + 1
    std::vector<std::uint32_t> particle_order;    // binned original indices
    std::vector<Vec3> binned_positions;           // positions in binned order

    std::size_t cell_count() const {
        return static_cast<std::size_t>(nx) * ny * nz;
    }

    // Clamped cell coordinates; positions on the far boundary map to the
    // last cell.
    void cell_of(const Vec3& p, int& cx, int& cy, int& cz) const;
    std::size_t cell_index(int cx, int cy, int cz) const {
        return (static_cast<std::size_t>(cz) * ny + cy) * nx + cx;
    }
};

Grid grid_build(std::span<const Vec3> positions, float cutoff, const Aabb& bounds);

// Applies fn(source_original_index, dist2) for every neighbor of the target,
// scanning the <= 27 cells around the target's cell.
template <class F>
void grid_neighbors_of(const Grid& grid, std::span<const Vec3> positions, std::uint32_t target,
                       float cutoff, F&& fn) {
    const Vec3 tp = positions[target];
    const float c2 = cutoff * cutoff;
    int cx, cy, cz;
    grid.cell_of(tp, cx, cy, cz);
    for (int dz = -1; dz <= 1; ++dz) {
        const int z = cz + dz;
        if (z < 0 || z >= grid.nz) continue;
        for (int dy = -1; dy <= 1; ++dy) {
            const int y = cy + dy;
            if (y < 0 || y >= grid.ny) continue;
            for (int dx = -1; dx <= 1; ++dx) {
                const int x = cx + dx;
                if (x < 0 || x >= grid.nx) continue;
                const std::size_t cell = grid.cell_index(x, y, z);
                const std::uint32_t first = grid.cell_offsets[cell];
                const std::uint32_t last = grid.cell_offsets[cell + 1];
                for (std::uint32_t s = first; s < last; ++s) {
                    const std::uint32_t src = grid.particle_order[s];
                    if (src == target) continue;
                    const float d2 = dist_squared(tp, grid.binned_positions[s]);
                    if (d2 < c2) fn(src, d2);
                }
            }
        }
    }
}

class GridEngine : public NeighborEngine {
public:
    void build(const ProblemSpec& spec) override;
    NeighborResult compute(Kernel kernel, int threads) const override;
    Method method() const override { return Method::Grid; }

    std::size_t size() const { return positions_.size(); }
    template <class F>
    void neighbors_of(std::uint32_t target, F&& fn) const {
        grid_neighbors_of(grid_, std::span<const Vec3>(positions_), target, cutoff_, fn);
    }

    const Grid& grid() const { return grid_; }

private:
    std::vector<Vec3> positions_;
    float cutoff_ = 0.0f;
    Grid grid_;
};

}  // namespace raycut
