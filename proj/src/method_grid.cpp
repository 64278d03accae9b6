#include "raycut/method_grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "accumulate.hpp"

namespace raycut {

void Grid::cell_of(const Vec3& p, int& cx, int& cy, int& cz) const {
    cx = std::clamp(static_cast<int>(std::floor((p.x - origin.x) / cell_width)), 0, nx - 1);
    cy = std::clamp(static_cast<int>(std::floor((p.y - origin.y) / cell_width)), 0, ny - 1);
    cz = std::clamp(static_cast<int>(std::floor((p.z - origin.z) / cell_width)), 0, nz - 1);
}

Grid grid_build(std::span<const Vec3> positions, float cutoff, const Aabb& bounds) {
    Grid grid;
    grid.origin = bounds.min;
    grid.cell_width = cutoff;
    const Vec3 ext = bounds.extent();
    grid.nx = std::max(1, static_cast<int>(std::ceil(static_cast<double>(ext.x) / cutoff)));
    grid.ny = std::max(1, static_cast<int>(std::ceil(static_cast<double>(ext.y) / cutoff)));
    grid.nz = std::max(1, static_cast<int>(std::ceil(static_cast<double>(ext.z) / cutoff)));

    const std::size_t n = positions.size();
    const std::size_t ncells = grid.cell_count();

    // Pass 1: histogram of particles per cell.
    std::vector<std::uint32_t> cell_of_particle(n);
    grid.cell_offsets.assign(ncells + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (!finite(positions[i])) throw std::invalid_argument("grid_build: non-finite position");
        int cx, cy, cz;
        grid.cell_of(positions[i], cx, cy, cz);
        const std::size_t cell = grid.cell_index(cx, cy, cz);
        cell_of_particle[i] = static_cast<std::uint32_t>(cell);
        ++grid.cell_offsets[cell + 1];
    }

    // Pass 2: exclusive prefix sum over all cells.
    for (std::size_t c = 0; c < ncells; ++c) {
        grid.cell_offsets[c + 1] += grid.cell_offsets[c];
    }

    // Pass 3: stable scatter into binned order.
    grid.particle_order.resize(n);
    grid.binned_positions.resize(n);
    std::vector<std::uint32_t> next(grid.cell_offsets.begin(), grid.cell_offsets.end() - 1);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint32_t slot = next[cell_of_particle[i]]++;
        grid.particle_order[slot] = static_cast<std::uint32_t>(i);
        grid.binned_positions[slot] = positions[i];
    }
    return grid;
}

void GridEngine::build(const ProblemSpec& spec) {
    positions_ = spec.positions;
    cutoff_ = spec.cutoff;
    if (positions_.empty()) {
        grid_ = Grid{};
        return;
    }
    Aabb bounds = empty_aabb();
    for (const Vec3& p : positions_) bounds.grow(p);
    grid_ = grid_build(positions_, cutoff_, bounds);
}

NeighborResult GridEngine::compute(Kernel kernel, int threads) const {
    return detail::compute_over_targets(*this, kernel, cutoff_, threads);
}

}  // namespace raycut
