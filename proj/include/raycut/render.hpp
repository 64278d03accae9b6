#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "raycut/method_sphere.hpp"
#include "raycut/method_squares.hpp"

namespace raycut {

// Orthographic closest-hit depth image: one axis-aligned ray per pixel cast
// across the scene's bounding box along the given axis. Hit pixels shade by
// depth (nearer is brighter, never zero); background pixels are 0.
struct DepthImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  // row-major, 8-bit gray

    std::uint8_t at(int row, int col) const { return pixels[static_cast<std::size_t>(row) * width + col]; }
};

DepthImage render_depth(const SphereScene& scene, int axis, int resolution);
DepthImage render_depth(const SquaresScene& scene, int axis, int resolution);

// Binary PGM (P5), 8-bit.
void write_pgm(const std::string& path, const DepthImage& image);

}  // namespace raycut
