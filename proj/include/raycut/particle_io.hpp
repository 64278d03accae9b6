#pragma once

#include <string>
#include <vector>

#include "raycut/vec3.hpp"

namespace raycut {

// Particle file format: UTF-8 CSV with header "id,x,y,z", one particle per
// line, positions in simulation units. Values round-trip float exactly.
void save_particles(const std::string& path, const std::vector<Vec3>& positions);
std::vector<Vec3> load_particles(const std::string& path);

}  // namespace raycut
