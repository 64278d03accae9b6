#include "raycut/particle_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace raycut {

void save_particles(const std::string& path, const std::vector<Vec3>& positions) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "id,x,y,z\n";
    char line[128];
    for (std::size_t i = 0; i < positions.size(); ++i) {
        const Vec3& p = positions[i];
        std::snprintf(line, sizeof line, "%zu,%.9g,%.9g,%.9g\n", i, p.x, p.y, p.z);
        out << line;
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<Vec3> load_particles(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::string line;
    if (!std::getline(in, line) || line != "id,x,y,z") {
        throw std::runtime_error("bad particle file header in " + path);
    }
    std::vector<Vec3> positions;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        unsigned long id = 0;
        Vec3 p;
        if (std::sscanf(line.c_str(), "%lu,%f,%f,%f", &id, &p.x, &p.y, &p.z) != 4) {
            throw std::runtime_error("bad particle line " + std::to_string(lineno) + " in " + path);
        }
        positions.push_back(p);
    }
    return positions;
}

}  // namespace raycut
