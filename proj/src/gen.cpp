#include "raycut/gen.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

namespace raycut {

namespace {

// Hash grid used to enforce the minimum pairwise separation while
// generating; cells have width min_dist so only 27 cells need checking.
class SeparationIndex {
public:
    explicit SeparationIndex(float min_dist) : inv_cell_(1.0f / min_dist), d2_(min_dist * min_dist) {}

    bool too_close(const Vec3& p) const {
        const std::int64_t cx = cell(p.x), cy = cell(p.y), cz = cell(p.z);
        for (std::int64_t z = cz - 1; z <= cz + 1; ++z)
            for (std::int64_t y = cy - 1; y <= cy + 1; ++y)
                for (std::int64_t x = cx - 1; x <= cx + 1; ++x) {
                    const auto it = cells_.find(key(x, y, z));
                    if (it == cells_.end()) continue;
                    for (const Vec3& q : it->second) {
                        if (dist_squared(p, q) <= d2_) return true;
                    }
                }
        return false;
    }

    void insert(const Vec3& p) {
        cells_[key(cell(p.x), cell(p.y), cell(p.z))].push_back(p);
    }

private:
    std::int64_t cell(float v) const { return static_cast<std::int64_t>(std::floor(v * inv_cell_)); }

    static std::uint64_t key(std::int64_t x, std::int64_t y, std::int64_t z) {
        std::uint64_t h = static_cast<std::uint64_t>(x) * 0x9e3779b97f4a7c15ull;
        h ^= static_cast<std::uint64_t>(y) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h ^= static_cast<std::uint64_t>(z) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }

    float inv_cell_;
    float d2_;
    std::unordered_map<std::uint64_t, std::vector<Vec3>> cells_;
};

// Draws points until `make_point` yields one farther than min_dist from all
// accepted points; gives up after 100 attempts for a single slot.
template <class MakePoint>
std::vector<Vec3> generate_separated(std::size_t n, float min_dist, MakePoint&& make_point) {
    std::vector<Vec3> points;
    points.reserve(n);
    SeparationIndex index(min_dist);
    for (std::size_t i = 0; i < n; ++i) {
        int attempts = 0;
        for (;;) {
            const Vec3 p = make_point();
            if (!index.too_close(p)) {
                index.insert(p);
                points.push_back(p);
                break;
            }
            if (++attempts >= 100) {
                throw std::runtime_error("generator: cannot place a point with the required separation");
            }
        }
    }
    return points;
}

}  // namespace

Generated gen_uniform(const UniformConfig& cfg) {
    if (cfg.beta < 1 || cfg.p < 1) throw std::invalid_argument("gen_uniform: beta and p must be >= 1");
    const std::size_t n = static_cast<std::size_t>(cfg.p) * cfg.beta * cfg.beta * cfg.beta;
    const float cutoff = 1.0f / static_cast<float>(cfg.beta);

    Pcg32 rng(cfg.seed);
    Generated out;
    out.cutoff = cutoff;
    out.positions = generate_separated(n, cutoff * 1e-4f, [&rng] {
        // One point per iteration: x, y, z in that order.
        Vec3 p;
        p.x = rng.next_float();
        p.y = rng.next_float();
        p.z = rng.next_float();
        return p;
    });
    return out;
}

float surface_cutoff(int alpha, int p) {
    const double n = static_cast<double>(p) * alpha * alpha * alpha;
    const double expected = 9.0 * p;
    const double coef = std::clamp(1.0 - 2.0 * expected / n, -1.0, 1.0);
    return static_cast<float>(std::acos(coef));
}

Generated gen_surface(const SurfaceConfig& cfg) {
    if (cfg.alpha < 1 || cfg.p < 1) throw std::invalid_argument("gen_surface: alpha and p must be >= 1");
    const std::size_t n = static_cast<std::size_t>(cfg.p) * cfg.alpha * cfg.alpha * cfg.alpha;

    Generated out;
    out.cutoff = surface_cutoff(cfg.alpha, cfg.p);

    Pcg32 rng(cfg.seed);
    out.positions = generate_separated(n, out.cutoff * 1e-4f, [&rng] {
        // Uniform on the unit sphere: theta = 2*pi*u, phi = acos(1 - 2*v).
        const double theta = 2.0 * std::numbers::pi * rng.next_double();
        const double phi = std::acos(1.0 - 2.0 * rng.next_double());
        Vec3 p;
        p.x = static_cast<float>(std::sin(phi) * std::cos(theta));
        p.y = static_cast<float>(std::sin(phi) * std::sin(theta));
        p.z = static_cast<float>(std::cos(phi));
        return p;
    });
    return out;
}

}  // namespace raycut
