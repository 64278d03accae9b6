#include "raycut/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace raycut {

NeighborResult brute_force(const ProblemSpec& spec, Kernel kernel, std::size_t cap) {
    const std::size_t n = spec.positions.size();
    if (n > cap) throw std::invalid_argument("brute_force: particle count exceeds the cap");

    NeighborResult r;
    r.kernel = kernel;
    r.counts.assign(n, 0);
    if (kernel == Kernel::Record) r.lists.resize(n);
    if (kernel == Kernel::Potential) r.potentials.assign(n, 0.0);

    const float c2 = spec.cutoff * spec.cutoff;
    for (std::size_t t = 0; t < n; ++t) {
        for (std::size_t s = 0; s < n; ++s) {
            if (s == t) continue;
            const float d2 = dist_squared(spec.positions[t], spec.positions[s]);
            if (!(d2 < c2)) continue;
            ++r.counts[t];
            ++r.pair_visits;
            if (kernel == Kernel::Record) {
                r.lists[t].push_back(static_cast<std::uint32_t>(s));
            } else if (kernel == Kernel::Potential) {
                const double d = std::sqrt(static_cast<double>(d2));
                const double w = 1.0 - d / static_cast<double>(spec.cutoff);
                r.potentials[t] += w * w;
            }
        }
        // The inner loop runs in ascending source order, so Record lists come
        // out sorted.
    }
    return r;
}

void OracleEngine::build(const ProblemSpec& spec) { spec_ = spec; }

NeighborResult OracleEngine::compute(Kernel kernel, int /*threads*/) const {
    return brute_force(spec_, kernel);
}

}  // namespace raycut
