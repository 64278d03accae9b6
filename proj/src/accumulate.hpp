#pragma once

// Internal helper shared by the neighbor engines: kernel accumulation with
// per-target-private state. Not part of the public headers.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "raycut/engine.hpp"
#include "raycut/parallel.hpp"

namespace raycut::detail {

struct Accumulators {
    Kernel kernel;
    float cutoff;
    std::vector<std::uint32_t> counts;
    std::vector<std::vector<std::uint32_t>> lists;
    std::vector<double> potentials;

    Accumulators(Kernel k, std::size_t n, float c) : kernel(k), cutoff(c), counts(n, 0) {
        if (kernel == Kernel::Record) lists.resize(n);
        if (kernel == Kernel::Potential) potentials.assign(n, 0.0);
    }

    // One accepted interaction. dist2 has already passed the cutoff test.
    void accept(std::uint32_t target, std::uint32_t source, float dist2) {
        ++counts[target];
        if (kernel == Kernel::Record) {
            lists[target].push_back(source);
        } else if (kernel == Kernel::Potential) {
            const float d = std::sqrt(dist2);
            const float w = 1.0f - d / cutoff;
            potentials[target] += static_cast<double>(w) * static_cast<double>(w);
        }
    }

    NeighborResult finish() {
        NeighborResult r;
        r.kernel = kernel;
        r.pair_visits = 0;
        for (std::uint32_t c : counts) r.pair_visits += c;
        if (kernel == Kernel::Record) {
            for (auto& l : lists) std::sort(l.begin(), l.end());
        }
        r.counts = std::move(counts);
        r.lists = std::move(lists);
        r.potentials = std::move(potentials);
        return r;
    }
};

// Runs `neighbors_of(target, accept)` for every target, split over threads.
// EngineT must provide: size_t size() const, and
// template <class F> void neighbors_of(uint32_t target, F&& accept) const
// where accept(source, dist2) is called once per accepted pair endpoint.
template <class EngineT>
NeighborResult compute_over_targets(const EngineT& engine, Kernel kernel, float cutoff,
                                    int threads) {
    const std::size_t n = engine.size();
    Accumulators acc(kernel, n, cutoff);
    parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t t = begin; t < end; ++t) {
            const auto target = static_cast<std::uint32_t>(t);
            engine.neighbors_of(target, [&](std::uint32_t source, float dist2) {
                acc.accept(target, source, dist2);
            });
        }
    });
    return acc.finish();
}

}  // namespace raycut::detail
