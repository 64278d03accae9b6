#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace raycut {

inline int resolve_threads(int threads) {
    if (threads > 0) return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

// Static range split over [0, n). Chunks are contiguous and disjoint, so a
// body that only writes per-index state needs no synchronization and the
// result is independent of the thread count.
template <class Body>
void parallel_for(std::size_t n, int threads, Body&& body) {
    threads = resolve_threads(threads);
    if (threads <= 1 || n < 2) {
        body(std::size_t{0}, n);
        return;
    }
    const std::size_t t = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
    std::vector<std::thread> pool;
    pool.reserve(t);
    const std::size_t chunk = (n + t - 1) / t;
    for (std::size_t k = 0; k < t; ++k) {
        const std::size_t begin = k * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&body, begin, end] { body(begin, end); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace raycut
