#pragma once

#include <cstddef>

#include "raycut/engine.hpp"

namespace raycut {

inline constexpr std::size_t kOracleDefaultCap = 50000;

// Exact O(N^2) reference: same strict dist < cutoff predicate as the
// engines, double-precision accumulation for the potential kernel,
// single-threaded. Throws std::invalid_argument when N exceeds the cap.
NeighborResult brute_force(const ProblemSpec& spec, Kernel kernel,
                           std::size_t cap = kOracleDefaultCap);

class OracleEngine : public NeighborEngine {
public:
    void build(const ProblemSpec& spec) override;
    NeighborResult compute(Kernel kernel, int threads) const override;
    Method method() const override { return Method::Oracle; }

private:
    ProblemSpec spec_;
};

}  // namespace raycut
