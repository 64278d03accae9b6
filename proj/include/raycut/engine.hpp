#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "raycut/vec3.hpp"

namespace raycut {

// Interaction kernels applied per accepted (target, source) pair.
//   Count:     per-target neighbor tally
//   Record:    per-target neighbor index lists (sorted ascending)
//   Potential: per-target sum of w(d) = (1 - d/C)^2 over neighbors
enum class Kernel { Count, Record, Potential };

enum class Method { Sphere, Squares, CustomAabb, Grid, Oracle };

const char* method_name(Method m);
Method method_from_name(std::string_view name);
const char* kernel_name(Kernel k);
Kernel kernel_from_name(std::string_view name);

// The simulation input. Two particles closer than epsilon violate the
// precondition of the geometric encodings' correctness guarantees; the
// generators enforce the separation, arbitrary inputs are on their own.
struct ProblemSpec {
    std::vector<Vec3> positions;
    float cutoff = 1.0f;
    float epsilon = 0.0f;  // <= 0 selects the default cutoff * 1e-4
    bool sort = false;     // Morton pre-sort before scene/grid build
};

inline float resolved_epsilon(const ProblemSpec& spec) {
    return spec.epsilon > 0.0f ? spec.epsilon : spec.cutoff * 1e-4f;
}

// Throws std::invalid_argument on non-finite positions, non-positive cutoff,
// or epsilon > cutoff / 100.
void validate(const ProblemSpec& spec);

struct NeighborResult {
    Kernel kernel = Kernel::Count;
    std::vector<std::uint32_t> counts;                // always filled
    std::vector<std::vector<std::uint32_t>> lists;    // Record only
    std::vector<double> potentials;                   // Potential only
    double build_seconds = 0.0;
    double compute_seconds = 0.0;
    std::uint64_t pair_visits = 0;  // total accepted interactions

    std::uint64_t checksum() const;  // sum of the count accumulators
};

// Common contract of the neighbor methods: one build per particle set, then
// any number of compute calls. compute is const and safe to call
// concurrently; accumulators are private per target.
class NeighborEngine {
public:
    virtual ~NeighborEngine() = default;
    virtual void build(const ProblemSpec& spec) = 0;
    virtual NeighborResult compute(Kernel kernel, int threads) const = 0;
    virtual Method method() const = 0;
};

std::unique_ptr<NeighborEngine> make_engine(Method m);

// Runs one build + compute cycle and reports timings for the two phases.
// With spec.sort set, positions are Morton-sorted before the build (the sort
// is part of the build phase) and all results are mapped back to original
// indices, so accumulators are reported in original index space either way.
NeighborResult run_engine(Method m, const ProblemSpec& spec, Kernel kernel, int threads = 1);

}  // namespace raycut
