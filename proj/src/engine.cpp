#include "raycut/engine.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "raycut/method_aabb.hpp"
#include "raycut/method_grid.hpp"
#include "raycut/method_sphere.hpp"
#include "raycut/method_squares.hpp"
#include "raycut/morton.hpp"
#include "raycut/oracle.hpp"

namespace raycut {

const char* method_name(Method m) {
    switch (m) {
        case Method::Sphere: return "sphere";
        case Method::Squares: return "squares";
        case Method::CustomAabb: return "aabb";
        case Method::Grid: return "grid";
        case Method::Oracle: return "oracle";
    }
    return "?";
}

Method method_from_name(std::string_view name) {
    if (name == "sphere") return Method::Sphere;
    if (name == "squares") return Method::Squares;
    if (name == "aabb") return Method::CustomAabb;
    if (name == "grid") return Method::Grid;
    if (name == "oracle") return Method::Oracle;
    throw std::invalid_argument("unknown method: " + std::string(name));
}

const char* kernel_name(Kernel k) {
    switch (k) {
        case Kernel::Count: return "count";
        case Kernel::Record: return "record";
        case Kernel::Potential: return "potential";
    }
    return "?";
}

Kernel kernel_from_name(std::string_view name) {
    if (name == "count") return Kernel::Count;
    if (name == "record") return Kernel::Record;
    if (name == "potential") return Kernel::Potential;
    throw std::invalid_argument("unknown kernel: " + std::string(name));
}

void validate(const ProblemSpec& spec) {
    if (!(spec.cutoff > 0.0f)) throw std::invalid_argument("cutoff must be positive");
    const float eps = resolved_epsilon(spec);
    if (!(eps > 0.0f) || eps > spec.cutoff / 100.0f) {
        throw std::invalid_argument("epsilon must be in (0, cutoff/100]");
    }
    for (const Vec3& p : spec.positions) {
        if (!finite(p)) throw std::invalid_argument("non-finite particle position");
    }
}

std::uint64_t NeighborResult::checksum() const {
    std::uint64_t sum = 0;
    for (std::uint32_t c : counts) sum += c;
    return sum;
}

std::unique_ptr<NeighborEngine> make_engine(Method m) {
    switch (m) {
        case Method::Sphere: return std::make_unique<SphereEngine>();
        case Method::Squares: return std::make_unique<SquaresEngine>();
        case Method::CustomAabb: return std::make_unique<AabbEngine>();
        case Method::Grid: return std::make_unique<GridEngine>();
        case Method::Oracle: return std::make_unique<OracleEngine>();
    }
    throw std::invalid_argument("unknown method");
}

namespace {

// Remap accumulators from sorted index space back to original indices.
void unsort_result(NeighborResult& r, const std::vector<std::uint32_t>& perm) {
    const std::size_t n = perm.size();
    NeighborResult out;
    out.kernel = r.kernel;
    out.pair_visits = r.pair_visits;
    out.counts.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.counts[perm[i]] = r.counts[i];
    if (r.kernel == Kernel::Record) {
        out.lists.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            auto& list = out.lists[perm[i]];
            list = std::move(r.lists[i]);
            for (auto& s : list) s = perm[s];
            std::sort(list.begin(), list.end());
        }
    }
    if (r.kernel == Kernel::Potential) {
        out.potentials.resize(n);
        for (std::size_t i = 0; i < n; ++i) out.potentials[perm[i]] = r.potentials[i];
    }
    out.build_seconds = r.build_seconds;
    out.compute_seconds = r.compute_seconds;
    r = std::move(out);
}

}  // namespace

NeighborResult run_engine(Method m, const ProblemSpec& spec, Kernel kernel, int threads) {
    validate(spec);
    using clock = std::chrono::steady_clock;

    auto engine = make_engine(m);
    MortonSorted sorted;
    NeighborResult result;

    const auto t0 = clock::now();
    if (spec.sort) {
        sorted = morton_sort(spec.positions);
        ProblemSpec sorted_spec{sorted.positions, spec.cutoff, spec.epsilon, false};
        engine->build(sorted_spec);
    } else {
        engine->build(spec);
    }
    const auto t1 = clock::now();
    result = engine->compute(kernel, threads);
    const auto t2 = clock::now();

    result.build_seconds = std::chrono::duration<double>(t1 - t0).count();
    result.compute_seconds = std::chrono::duration<double>(t2 - t1).count();
    if (spec.sort) unsort_result(result, sorted.perm);
    return result;
}

}  // namespace raycut
