#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "raycut/engine.hpp"

namespace raycut {

// One selectable benchmark method: a neighbor method plus the Morton
// pre-sort toggle. "aabb-sorted" is the sorted custom-box variant.
struct MethodChoice {
    Method method = Method::Grid;
    bool sorted = false;

    std::string label() const;
};

// Parses "grid,aabb,…" or "all"; "all" expands to sphere, squares, aabb,
// aabb-sorted, grid.
std::vector<MethodChoice> parse_methods(const std::string& list);

struct BenchConfig {
    std::string distribution = "uniform";  // "uniform" | "surface"
    int param = 0;                         // beta or alpha
    int p = 1;
    std::uint64_t seed = 1;
    Kernel kernel = Kernel::Count;
    int reps = 5;
    int threads = 1;
    bool sort = false;  // apply Morton pre-sort to every selected method
    std::vector<MethodChoice> methods;
};

// One benchmark row. Timing fields hold the mean and median over the
// repetitions; the CSV carries the mean.
struct BenchRecord {
    std::string method;
    std::string distribution;
    int param = 0;
    int p = 0;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    double build_ms_mean = 0.0;
    double compute_ms_mean = 0.0;
    double build_ms_median = 0.0;
    double compute_ms_median = 0.0;
    std::uint64_t checksum = 0;
    std::uint64_t pairs = 0;
};

// Runs every selected method reps times over the given particle set.
std::vector<BenchRecord> run_bench(const std::vector<Vec3>& positions, float cutoff,
                                   const BenchConfig& cfg);

// CSV schema: method,distribution,param,p,N,seed,build_ms,compute_ms,checksum,pairs
// One header line, '.' decimal separator.
void write_csv(const std::string& path, const std::vector<BenchRecord>& records);
std::string csv_string(const std::vector<BenchRecord>& records);

// Markdown table with build/compute speedup columns relative to the grid row
// (when present).
std::string markdown_table(const std::vector<BenchRecord>& records);

// Checks every selected method's Record lists against brute force on this
// particle set. Returns the first mismatch as a message, or nullopt if all
// methods agree.
std::optional<std::string> verify_against_oracle(const std::vector<Vec3>& positions, float cutoff,
                                                 const std::vector<MethodChoice>& methods,
                                                 int threads);

// Fixed matrix of small configurations, every method against brute force.
// Prints one line per configuration; returns false on the first failure.
bool verify_suite(std::ostream& report);

}  // namespace raycut
