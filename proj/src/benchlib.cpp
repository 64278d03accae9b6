#include "raycut/benchlib.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "raycut/gen.hpp"
#include "raycut/oracle.hpp"

namespace raycut {

std::string MethodChoice::label() const {
    std::string s = method_name(method);
    if (sorted) s += "-sorted";
    return s;
}

std::vector<MethodChoice> parse_methods(const std::string& list) {
    if (list == "all") {
        return {{Method::Sphere, false}, {Method::Squares, false}, {Method::CustomAabb, false},
                {Method::CustomAabb, true}, {Method::Grid, false}};
    }
    std::vector<MethodChoice> out;
    std::stringstream ss(list);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        MethodChoice choice;
        if (token.size() > 7 && token.substr(token.size() - 7) == "-sorted") {
            choice.sorted = true;
            token.resize(token.size() - 7);
        }
        choice.method = method_from_name(token);
        out.push_back(choice);
    }
    if (out.empty()) throw std::invalid_argument("empty method list");
    return out;
}

namespace {

double mean(const std::vector<double>& v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

std::vector<BenchRecord> run_bench(const std::vector<Vec3>& positions, float cutoff,
                                   const BenchConfig& cfg) {
    if (cfg.reps < 1) throw std::invalid_argument("reps must be >= 1");
    std::vector<BenchRecord> records;
    records.reserve(cfg.methods.size());

    for (const MethodChoice& choice : cfg.methods) {
        ProblemSpec spec;
        spec.positions = positions;
        spec.cutoff = cutoff;
        spec.sort = choice.sorted || cfg.sort;

        std::vector<double> build_ms, compute_ms;
        NeighborResult last;
        for (int rep = 0; rep < cfg.reps; ++rep) {
            last = run_engine(choice.method, spec, cfg.kernel, cfg.threads);
            build_ms.push_back(last.build_seconds * 1e3);
            compute_ms.push_back(last.compute_seconds * 1e3);
        }

        BenchRecord rec;
        rec.method = choice.label();
        rec.distribution = cfg.distribution;
        rec.param = cfg.param;
        rec.p = cfg.p;
        rec.n = positions.size();
        rec.seed = cfg.seed;
        rec.build_ms_mean = mean(build_ms);
        rec.compute_ms_mean = mean(compute_ms);
        rec.build_ms_median = median(build_ms);
        rec.compute_ms_median = median(compute_ms);
        rec.checksum = last.checksum();
        rec.pairs = last.pair_visits;
        records.push_back(std::move(rec));
    }
    return records;
}

std::string csv_string(const std::vector<BenchRecord>& records) {
    std::string out = "method,distribution,param,p,N,seed,build_ms,compute_ms,checksum,pairs\n";
    char line[256];
    for (const BenchRecord& r : records) {
        std::snprintf(line, sizeof line, "%s,%s,%d,%d,%zu,%llu,%.6f,%.6f,%llu,%llu\n",
                      r.method.c_str(), r.distribution.c_str(), r.param, r.p, r.n,
                      static_cast<unsigned long long>(r.seed), r.build_ms_mean, r.compute_ms_mean,
                      static_cast<unsigned long long>(r.checksum),
                      static_cast<unsigned long long>(r.pairs));
        out += line;
    }
    return out;
}

void write_csv(const std::string& path, const std::vector<BenchRecord>& records) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << csv_string(records);
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string markdown_table(const std::vector<BenchRecord>& records) {
    const BenchRecord* grid = nullptr;
    for (const BenchRecord& r : records) {
        if (r.method == "grid") grid = &r;
    }

    std::ostringstream out;
    out << "| method | build ms (mean) | compute ms (mean) | build ms (median) | "
           "compute ms (median) | build x-grid | compute x-grid |\n";
    out << "|---|---|---|---|---|---|---|\n";
    char buf[64];
    auto fmt = [&buf](double v) {
        std::snprintf(buf, sizeof buf, "%.3f", v);
        return std::string(buf);
    };
    for (const BenchRecord& r : records) {
        out << "| " << r.method << " | " << fmt(r.build_ms_mean) << " | "
            << fmt(r.compute_ms_mean) << " | " << fmt(r.build_ms_median) << " | "
            << fmt(r.compute_ms_median) << " | ";
        if (grid != nullptr && r.build_ms_mean > 0.0 && r.compute_ms_mean > 0.0) {
            std::snprintf(buf, sizeof buf, "%.2f", grid->build_ms_mean / r.build_ms_mean);
            out << buf << " | ";
            std::snprintf(buf, sizeof buf, "%.2f", grid->compute_ms_mean / r.compute_ms_mean);
            out << buf << " |\n";
        } else {
            out << "- | - |\n";
        }
    }
    return out.str();
}

namespace {

std::string format_list(const std::vector<std::uint32_t>& list, std::size_t limit = 16) {
    std::string s = "[";
    for (std::size_t i = 0; i < list.size() && i < limit; ++i) {
        if (i) s += ",";
        s += std::to_string(list[i]);
    }
    if (list.size() > limit) s += ",...";
    s += "]";
    return s;
}

}  // namespace

std::optional<std::string> verify_against_oracle(const std::vector<Vec3>& positions, float cutoff,
                                                 const std::vector<MethodChoice>& methods,
                                                 int threads) {
    ProblemSpec spec;
    spec.positions = positions;
    spec.cutoff = cutoff;
    const NeighborResult expected = brute_force(spec, Kernel::Record);

    for (const MethodChoice& choice : methods) {
        if (choice.method == Method::Oracle) continue;
        spec.sort = choice.sorted;
        const NeighborResult got = run_engine(choice.method, spec, Kernel::Record, threads);
        for (std::size_t t = 0; t < positions.size(); ++t) {
            if (got.lists[t] != expected.lists[t]) {
                std::ostringstream msg;
                msg << choice.label() << ": target " << t << " expected "
                    << format_list(expected.lists[t]) << " got " << format_list(got.lists[t]);
                return msg.str();
            }
        }
    }
    return std::nullopt;
}

bool verify_suite(std::ostream& report) {
    const auto methods = parse_methods("all");
    bool ok = true;

    const int uniform_beta[] = {2, 4};
    const int uniform_p[] = {1, 2};
    const std::uint64_t seeds[] = {1, 2};

    for (int beta : uniform_beta) {
        for (int p : uniform_p) {
            for (std::uint64_t seed : seeds) {
                const Generated g = gen_uniform({beta, p, seed});
                const auto err = verify_against_oracle(g.positions, g.cutoff, methods, 1);
                report << "uniform beta=" << beta << " p=" << p << " seed=" << seed << " N="
                       << g.positions.size() << ": " << (err ? "FAIL " + *err : "ok") << "\n";
                if (err) return false;
            }
        }
    }
    for (std::uint64_t seed : seeds) {
        const Generated g = gen_surface({8, 1, seed});
        const auto err = verify_against_oracle(g.positions, g.cutoff, methods, 1);
        report << "surface alpha=8 p=1 seed=" << seed << " N=" << g.positions.size() << ": "
               << (err ? "FAIL " + *err : "ok") << "\n";
        if (err) return false;
    }
    return ok;
}

}  // namespace raycut
