// Benchmark CLI: generates (or loads) a particle set, runs the selected
// neighbor methods with timed build/compute phases, and emits a CSV plus a
// markdown summary with speedups relative to the grid baseline.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "raycut/benchlib.hpp"
#include "raycut/gen.hpp"
#include "raycut/particle_io.hpp"
#include "raycut/render.hpp"

namespace {

int run(int argc, char** argv) {
    CLI::App app{"Cutoff-distance particle interactions via ray-traced neighbor search"};

    std::string dist;
    int beta = 0, alpha = 0, p = 1, reps = 5, threads = 1, render_res = 256;
    std::uint64_t seed = 1;
    std::string methods_arg = "all";
    std::string kernel_arg = "count";
    std::string out_path, render_path, load_path, save_path;
    bool sort = false, verify = false;

    app.add_option("--dist", dist, "particle distribution")
        ->check(CLI::IsMember({"uniform", "surface"}));
    app.add_option("--beta", beta, "uniform box divisor (cutoff = 1/beta)");
    app.add_option("--alpha", alpha, "surface divisor (N = p * alpha^3)");
    app.add_option("--p", p, "average particles per cell");
    app.add_option("--methods", methods_arg,
                   "comma list of sphere,squares,aabb,aabb-sorted,grid,oracle or 'all'");
    app.add_option("--kernel", kernel_arg, "interaction kernel")
        ->check(CLI::IsMember({"count", "record", "potential"}));
    app.add_option("--reps", reps, "repetitions per method (timings report the mean)");
    app.add_option("--seed", seed, "generator seed");
    app.add_flag("--sort", sort, "Morton pre-sort the particles for every method");
    app.add_flag("--verify", verify, "check every method against brute force");
    app.add_option("--out", out_path, "CSV output path");
    app.add_option("--threads", threads, "compute threads (0 = all hardware threads)");
    app.add_option("--render", render_path, "write a PGM depth image of the built scene");
    app.add_option("--render-res", render_res, "depth image resolution");
    app.add_option("--load", load_path, "load particles from CSV instead of generating");
    app.add_option("--save", save_path, "save the particle set to CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    raycut::BenchConfig cfg;
    cfg.kernel = raycut::kernel_from_name(kernel_arg);
    cfg.methods = raycut::parse_methods(methods_arg);
    cfg.reps = reps;
    cfg.threads = threads;
    cfg.sort = sort;
    cfg.seed = seed;

    // No distribution given: --verify alone runs the fixed verification
    // matrix over small configurations of both distributions.
    if (dist.empty()) {
        if (verify) {
            const bool ok = raycut::verify_suite(std::cout);
            std::cout << (ok ? "verification suite passed" : "verification suite FAILED")
                      << std::endl;
            return ok ? 0 : 1;
        }
        std::cerr << "error: --dist is required (or use --verify alone for the self-check)\n";
        return 2;
    }

    std::vector<raycut::Vec3> positions;
    float cutoff = 0.0f;
    if (dist == "uniform") {
        if (beta < 1) {
            std::cerr << "error: --dist uniform requires --beta >= 1\n";
            return 2;
        }
        if (alpha != 0) {
            std::cerr << "error: --alpha conflicts with --dist uniform\n";
            return 2;
        }
        cfg.distribution = "uniform";
        cfg.param = beta;
        cfg.p = p;
        const raycut::Generated g = raycut::gen_uniform({beta, p, seed});
        positions = g.positions;
        cutoff = g.cutoff;
    } else {
        if (alpha < 1) {
            std::cerr << "error: --dist surface requires --alpha >= 1\n";
            return 2;
        }
        if (beta != 0) {
            std::cerr << "error: --beta conflicts with --dist surface\n";
            return 2;
        }
        cfg.distribution = "surface";
        cfg.param = alpha;
        cfg.p = p;
        const raycut::Generated g = raycut::gen_surface({alpha, p, seed});
        positions = g.positions;
        cutoff = g.cutoff;
    }

    // --load keeps the configuration's cutoff but replaces the positions.
    if (!load_path.empty()) positions = raycut::load_particles(load_path);
    if (!save_path.empty()) raycut::save_particles(save_path, positions);

    std::cout << "run: dist=" << cfg.distribution << " param=" << cfg.param << " p=" << cfg.p
              << " N=" << positions.size() << " cutoff=" << cutoff << " kernel=" << kernel_arg
              << " reps=" << reps << " threads=" << threads << " seed=" << seed
              << " rng=pcg32\n";

    const auto records = raycut::run_bench(positions, cutoff, cfg);
    std::cout << raycut::markdown_table(records);
    if (!out_path.empty()) raycut::write_csv(out_path, records);

    if (!render_path.empty()) {
        raycut::ProblemSpec spec;
        spec.positions = positions;
        spec.cutoff = cutoff;
        bool rendered = false;
        for (const auto& choice : cfg.methods) {
            if (choice.method == raycut::Method::Sphere) {
                raycut::write_pgm(render_path,
                                  render_depth(raycut::sphere_scene_build(spec), 0, render_res));
                rendered = true;
                break;
            }
            if (choice.method == raycut::Method::Squares) {
                raycut::write_pgm(render_path,
                                  render_depth(raycut::squares_scene_build(spec), 0, render_res));
                rendered = true;
                break;
            }
        }
        if (!rendered) {
            std::cerr << "error: --render needs the sphere or squares method in --methods\n";
            return 2;
        }
        std::cout << "depth image written to " << render_path << "\n";
    }

    if (verify) {
        const auto err = raycut::verify_against_oracle(positions, cutoff, cfg.methods, threads);
        if (err) {
            std::cerr << "verification FAILED: " << *err << "\n";
            return 1;
        }
        std::cout << "verification against brute force passed\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
