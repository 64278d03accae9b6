// Python bindings for the core operations: workload generation, the
// neighbor engines, the brute-force reference, Morton sorting, and the
// debug renderer.

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>
#include <stdexcept>

#include "raycut/engine.hpp"
#include "raycut/gen.hpp"
#include "raycut/morton.hpp"
#include "raycut/oracle.hpp"
#include "raycut/render.hpp"

namespace py = pybind11;
using namespace raycut;

static_assert(sizeof(Vec3) == 3 * sizeof(float), "Vec3 must be three packed floats");

namespace {

std::vector<Vec3> positions_from_array(const py::array_t<float, py::array::c_style | py::array::forcecast>& arr) {
    if (arr.ndim() != 2 || arr.shape(1) != 3) {
        throw std::invalid_argument("positions must be an (N, 3) array");
    }
    const auto n = static_cast<std::size_t>(arr.shape(0));
    std::vector<Vec3> out(n);
    std::memcpy(out.data(), arr.data(), n * sizeof(Vec3));
    return out;
}

py::array_t<float> positions_to_array(const std::vector<Vec3>& positions) {
    py::array_t<float> arr({static_cast<py::ssize_t>(positions.size()), py::ssize_t(3)});
    std::memcpy(arr.mutable_data(), positions.data(), positions.size() * sizeof(Vec3));
    return arr;
}

template <class T>
py::array_t<T> vector_to_array(const std::vector<T>& v) {
    py::array_t<T> arr(static_cast<py::ssize_t>(v.size()));
    std::memcpy(arr.mutable_data(), v.data(), v.size() * sizeof(T));
    return arr;
}

NeighborResult run_from_python(const py::array_t<float, py::array::c_style | py::array::forcecast>& positions,
                               float cutoff, const std::string& method, const std::string& kernel,
                               float epsilon, bool sort, int threads) {
    ProblemSpec spec;
    spec.positions = positions_from_array(positions);
    spec.cutoff = cutoff;
    spec.epsilon = epsilon;
    spec.sort = sort;
    return run_engine(method_from_name(method), spec, kernel_from_name(kernel), threads);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Cutoff-distance particle neighbor search via ray-traced scene queries";

    py::class_<NeighborResult>(m, "NeighborResult")
        .def_property_readonly("kernel",
                               [](const NeighborResult& r) { return std::string(kernel_name(r.kernel)); })
        .def_property_readonly("counts",
                               [](const NeighborResult& r) { return vector_to_array(r.counts); })
        .def_property_readonly("lists",
                               [](const NeighborResult& r) {
                                   py::list out;
                                   for (const auto& l : r.lists) out.append(vector_to_array(l));
                                   return out;
                               })
        .def_property_readonly("potentials",
                               [](const NeighborResult& r) { return vector_to_array(r.potentials); })
        .def_readonly("build_seconds", &NeighborResult::build_seconds)
        .def_readonly("compute_seconds", &NeighborResult::compute_seconds)
        .def_readonly("pairs", &NeighborResult::pair_visits)
        .def("checksum", &NeighborResult::checksum)
        .def("__repr__", [](const NeighborResult& r) {
            return "<NeighborResult targets=" + std::to_string(r.counts.size()) +
                   " pairs=" + std::to_string(r.pair_visits) + ">";
        });

    m.def(
        "gen_uniform",
        [](int beta, int p, std::uint64_t seed) {
            const Generated g = gen_uniform({beta, p, seed});
            return py::make_tuple(positions_to_array(g.positions), g.cutoff);
        },
        py::arg("beta"), py::arg("p"), py::arg("seed") = 1,
        "Uniform unit-box workload; returns (positions, cutoff).");

    m.def(
        "gen_surface",
        [](int alpha, int p, std::uint64_t seed) {
            const Generated g = gen_surface({alpha, p, seed});
            return py::make_tuple(positions_to_array(g.positions), g.cutoff);
        },
        py::arg("alpha"), py::arg("p"), py::arg("seed") = 1,
        "Unit-sphere-surface workload; returns (positions, cutoff).");

    m.def("run", &run_from_python, py::arg("positions"), py::arg("cutoff"),
          py::arg("method") = "grid", py::arg("kernel") = "count", py::arg("epsilon") = 0.0f,
          py::arg("sort") = false, py::arg("threads") = 1,
          "Build the method's scene and compute the interactions once.");

    m.def(
        "brute_force",
        [](const py::array_t<float, py::array::c_style | py::array::forcecast>& positions,
           float cutoff, const std::string& kernel) {
            ProblemSpec spec;
            spec.positions = positions_from_array(positions);
            spec.cutoff = cutoff;
            return brute_force(spec, kernel_from_name(kernel));
        },
        py::arg("positions"), py::arg("cutoff"), py::arg("kernel") = "count",
        "Exact O(N^2) reference result.");

    m.def(
        "morton_order",
        [](const py::array_t<float, py::array::c_style | py::array::forcecast>& positions) {
            const MortonSorted sorted = morton_sort(positions_from_array(positions));
            return py::make_tuple(positions_to_array(sorted.positions),
                                  vector_to_array(sorted.perm));
        },
        py::arg("positions"),
        "Morton-sort positions; returns (sorted_positions, permutation) with "
        "permutation[new_index] = original_index.");

    m.def(
        "render_depth",
        [](const py::array_t<float, py::array::c_style | py::array::forcecast>& positions,
           float cutoff, const std::string& method, int axis, int resolution) {
            ProblemSpec spec;
            spec.positions = positions_from_array(positions);
            spec.cutoff = cutoff;
            DepthImage img;
            if (method == "sphere") {
                img = render_depth(sphere_scene_build(spec), axis, resolution);
            } else if (method == "squares") {
                img = render_depth(squares_scene_build(spec), axis, resolution);
            } else {
                throw std::invalid_argument("render method must be 'sphere' or 'squares'");
            }
            py::array_t<std::uint8_t> arr({py::ssize_t(img.height), py::ssize_t(img.width)});
            std::memcpy(arr.mutable_data(), img.pixels.data(), img.pixels.size());
            return arr;
        },
        py::arg("positions"), py::arg("cutoff"), py::arg("method") = "sphere", py::arg("axis") = 0,
        py::arg("resolution") = 256,
        "Orthographic closest-hit depth image of the built scene.");

    m.attr("methods") = py::make_tuple("sphere", "squares", "aabb", "grid", "oracle");
    m.attr("kernels") = py::make_tuple("count", "record", "potential");
#ifdef VERSION_INFO
#define RAYCUT_STR2(x) #x
#define RAYCUT_STR(x) RAYCUT_STR2(x)
    m.attr("__version__") = RAYCUT_STR(VERSION_INFO);
#else
    m.attr("__version__") = "0.1.0";
#endif
}
