#include "raycut/bvh.hpp"

#include "raycut/morton.hpp"

#include <algorithm>
#include <cstddef>
#include <cstring>

namespace raycut {

namespace {

struct BuildItem {
    float c[3];  // centroid
    std::uint32_t prim;
};

struct Bounds {
    float lo[3] = {3.4e38f, 3.4e38f, 3.4e38f};
    float hi[3] = {-3.4e38f, -3.4e38f, -3.4e38f};

    void add(const BuildItem& it) {
        lo[0] = fmin1(lo[0], it.c[0]);
        hi[0] = fmax1(hi[0], it.c[0]);
        lo[1] = fmin1(lo[1], it.c[1]);
        hi[1] = fmax1(hi[1], it.c[1]);
        lo[2] = fmin1(lo[2], it.c[2]);
        hi[2] = fmax1(hi[2], it.c[2]);
    }

    int longest_axis() const {
        int axis = 0;
        if (hi[1] - lo[1] > hi[axis] - lo[axis]) axis = 1;
        if (hi[2] - lo[2] > hi[axis] - lo[axis]) axis = 2;
        return axis;
    }
};

// Quickselect with Hoare partitioning and median-of-3 pivots; equivalent to
// nth_element at rank k. Small windows finish with an insertion sort, and a
// pathological pivot sequence falls back to std::nth_element.
template <int Axis>
void qselect(BuildItem* a, std::uint32_t n, std::uint32_t k) {
    std::uint32_t lo = 0, hi = n;  // active window [lo, hi)
    int budget = 64;
    while (hi - lo > 16) {
        if (--budget == 0) {
            std::nth_element(a + lo, a + k, a + hi,
                             [](const BuildItem& x, const BuildItem& y) {
                                 return x.c[Axis] < y.c[Axis];
                             });
            return;
        }
        const std::uint32_t mid = lo + (hi - lo) / 2;
        const float p0 = a[lo].c[Axis], p1 = a[mid].c[Axis], p2 = a[hi - 1].c[Axis];
        const float pivot =
            fmax1(fmin1(p0, p1), fmin1(fmax1(p0, p1), p2));  // median of three

        std::uint32_t i = lo - 1, j = hi;
        for (;;) {
            do {
                ++i;
            } while (a[i].c[Axis] < pivot);
            do {
                --j;
            } while (a[j].c[Axis] > pivot);
            if (i >= j) break;
            std::swap(a[i], a[j]);
        }
        if (k <= j) {
            hi = j + 1;
        } else {
            lo = j + 1;
        }
    }
    for (std::uint32_t i = lo + 1; i < hi; ++i) {
        const BuildItem key = a[i];
        std::uint32_t j = i;
        while (j > lo && a[j - 1].c[Axis] > key.c[Axis]) {
            a[j] = a[j - 1];
            --j;
        }
        a[j] = key;
    }
}

void nth_by_axis(BuildItem* first, BuildItem* mid, BuildItem* last, int axis) {
    const auto n = static_cast<std::uint32_t>(last - first);
    const auto k = static_cast<std::uint32_t>(mid - first);
    switch (axis) {
        case 0: qselect<0>(first, n, k); break;
        case 1: qselect<1>(first, n, k); break;
        default: qselect<2>(first, n, k); break;
    }
}

// Median split of items[0..count) at index `rank` along `axis`, exactly as
// nth_element would place it, plus the centroid bounds of the two halves.
//
// Large ranges run one stable binning pass over the axis value range
// (linear bins are order-consistent, so only the bin containing the rank
// needs exact selection) with the half bounds accumulated while
// scattering. Small or value-degenerate ranges fall back to nth_element.
void split_at_rank(BuildItem* items, BuildItem* scratch, std::uint32_t count, std::uint32_t rank,
                   int axis, float lo, float hi, Bounds& left, Bounds& right) {
    const float extent = hi - lo;
    if (count < 2048 || !(extent > 1e-30f)) {
        if (extent > 1e-30f) nth_by_axis(items, items + rank, items + count, axis);
        for (std::uint32_t i = 0; i < rank; ++i) left.add(items[i]);
        for (std::uint32_t i = rank; i < count; ++i) right.add(items[i]);
        return;
    }

    const std::uint32_t nbins = 256;
    const float scale = (static_cast<float>(nbins) - 0.01f) / extent;
    const auto bin_of = [lo, scale, nbins](float v) {
        const auto b = static_cast<std::int32_t>((v - lo) * scale);
        return static_cast<std::uint32_t>(
            b < 0 ? 0 : (b >= static_cast<std::int32_t>(nbins) ? nbins - 1 : b));
    };

    std::uint32_t offs[257] = {0};
    for (std::uint32_t i = 0; i < count; ++i) ++offs[bin_of(items[i].c[axis]) + 1];
    for (std::uint32_t b = 0; b < nbins; ++b) offs[b + 1] += offs[b];

    std::uint32_t target = 0;
    while (offs[target + 1] <= rank) ++target;

    std::uint32_t cursor[256];
    std::memcpy(cursor, offs, nbins * sizeof(std::uint32_t));
    for (std::uint32_t i = 0; i < count; ++i) {
        const std::uint32_t b = bin_of(items[i].c[axis]);
        const std::uint32_t dest = cursor[b]++;
        scratch[dest] = items[i];
        // The target bin gets reordered below; its bounds are added then.
        if (b != target) {
            (dest < rank ? left : right).add(items[i]);
        }
    }
    std::memcpy(items, scratch, count * sizeof(BuildItem));

    nth_by_axis(items + offs[target], items + rank, items + offs[target + 1], axis);
    for (std::uint32_t i = offs[target]; i < offs[target + 1]; ++i) {
        (i < rank ? left : right).add(items[i]);
    }
}

struct Builder {
    std::vector<BuildItem>& items;
    std::vector<BuildItem>& scratch;
    std::vector<BvhNode>& nodes;
    std::uint32_t leaf_size;

    std::uint32_t build(std::uint32_t first, std::uint32_t count, const Bounds& bounds) {
        const std::uint32_t idx = static_cast<std::uint32_t>(nodes.size());
        nodes.push_back(BvhNode{Aabb{}, first, 0, count});
        if (count <= leaf_size) return idx;

        // Median split on the longest axis of the centroid extent. When all
        // centroids coincide the halves split by index, which guarantees
        // termination.
        const int axis = bounds.longest_axis();
        const std::uint32_t mid = first + count / 2;
        Bounds left, right;
        split_at_rank(items.data() + first, scratch.data(), count, count / 2, axis,
                      bounds.lo[axis], bounds.hi[axis], left, right);

        const std::uint32_t l = build(first, mid - first, left);
        const std::uint32_t r = build(mid, first + count - mid, right);
        nodes[idx].a = l;
        nodes[idx].b = r;
        nodes[idx].count = 0;
        return idx;
    }
};

// Topology-only emission over an already-final primitive order, splitting
// every node at its index midpoint.
std::uint32_t emit_balanced(std::vector<BvhNode>& nodes, std::uint32_t leaf_size,
                            std::uint32_t first, std::uint32_t count) {
    const std::uint32_t idx = static_cast<std::uint32_t>(nodes.size());
    nodes.push_back(BvhNode{Aabb{}, first, 0, count});
    if (count <= leaf_size) return idx;
    const std::uint32_t mid = first + count / 2;
    const std::uint32_t l = emit_balanced(nodes, leaf_size, first, mid - first);
    const std::uint32_t r = emit_balanced(nodes, leaf_size, mid, first + count - mid);
    nodes[idx].a = l;
    nodes[idx].b = r;
    nodes[idx].count = 0;
    return idx;
}

// Primitive order by ascending 30-bit centroid Morton code: one stable LSD
// radix sort of (code, prim) pairs in three 10-bit passes.
std::vector<std::uint32_t> morton_sorted_prims(std::span<const Aabb> boxes) {
    const std::size_t n = boxes.size();
    Aabb bounds = empty_aabb();
    for (const Aabb& b : boxes) bounds.grow((b.min + b.max) * 0.5f);

    struct CodePrim {
        std::uint32_t code, prim;
    };
    std::vector<CodePrim> pairs(n), scratch(n);
    for (std::size_t i = 0; i < n; ++i) {
        pairs[i].code = morton30((boxes[i].min + boxes[i].max) * 0.5f, bounds);
        pairs[i].prim = static_cast<std::uint32_t>(i);
    }

    CodePrim* src = pairs.data();
    CodePrim* dst = scratch.data();
    for (int pass = 0; pass < 3; ++pass) {
        const int shift = 10 * pass;
        std::uint32_t offs[1025] = {0};
        for (std::size_t i = 0; i < n; ++i) ++offs[((src[i].code >> shift) & 0x3ffu) + 1];
        for (int b = 0; b < 1024; ++b) offs[b + 1] += offs[b];
        for (std::size_t i = 0; i < n; ++i) {
            dst[offs[(src[i].code >> shift) & 0x3ffu]++] = src[i];
        }
        std::swap(src, dst);
    }
    // Three swaps leave the sorted pairs in the scratch buffer (src).
    std::vector<std::uint32_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = src[i].prim;
    return order;
}

}  // namespace

Bvh bvh_build(std::span<const Aabb> boxes, int leaf_size, BvhBuild mode) {
    if (boxes.empty()) throw std::invalid_argument("bvh_build: empty scene");
    if (leaf_size < 1) throw std::invalid_argument("bvh_build: leaf_size must be >= 1");

    const std::uint32_t n = static_cast<std::uint32_t>(boxes.size());
    Bvh bvh;
    bvh.leaf_size = leaf_size;
    bvh.nodes.reserve(2 * static_cast<std::size_t>(n));

    if (mode == BvhBuild::MortonOrdered) {
        bvh.prim_order = morton_sorted_prims(boxes);
        emit_balanced(bvh.nodes, static_cast<std::uint32_t>(leaf_size), 0, n);
    } else {
        std::vector<BuildItem> items(n);
        Bounds root_bounds;
        for (std::uint32_t i = 0; i < n; ++i) {
            items[i].c[0] = (boxes[i].min.x + boxes[i].max.x) * 0.5f;
            items[i].c[1] = (boxes[i].min.y + boxes[i].max.y) * 0.5f;
            items[i].c[2] = (boxes[i].min.z + boxes[i].max.z) * 0.5f;
            items[i].prim = i;
            root_bounds.add(items[i]);
        }
        std::vector<BuildItem> scratch(n);
        Builder builder{items, scratch, bvh.nodes, static_cast<std::uint32_t>(leaf_size)};
        builder.build(0, n, root_bounds);
        bvh.prim_order.resize(n);
        for (std::uint32_t s = 0; s < n; ++s) bvh.prim_order[s] = items[s].prim;
    }

    bvh.prim_boxes.resize(n);
    for (std::uint32_t s = 0; s < n; ++s) {
        bvh.prim_boxes[s] = boxes[bvh.prim_order[s]];
    }

    // Children always follow their parent in the node array, so one reverse
    // sweep fills every box: leaves from their primitives, internal nodes
    // from their children.
    for (std::size_t i = bvh.nodes.size(); i-- > 0;) {
        BvhNode& node = bvh.nodes[i];
        if (node.is_leaf()) {
            Aabb box = bvh.prim_boxes[node.a];
            for (std::uint32_t s = node.a + 1; s < node.a + node.count; ++s) {
                box.grow(bvh.prim_boxes[s]);
            }
            node.box = box;
        } else {
            node.box = bvh.nodes[node.a].box;
            node.box.grow(bvh.nodes[node.b].box);
        }
    }
    return bvh;
}

}  // namespace raycut
