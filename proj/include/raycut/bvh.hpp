#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "raycut/geom.hpp"

namespace raycut {

// Binary BVH node. count > 0 marks a leaf owning prim_order slots
// [a, a + count); internal nodes store their children in a and b.
struct BvhNode {
    Aabb box;
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    std::uint32_t count = 0;

    bool is_leaf() const { return count > 0; }
};

inline constexpr int kBvhMaxStack = 64;

struct Bvh {
    std::vector<BvhNode> nodes;              // nodes[0] is the root
    std::vector<std::uint32_t> prim_order;   // slot -> original primitive index
    std::vector<Aabb> prim_boxes;            // primitive boxes in slot order
    int leaf_size = 4;

    bool empty() const { return nodes.empty(); }
    std::size_t prim_count() const { return prim_order.size(); }
};

enum class BvhBuild {
    // Median split on the longest axis of the centroid extent, recursing
    // until a node holds at most leaf_size primitives.
    MedianSplit,
    // Stable radix sort of the centroid Morton codes followed by balanced
    // index-median splits: same tree shape guarantees, near-linear build
    // cost. The scene engines use this mode; their build time is part of
    // the benchmark.
    MortonOrdered,
};

// Deterministic top-down build: identical inputs produce identical node
// arrays in either mode.
Bvh bvh_build(std::span<const Aabb> boxes, int leaf_size = 4,
              BvhBuild mode = BvhBuild::MedianSplit);

// Walks every leaf whose boxes overlap the segment and invokes the visitor
// once per primitive whose own AABB overlaps it (per ray_aabb). The visitor
// returns true to continue, false to stop the traversal. Returns the number
// of invocations.
template <class Visitor>
std::size_t bvh_traverse_anyhit(const Bvh& bvh, const RaySeg& seg, Visitor&& visit) {
    if (bvh.empty()) return 0;
    std::uint32_t stack[kBvhMaxStack];
    int top = 0;
    stack[top++] = 0;
    std::size_t visits = 0;
    while (top > 0) {
        const BvhNode& node = bvh.nodes[stack[--top]];
        if (!ray_aabb(seg, node.box)) continue;
        if (node.is_leaf()) {
            for (std::uint32_t s = node.a; s < node.a + node.count; ++s) {
                if (!ray_aabb(seg, bvh.prim_boxes[s])) continue;
                ++visits;
                if (!visit(bvh.prim_order[s])) return visits;
            }
        } else {
            if (top + 2 > kBvhMaxStack) throw std::runtime_error("bvh traversal stack overflow");
            stack[top++] = node.a;
            stack[top++] = node.b;
        }
    }
    return visits;
}

// Point query: visits every primitive whose (closed) box contains p.
template <class Visitor>
std::size_t bvh_traverse_point(const Bvh& bvh, const Vec3& p, Visitor&& visit) {
    if (bvh.empty()) return 0;
    std::uint32_t stack[kBvhMaxStack];
    int top = 0;
    stack[top++] = 0;
    std::size_t visits = 0;
    while (top > 0) {
        const BvhNode& node = bvh.nodes[stack[--top]];
        if (!node.box.contains(p)) continue;
        if (node.is_leaf()) {
            for (std::uint32_t s = node.a; s < node.a + node.count; ++s) {
                if (!bvh.prim_boxes[s].contains(p)) continue;
                ++visits;
                if (!visit(bvh.prim_order[s])) return visits;
            }
        } else {
            if (top + 2 > kBvhMaxStack) throw std::runtime_error("bvh traversal stack overflow");
            stack[top++] = node.a;
            stack[top++] = node.b;
        }
    }
    return visits;
}

// Closest-hit query over an arbitrary primitive intersector
// (prim_idx, seg) -> optional<Hit>. Used by the debug renderer.
template <class Intersect>
std::optional<Hit> bvh_closest_hit(const Bvh& bvh, const RaySeg& seg, Intersect&& intersect) {
    std::optional<Hit> best;
    RaySeg clipped = seg;
    bvh_traverse_anyhit(bvh, clipped, [&](std::uint32_t prim) {
        if (auto h = intersect(prim, clipped)) {
            if (!best || h->t < best->t) {
                best = *h;
                clipped.t_end = h->t;  // shrink the active interval
            }
        }
        return true;
    });
    return best;
}

}  // namespace raycut
