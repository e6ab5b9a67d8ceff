#pragma once

// Small host graphs that embed one configuration each.

#include <algorithm>
#include <vector>

#include "gsq/graph.hpp"
#include "gsq/ruleset.hpp"

namespace hosts {

using gsq::Edge;
using gsq::Graph;
using gsq::Vertex;

struct Builder {
    int n = 0;
    std::vector<Edge> edges;

    Vertex add() { return n++; }
    void join(Vertex a, Vertex b) { edges.emplace_back(a, b); }
    // Path of `len` new 2-vertices from a to b; returns them in order.
    std::vector<Vertex> thread(Vertex a, Vertex b, int len) {
        std::vector<Vertex> inner;
        Vertex prev = a;
        for (int i = 0; i < len; ++i) {
            const Vertex x = add();
            join(prev, x);
            inner.push_back(x);
            prev = x;
        }
        join(prev, b);
        return inner;
    }
    void leaves(Vertex v, int count) {
        for (int i = 0; i < count; ++i) join(v, add());
    }
    Graph build() const { return Graph(n, edges); }
};

// Two vertices 0 and 1 joined by threads of the given lengths.
inline Graph theta(const std::vector<int>& lengths) {
    Builder b;
    const Vertex x = b.add(), y = b.add();
    for (int len : lengths) b.thread(x, y, len);
    return b.build();
}

// A thread of `len` 2-vertices whose ends get the given degrees from leaves.
inline Graph thread_host(int len, int deg_a, int deg_b) {
    Builder b;
    const Vertex x = b.add(), y = b.add();
    b.thread(x, y, len);
    b.leaves(x, deg_a - 1);
    b.leaves(y, deg_b - 1);
    return b.build();
}

// Every edge of g replaced by a path with `internal` new vertices.
inline Graph subdivided(const Graph& g, int internal) {
    Graph out = g;
    for (const auto& e : g.edges()) out = subdivide_edge(out, e, internal);
    return out;
}

// Root 0 with one realization per slot: thread slots get their required
// length (1 when any) and far ends of the largest allowed degree (capped
// at k); vertex slots get a neighbor of the largest allowed degree. Root
// directions beyond the slots lead to leaves.
inline Graph pattern_host(const gsq::LocalPattern& p, int k) {
    Builder b;
    const Vertex root = b.add();
    auto degree_in = [&](const std::optional<gsq::DegreeRange>& r) {
        if (!r) return 3;
        return std::max(1, std::min(r->hi, k));
    };
    for (const auto& s : p.slots) {
        const Vertex far = b.add();
        const int d = degree_in(s.target);
        if (s.kind == gsq::SelectorKind::incident_thread) {
            b.thread(root, far, s.thread_length ? s.thread_length : 1);
        } else {
            b.join(root, far);
        }
        b.leaves(far, d - 1);
    }
    b.leaves(root, p.root.lo - static_cast<int>(p.slots.size()));
    return b.build();
}

}  // namespace hosts
