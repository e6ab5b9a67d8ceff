#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace gsq {

/// Dense 0-based vertex index.
using Vertex = int;

/// Unordered edge, stored with first < second.
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Immutable simple undirected graph.
///
/// Construction validates the edge list: loops, parallel edges and
/// out-of-range endpoints are rejected with PreconditionError. Adjacency
/// lists are sorted, and the edge list is sorted lexicographically.
class Graph {
public:
    Graph() = default;
    Graph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const;

    int degree(Vertex v) const;
    int max_degree() const noexcept;
    bool has_vertex(Vertex v) const noexcept { return v >= 0 && v < vertex_count(); }
    bool adjacent(Vertex a, Vertex b) const;
    bool has_edge(const Edge& e) const { return adjacent(e.first, e.second); }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<Edge> edges_;
};

/// Length of a shortest cycle, or nullopt for a forest.
std::optional<int> girth(const Graph& g);

/// Same vertices; u ~ w iff 1 <= dist(u, w) <= 2.
Graph square(const Graph& g);

/// Graph on the same vertices where u ~ w iff u != w share a neighbor.
Graph common_neighbor_graph(const Graph& g);

/// BFS distances from `source`; -1 marks unreachable vertices.
std::vector<int> distances_from(const Graph& g, Vertex source);

/// Replaces edge `e` by a path with `internal` new vertices. New ids are
/// appended in order from e.first towards e.second.
Graph subdivide_edge(const Graph& g, const Edge& e, int internal);

struct Contraction {
    Graph graph;
    /// old id -> new id; the two endpoints map to the same new id.
    std::vector<Vertex> old_to_new;
};

/// Merges the endpoints of `e` into the smaller id, drops the loop and
/// merges parallel edges. Ids above the removed endpoint shift down by one.
Contraction contract_edge(const Graph& g, const Edge& e);

struct InducedSubgraph {
    Graph graph;
    /// old id -> new id, -1 when the vertex is not kept.
    std::vector<Vertex> old_to_new;
    std::vector<Vertex> new_to_old;
};

/// Subgraph induced by `keep`; new ids follow ascending old ids.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

/// Graph minus the vertices in `drop`, keeping the remaining ids compacted.
InducedSubgraph remove_vertices(const Graph& g, std::span<const Vertex> drop);

namespace graphs {
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph petersen();
}  // namespace graphs

}  // namespace gsq
