#include "gsq/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "gsq/error.hpp"

namespace gsq {

Graph::Graph(int vertex_count, std::vector<Edge> edges) {
    if (vertex_count < 0) throw PreconditionError("negative vertex count");
    adjacency_.resize(static_cast<std::size_t>(vertex_count));
    for (auto& e : edges) {
        if (e.first == e.second)
            throw PreconditionError("loop at vertex " + std::to_string(e.first));
        if (!has_vertex(e.first) || !has_vertex(e.second))
            throw PreconditionError("edge endpoint out of range: " + std::to_string(e.first) + " " +
                                    std::to_string(e.second));
        e = make_edge(e.first, e.second);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        throw PreconditionError("parallel edge " + std::to_string(dup->first) + " " +
                                std::to_string(dup->second));
    for (const auto& [a, b] : edges) {
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
    edges_ = std::move(edges);
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
    if (!has_vertex(v)) throw PreconditionError("invalid vertex id " + std::to_string(v));
    return adjacency_[v];
}

int Graph::degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

int Graph::max_degree() const noexcept {
    std::size_t best = 0;
    for (const auto& list : adjacency_) best = std::max(best, list.size());
    return static_cast<int>(best);
}

bool Graph::adjacent(Vertex a, Vertex b) const {
    auto list = neighbors(a);
    if (!has_vertex(b)) throw PreconditionError("invalid vertex id " + std::to_string(b));
    return std::binary_search(list.begin(), list.end(), b);
}

std::vector<int> distances_from(const Graph& g, Vertex source) {
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    std::deque<Vertex> queue{source};
    dist.at(source) = 0;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::optional<int> girth(const Graph& g) {
    std::optional<int> best;
    const int n = g.vertex_count();
    std::vector<int> dist(n), parent(n);
    for (Vertex root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<Vertex> queue{root};
        dist[root] = 0;
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            if (best && 2 * dist[u] >= *best) break;
            for (Vertex w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (parent[u] != w) {
                    int len = dist[u] + dist[w] + 1;
                    if (!best || len < *best) best = len;
                }
            }
        }
    }
    return best;
}

Graph square(const Graph& g) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        std::vector<Vertex> reach;
        for (Vertex w : g.neighbors(u)) {
            reach.push_back(w);
            for (Vertex x : g.neighbors(w)) reach.push_back(x);
        }
        std::sort(reach.begin(), reach.end());
        reach.erase(std::unique(reach.begin(), reach.end()), reach.end());
        for (Vertex w : reach)
            if (w > u) edges.emplace_back(u, w);
    }
    return Graph(g.vertex_count(), std::move(edges));
}

Graph common_neighbor_graph(const Graph& g) {
    std::vector<Edge> edges;
    for (Vertex c = 0; c < g.vertex_count(); ++c) {
        auto nb = g.neighbors(c);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) edges.push_back(make_edge(nb[i], nb[j]));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(g.vertex_count(), std::move(edges));
}

Graph subdivide_edge(const Graph& g, const Edge& e, int internal) {
    if (internal < 1) throw PreconditionError("subdivision count must be positive");
    if (!g.has_vertex(e.first) || !g.has_vertex(e.second) || !g.has_edge(e))
        throw PreconditionError("edge " + std::to_string(e.first) + " " + std::to_string(e.second) +
                                " not in graph");
    std::vector<Edge> edges;
    const Edge target = make_edge(e.first, e.second);
    for (const auto& f : g.edges())
        if (f != target) edges.push_back(f);
    Vertex prev = e.first;
    Vertex next_id = g.vertex_count();
    for (int i = 0; i < internal; ++i) {
        edges.emplace_back(prev, next_id);
        prev = next_id++;
    }
    edges.emplace_back(prev, e.second);
    return Graph(next_id, std::move(edges));
}

Contraction contract_edge(const Graph& g, const Edge& e) {
    if (!g.has_vertex(e.first) || !g.has_vertex(e.second) || !g.has_edge(e))
        throw PreconditionError("edge " + std::to_string(e.first) + " " + std::to_string(e.second) +
                                " not in graph");
    const Vertex keep = std::min(e.first, e.second);
    const Vertex gone = std::max(e.first, e.second);
    Contraction out;
    out.old_to_new.resize(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        out.old_to_new[v] = v == gone ? keep : (v > gone ? v - 1 : v);
    std::vector<Edge> edges;
    for (const auto& [a, b] : g.edges()) {
        Vertex x = out.old_to_new[a], y = out.old_to_new[b];
        if (x != y) edges.push_back(make_edge(x, y));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    out.graph = Graph(g.vertex_count() - 1, std::move(edges));
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
    InducedSubgraph out;
    out.old_to_new.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<Vertex> sorted(keep.begin(), keep.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v : sorted) {
        if (!g.has_vertex(v)) throw PreconditionError("invalid vertex id " + std::to_string(v));
        out.old_to_new[v] = static_cast<Vertex>(out.new_to_old.size());
        out.new_to_old.push_back(v);
    }
    std::vector<Edge> edges;
    for (const auto& [a, b] : g.edges())
        if (out.old_to_new[a] >= 0 && out.old_to_new[b] >= 0)
            edges.emplace_back(out.old_to_new[a], out.old_to_new[b]);
    out.graph = Graph(static_cast<int>(sorted.size()), std::move(edges));
    return out;
}

InducedSubgraph remove_vertices(const Graph& g, std::span<const Vertex> drop) {
    std::vector<char> dropped(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex v : drop) {
        if (!g.has_vertex(v)) throw PreconditionError("invalid vertex id " + std::to_string(v));
        dropped[v] = 1;
    }
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!dropped[v]) keep.push_back(v);
    return induced_subgraph(g, keep);
}

namespace graphs {

Graph path(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

Graph cycle(int n) {
    if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(edges));
}

Graph complete(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

Graph petersen() {
    // outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        edges.emplace_back(i, i + 5);
    }
    return Graph(10, std::move(edges));
}

}  // namespace graphs

}  // namespace gsq
