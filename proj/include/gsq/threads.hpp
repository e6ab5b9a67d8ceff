#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "gsq/graph.hpp"

namespace gsq {

/// A maximal path whose internal vertices all have degree 2.
///
/// Endpoints are non-2-vertices. They have degree >= 3 whenever the graph
/// has minimum degree 2; pendant paths end at a 1-vertex. The two endpoints
/// coincide for a thread that closes a cycle through a single vertex.
struct Thread {
    Vertex first;
    Vertex last;
    /// 2-vertices ordered from `first` to `last`.
    std::vector<Vertex> internal;

    int length() const noexcept { return static_cast<int>(internal.size()); }
    bool is_loop() const noexcept { return first == last; }
    /// The endpoint opposite to `end` (for a loop, `end` itself).
    Vertex other_end(Vertex end) const { return end == first ? last : first; }

    friend bool operator==(const Thread&, const Thread&) = default;
};

/// Maximal threads of a graph plus its components made only of 2-vertices.
class ThreadSet {
public:
    ThreadSet() = default;
    explicit ThreadSet(const Graph& g);

    const std::vector<Thread>& threads() const noexcept { return threads_; }
    /// Each inner vector is one cycle component, in cyclic order.
    const std::vector<std::vector<Vertex>>& two_vertex_cycles() const noexcept { return cycles_; }

    /// Thread entered by leaving `from` towards its 2-neighbor `step`.
    std::optional<int> thread_via(Vertex from, Vertex step) const;
    /// Thread containing the 2-vertex `v`, if any.
    std::optional<int> thread_of(Vertex v) const;

private:
    std::vector<Thread> threads_;
    std::vector<std::vector<Vertex>> cycles_;
    std::vector<int> owner_;  // 2-vertex -> thread index, -1 otherwise
};

/// All maximal threads; see ThreadSet.
ThreadSet find_threads(const Graph& g);

/// One incident edge of a non-2-vertex, entering a thread or leading
/// directly to another non-2-vertex.
struct Direction {
    Vertex neighbor;
    /// Index into the ThreadSet when `neighbor` is a 2-vertex.
    std::optional<int> thread;
    /// Far end of the thread, or `neighbor` itself.
    Vertex far;
    int thread_length = 0;

    bool enters_thread() const noexcept { return thread.has_value(); }
};

/// Directions of `v` in neighbor order. Requires deg(v) != 2.
std::vector<Direction> directions(const Graph& g, const ThreadSet& threads, Vertex v);

struct WeakNeighbor {
    Vertex vertex;
    int thread_length;
    friend bool operator==(const WeakNeighbor&, const WeakNeighbor&) = default;
};

/// Far endpoints of the threads leaving `v`, one entry per incident
/// thread direction. Requires deg(v) >= 3.
std::vector<WeakNeighbor> weak_neighbors(const Graph& g, Vertex v);

/// Multigraph whose links are the threads of one class, between their
/// endpoints. Loops and parallel links are allowed.
struct ThreadMultigraph {
    std::vector<Vertex> nodes;           // sorted
    std::vector<int> links;              // thread indices into the ThreadSet
    std::vector<std::pair<Vertex, Vertex>> ends;  // endpoints per link

    /// Degree of `node` counting a loop twice.
    int degree(Vertex node) const;
};

/// Links = threads of exactly `length` whose endpoints both satisfy `accept`.
ThreadMultigraph thread_multigraph(const Graph& g, const ThreadSet& threads, int length,
                                   const std::function<bool(Vertex)>& accept);

/// Connected components of a thread multigraph as (node list, link list)
/// with link entries being positions in `mg.links`.
struct MultigraphComponent {
    std::vector<Vertex> nodes;
    std::vector<int> links;
};
std::vector<MultigraphComponent> components(const ThreadMultigraph& mg);

/// One cycle per link outside a spanning forest: the fundamental cycles.
/// Each cycle is a closed sequence of (node, link position) steps.
struct MultigraphCycle {
    std::vector<Vertex> nodes;  // node i is followed by links[i]
    std::vector<int> links;
};
std::vector<MultigraphCycle> fundamental_cycles(const ThreadMultigraph& mg);

}  // namespace gsq
