#pragma once

#include <optional>
#include <vector>

#include "gsq/graph.hpp"

namespace gsq {

using Color = int;

/// Per-vertex color lists. Lists are kept sorted and duplicate-free; color
/// ids are non-negative. An empty list is representable so that solvers can
/// report it, but never colorable.
class ListAssignment {
public:
    ListAssignment() = default;
    explicit ListAssignment(std::vector<std::vector<Color>> lists);

    /// Every one of `n` vertices gets {0, ..., size-1}.
    static ListAssignment uniform(int n, int size);

    int vertex_count() const noexcept { return static_cast<int>(lists_.size()); }
    const std::vector<Color>& list(Vertex v) const { return lists_.at(v); }
    std::size_t list_size(Vertex v) const { return lists_.at(v).size(); }
    bool contains(Vertex v, Color c) const;

    friend bool operator==(const ListAssignment&, const ListAssignment&) = default;

private:
    std::vector<std::vector<Color>> lists_;
};

/// Per-vertex optional color.
struct Coloring {
    std::vector<std::optional<Color>> colors;

    Coloring() = default;
    explicit Coloring(int n) : colors(static_cast<std::size_t>(n)) {}

    bool colored(Vertex v) const { return colors.at(v).has_value(); }
    bool complete() const;
    friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Colored vertices use colors from their lists and no edge is monochromatic.
bool is_proper(const Graph& g, const Coloring& c, const ListAssignment& lists);

/// Outcome of an exact list-coloring search. `empty_list` names the first
/// vertex whose list is empty when that is the reason for failure.
struct ListColoringResult {
    std::optional<Coloring> coloring;
    std::optional<Vertex> empty_list;

    bool satisfiable() const noexcept { return coloring.has_value(); }
};

/// Exact backtracking with forward checking. Vertices are visited in
/// ascending id order and colors tried in ascending order, so the result
/// is deterministic.
ListColoringResult list_color(const Graph& g, const ListAssignment& lists);

/// As list_color, keeping the colors already fixed in `partial`.
/// The precolored part must itself be proper.
ListColoringResult extend_coloring(const Graph& g, const ListAssignment& lists, const Coloring& partial);

/// True iff every assignment of k-lists admits a proper coloring.
/// Desk-scale only: |V| <= 12 and k <= 6, otherwise GuardError.
bool is_choosable(const Graph& g, int k);

/// True iff every assignment of lists with |L(v)| = sizes[v] admits a
/// proper coloring. Same guard as is_choosable (lists of size <= 7).
bool is_size_choosable(const Graph& g, const std::vector<int>& sizes);

/// Exact chromatic number, |V| <= 20.
int chromatic_number(const Graph& g);

/// Coloring in which vertices with a common neighbor get distinct colors.
ListColoringResult injective_list_color(const Graph& g, const ListAssignment& lists);

/// L(v) minus colors on colored neighbors of v in `g2`.
std::vector<Color> available_colors(const Graph& g2, Vertex v, const Coloring& partial,
                                    const ListAssignment& lists);

/// Result of greedy extension: `stuck` names the first vertex with nothing
/// available; the coloring holds everything assigned before that point.
struct Extension {
    Coloring coloring;
    std::optional<Vertex> stuck;

    bool succeeded() const noexcept { return !stuck.has_value(); }
};

/// Colors the vertices of `order` one by one with their lowest available
/// color. `order` must list exactly the uncolored vertices of `partial`.
Extension extend_in_order(const Graph& g2, const std::vector<Vertex>& order, const Coloring& partial,
                          const ListAssignment& lists);

/// Exact solver for lists with |L(v)| >= deg(v); |V| <= 20.
ListColoringResult degree_choosable_solve(const Graph& g, const ListAssignment& lists);

}  // namespace gsq
