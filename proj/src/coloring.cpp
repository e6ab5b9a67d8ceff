#include "gsq/coloring.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "gsq/error.hpp"

namespace gsq {

ListAssignment::ListAssignment(std::vector<std::vector<Color>> lists) : lists_(std::move(lists)) {
    for (auto& list : lists_) {
        for (Color c : list)
            if (c < 0) throw PreconditionError("negative color id " + std::to_string(c));
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
}

ListAssignment ListAssignment::uniform(int n, int size) {
    std::vector<Color> base(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) base[i] = i;
    return ListAssignment(std::vector<std::vector<Color>>(static_cast<std::size_t>(n), base));
}

bool ListAssignment::contains(Vertex v, Color c) const {
    const auto& l = lists_.at(v);
    return std::binary_search(l.begin(), l.end(), c);
}

bool Coloring::complete() const {
    return std::all_of(colors.begin(), colors.end(), [](const auto& c) { return c.has_value(); });
}

bool is_proper(const Graph& g, const Coloring& c, const ListAssignment& lists) {
    if (static_cast<int>(c.colors.size()) != g.vertex_count()) return false;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (c.colors[v] && !lists.contains(v, *c.colors[v])) return false;
    for (const auto& [a, b] : g.edges())
        if (c.colors[a] && c.colors[b] && *c.colors[a] == *c.colors[b]) return false;
    return true;
}

namespace {

void check_cover(const Graph& g, const ListAssignment& lists) {
    if (lists.vertex_count() != g.vertex_count())
        throw PreconditionError("list assignment covers " + std::to_string(lists.vertex_count()) +
                                " vertices, graph has " + std::to_string(g.vertex_count()));
}

// Backtracking with forward checking over the uncolored vertices in id order.
class Search {
public:
    Search(const Graph& g, const ListAssignment& lists, const Coloring& partial)
        : g_(g), result_(partial) {
        const int n = g.vertex_count();
        domain_.resize(n);
        removed_.resize(n);
        alive_.assign(n, 0);
        for (Vertex v = 0; v < n; ++v) {
            if (partial.colored(v)) continue;
            order_.push_back(v);
            for (Color c : lists.list(v)) {
                bool blocked = false;
                for (Vertex w : g.neighbors(v))
                    if (partial.colors[w] == c) blocked = true;
                if (!blocked) domain_[v].push_back(c);
            }
            removed_[v].assign(domain_[v].size(), 0);
            alive_[v] = static_cast<int>(domain_[v].size());
        }
    }

    std::optional<Coloring> run() {
        for (Vertex v : order_)
            if (alive_[v] == 0) return std::nullopt;
        if (!dfs(0)) return std::nullopt;
        return result_;
    }

private:
    bool dfs(std::size_t idx) {
        if (idx == order_.size()) return true;
        const Vertex v = order_[idx];
        const int depth = static_cast<int>(idx) + 1;
        for (std::size_t i = 0; i < domain_[v].size(); ++i) {
            if (removed_[v][i]) continue;
            const Color c = domain_[v][i];
            bool wiped = false;
            for (Vertex w : g_.neighbors(v)) {
                if (result_.colors[w]) continue;
                auto& dom = domain_[w];
                auto it = std::lower_bound(dom.begin(), dom.end(), c);
                if (it == dom.end() || *it != c) continue;
                auto pos = static_cast<std::size_t>(it - dom.begin());
                if (removed_[w][pos]) continue;
                removed_[w][pos] = depth;
                if (--alive_[w] == 0) wiped = true;
            }
            result_.colors[v] = c;
            if (!wiped && dfs(idx + 1)) return true;
            result_.colors[v].reset();
            for (Vertex w : g_.neighbors(v)) {
                if (result_.colors[w]) continue;
                auto& dom = domain_[w];
                auto it = std::lower_bound(dom.begin(), dom.end(), c);
                if (it == dom.end() || *it != c) continue;
                auto pos = static_cast<std::size_t>(it - dom.begin());
                if (removed_[w][pos] == depth) {
                    removed_[w][pos] = 0;
                    ++alive_[w];
                }
            }
        }
        return false;
    }

    const Graph& g_;
    Coloring result_;
    std::vector<Vertex> order_;
    std::vector<std::vector<Color>> domain_;
    std::vector<std::vector<int>> removed_;
    std::vector<int> alive_;
};

}  // namespace

ListColoringResult extend_coloring(const Graph& g, const ListAssignment& lists, const Coloring& partial) {
    check_cover(g, lists);
    if (static_cast<int>(partial.colors.size()) != g.vertex_count())
        throw PreconditionError("partial coloring has the wrong size");
    if (!is_proper(g, partial, lists)) throw PreconditionError("precolored part is not proper");
    ListColoringResult out;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (!partial.colored(v) && lists.list_size(v) == 0) {
            out.empty_list = v;
            return out;
        }
    }
    out.coloring = Search(g, lists, partial).run();
    return out;
}

ListColoringResult list_color(const Graph& g, const ListAssignment& lists) {
    return extend_coloring(g, lists, Coloring(g.vertex_count()));
}

namespace {

}  // namespace

namespace {

// Exhaustive size-choosability on vertex subsets of a graph with at most 12
// vertices. If every G-v passes, an assignment where some v holds a color
// no neighbor lists is colorable (color G-v, then v with that color), so
// only assignments where every listed color is shared with a neighbor are
// enumerated, one per color renaming.
class SizeChoosability {
public:
    SizeChoosability(const Graph& g, const std::vector<int>& sizes) : g_(g), sizes_(sizes) {}

    bool check(std::uint32_t mask) {
        const std::uint32_t core = peel(mask);
        if (core == 0) return true;
        if (auto it = memo_.find(core); it != memo_.end()) return it->second;
        bool ok = true;
        for (Vertex v = 0; v < g_.vertex_count() && ok; ++v)
            if (core >> v & 1) ok = check(core & ~(1u << v));
        if (ok) ok = enumerate(core);
        memo_.emplace(core, ok);
        return ok;
    }

private:
    std::uint32_t peel(std::uint32_t mask) const {
        for (bool changed = true; changed;) {
            changed = false;
            for (Vertex v = 0; v < g_.vertex_count(); ++v) {
                if (!(mask >> v & 1)) continue;
                int deg = 0;
                for (Vertex w : g_.neighbors(v)) deg += mask >> w & 1;
                if (deg < sizes_[v]) {
                    mask &= ~(1u << v);
                    changed = true;
                }
            }
        }
        return mask;
    }

    bool enumerate(std::uint32_t mask) const {
        std::vector<Vertex> members;
        for (Vertex v = 0; v < g_.vertex_count(); ++v)
            if (mask >> v & 1) members.push_back(v);
        const Graph h = induced_subgraph(g_, members).graph;
        const int n = h.vertex_count();

        // breadth-first order so neighborhoods close early
        std::vector<Vertex> order;
        std::vector<int> pos(n, -1);
        for (Vertex root = 0; root < n; ++root) {
            if (pos[root] >= 0) continue;
            pos[root] = static_cast<int>(order.size());
            order.push_back(root);
            for (std::size_t i = order.size() - 1; i < order.size(); ++i)
                for (Vertex w : h.neighbors(order[i]))
                    if (pos[w] < 0) {
                        pos[w] = static_cast<int>(order.size());
                        order.push_back(w);
                    }
        }
        // vertices whose closed neighborhood is fully listed at each step
        std::vector<std::vector<Vertex>> closes(n);
        for (Vertex v = 0; v < n; ++v) {
            int last = pos[v];
            for (Vertex w : h.neighbors(v)) last = std::max(last, pos[w]);
            closes[last].push_back(v);
        }

        std::vector<std::vector<Color>> lists(n);
        auto supported = [&](Vertex v) {
            for (Color c : lists[v]) {
                bool shared = false;
                for (Vertex w : h.neighbors(v))
                    if (std::binary_search(lists[w].begin(), lists[w].end(), c)) shared = true;
                if (!shared) return false;
            }
            return true;
        };
        std::function<bool(int, int)> all_colorable = [&](int step, int used) -> bool {
            if (step == n) return list_color(h, ListAssignment(lists)).satisfiable();
            const Vertex v = order[step];
            const int k = sizes_[members[v]];
            for (int old = std::min(k, used); old >= 0; --old) {
                const int fresh = k - old;
                std::vector<int> pick(static_cast<std::size_t>(old));
                for (int i = 0; i < old; ++i) pick[i] = i;
                for (;;) {
                    auto& list = lists[v];
                    list.assign(pick.begin(), pick.end());
                    for (int i = 0; i < fresh; ++i) list.push_back(used + i);
                    bool viable = true;
                    for (Vertex w : closes[step]) viable = viable && supported(w);
                    if (viable && !all_colorable(step + 1, used + fresh)) return false;
                    int i = old - 1;
                    while (i >= 0 && pick[i] == used - old + i) --i;
                    if (i < 0) break;
                    ++pick[i];
                    for (int j = i + 1; j < old; ++j) pick[j] = pick[j - 1] + 1;
                }
            }
            lists[v].clear();
            return true;
        };
        return all_colorable(0, 0);
    }

    const Graph& g_;
    const std::vector<int>& sizes_;
    std::map<std::uint32_t, bool> memo_;
};

}  // namespace

bool is_size_choosable(const Graph& g, const std::vector<int>& sizes) {
    if (static_cast<int>(sizes.size()) != g.vertex_count())
        throw PreconditionError("one list size per vertex required");
    if (g.vertex_count() > 12) throw GuardError("choosability checks are limited to 12 vertices");
    for (int s : sizes) {
        if (s > 7) throw GuardError("choosability checks are limited to lists of size 7");
        if (s <= 0) return false;
    }
    SizeChoosability search(g, sizes);
    return search.check(g.vertex_count() == 0 ? 0u : (1u << g.vertex_count()) - 1);
}

bool is_choosable(const Graph& g, int k) {
    if (k < 1) throw PreconditionError("k must be positive");
    if (g.vertex_count() > 12 || k > 6)
        throw GuardError("is_choosable is limited to 12 vertices and k <= 6");
    return is_size_choosable(g, std::vector<int>(static_cast<std::size_t>(g.vertex_count()), k));
}

int chromatic_number(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 20) throw GuardError("chromatic_number is limited to 20 vertices");
    if (n == 0) return 0;
    std::vector<Color> color(n, -1);
    std::function<bool(int, int, int)> colorable = [&](int v, int used, int limit) -> bool {
        if (v == n) return true;
        // symmetry breaking: a vertex may open at most one new color
        for (int c = 0; c <= std::min(used, limit - 1); ++c) {
            bool clash = false;
            for (Vertex w : g.neighbors(v))
                if (w < v && color[w] == c) clash = true;
            if (clash) continue;
            color[v] = c;
            if (colorable(v + 1, std::max(used, c + 1), limit)) return true;
        }
        color[v] = -1;
        return false;
    };
    for (int c = 1;; ++c)
        if (colorable(0, 0, c)) return c;
}

ListColoringResult injective_list_color(const Graph& g, const ListAssignment& lists) {
    return list_color(common_neighbor_graph(g), lists);
}

std::vector<Color> available_colors(const Graph& g2, Vertex v, const Coloring& partial,
                                    const ListAssignment& lists) {
    if (partial.colored(v)) throw PreconditionError("vertex " + std::to_string(v) + " is already colored");
    std::vector<Color> out;
    for (Color c : lists.list(v)) {
        bool used = false;
        for (Vertex w : g2.neighbors(v))
            if (partial.colors[w] == c) used = true;
        if (!used) out.push_back(c);
    }
    return out;
}

Extension extend_in_order(const Graph& g2, const std::vector<Vertex>& order, const Coloring& partial,
                          const ListAssignment& lists) {
    check_cover(g2, lists);
    std::vector<char> listed(static_cast<std::size_t>(g2.vertex_count()), 0);
    for (Vertex v : order) {
        if (!g2.has_vertex(v) || partial.colored(v) || listed[v])
            throw PreconditionError("order must list each uncolored vertex exactly once");
        listed[v] = 1;
    }
    for (Vertex v = 0; v < g2.vertex_count(); ++v)
        if (!partial.colored(v) && !listed[v])
            throw PreconditionError("order misses uncolored vertex " + std::to_string(v));
    Extension out{partial, std::nullopt};
    for (Vertex v : order) {
        auto avail = available_colors(g2, v, out.coloring, lists);
        if (avail.empty()) {
            out.stuck = v;
            return out;
        }
        out.coloring.colors[v] = avail.front();
    }
    return out;
}

ListColoringResult degree_choosable_solve(const Graph& g, const ListAssignment& lists) {
    check_cover(g, lists);
    if (g.vertex_count() > 20) throw GuardError("degree_choosable_solve is limited to 20 vertices");
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (static_cast<int>(lists.list_size(v)) < g.degree(v))
            throw PreconditionError("list of vertex " + std::to_string(v) + " is shorter than its degree");
    return list_color(g, lists);
}

}  // namespace gsq
