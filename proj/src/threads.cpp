#include "gsq/threads.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <string>

#include "gsq/error.hpp"

namespace gsq {

ThreadSet::ThreadSet(const Graph& g) : owner_(static_cast<std::size_t>(g.vertex_count()), -1) {
    const int n = g.vertex_count();
    for (Vertex u = 0; u < n; ++u) {
        if (g.degree(u) == 2) continue;
        for (Vertex w : g.neighbors(u)) {
            if (g.degree(w) != 2 || owner_[w] >= 0) continue;
            Thread t{u, u, {}};
            const int index = static_cast<int>(threads_.size());
            Vertex prev = u, cur = w;
            while (g.degree(cur) == 2) {
                t.internal.push_back(cur);
                owner_[cur] = index;
                auto nb = g.neighbors(cur);
                Vertex next = nb[0] == prev ? nb[1] : nb[0];
                prev = cur;
                cur = next;
            }
            t.last = cur;
            threads_.push_back(std::move(t));
        }
    }
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) != 2 || owner_[v] >= 0 || seen[v]) continue;
        std::vector<Vertex> cyc;
        Vertex prev = -1, cur = v;
        while (!seen[cur]) {
            seen[cur] = 1;
            cyc.push_back(cur);
            auto nb = g.neighbors(cur);
            Vertex next = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = next;
        }
        cycles_.push_back(std::move(cyc));
    }
}

std::optional<int> ThreadSet::thread_via(Vertex from, Vertex step) const {
    if (step < 0 || step >= static_cast<int>(owner_.size()) || owner_[step] < 0) return std::nullopt;
    const Thread& t = threads_[owner_[step]];
    if ((t.first == from && t.internal.front() == step) || (t.last == from && t.internal.back() == step))
        return owner_[step];
    return std::nullopt;
}

std::optional<int> ThreadSet::thread_of(Vertex v) const {
    if (v < 0 || v >= static_cast<int>(owner_.size()) || owner_[v] < 0) return std::nullopt;
    return owner_[v];
}

ThreadSet find_threads(const Graph& g) { return ThreadSet(g); }

std::vector<WeakNeighbor> weak_neighbors(const Graph& g, Vertex v) {
    if (g.degree(v) < 3)
        throw PreconditionError("weak neighbors are defined for 3+-vertices; vertex " + std::to_string(v) +
                                " has degree " + std::to_string(g.degree(v)));
    ThreadSet threads(g);
    std::vector<WeakNeighbor> out;
    for (Vertex w : g.neighbors(v)) {
        auto t = threads.thread_via(v, w);
        if (!t) continue;
        const Thread& th = threads.threads()[*t];
        Vertex far = (th.first == v && th.internal.front() == w) ? th.last : th.first;
        out.push_back({far, th.length()});
    }
    return out;
}

int ThreadMultigraph::degree(Vertex node) const {
    int d = 0;
    for (const auto& [a, b] : ends) d += (a == node) + (b == node);
    return d;
}

ThreadMultigraph thread_multigraph(const Graph& g, const ThreadSet& threads, int length,
                                   const std::function<bool(Vertex)>& accept) {
    ThreadMultigraph mg;
    for (int i = 0; i < static_cast<int>(threads.threads().size()); ++i) {
        const Thread& t = threads.threads()[i];
        if (t.length() != length) continue;
        if (g.degree(t.first) < 3 || g.degree(t.last) < 3) continue;
        if (!accept(t.first) || !accept(t.last)) continue;
        mg.links.push_back(i);
        mg.ends.emplace_back(t.first, t.last);
        mg.nodes.push_back(t.first);
        mg.nodes.push_back(t.last);
    }
    std::sort(mg.nodes.begin(), mg.nodes.end());
    mg.nodes.erase(std::unique(mg.nodes.begin(), mg.nodes.end()), mg.nodes.end());
    return mg;
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

int node_index(const ThreadMultigraph& mg, Vertex v) {
    return static_cast<int>(std::lower_bound(mg.nodes.begin(), mg.nodes.end(), v) - mg.nodes.begin());
}

}  // namespace

std::vector<MultigraphComponent> components(const ThreadMultigraph& mg) {
    Dsu dsu(mg.nodes.size());
    for (const auto& [a, b] : mg.ends) dsu.unite(node_index(mg, a), node_index(mg, b));
    std::map<int, MultigraphComponent> by_root;
    for (std::size_t i = 0; i < mg.nodes.size(); ++i) by_root[dsu.find(static_cast<int>(i))].nodes.push_back(mg.nodes[i]);
    for (std::size_t l = 0; l < mg.ends.size(); ++l)
        by_root[dsu.find(node_index(mg, mg.ends[l].first))].links.push_back(static_cast<int>(l));
    std::vector<MultigraphComponent> out;
    for (auto& [root, comp] : by_root) out.push_back(std::move(comp));
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.nodes.front() < y.nodes.front(); });
    return out;
}

std::vector<MultigraphCycle> fundamental_cycles(const ThreadMultigraph& mg) {
    const std::size_t n = mg.nodes.size();
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor index, link position)
    for (std::size_t l = 0; l < mg.ends.size(); ++l) {
        int a = node_index(mg, mg.ends[l].first), b = node_index(mg, mg.ends[l].second);
        adj[a].emplace_back(b, static_cast<int>(l));
        if (a != b) adj[b].emplace_back(a, static_cast<int>(l));
    }
    std::vector<int> parent(n, -1), parent_link(n, -1), depth(n, -1);
    std::vector<char> tree_link(mg.ends.size(), 0);
    for (std::size_t root = 0; root < n; ++root) {
        if (depth[root] >= 0) continue;
        depth[root] = 0;
        std::deque<int> queue{static_cast<int>(root)};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (auto [w, l] : adj[u]) {
                if (depth[w] >= 0) continue;
                depth[w] = depth[u] + 1;
                parent[w] = u;
                parent_link[w] = l;
                tree_link[l] = 1;
                queue.push_back(w);
            }
        }
    }
    std::vector<MultigraphCycle> out;
    for (std::size_t l = 0; l < mg.ends.size(); ++l) {
        if (tree_link[l]) continue;
        int a = node_index(mg, mg.ends[l].first), b = node_index(mg, mg.ends[l].second);
        // walk both ends up to their lowest common ancestor
        std::vector<std::pair<int, int>> up_a, up_b;  // (node, link to parent)
        int x = a, y = b;
        while (depth[x] > depth[y]) { up_a.emplace_back(x, parent_link[x]); x = parent[x]; }
        while (depth[y] > depth[x]) { up_b.emplace_back(y, parent_link[y]); y = parent[y]; }
        while (x != y) {
            up_a.emplace_back(x, parent_link[x]);
            x = parent[x];
            up_b.emplace_back(y, parent_link[y]);
            y = parent[y];
        }
        MultigraphCycle cyc;
        // a -> ... -> lca -> ... -> b -> (link l) -> a
        for (auto [node, link] : up_a) {
            cyc.nodes.push_back(mg.nodes[node]);
            cyc.links.push_back(link);
        }
        cyc.nodes.push_back(mg.nodes[x]);
        for (auto it = up_b.rbegin(); it != up_b.rend(); ++it) {
            cyc.links.push_back(it->second);
            cyc.nodes.push_back(mg.nodes[it->first]);
        }
        cyc.links.push_back(static_cast<int>(l));
        out.push_back(std::move(cyc));
    }
    return out;
}

std::vector<Direction> directions(const Graph& g, const ThreadSet& threads, Vertex v) {
    if (g.degree(v) == 2) throw PreconditionError("directions are defined for non-2-vertices");
    std::vector<Direction> out;
    for (Vertex w : g.neighbors(v)) {
        if (g.degree(w) != 2) {
            out.push_back({w, std::nullopt, w, 0});
            continue;
        }
        const int t = *threads.thread_via(v, w);
        const Thread& th = threads.threads()[t];
        out.push_back({w, t, th.first == v && th.internal.front() == w ? th.last : th.first, th.length()});
    }
    return out;
}

}  // namespace gsq
