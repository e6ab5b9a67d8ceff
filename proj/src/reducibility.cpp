#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "gsq/coloring.hpp"
#include "gsq/configurations.hpp"
#include "gsq/error.hpp"

namespace gsq {

namespace {

std::vector<Vertex> sorted_unique(std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

const std::vector<Vertex>& roles_of(const ConfigurationInstance& inst, const std::string& name) {
    static const std::vector<Vertex> none;
    auto it = inst.roles.find(name);
    return it == inst.roles.end() ? none : it->second;
}

}  // namespace

Reduction reduction_of(const ConfigurationInstance& inst) {
    Reduction r;
    switch (inst.kind) {
        case ConfigurationKind::C0:
            r.remove = {inst.role("v")};
            r.order = r.remove;
            break;
        case ConfigurationKind::C1:
        case ConfigurationKind::C2:
        case ConfigurationKind::C3:
            r.order = {inst.role("u"), inst.role("v")};
            r.remove = sorted_unique(r.order);
            break;
        case ConfigurationKind::C4:
        case ConfigurationKind::C5: {
            const auto& seq = roles_of(inst, "cycle");
            const std::size_t period = inst.kind == ConfigurationKind::C4 ? 4 : 3;
            for (std::size_t i = 0; i < seq.size(); ++i)
                if ((i + 1) % period != 0) r.remove.push_back(seq[i]);
            r.remove = sorted_unique(r.remove);
            break;
        }
        case ConfigurationKind::C6: {
            const auto& seq = roles_of(inst, "cycle");
            const Vertex pivot = inst.role("pivot");
            const auto& extra = roles_of(inst, "extra");
            r.remove = {pivot, extra.at(0)};
            // the pivot's two cycle neighbors
            const auto at = std::find(seq.begin(), seq.end(), pivot) - seq.begin();
            const std::size_t n = seq.size();
            r.remove.push_back(seq[(at + 1) % n]);
            r.remove.push_back(seq[(at + n - 1) % n]);
            r.remove = sorted_unique(r.remove);
            for (std::size_t i = 0; i < n; i += 2)
                if (!std::binary_search(r.remove.begin(), r.remove.end(), seq[i])) r.recolor.push_back(seq[i]);
            r.recolor = sorted_unique(r.recolor);
            break;
        }
        case ConfigurationKind::Cshort:
            for (Vertex x : roles_of(inst, "cycle"))
                if (roles_of(inst, "anchor") != std::vector<Vertex>{x}) r.remove.push_back(x);
            r.remove = sorted_unique(r.remove);
            break;
        case ConfigurationKind::Local: {
            if (!inst.pattern) throw PreconditionError("local instance without a pattern");
            auto resolve = [&](const std::vector<std::string>& names) {
                std::vector<Vertex> out;
                for (const auto& n : names) out.push_back(inst.role(n));
                return out;
            };
            r.remove = sorted_unique(resolve(inst.pattern->plan.remove));
            r.recolor = sorted_unique(resolve(inst.pattern->plan.recolor));
            r.order = resolve(inst.pattern->plan.order);
            break;
        }
    }
    return r;
}

namespace {

struct Setting {
    const Graph& g;
    int k;
    Reduction plan;
    Graph g2;
    std::vector<char> uncolored;        // in remove or recolor
    std::vector<Vertex> pending;        // uncolored vertices, sorted
    std::vector<Vertex> boundary;       // colored G^2-neighbors of pending
    std::vector<std::pair<Vertex, Vertex>> lost;  // colored pairs adjacent in G^2 only
    Graph reduced2;                     // square of G - remove, on g's ids

    Setting(const Graph& graph, int k_, Reduction r) : g(graph), k(k_), plan(std::move(r)), g2(square(graph)) {
        const int n = g.vertex_count();
        uncolored.assign(n, 0);
        for (Vertex x : plan.remove) uncolored[x] = 1;
        for (Vertex x : plan.recolor) uncolored[x] = 1;
        for (Vertex x = 0; x < n; ++x)
            if (uncolored[x]) pending.push_back(x);
        if (plan.greedy() && sorted_unique(plan.order) != pending)
            throw PreconditionError("reduction order must list exactly the uncolored vertices");
        std::set<Vertex> b;
        for (Vertex x : pending)
            for (Vertex w : g2.neighbors(x))
                if (!uncolored[w]) b.insert(w);
        boundary.assign(b.begin(), b.end());

        auto rest = remove_vertices(g, plan.remove);
        const Graph sq = square(rest.graph);
        std::vector<Edge> edges;
        for (auto [a, c] : sq.edges()) edges.push_back(make_edge(rest.new_to_old[a], rest.new_to_old[c]));
        reduced2 = Graph(n, edges);
        for (auto [a, c] : g2.edges())
            if (!uncolored[a] && !uncolored[c] && !reduced2.adjacent(a, c)) lost.emplace_back(a, c);
    }

    int colored_neighbors(Vertex x) const {
        int c = 0;
        for (Vertex w : g2.neighbors(x)) c += !uncolored[w];
        return c;
    }

    // The uncolored part of G^2 with list sizes capped where they exceed
    // the degree (such vertices can always be colored last).
    std::pair<Graph, std::vector<int>> residual(const std::vector<int>& avail) const {
        auto h = induced_subgraph(g2, pending);
        std::vector<int> sizes(pending.size());
        for (std::size_t i = 0; i < pending.size(); ++i)
            sizes[i] = std::min(avail[i], h.graph.degree(static_cast<Vertex>(i)) + 1);
        return {h.graph, sizes};
    }
};

void fill_availability(const Setting& s, ReducibilityReport& report) {
    for (Vertex x : s.pending) report.availability.push_back({x, s.k + 1 - s.colored_neighbors(x), std::nullopt});
    if (!s.plan.greedy()) return;
    std::vector<char> done(s.g.vertex_count(), 0);
    for (Vertex x : s.plan.order) {
        int colored = 0;
        for (Vertex w : s.g2.neighbors(x)) colored += !s.uncolored[w] || done[w];
        auto it = std::find_if(report.availability.begin(), report.availability.end(),
                               [&](const Availability& a) { return a.vertex == x; });
        it->at_turn = s.k + 1 - colored;
        done[x] = 1;
    }
}

ReducibilityReport count_check(const Setting& s) {
    ReducibilityReport report;
    report.mode = ReducibilityMode::count_check;
    fill_availability(s, report);
    if (!s.lost.empty()) {
        report.detail = "vertices " + std::to_string(s.lost.front().first) + " and " +
                        std::to_string(s.lost.front().second) + " lose their common neighbor and stay colored";
        return report;
    }
    if (s.plan.greedy()) {
        for (Vertex x : s.plan.order) {
            auto it = std::find_if(report.availability.begin(), report.availability.end(),
                                   [&](const Availability& a) { return a.vertex == x; });
            if (*it->at_turn < 1) {
                report.stuck = x;
                report.detail = "vertex " + std::to_string(x) + " has no color left at its turn";
                return report;
            }
        }
        report.reducible = true;
        return report;
    }
    std::vector<int> avail;
    for (const auto& a : report.availability) avail.push_back(a.initial);
    auto [h, sizes] = s.residual(avail);
    report.reducible = is_size_choosable(h, sizes);
    if (!report.reducible) report.detail = "the uncolored part is not choosable from its worst-case lists";
    return report;
}

class BruteForce {
public:
    BruteForce(const Setting& s, int universe, ReducibilityReport& report)
        : s_(s), universe_(universe), report_(report), color_(s.g.vertex_count(), -1) {}

    bool run() { return boundary(0, 0); }

private:
    // Restricted-growth enumeration of the boundary colorings that are
    // proper in the reduced square.
    bool boundary(std::size_t i, int used) {
        if (i == s_.boundary.size()) {
            ++report_.colorings;
            return extends(used);
        }
        const Vertex x = s_.boundary[i];
        for (int c = 0; c <= std::min(used, universe_ - 1); ++c) {
            bool clash = false;
            for (Vertex w : s_.reduced2.neighbors(x))
                if (color_[w] == c) clash = true;
            if (clash) continue;
            color_[x] = c;
            const bool ok = boundary(i + 1, std::max(used, c + 1));
            color_[x] = -1;
            if (!ok) return false;
        }
        return true;
    }

    bool extends(int used) {
        for (auto [a, b] : s_.lost) {
            if (color_[a] == color_[b]) {
                report_.stuck = a;
                report_.detail = "vertices " + std::to_string(a) + " and " + std::to_string(b) +
                                 " share a color and lose their common neighbor";
                return false;
            }
        }
        return s_.plan.greedy() ? greedy(0, used) : exact();
    }

    std::set<int> seen_colors(Vertex x) const {
        std::set<int> out;
        for (Vertex w : s_.g2.neighbors(x))
            if (color_[w] >= 0) out.insert(color_[w]);
        return out;
    }

    // Adversarial replay of the greedy order: lists may exclude any color,
    // so a vertex is stuck exactly when it sees k+1 colors, and an earlier
    // vertex may take any color its neighbors do not show.
    bool greedy(std::size_t i, int used) {
        if (i == s_.plan.order.size()) return true;
        const Vertex x = s_.plan.order[i];
        const auto seen = seen_colors(x);
        if (static_cast<int>(seen.size()) >= s_.k + 1) {
            report_.stuck = x;
            report_.detail = "vertex " + std::to_string(x) + " can be left without a color";
            return false;
        }
        // colors visible to a later vertex, plus one color visible to none
        std::set<int> relevant;
        for (std::size_t j = i + 1; j < s_.plan.order.size(); ++j)
            for (int c : seen_colors(s_.plan.order[j])) relevant.insert(c);
        relevant.insert(used);
        for (int c : relevant) {
            if (seen.count(c)) continue;
            color_[x] = c;
            const bool ok = greedy(i + 1, std::max(used, c + 1));
            color_[x] = -1;
            if (!ok) return false;
        }
        return true;
    }

    bool exact() {
        std::vector<int> avail;
        for (Vertex x : s_.pending) avail.push_back(s_.k + 1 - static_cast<int>(seen_colors(x).size()));
        auto [it, fresh] = memo_.try_emplace(avail, false);
        if (fresh) {
            auto [h, sizes] = s_.residual(avail);
            it->second = std::all_of(sizes.begin(), sizes.end(), [](int z) { return z > 0; }) &&
                         is_size_choosable(h, sizes);
        }
        if (!it->second) report_.detail = "some lists on the uncolored part admit no coloring";
        return it->second;
    }

    const Setting& s_;
    int universe_;
    ReducibilityReport& report_;
    std::vector<int> color_;
    std::map<std::vector<int>, bool> memo_;
};

}  // namespace

ReducibilityReport verify_reducible(const Graph& g, const ConfigurationInstance& inst, int k,
                                    ReducibilityMode mode, BruteForceOptions options) {
    revalidate(g, inst, k);
    if (mode == ReducibilityMode::brute_force && (g.vertex_count() > 12 || k > 6))
        throw GuardError("brute-force reducibility is limited to 12 vertices and k <= 6");
    const Setting setting(g, k, reduction_of(inst));
    if (mode == ReducibilityMode::count_check) return count_check(setting);

    ReducibilityReport report;
    report.mode = mode;
    fill_availability(setting, report);
    const int universe = options.full_universe ? g.vertex_count() * (k + 1) : k + 3;
    BruteForce search(setting, universe, report);
    report.reducible = search.run();
    return report;
}

}  // namespace gsq
