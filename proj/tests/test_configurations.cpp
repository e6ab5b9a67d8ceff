#include <doctest.h>

#include <random>
#include <set>

#include "gsq/configurations.hpp"
#include "gsq/error.hpp"
#include "gsq/ruleset.hpp"
#include "oracles.hpp"

using namespace gsq;

namespace {

// Two vertices 0 and 1 joined by threads of the given lengths.
Graph theta(const std::vector<int>& lengths) {
    std::vector<Edge> edges;
    int next = 2;
    for (int len : lengths) {
        Vertex prev = 0;
        for (int i = 0; i < len; ++i) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, 1);
    }
    return Graph(next, edges);
}

// Every edge of g replaced by a path with `internal` new vertices.
Graph subdivided(const Graph& g, int internal) {
    Graph out = g;
    for (const auto& e : g.edges()) out = subdivide_edge(out, e, internal);
    return out;
}

Graph with_leaves(const Graph& g, Vertex v, int count) {
    std::vector<Edge> edges = g.edges();
    int n = g.vertex_count();
    for (int i = 0; i < count; ++i) edges.emplace_back(v, n++);
    return Graph(n, edges);
}

// Threads found by walking from every non-2-vertex, as sorted internal sets.
std::multiset<std::vector<Vertex>> walked_threads(const Graph& g) {
    std::set<std::vector<Vertex>> seen;
    std::multiset<std::vector<Vertex>> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 2) continue;
        for (Vertex w : g.neighbors(v)) {
            if (g.degree(w) != 2) continue;
            auto inner = oracle::walk(g, v, w).internal;
            std::sort(inner.begin(), inner.end());
            if (seen.insert(inner).second) out.insert(inner);
        }
    }
    return out;
}

bool oracle_selects(const Graph& g, Vertex v, Vertex nb, const Selector& s) {
    const bool two = g.degree(nb) == 2;
    const auto w = oracle::walk(g, v, nb);
    const int len = static_cast<int>(w.internal.size());
    switch (s.kind) {
        case SelectorKind::each_direction: return true;
        case SelectorKind::each_direction_except_2_thread: return !(two && len == 2);
        case SelectorKind::incident_thread:
            if (!two || (s.thread_length && len != s.thread_length)) return false;
            return !s.target || s.target->contains(g.degree(w.far));
        case SelectorKind::adjacent_vertex: return !two && s.target->contains(g.degree(nb));
    }
    return false;
}

// Whether some injective slot assignment exists, by trying every ordering.
bool oracle_matches(const Graph& g, Vertex v, const LocalPattern& p) {
    if (g.degree(v) == 2 || !p.root.contains(g.degree(v))) return false;
    std::vector<Vertex> nb(g.neighbors(v).begin(), g.neighbors(v).end());
    std::sort(nb.begin(), nb.end());
    do {
        bool ok = true;
        for (std::size_t i = 0; i < p.slots.size() && ok; ++i) ok = oracle_selects(g, v, nb[i], p.slots[i]);
        if (ok) return true;
    } while (std::next_permutation(nb.begin(), nb.end()));
    return false;
}

}  // namespace

TEST_SUITE("configurations") {

TEST_CASE("kind names") {
    for (int i = 0; i <= 8; ++i) {
        const auto kind = static_cast<ConfigurationKind>(i);
        CHECK(parse_configuration_kind(to_string(kind)) == kind);
    }
    CHECK_FALSE(parse_configuration_kind("C7").has_value());
}

TEST_CASE("C0 finds pendant and isolated vertices") {
    const Graph g(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
    const auto found = detect(g, 5, ConfigurationKind::C0);
    REQUIRE(found.size() == 2);
    CHECK(found[0].role("v") == 3);
    CHECK(found[1].role("v") == 4);
}

TEST_CASE("C1 needs four 2-vertices in a row") {
    CHECK(detect(theta({3, 3, 3}), 5, ConfigurationKind::C1).empty());
    const Graph g = theta({4, 1, 1});
    const auto found = detect(g, 5, ConfigurationKind::C1);
    REQUIRE(found.size() == 1);
    CHECK_NOTHROW(revalidate(g, found[0], 5));
    auto bad = found[0];
    bad.roles["u"] = {bad.roles["thread"][0]};
    CHECK_THROWS_AS(revalidate(g, bad, 5), PreconditionError);
}

TEST_CASE("C2 and C3 depend on end degrees") {
    // ends of degree 3: low for every k >= 4
    CHECK(detect(theta({3, 1, 1}), 5, ConfigurationKind::C2).size() == 1);
    CHECK(detect(theta({2, 1, 1}), 5, ConfigurationKind::C3).size() == 1);
    // raise both ends to degree 5 = k: no longer reducible
    Graph g = with_leaves(with_leaves(theta({3, 1, 1}), 0, 2), 1, 2);
    CHECK(detect(g, 5, ConfigurationKind::C2).empty());
    CHECK(detect(g, 6, ConfigurationKind::C2).size() == 1);
    // 2-thread with ends of degree 4 and 3 at k = 5: 4 <= k-1 and 3 <= k-2
    Graph h = with_leaves(theta({2, 1, 1}), 0, 1);
    const auto c3 = detect(h, 5, ConfigurationKind::C3);
    REQUIRE(c3.size() == 1);
    CHECK_NOTHROW(revalidate(h, c3[0], 5));
    // ends 4 and 4: neither can play the k-2 side
    h = with_leaves(h, 1, 1);
    CHECK(detect(h, 5, ConfigurationKind::C3).empty());
}

TEST_CASE("cycle configurations") {
    const Graph g3 = theta({3, 3, 3});
    const auto c4 = detect(g3, 5, ConfigurationKind::C4);
    CHECK(c4.size() == 2);
    for (const auto& inst : c4) {
        CHECK(inst.roles.at("cycle").size() == 8);
        CHECK_NOTHROW(revalidate(g3, inst, 5));
    }
    const Graph g2 = theta({2, 2, 2});
    const auto c5 = detect(g2, 5, ConfigurationKind::C5);
    CHECK(c5.size() == 2);
    for (const auto& inst : c5) CHECK_NOTHROW(revalidate(g2, inst, 5));
    CHECK_THROWS_AS(detect(g3, 4, ConfigurationKind::C4), PreconditionError);
    CHECK(detect(g3, 4, ConfigurationKind::C4, DetectScope::relaxed).size() == 2);
}

TEST_CASE("C6 on a once-subdivided K4") {
    const Graph g = subdivided(graphs::complete(4), 1);
    const auto c6 = detect(g, 5, ConfigurationKind::C6);
    CHECK(c6.size() == 3);
    for (const auto& inst : c6) {
        CHECK_NOTHROW(revalidate(g, inst, 5));
        const auto& cycle = inst.roles.at("cycle");
        CHECK(std::find(cycle.begin(), cycle.end(), inst.role("pivot")) != cycle.end());
    }
    // each 2-cycle of this theta leaves a third link at its nodes
    CHECK(detect(theta({1, 1, 1}), 5, ConfigurationKind::C6).size() == 2);
    CHECK(detect(theta({1, 1}), 5, ConfigurationKind::C6).empty());
}

TEST_CASE("short cycles") {
    const Graph hanging(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {0, 4}});
    const auto found = detect(hanging, 5, ConfigurationKind::Cshort);
    REQUIRE(found.size() == 1);
    CHECK(found[0].role("anchor") == 0);
    CHECK_NOTHROW(revalidate(hanging, found[0], 5));
    CHECK(detect(graphs::cycle(5), 5, ConfigurationKind::Cshort).size() == 1);
    CHECK(detect(graphs::cycle(6), 5, ConfigurationKind::Cshort).empty());
}

TEST_CASE("detect_all runs every kind in order") {
    const Graph g = theta({4, 2, 2});
    const auto all = detect_all(g, 5);
    CHECK(std::is_sorted(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.kind < b.kind; }));
    std::size_t sum = 0;
    for (int i = 0; i <= 7; ++i) sum += detect(g, 5, static_cast<ConfigurationKind>(i)).size();
    CHECK(all.size() == sum);
    CHECK_THROWS_AS(detect(g, 5, ConfigurationKind::Local), PreconditionError);
}

TEST_CASE("thread kinds agree with walked threads") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 40; ++i) {
        Graph g = oracle::random_graph(7, 0.55, rng);
        for (int s = 0; s < 5 && g.edge_count() > 0; ++s)
            g = subdivide_edge(g, g.edges()[rng() % g.edge_count()], 1 + static_cast<int>(rng() % 4));
        const auto threads = walked_threads(g);
        std::size_t long_ones = 0;
        for (const auto& t : threads) long_ones += t.size() >= 4;
        CHECK(detect(g, 6, ConfigurationKind::C1).size() == long_ones);
        for (const auto& inst : detect_all(g, 6)) CHECK_NOTHROW(revalidate(g, inst, 6));
    }
}

TEST_CASE("local patterns agree with exhaustive slot matching") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 30; ++i) {
        Graph g = oracle::random_graph(8, 0.45, rng);
        for (int s = 0; s < 6 && g.edge_count() > 0; ++s)
            g = subdivide_edge(g, g.edges()[rng() % g.edge_count()], 1 + static_cast<int>(rng() % 2));
        if (g.max_degree() > 7) continue;
        for (const RuleSet& rules : {builtin_ruleset(Theorem::delta6), builtin_ruleset(Theorem::delta7),
                                     builtin_ruleset(Theorem::deltaK, 10)}) {
            std::set<std::pair<Vertex, std::string>> found, expected;
            for (const auto& inst : detect_local(g, rules)) {
                found.emplace(inst.role("v"), inst.pattern->id);
                CHECK_NOTHROW(revalidate(g, inst, rules.k));
            }
            for (Vertex v = 0; v < g.vertex_count(); ++v)
                for (const auto& p : rules.patterns)
                    if (oracle_matches(g, v, p)) expected.emplace(v, p.id);
            CHECK(found == expected);
        }
    }
}

}
