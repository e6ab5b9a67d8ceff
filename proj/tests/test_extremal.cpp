#include <doctest.h>

#include <map>

#include "gsq/configurations.hpp"
#include "gsq/error.hpp"
#include "gsq/extremal.hpp"
#include "gsq/mad.hpp"

using namespace gsq;

namespace {

std::map<int, int> degree_census(const Graph& g) {
    std::map<int, int> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v) ++out[g.degree(v)];
    return out;
}

}  // namespace

TEST_SUITE("extremal") {

TEST_CASE("biregular bipartite base") {
    const Graph g = biregular_bipartite(3, 2, 5, 3);
    // c = 2 gives |A| = 4 and |B| = 6
    CHECK(g.vertex_count() == 10);
    for (Vertex v = 0; v < 4; ++v) CHECK(g.degree(v) == 3);
    for (Vertex v = 4; v < 10; ++v) CHECK(g.degree(v) == 2);
    for (const auto& [a, b] : g.edges()) CHECK((a < 4) != (b < 4));
    CHECK_THROWS_AS(biregular_bipartite(0, 2, 1), PreconditionError);
}

TEST_CASE("regular graphs and multigraphs") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const Graph g = regular_graph(3, 8, seed);
        for (Vertex v = 0; v < 8; ++v) CHECK(g.degree(v) == 3);
        const auto edges = regular_multigraph(6, 4, seed);
        std::vector<int> deg(4, 0);
        for (auto [a, b] : edges) {
            CHECK(a != b);
            ++deg[a];
            ++deg[b];
        }
        CHECK(deg == std::vector<int>(4, 6));
    }
    CHECK_THROWS_AS(regular_graph(3, 3, 1), PreconditionError);
    CHECK_THROWS_AS(regular_graph(3, 5, 1), PreconditionError);
    CHECK_THROWS_AS(regular_multigraph(3, 3, 1), PreconditionError);
}

TEST_CASE("replay reproduces the graph") {
    for (std::uint64_t seed : {1u, 2u, 99u}) {
        const auto a = example1(4, seed, true);
        CHECK(replay(a.recipe) == a.graph);
        const auto b = example2(8, 3, seed, false);
        CHECK(replay(b.recipe) == b.graph);
        CHECK(example2(8, 3, seed, false).graph == b.graph);
        CHECK_FALSE(b.recipe.log.empty());
    }
}

TEST_CASE("average degrees") {
    CHECK(average_degree(example1(4, 1, false).graph) == Rational(16, 7));
    CHECK(average_degree(example1(5, 1, false).graph) == Rational(70, 29));
    for (int k : {6, 8, 10})
        for (int M : {2, 3, 4})
            for (std::uint64_t seed : {1u, 7u})
                CHECK(average_degree(example2(k, M, seed, false).graph) == 2 + main_threshold(k));
    CHECK(2 + main_threshold(10) == Rational(2) + Rational(8, 13));
}

TEST_CASE("formula reports") {
    for (int k : {4, 5}) {
        const auto r = verify_example_degree(ConstructionRecipe::Kind::example1, k);
        CHECK(r.matches());
        const Graph g = example1(k, 3, false).graph;
        CHECK(r.vertices == g.vertex_count());
        CHECK(r.edges == static_cast<long long>(g.edge_count()));
    }
    for (int k = 6; k <= 20; ++k) {
        const auto r = verify_example_degree(ConstructionRecipe::Kind::example2, k, 3);
        CHECK(r.matches());
        CHECK(r.vertices == 3LL * (5 * k + 2));
        CHECK(r.edges == 3LL * (7 * k - 2));
        CHECK(r.formula == 2 + main_threshold(k));
    }
    const auto e1 = verify_example_degree(ConstructionRecipe::Kind::example1, 4);
    CHECK(e1.formula == Rational(3) - Rational(7 * 4 - 18, 2 * 16 - 12 - 6));
}

TEST_CASE("contraction raises the average degree") {
    for (int k : {6, 8}) {
        const auto plain = example2(k, 3, 2, false), tight = example2(k, 3, 2, true);
        CHECK(tight.graph.vertex_count() == plain.graph.vertex_count() - 2);
        CHECK(average_degree(tight.graph) > average_degree(plain.graph));
    }
    CHECK(average_degree(example1(5, 2, true).graph) > average_degree(example1(5, 2, false).graph));
}

TEST_CASE("degree census") {
    const auto e1 = example1(5, 1, true);
    CHECK(example_degrees_ok(e1));
    const auto census = degree_census(e1.graph);
    CHECK(census.count(5));
    CHECK(census.count(4));
    const auto e2 = example2(8, 3, 1, true);
    CHECK(example_degrees_ok(e2));
    CHECK(degree_census(e2.graph).at(8) == 9);
}

TEST_CASE("configuration content") {
    // the spanning cycles of the uncontracted graphs are cycle configurations
    const auto plain1 = example1(4, 1, false);
    CHECK_FALSE(detect(plain1.graph, 5, ConfigurationKind::C4).empty());
    const auto plain2 = example2(8, 3, 1, false);
    CHECK_FALSE(detect_all(plain2.graph, 8).empty());
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        CHECK(detect_all(example1(4, seed, true).graph, 4, DetectScope::relaxed).empty());
        CHECK(detect_all(example1(5, seed, true).graph, 5).empty());
        const Graph g = example2(8, 3, seed, true).graph;
        CHECK(detect_all(g, 8).empty());
        CHECK(detect_local(g, builtin_ruleset(Theorem::deltaK, 8)).empty());
    }
}

TEST_CASE("parameter checks") {
    CHECK_THROWS_AS(example1(6, 1, false), PreconditionError);
    CHECK_NOTHROW(example1(6, 1, false, true));
    CHECK_THROWS_AS(example1(3, 1, false, true), PreconditionError);
    CHECK_THROWS_AS(example2(5, 3, 1, false), PreconditionError);
    CHECK_THROWS_AS(example2(8, 1, 1, false), PreconditionError);
}

}
