#include <doctest.h>

#include <random>

#include "gsq/coloring.hpp"
#include "gsq/error.hpp"
#include "oracles.hpp"

using namespace gsq;

namespace {

std::vector<std::vector<int>> raw(const ListAssignment& l) {
    std::vector<std::vector<int>> out;
    for (Vertex v = 0; v < l.vertex_count(); ++v) out.push_back(l.list(v));
    return out;
}

ListAssignment random_lists(int n, int size, int universe, std::mt19937_64& rng) {
    std::vector<std::vector<Color>> lists(n);
    for (auto& l : lists) {
        std::vector<Color> all(universe);
        for (int c = 0; c < universe; ++c) all[c] = c;
        std::shuffle(all.begin(), all.end(), rng);
        l.assign(all.begin(), all.begin() + size);
    }
    return ListAssignment(lists);
}

}  // namespace

TEST_SUITE("coloring") {

TEST_CASE("list assignment normalizes") {
    const ListAssignment l({{3, 1, 3}, {0}});
    CHECK(l.list(0) == std::vector<Color>{1, 3});
    CHECK(l.contains(1, 0));
    CHECK_THROWS_AS(ListAssignment(std::vector<std::vector<Color>>{{-1}}), PreconditionError);
}

TEST_CASE("chromatic numbers of squares") {
    CHECK(chromatic_number(square(graphs::cycle(5))) == 5);
    CHECK(chromatic_number(square(graphs::petersen())) == 10);
    CHECK(chromatic_number(graphs::cycle(6)) == 2);
    CHECK(chromatic_number(graphs::cycle(7)) == 3);
    CHECK(chromatic_number(square(graphs::cycle(6))) == 3);
}

TEST_CASE("chromatic number agrees with plain backtracking") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 40; ++i) {
        const Graph g = oracle::random_graph(8, 0.4, rng);
        CHECK(chromatic_number(g) == oracle::chromatic_number(g));
    }
}

TEST_CASE("list coloring agrees with plain backtracking") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        const Graph g = oracle::random_graph(8, 0.45, rng);
        const ListAssignment lists = random_lists(8, 2 + i % 2, 5, rng);
        const auto r = list_color(g, lists);
        CHECK(r.satisfiable() == oracle::list_colorable(g, raw(lists)));
        if (r.satisfiable()) {
            CHECK(r.coloring->complete());
            CHECK(is_proper(g, *r.coloring, lists));
        }
    }
}

TEST_CASE("empty lists are reported") {
    const auto r = list_color(graphs::path(3), ListAssignment({{0}, {}, {1}}));
    CHECK_FALSE(r.satisfiable());
    CHECK(r.empty_list == 1);
}

TEST_CASE("precolored extension") {
    Coloring partial(4);
    partial.colors[0] = 0;
    const auto r = extend_coloring(graphs::cycle(4), ListAssignment::uniform(4, 2), partial);
    REQUIRE(r.satisfiable());
    CHECK(r.coloring->colors[0] == 0);
    CHECK(r.coloring->colors[2] == 0);
}

TEST_CASE("choosability") {
    CHECK(is_choosable(graphs::cycle(4), 2));
    CHECK_FALSE(is_choosable(graphs::cycle(5), 2));
    CHECK(is_choosable(graphs::cycle(5), 3));
    CHECK_FALSE(is_choosable(square(graphs::cycle(5)), 4));
    CHECK(is_choosable(square(graphs::cycle(5)), 5));
    // K_{3,3} is not 2-choosable
    const Graph k33(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    CHECK_FALSE(is_choosable(k33, 2));
    CHECK(is_choosable(k33, 3));
    CHECK_THROWS_AS(is_choosable(graphs::cycle(13), 3), GuardError);
}

TEST_CASE("choosability agrees with list enumeration") {
    CHECK(is_choosable(graphs::cycle(4), 2) == oracle::choosable(graphs::cycle(4), 2));
    CHECK(is_choosable(graphs::cycle(3), 2) == oracle::choosable(graphs::cycle(3), 2));
    const Graph theta(5, {{0, 1}, {1, 2}, {0, 3}, {3, 2}, {0, 4}, {4, 2}});
    CHECK(is_choosable(theta, 2) == oracle::choosable(theta, 2));
    std::mt19937_64 rng(13);
    for (int i = 0; i < 150; ++i) {
        const int n = 4 + i % 3;
        const Graph g = oracle::random_graph(n, 0.6, rng);
        std::vector<int> sizes(n);
        for (auto& s : sizes) s = 1 + static_cast<int>(rng() % 3);
        CHECK(is_size_choosable(g, sizes) == oracle::size_choosable(g, sizes));
    }
}

TEST_CASE("injective coloring ignores adjacency") {
    const auto r = injective_list_color(graphs::path(3), ListAssignment::uniform(3, 2));
    REQUIRE(r.satisfiable());
    // the ends share a neighbor; the middle may repeat a color
    CHECK(r.coloring->colors[0] != r.coloring->colors[2]);
    CHECK_FALSE(injective_list_color(graphs::complete(3), ListAssignment::uniform(3, 2)).satisfiable());
}

TEST_CASE("greedy extension reports the stuck vertex") {
    const Graph g = graphs::path(3);
    Coloring partial(3);
    partial.colors[0] = 0;
    partial.colors[2] = 1;
    const auto ext = extend_in_order(g, {1}, partial, ListAssignment::uniform(3, 2));
    CHECK(ext.stuck == 1);
    CHECK(available_colors(g, 1, partial, ListAssignment::uniform(3, 3)) == std::vector<Color>{2});
}

TEST_CASE("degree-sized lists always color") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 30; ++i) {
        const Graph g = oracle::random_graph(9, 0.4, rng);
        std::vector<std::vector<Color>> lists(9);
        for (Vertex v = 0; v < 9; ++v)
            for (int c = 0; c < std::max(1, g.degree(v)); ++c) lists[v].push_back(static_cast<Color>(rng() % 12));
        const ListAssignment l(lists);
        bool big_enough = true;
        for (Vertex v = 0; v < 9; ++v)
            if (l.list_size(v) < static_cast<std::size_t>(g.degree(v))) big_enough = false;
        if (!big_enough) continue;
        const auto r = degree_choosable_solve(g, l);
        CHECK(r.satisfiable() == oracle::list_colorable(g, raw(l)));
    }
}

}
