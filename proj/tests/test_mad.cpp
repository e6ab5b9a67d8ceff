#include <doctest.h>

#include <random>

#include "gsq/error.hpp"
#include "gsq/mad.hpp"
#include "oracles.hpp"

using namespace gsq;

TEST_SUITE("mad") {

TEST_CASE("small graphs") {
    CHECK(mad_exact(graphs::cycle(5)).mad == Rational(2));
    CHECK(mad_exact(graphs::petersen()).mad == Rational(3));
    CHECK(mad_exact(graphs::complete(4)).mad == Rational(3));
    CHECK(mad_exact(graphs::path(5)).mad == Rational(8, 5));
    CHECK(mad_exact(Graph(3, {})).mad == Rational(0));
}

TEST_CASE("densest part wins") {
    // K4 with a pendant path: the K4 is the witness
    const Graph g(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
    const auto r = mad_exact(g);
    CHECK(r.mad == Rational(3));
    CHECK(r.certificate.subset == std::vector<Vertex>{0, 1, 2, 3});
    CHECK(subset_density(g, r.certificate.subset) == r.mad);
}

TEST_CASE("agrees with subset enumeration") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 60; ++i) {
        const int n = 2 + static_cast<int>(rng() % 10);
        const Graph g = oracle::random_graph(n, 0.15 + 0.5 * (i % 5) / 4.0, rng);
        const auto r = mad_exact(g);
        CHECK(r.mad == oracle::mad(g));
        CHECK(subset_density(g, r.certificate.subset) == r.mad);
    }
}

TEST_CASE("average degree") {
    CHECK(average_degree(graphs::petersen()) == Rational(3));
    CHECK_THROWS_AS(average_degree(Graph()), PreconditionError);
}

TEST_CASE("thresholds") {
    CHECK(main_threshold(6) == Rational(1, 2));
    CHECK(main_threshold(7) == Rational(20, 37));
    CHECK(main_threshold(8) == Rational(4, 7));
    CHECK(mad_threshold(5) == Rational(70, 29));
    CHECK(mad_threshold(6) == Rational(5, 2));
    CHECK(min_girth_for_delta(6) == 10);
    CHECK(min_girth_for_delta(8) == 9);
    CHECK(girth_mad_bound(10) == Rational(5, 2));
    for (int k = 8; k <= 60; ++k) CHECK(beta(k) == beta_from_alpha(k));
    CHECK_THROWS_AS(beta(7), PreconditionError);
    CHECK_THROWS_AS(main_threshold(3), PreconditionError);
}

TEST_CASE("girth bound against the threshold") {
    for (int d = 4; d <= 40; ++d) {
        const int g = min_girth_for_delta(d);
        CHECK(girth_mad_bound(g) <= 2 + main_threshold(d));
        CHECK(girth_mad_bound(g - 1) > 2 + main_threshold(d));
    }
}

}
