#include "gsq/mad.hpp"

#include <algorithm>
#include <string>

#include "flow.hpp"
#include "gsq/error.hpp"

namespace gsq {

Rational subset_density(const Graph& g, const std::vector<Vertex>& subset) {
    if (subset.empty()) throw PreconditionError("density of an empty subset");
    std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex v : subset) in.at(v) = 1;
    std::int64_t inside = 0;
    for (const auto& [a, b] : g.edges()) inside += in[a] && in[b];
    std::int64_t size = std::count(in.begin(), in.end(), 1);
    return Rational(2 * inside, size);
}

Rational average_degree(const Graph& g) {
    if (g.vertex_count() == 0) throw PreconditionError("average degree of the empty graph");
    return Rational(2 * static_cast<std::int64_t>(g.edge_count()), g.vertex_count());
}

namespace {

// Vertex set maximizing 2q|E(H)| - p|V(H)|, or empty if that maximum is 0.
std::vector<Vertex> denser_than(const Graph& g, const Rational& density) {
    const int n = g.vertex_count();
    const int m = static_cast<int>(g.edge_count());
    const int source = n + m, sink = n + m + 1;
    const std::int64_t p = density.numerator(), q = density.denominator();
    const std::int64_t infinite = 2 * q * (m + 1) + 1;
    detail::MaxFlow flow(n + m + 2);
    for (int i = 0; i < m; ++i) {
        const auto& [a, b] = g.edges()[i];
        flow.add_edge(source, n + i, 2 * q);
        flow.add_edge(n + i, a, infinite);
        flow.add_edge(n + i, b, infinite);
    }
    for (Vertex v = 0; v < n; ++v) flow.add_edge(v, sink, p);
    std::int64_t cut = flow.run(source, sink);
    if (2 * q * m - cut <= 0) return {};
    auto side = flow.source_side(source);
    std::vector<Vertex> subset;
    for (Vertex v = 0; v < n; ++v)
        if (side[v]) subset.push_back(v);
    return subset;
}

}  // namespace

MadResult mad_exact(const Graph& g) {
    if (g.vertex_count() == 0) throw PreconditionError("mad of the empty graph");
    MadResult best;
    if (g.edge_count() == 0) {
        best.certificate = {{0}, Rational(0)};
        best.mad = 0;
        return best;
    }
    std::vector<Vertex> current(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) current[v] = v;
    Rational density = average_degree(g);
    for (;;) {
        auto better = denser_than(g, density);
        if (better.empty()) break;
        Rational next = subset_density(g, better);
        if (next <= density) break;  // unreachable with exact capacities
        density = next;
        current = std::move(better);
    }
    best.mad = density;
    best.certificate = {std::move(current), density};
    return best;
}

Rational girth_mad_bound(int girth) {
    if (girth < 3) throw PreconditionError("girth must be at least 3");
    return Rational(2) + Rational(4, girth - 2);
}

Rational main_threshold(int delta) {
    if (delta < 4) throw PreconditionError("maximum degree must be at least 4");
    return Rational(4 * delta - 8, 5 * delta + 2);
}

Rational beta(int k) {
    if (k < 8) throw PreconditionError("beta is defined for k >= 8");
    return Rational(1) - Rational(16, 5 * k + 2);
}

Rational beta_from_alpha(int k) {
    if (k < 8) throw PreconditionError("beta is defined for k >= 8");
    return (Rational(k - 2) - 4 * main_threshold(k)) / Rational(k - 2);
}

int min_girth_for_delta(int delta) {
    if (delta < 4) throw PreconditionError("maximum degree must be at least 4");
    return 7 + (12 + (delta - 2) - 1) / (delta - 2);
}

Rational mad_threshold(int delta) {
    if (delta < 5) throw PreconditionError("thresholds are provided for maximum degree >= 5");
    if (delta == 5) return Rational(2) + Rational(12, 29);
    return Rational(2) + main_threshold(delta);
}

}  // namespace gsq
