#include "gsq/extremal.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "gsq/error.hpp"

namespace gsq {

std::string to_string(ConstructionRecipe::Kind kind) {
    return kind == ConstructionRecipe::Kind::example1 ? "example1" : "example2";
}

namespace {

using Rng = std::mt19937_64;

// Uniform enough for sampling, and identical on every platform (unlike
// std::uniform_int_distribution).
std::size_t below(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

template <class T>
void shuffle(std::vector<T>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(rng, i)]);
}

constexpr int max_restarts = 10000;

// Pairs the stubs of `left` with those of `right` (or of `left` with each
// other when `right` is null). Pairs never join a vertex to itself and, unless
// `parallel`, never repeat.
std::vector<Edge> pair_stubs(std::vector<Vertex> left, const std::vector<Vertex>* right, bool parallel, Rng& rng) {
    for (int attempt = 0; attempt < max_restarts; ++attempt) {
        std::vector<Vertex> a = left, b = right ? *right : std::vector<Vertex>{};
        std::multiset<Edge> used;
        std::vector<Edge> out;
        auto ok = [&](Vertex x, Vertex y) { return x != y && (parallel || !used.count(make_edge(x, y))); };
        bool stuck = false;
        while (!a.empty() && !stuck) {
            std::size_t i = 0, j = 0;
            bool found = false;
            for (int tries = 0; tries < 64 && !found; ++tries) {
                i = below(rng, a.size());
                j = right ? below(rng, b.size()) : below(rng, a.size());
                found = right ? ok(a[i], b[j]) : (i != j && ok(a[i], a[j]));
            }
            if (!found) {
                std::vector<std::pair<std::size_t, std::size_t>> options;
                const std::size_t m = right ? b.size() : a.size();
                for (std::size_t x = 0; x < a.size(); ++x)
                    for (std::size_t y = right ? 0 : x + 1; y < m; ++y)
                        if (right ? ok(a[x], b[y]) : ok(a[x], a[y])) options.emplace_back(x, y);
                if (options.empty()) {
                    stuck = true;
                    break;
                }
                std::tie(i, j) = options[below(rng, options.size())];
            }
            if (right) {
                out.push_back(make_edge(a[i], b[j]));
                used.insert(out.back());
                a[i] = a.back();
                a.pop_back();
                b[j] = b.back();
                b.pop_back();
            } else {
                out.push_back(make_edge(a[i], a[j]));
                used.insert(out.back());
                const std::size_t hi = std::max(i, j), lo = std::min(i, j);
                a[hi] = a.back();
                a.pop_back();
                a[lo] = a.back();
                a.pop_back();
            }
        }
        if (!stuck) {
            std::sort(out.begin(), out.end());
            return out;
        }
    }
    throw Error("stub pairing did not converge");
}

std::vector<Vertex> stubs(Vertex from, int count, int degree) {
    std::vector<Vertex> out;
    for (Vertex v = from; v < from + count; ++v)
        for (int i = 0; i < degree; ++i) out.push_back(v);
    return out;
}

// Mutable edge list with appended vertex ids.
struct Builder {
    int n = 0;
    std::vector<Edge> edges;

    Vertex add() { return n++; }
    // Replaces edge x-y by a path with `internal` new vertices; returns them.
    std::vector<Vertex> path(Vertex x, Vertex y, int internal) {
        std::vector<Vertex> inner;
        Vertex prev = x;
        for (int i = 0; i < internal; ++i) {
            inner.push_back(add());
            edges.push_back(make_edge(prev, inner.back()));
            prev = inner.back();
        }
        edges.push_back(make_edge(prev, y));
        return inner;
    }
    Graph graph() const { return Graph(n, edges); }
};

std::string range(Vertex lo, Vertex hi) { return std::to_string(lo) + ".." + std::to_string(hi); }

std::string edge_list(const std::vector<Edge>& edges) {
    std::string s;
    for (auto [a, b] : edges) s += (s.empty() ? "" : " ") + std::to_string(a) + "-" + std::to_string(b);
    return s;
}

// Contracts the edge between the first two internal vertices of two
// threads; returns the resulting graph.
Graph contract_pair(const Graph& g, Edge first, Edge second) {
    auto c1 = contract_edge(g, first);
    Edge moved = make_edge(c1.old_to_new[second.first], c1.old_to_new[second.second]);
    return contract_edge(c1.graph, moved).graph;
}

}  // namespace

Graph biregular_bipartite(int a_deg, int b_deg, std::uint64_t seed, int min_part) {
    if (a_deg < 1 || b_deg < 1) throw PreconditionError("part degrees must be positive");
    int c = 1;
    while (c * b_deg < min_part || c * a_deg < min_part) ++c;
    const int na = c * b_deg, nb = c * a_deg;
    Rng rng(seed);
    auto left = stubs(0, na, a_deg), right = stubs(na, nb, b_deg);
    return Graph(na + nb, pair_stubs(left, &right, false, rng));
}

Graph regular_graph(int d, int n, std::uint64_t seed) {
    if (d < 0 || d >= n || (d * n) % 2 != 0)
        throw PreconditionError("no simple " + std::to_string(d) + "-regular graph on " + std::to_string(n) + " vertices");
    Rng rng(seed);
    return Graph(n, pair_stubs(stubs(0, n, d), nullptr, false, rng));
}

std::vector<Edge> regular_multigraph(int d, int n, std::uint64_t seed) {
    if (d < 0 || n < 2 || (d * n) % 2 != 0)
        throw PreconditionError("no loopless " + std::to_string(d) + "-regular multigraph on " + std::to_string(n) +
                                " vertices");
    Rng rng(seed);
    return pair_stubs(stubs(0, n, d), nullptr, true, rng);
}

Construction example1(int k, std::uint64_t seed, bool contracted, bool untight) {
    if (k < 4 || (!untight && k > 5))
        throw PreconditionError("example1 is tight only for k in {4, 5}; k = " + std::to_string(k));
    ConstructionRecipe r{ConstructionRecipe::Kind::example1, k, 0, contracted, untight, seed, {}};
    r.log.push_back("example1 k=" + std::to_string(k) + " seed=" + std::to_string(seed) +
                    " contracted=" + (contracted ? "yes" : "no"));

    const Graph base = biregular_bipartite(k - 2, k - 3, seed, 3);
    const int na = (k - 3) * (base.vertex_count() / (2 * k - 5)), nb = base.vertex_count() - na;
    r.log.push_back("base bipartite A=" + range(0, na - 1) + " (degree " + std::to_string(k - 2) + ") B=" +
                    range(na, na + nb - 1) + " (degree " + std::to_string(k - 3) + "): " + edge_list(base.edges()));

    Builder b;
    b.n = na + nb;
    for (auto [x, y] : base.edges()) b.path(x, y, 2);
    r.log.push_back("subdivide every base edge twice: vertices " + range(na + nb, b.n - 1));
    std::vector<Vertex> c1, c2;
    for (Vertex i = 0; i < na; ++i) {
        auto inner = b.path(i, (i + 1) % na, 3);
        if (i == 0) c1 = inner;
    }
    r.log.push_back("cycle through A in id order, each edge subdivided three times");
    for (Vertex i = 0; i < nb; ++i) {
        auto inner = b.path(na + i, na + (i + 1) % nb, 2);
        if (i == 0) c2 = inner;
    }
    r.log.push_back("cycle through B in id order, each edge subdivided twice");
    Graph g = b.graph();
    if (contracted) {
        g = contract_pair(g, make_edge(c1[0], c1[1]), make_edge(c2[0], c2[1]));
        r.log.push_back("contract " + std::to_string(c1[0]) + "-" + std::to_string(c1[1]) + " and " +
                        std::to_string(c2[0]) + "-" + std::to_string(c2[1]));
    }
    return {std::move(g), std::move(r)};
}

Construction example2(int k, int M, std::uint64_t seed, bool contracted) {
    if (k < 6 || M < 2) throw PreconditionError("example2 requires k >= 6 and M >= 2");
    ConstructionRecipe r{ConstructionRecipe::Kind::example2, k, M, contracted, false, seed, {}};
    r.log.push_back("example2 k=" + std::to_string(k) + " M=" + std::to_string(M) + " seed=" + std::to_string(seed) +
                    " contracted=" + (contracted ? "yes" : "no"));
    Rng rng(seed);
    const int na = 2 * M, nb = M;
    const bool multi = k - 2 >= na;
    std::vector<Edge> base = multi ? regular_multigraph(k - 2, na, rng()) : regular_graph(k - 2, na, rng()).edges();
    r.log.push_back(std::string("base ") + std::to_string(k - 2) + "-regular " + (multi ? "multigraph" : "graph") +
                    " on A=" + range(0, na - 1) + ": " + edge_list(base));

    Builder b;
    b.n = na + nb;
    std::vector<Vertex> centers;
    for (auto [x, y] : base) centers.push_back(b.path(x, y, 5)[2]);
    r.log.push_back("subdivide every base edge five times: vertices " + range(na + nb, b.n - 1));
    std::vector<Vertex> slots;
    for (Vertex i = 0; i < nb; ++i)
        for (int j = 0; j < k - 2; ++j) slots.push_back(na + i);
    shuffle(slots, rng);
    std::vector<Edge> joins;
    for (std::size_t i = 0; i < centers.size(); ++i) joins.push_back(make_edge(centers[i], slots[i]));
    b.edges.insert(b.edges.end(), joins.begin(), joins.end());
    r.log.push_back("join thread centers to B=" + range(na, na + nb - 1) + ": " + edge_list(joins));

    std::vector<Vertex> c1, c2;
    for (Vertex i = 0; i < na; ++i) {
        auto inner = b.path(i, (i + 1) % na, 3);
        if (i == 0) c1 = inner;
    }
    for (Vertex i = 0; i < nb; ++i) {
        auto inner = b.path(na + i, na + (i + 1) % nb, 3);
        if (i == 0) c2 = inner;
    }
    r.log.push_back("cycles through A and through B in id order, each edge subdivided three times");
    Graph g = b.graph();
    if (contracted) {
        g = contract_pair(g, make_edge(c1[0], c1[1]), make_edge(c2[0], c2[1]));
        r.log.push_back("contract " + std::to_string(c1[0]) + "-" + std::to_string(c1[1]) + " and " +
                        std::to_string(c2[0]) + "-" + std::to_string(c2[1]));
    }
    return {std::move(g), std::move(r)};
}

Graph replay(const ConstructionRecipe& recipe) {
    if (recipe.kind == ConstructionRecipe::Kind::example1)
        return example1(recipe.k, recipe.seed, recipe.contracted, recipe.untight).graph;
    return example2(recipe.k, recipe.M, recipe.seed, recipe.contracted).graph;
}

DegreeFormulaReport verify_example_degree(ConstructionRecipe::Kind kind, int k, int M) {
    DegreeFormulaReport rep;
    if (kind == ConstructionRecipe::Kind::example1) {
        if (k < 4) throw PreconditionError("example1 requires k >= 4");
        const long long a = k - 2, b = k - 3;
        long long c = 1;
        while (c * b < 3 || c * a < 3) ++c;
        const long long na = c * b, nb = c * a, base = na * a;
        rep.vertices = na + nb + 2 * base + 3 * na + 2 * nb;
        rep.edges = 3 * base + 4 * na + 3 * nb;
        rep.formula = 3 - Rational(7 * k - 18, 2 * k * k - 3 * k - 6);
    } else {
        if (k < 6 || M < 2) throw PreconditionError("example2 requires k >= 6 and M >= 2");
        const long long na = 2 * M, nb = M, base = M * (k - 2);
        rep.vertices = na + nb + 5 * base + 3 * na + 3 * nb;
        rep.edges = 6 * base + base + 4 * na + 4 * nb;
        rep.formula = 2 + Rational(4 * k - 8, 5 * k + 2);
    }
    rep.counted = Rational(2 * rep.edges, rep.vertices);
    return rep;
}

bool example_degrees_ok(const Construction& c) {
    const int k = c.recipe.k;
    const std::set<int> allowed = c.recipe.kind == ConstructionRecipe::Kind::example1 ? std::set<int>{2, k - 1, k}
                                                                                        : std::set<int>{2, 3, k};
    for (Vertex v = 0; v < c.graph.vertex_count(); ++v)
        if (!allowed.count(c.graph.degree(v))) return false;
    return true;
}

}  // namespace gsq
