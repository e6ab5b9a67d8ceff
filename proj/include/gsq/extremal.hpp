#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gsq/graph.hpp"
#include "gsq/rational.hpp"

namespace gsq {

/// Parameters and step log of a generated example. Generating again from
/// the same kind, parameters and seed reproduces the graph exactly.
struct ConstructionRecipe {
    enum class Kind { example1, example2 };

    Kind kind = Kind::example1;
    int k = 0;
    int M = 0;  // example2 only
    bool contracted = false;
    bool untight = false;  // example1 outside k in {4, 5}
    std::uint64_t seed = 0;
    std::vector<std::string> log;
};

std::string to_string(ConstructionRecipe::Kind kind);

struct Construction {
    Graph graph;
    ConstructionRecipe recipe;
};

/// Simple bipartite graph with |A| = c*b_deg vertices of degree a_deg
/// (ids 0..|A|-1) and |B| = c*a_deg vertices of degree b_deg, for the
/// least c >= 1 with both parts of size >= min_part. Sampled by pairing
/// stubs and never joining a pair twice; restarts when stuck.
Graph biregular_bipartite(int a_deg, int b_deg, std::uint64_t seed, int min_part = 1);

/// Simple d-regular graph on n vertices by the same pairing scheme.
/// Requires 0 <= d < n and d*n even.
Graph regular_graph(int d, int n, std::uint64_t seed);

/// Loopless d-regular multigraph on n >= 2 vertices (parallel edges
/// allowed), as an edge list. Requires d*n even.
std::vector<Edge> regular_multigraph(int d, int n, std::uint64_t seed);

/// Bipartite (k-2, k-3) base, its edges subdivided twice, a spanning cycle
/// through A subdivided three times and one through B subdivided twice.
/// `contracted` shortens one thread on each cycle by contracting an edge
/// between two of its 2-vertices. k must be 4 or 5 unless `untight`
/// (then any k >= 4).
Construction example1(int k, std::uint64_t seed, bool contracted, bool untight = false);

/// (k-2)-regular base on A (|A| = 2M), every base edge subdivided five
/// times with its middle vertex joined to B (|B| = M, each B-vertex taking
/// k-2 of them), then spanning cycles through A and through B, each cycle
/// edge subdivided three times. When k-2 >= 2M the base is a loopless
/// multigraph; subdivision makes the result simple either way.
/// Requires k >= 6 and M >= 2.
Construction example2(int k, int M, std::uint64_t seed, bool contracted);

/// Regenerates the graph described by `recipe`.
Graph replay(const ConstructionRecipe& recipe);

/// Vertex and edge counts derived from the construction parameters,
/// against the closed-form average degree.
struct DegreeFormulaReport {
    long long vertices = 0;
    long long edges = 0;
    Rational counted;
    Rational formula;

    bool matches() const { return counted == formula; }
};

/// example1 formula: 3 - (7k-18)/(2k^2-3k-6); example2: 2 + (4k-8)/(5k+2).
/// Counts are for the uncontracted graph.
DegreeFormulaReport verify_example_degree(ConstructionRecipe::Kind kind, int k, int M = 2);

/// True iff every vertex of an example has a degree the construction
/// allows (2, k-1 or k for example1 at its parameters; 2, 3 and k for
/// example2).
bool example_degrees_ok(const Construction& c);

}  // namespace gsq
