#pragma once

#include <vector>

#include "gsq/graph.hpp"
#include "gsq/rational.hpp"

namespace gsq {

/// A nonempty vertex subset H with its density 2|E(H)|/|V(H)|.
struct DensityCertificate {
    std::vector<Vertex> subset;
    Rational density;
};

/// 2|E(H)|/|V(H)| for the subgraph induced by `subset`.
Rational subset_density(const Graph& g, const std::vector<Vertex>& subset);

/// 2|E|/|V|. Throws PreconditionError on the empty graph.
Rational average_degree(const Graph& g);

struct MadResult {
    Rational mad;
    DensityCertificate certificate;
};

/// Exact maximum average degree with a densest-subgraph witness.
///
/// Each round asks a max-closure network whether some subgraph beats the
/// current density p/q (maximize 2q|E(H)| - p|V(H)|); a positive answer
/// yields a strictly denser subgraph, which becomes the next guess. All
/// guesses are densities of actual subsets, so the loop ends on the exact
/// maximum after finitely many rounds.
MadResult mad_exact(const Graph& g);

/// 2 + 4/(g-2): the mad bound for planar graphs of girth g. Requires g >= 3.
Rational girth_mad_bound(int girth);

/// alpha(delta) = (4 delta - 8)/(5 delta + 2), the excess over 2 allowed by
/// the main sparseness hypothesis. Requires delta >= 4.
Rational main_threshold(int delta);

/// beta(k) = 1 - 16/(5k + 2). Requires k >= 8.
Rational beta(int k);

/// The same quantity written as ((k-2) - 4 alpha)/(k-2).
Rational beta_from_alpha(int k);

/// Least girth g with girth_mad_bound(g) <= 2 + main_threshold(delta),
/// i.e. 7 + ceil(12/(delta - 2)). Requires delta >= 4.
int min_girth_for_delta(int delta);

/// The full mad threshold for the colouring results with maximum degree
/// `delta`: 2 + 12/29 for delta = 5, otherwise 2 + main_threshold(delta)
/// (which gives 5/2 and 2 + 20/37 at 6 and 7). Requires delta >= 5.
///
/// The delta = 5 statement is sometimes written with the leading "2 +"
/// dropped; 2 + 12/29 is the value the discharging argument supports.
Rational mad_threshold(int delta);

}  // namespace gsq
