#pragma once

#include "pdg/graph_io.hpp"
#include "pdg/invariants.hpp"
#include "pdg/perfection.hpp"

namespace pdg {

inline constexpr int kStructureBruteCap = 20;

enum class HomogeneousMode { all_minimal, any, two_clique };

/// Brute force over subsets 1 < |X| < n, each outside vertex complete or
/// anticomplete. all_minimal keeps inclusion-minimal sets; any returns the
/// first in (size, bitmask) order; two_clique keeps homogeneous edges.
std::vector<VertexSet> homogeneous_sets(const Graph& g, HomogeneousMode mode);

enum class CutsetMode { any, minimum, all };

/// Cliques whose removal disconnects the (connected) input. any/minimum stop
/// at the first hit in (size, bitmask) order.
std::vector<VertexSet> clique_cutsets(const Graph& g, CutsetMode mode);

/// True iff every x in X has a clique neighborhood inside X | Y.
bool is_simplicial_set_of(const Graph& g, VertexSet x, VertexSet y);

/// Vertices of `within` whose neighborhood inside `within` is a clique.
VertexSet simplicial_vertices(const Graph& g, VertexSet within);

struct SimplicialDecomposition {
    std::vector<VertexSet> parts;  // parts[0] is X_1
    bool x1_perfect = false;
};

/// Canonical maximal peeling of G[X]: each round removes every simplicial
/// vertex of the remainder; the residue becomes X_1 (or the last layer when
/// the peel exhausts X).
SimplicialDecomposition simplicial_peeling(const Graph& g, VertexSet x);

struct Basin {
    VertexSet set;
    bool minimal = false;  // inclusion-minimal among the returned basins
};

/// All nonempty X with |X| <= max_size and omega(N[X]) < omega(G).
std::vector<Basin> basins(const Graph& g, std::optional<int> max_size = {});

/// Replaces vertex v of g by the graph h, joining all of h to N(v). The image
/// of V(h) occupies the trailing labels and is a homogeneous set of the result.
Graph substitute(const Graph& g, int v, const Graph& h);

/// With x: substitutes a clique of size h(x) for x; the new clique gets weight
/// one, everything else keeps h. Without x: expands vertices of weight >= 2 in
/// ascending index order until the weight function is all-ones.
std::pair<Graph, WeightFunction> weight_expand(const Graph& g, const WeightFunction& h,
                                               std::optional<int> x = {});

struct PatternMatch {
    bool free = true;
    std::vector<int> witness;  // pattern vertex i -> host vertex, empty when free
};

PatternMatch induced_free(const Graph& g, const Graph& pattern);
PatternMatch induced_free(const Graph& g, PatternName name);

}  // namespace pdg
