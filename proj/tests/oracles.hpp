#pragma once

// Brute-force oracles for the test suite. These deliberately avoid the
// library's search paths: cliques by full subset enumeration, colorability by
// plain backtracking, isomorphism by permutation scan.

#include <algorithm>
#include <numeric>
#include <random>

#include "pdg/graph.hpp"
#include "pdg/invariants.hpp"

namespace oracle {

inline int clique_number(const pdg::Graph& g, pdg::VertexSet scope,
                         const std::vector<int>* weights = nullptr) {
    int best = 0;
    std::uint64_t bits = scope.bits();
    for (;;) {
        const pdg::VertexSet s(bits);
        if (pdg::is_clique(g, s)) {
            int value = 0;
            for (int v : s) value += weights ? (*weights)[std::size_t(v)] : 1;
            best = std::max(best, value);
        }
        if (bits == 0) break;
        bits = (bits - 1) & scope.bits();
    }
    return best;
}

inline int clique_number(const pdg::Graph& g) { return oracle::clique_number(g, g.vertices()); }

namespace detail {

inline bool colorable(const pdg::Graph& g, int k, std::vector<int>& color, int v) {
    if (v == g.n()) return true;
    for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (int u : g.neighbors(v)) {
            if (u < v && color[std::size_t(u)] == c) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        color[std::size_t(v)] = c;
        if (colorable(g, k, color, v + 1)) return true;
    }
    return false;
}

}  // namespace detail

inline int chromatic_number(const pdg::Graph& g) {
    for (int k = 1;; ++k) {
        std::vector<int> color(std::size_t(g.n()), -1);
        if (detail::colorable(g, k, color, 0)) return k;
    }
}

// The definitional perfection oracle: chi(H) = omega(H) on every induced H.
inline bool perfect(const pdg::Graph& g) {
    const std::uint64_t total = g.vertices().bits();
    for (std::uint64_t bits = 1; bits <= total; ++bits) {
        if (bits & ~total) continue;
        const auto sub = pdg::induced(g, pdg::VertexSet(bits)).graph;
        if (oracle::chromatic_number(sub) != oracle::clique_number(sub)) return false;
    }
    return true;
}

inline bool isomorphic(const pdg::Graph& a, const pdg::Graph& b) {
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(std::size_t(a.n()));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < a.n() && ok; ++u) {
            for (int v = u + 1; v < a.n() && ok; ++v) {
                ok = a.adjacent(u, v) ==
                     b.adjacent(perm[std::size_t(u)], perm[std::size_t(v)]);
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline pdg::Graph random_graph(std::mt19937& rng, int n, double p = 0.5) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (coin(rng)) edges.emplace_back(u, v);
        }
    }
    return pdg::make_graph(n, edges);
}

inline pdg::WeightFunction random_weights(std::mt19937& rng, int n, int max_w) {
    std::uniform_int_distribution<int> d(1, max_w);
    std::vector<int> w(std::size_t(n), 0);
    for (int& x : w) x = d(rng);
    return pdg::WeightFunction(std::move(w));
}

// Random connected chordal graph: each new vertex attaches to a nonempty
// subset of a clique of the current graph (clique grown greedily at random).
inline pdg::Graph random_chordal(std::mt19937& rng, int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        const int seed = pick(rng);
        // grow a clique containing seed
        std::vector<int> clique{seed};
        std::vector<int> order(std::size_t(v), 0);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        for (int u : order) {
            if (u == seed) continue;
            bool joined = true;
            for (int c : clique) {
                const bool adj = std::any_of(edges.begin(), edges.end(), [&](auto e) {
                    return (e.first == u && e.second == c) || (e.first == c && e.second == u);
                });
                if (!adj) {
                    joined = false;
                    break;
                }
            }
            if (joined) clique.push_back(u);
        }
        // attach to a random nonempty subset of the clique
        std::shuffle(clique.begin(), clique.end(), rng);
        std::uniform_int_distribution<std::size_t> cnt(1, clique.size());
        const std::size_t take = cnt(rng);
        for (std::size_t i = 0; i < take; ++i) edges.emplace_back(clique[i], v);
    }
    return pdg::make_graph(n, edges);
}

}  // namespace oracle
