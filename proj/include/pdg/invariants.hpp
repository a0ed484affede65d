#pragma once

#include <cstdint>
#include <optional>

#include "pdg/graph.hpp"

namespace pdg {

/// Positive integer vertex weights on exactly the host graph's vertices.
struct WeightFunction {
    std::vector<int> weights;

    WeightFunction() = default;
    explicit WeightFunction(std::vector<int> w);
    static WeightFunction ones(int n);

    int operator[](int v) const { return weights[std::size_t(v)]; }
    int size() const { return int(weights.size()); }
    bool all_ones() const;
    int sum(VertexSet s) const;

    friend bool operator==(const WeightFunction&, const WeightFunction&) = default;
};

/// Dense per-subset value table over all 2^n subsets of a host graph.
class SubsetTable {
public:
    explicit SubsetTable(int n, std::int32_t init = 0)
        : n_(n), vals_(std::size_t(1) << n, init) {}

    std::int32_t operator[](VertexSet s) const { return vals_[s.bits()]; }
    std::int32_t& at(VertexSet s) { return vals_[s.bits()]; }
    int n() const { return n_; }
    std::size_t size() const { return vals_.size(); }

private:
    int n_;
    std::vector<std::int32_t> vals_;
};

inline constexpr int kSubsetTableCap = 16;
inline constexpr int kChromaticCap = 32;

int clique_number(const Graph& g);
int clique_number(const Graph& g, VertexSet s);
int clique_number(const Graph& g, const WeightFunction& h, std::optional<VertexSet> s = {});

int independence_number(const Graph& g, std::optional<VertexSet> s = {});

/// Exact chromatic number; branch and bound with a clique lower bound and a
/// greedy upper bound. Capped at 32 vertices.
int chromatic_number(const Graph& g);

/// Vertex-criticality: chi(G) = k and chi(G - v) <= k-1 for every vertex.
bool is_k_critical(const Graph& g, int k);

/// table[S] = omega_h(S) for every subset S, via
/// omega_h(S) = max(omega_h(S \ {v}), h(v) + omega_h(S & N(v))), v = lowest bit.
SubsetTable subset_clique_table(const Graph& g, const WeightFunction* h = nullptr,
                                int cap = kSubsetTableCap);

}  // namespace pdg
