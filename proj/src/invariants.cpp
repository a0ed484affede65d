#include "pdg/invariants.hpp"

#include <algorithm>
#include <numeric>

namespace pdg {

WeightFunction::WeightFunction(std::vector<int> w) : weights(std::move(w)) {
    for (std::size_t v = 0; v < weights.size(); ++v) {
        if (weights[v] < 1) {
            throw std::invalid_argument("weight of vertex " + std::to_string(v) + " is not positive");
        }
    }
}

WeightFunction WeightFunction::ones(int n) {
    return WeightFunction(std::vector<int>(std::size_t(n), 1));
}

bool WeightFunction::all_ones() const {
    return std::all_of(weights.begin(), weights.end(), [](int w) { return w == 1; });
}

int WeightFunction::sum(VertexSet s) const {
    int acc = 0;
    for (int v : s) acc += weights[std::size_t(v)];
    return acc;
}

namespace {

struct CliqueSearch {
    const Graph& g;
    const std::vector<int>& w;
    int best = 0;

    int weight_of(VertexSet s) const {
        int acc = 0;
        for (int v : s) acc += w[std::size_t(v)];
        return acc;
    }

    void extend(VertexSet cand, int acc) {
        if (cand.empty()) {
            best = std::max(best, acc);
            return;
        }
        if (acc + weight_of(cand) <= best) return;
        const int v = cand.lowest();
        extend(cand & g.neighbors(v), acc + w[std::size_t(v)]);
        extend(cand.without(v), acc);
    }
};

int max_weight_clique(const Graph& g, const std::vector<int>& w, VertexSet s) {
    CliqueSearch search{g, w};
    search.extend(s & g.vertices(), 0);
    return search.best;
}

}  // namespace

int clique_number(const Graph& g) { return clique_number(g, g.vertices()); }

int clique_number(const Graph& g, VertexSet s) {
    return max_weight_clique(g, WeightFunction::ones(g.n()).weights, s);
}

int clique_number(const Graph& g, const WeightFunction& h, std::optional<VertexSet> s) {
    if (h.size() != g.n()) throw std::invalid_argument("weight function size does not match graph");
    return max_weight_clique(g, h.weights, s.value_or(g.vertices()));
}

int independence_number(const Graph& g, std::optional<VertexSet> s) {
    return clique_number(complement(g), s.value_or(g.vertices()));
}

namespace {

struct ColoringSearch {
    const Graph& g;
    std::vector<int> order;       // vertices by descending degree
    std::vector<std::uint64_t> classes;
    int best;

    explicit ColoringSearch(const Graph& graph, int upper) : g(graph), best(upper) {
        order.resize(std::size_t(g.n()));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
        classes.assign(std::size_t(g.n()), 0);
    }

    void assign(std::size_t idx, int used) {
        if (used >= best) return;
        if (idx == order.size()) {
            best = used;
            return;
        }
        const int v = order[idx];
        const std::uint64_t nb = g.neighbors(v).bits();
        for (int c = 0; c < used; ++c) {
            if ((classes[std::size_t(c)] & nb) == 0) {
                classes[std::size_t(c)] |= 1ull << v;
                assign(idx + 1, used);
                classes[std::size_t(c)] &= ~(1ull << v);
            }
        }
        // Symmetry break: a fresh color index is only ever opened in order.
        if (used + 1 < best) {
            classes[std::size_t(used)] |= 1ull << v;
            assign(idx + 1, used + 1);
            classes[std::size_t(used)] &= ~(1ull << v);
        }
    }
};

int greedy_coloring_bound(const Graph& g) {
    std::vector<int> order(std::size_t(g.n()), 0);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<std::uint64_t> classes;
    for (int v : order) {
        bool placed = false;
        for (auto& cls : classes) {
            if ((cls & g.neighbors(v).bits()) == 0) {
                cls |= 1ull << v;
                placed = true;
                break;
            }
        }
        if (!placed) classes.push_back(1ull << v);
    }
    return int(classes.size());
}

}  // namespace

int chromatic_number(const Graph& g) {
    if (g.n() > kChromaticCap) {
        throw CapabilityError("chromatic number capped at " + std::to_string(kChromaticCap) + " vertices");
    }
    const int lower = clique_number(g);
    const int upper = greedy_coloring_bound(g);
    if (lower == upper) return lower;
    ColoringSearch search(g, upper);
    search.assign(0, 0);
    return search.best;
}

bool is_k_critical(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("criticality order must be positive");
    if (chromatic_number(g) != k) return false;
    if (g.n() == 1) return true;  // deleting the only vertex leaves the 0-chromatic empty graph
    for (int v = 0; v < g.n(); ++v) {
        if (chromatic_number(induced(g, g.vertices().without(v)).graph) > k - 1) return false;
    }
    return true;
}

SubsetTable subset_clique_table(const Graph& g, const WeightFunction* h, int cap) {
    const int n = g.n();
    if (n > cap) {
        throw CapabilityError("subset clique table needs n <= " + std::to_string(cap) +
                              ", got " + std::to_string(n));
    }
    const WeightFunction ones = WeightFunction::ones(n);
    const WeightFunction& w = h ? *h : ones;
    if (w.size() != n) throw std::invalid_argument("weight function size does not match graph");
    SubsetTable table(n);
    const std::uint64_t total = 1ull << n;
    for (std::uint64_t s = 1; s < total; ++s) {
        const int v = std::countr_zero(s);
        const std::uint64_t rest = s & (s - 1);
        const std::int32_t skip = table[VertexSet(rest)];
        const std::int32_t take = w[v] + table[VertexSet(rest & g.neighbors(v).bits())];
        table.at(VertexSet(s)) = std::max(skip, take);
    }
    return table;
}

}  // namespace pdg
