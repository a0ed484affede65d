#include "pdg/structure.hpp"

#include <algorithm>

#include "pdg/subsets.hpp"

namespace pdg {

namespace {

void check_brute_cap(const Graph& g, const char* what) {
    if (g.n() > kStructureBruteCap) {
        throw CapabilityError(std::string(what) + " search capped at " +
                              std::to_string(kStructureBruteCap) + " vertices");
    }
}

bool is_homogeneous(const Graph& g, VertexSet x) {
    for (int v : g.vertices() - x) {
        const VertexSet hits = g.neighbors(v) & x;
        if (!hits.empty() && hits != x) return false;
    }
    return true;
}

}  // namespace

std::vector<VertexSet> homogeneous_sets(const Graph& g, HomogeneousMode mode) {
    check_brute_cap(g, "homogeneous set");
    const int n = g.n();
    std::vector<VertexSet> out;
    if (n < 3) return out;

    if (mode == HomogeneousMode::two_clique) {
        for (int u = 0; u < n; ++u) {
            for (int v : g.neighbors(u)) {
                if (v <= u) continue;
                const VertexSet x{u, v};
                if (n > 2 && is_homogeneous(g, x)) out.push_back(x);
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    for_each_by_size(g.vertices(), 2, n - 1, [&](VertexSet x) {
        if (!is_homogeneous(g, x)) return false;
        out.push_back(x);
        return mode == HomogeneousMode::any;
    });
    if (mode == HomogeneousMode::all_minimal) {
        std::vector<VertexSet> minimal;
        for (VertexSet x : out) {
            bool has_smaller = false;
            for (VertexSet y : out) {
                if (y != x && y.subset_of(x)) {
                    has_smaller = true;
                    break;
                }
            }
            if (!has_smaller) minimal.push_back(x);
        }
        return minimal;
    }
    return out;
}

std::vector<VertexSet> clique_cutsets(const Graph& g, CutsetMode mode) {
    check_brute_cap(g, "clique cutset");
    if (!is_connected(g)) throw std::invalid_argument("clique cutsets are defined on connected graphs");
    std::vector<VertexSet> out;
    for_each_by_size(g.vertices(), 1, g.n() - 2, [&](VertexSet x) {
        if (!is_clique(g, x)) return false;
        if (components(induced(g, g.vertices() - x).graph).size() < 2) return false;
        out.push_back(x);
        return mode != CutsetMode::all;
    });
    return out;
}

bool is_simplicial_set_of(const Graph& g, VertexSet x, VertexSet y) {
    if (x.empty()) throw std::invalid_argument("simplicial set must be nonempty");
    if (x.intersects(y)) throw std::invalid_argument("simplicial set overlaps its host set");
    const VertexSet scope = x | y;
    for (int v : x) {
        if (!is_clique(g, g.neighbors(v) & scope)) return false;
    }
    return true;
}

VertexSet simplicial_vertices(const Graph& g, VertexSet within) {
    VertexSet out;
    for (int v : within) {
        if (is_clique(g, g.neighbors(v) & within)) out |= VertexSet::single(v);
    }
    return out;
}

SimplicialDecomposition simplicial_peeling(const Graph& g, VertexSet x) {
    if (x.empty()) throw std::invalid_argument("peeling of the empty set");
    std::vector<VertexSet> layers;  // in removal order
    VertexSet rest = x;
    for (;;) {
        const VertexSet simp = simplicial_vertices(g, rest);
        if (simp.empty() || simp == rest) break;
        layers.push_back(simp);
        rest -= simp;
    }
    // rest is what remains: either a residue with no simplicial vertices, or
    // an all-simplicial final layer that doubles as X_1.
    SimplicialDecomposition out;
    out.parts.push_back(rest);
    for (auto it = layers.rbegin(); it != layers.rend(); ++it) out.parts.push_back(*it);
    out.x1_perfect = is_perfect(g, out.parts.front()).perfect;
    return out;
}

std::vector<Basin> basins(const Graph& g, std::optional<int> max_size) {
    check_brute_cap(g, "basin");
    const int limit = max_size.value_or(g.n());
    if (limit > g.n()) throw std::invalid_argument("basin size bound exceeds the graph");
    const int omega = clique_number(g);
    std::optional<SubsetTable> table;
    if (g.n() <= kSubsetTableCap) table.emplace(subset_clique_table(g));
    const auto omega_of = [&](VertexSet s) {
        return table ? int((*table)[s]) : clique_number(g, s);
    };
    std::vector<Basin> out;
    for_each_by_size(g.vertices(), 1, limit, [&](VertexSet x) {
        if (omega_of(neighborhood(g, x, NeighborhoodKind::closed)) < omega) {
            out.push_back(Basin{x, false});
        }
        return false;
    });
    for (Basin& b : out) {
        b.minimal = std::none_of(out.begin(), out.end(), [&](const Basin& o) {
            return o.set != b.set && o.set.subset_of(b.set);
        });
    }
    return out;
}

Graph substitute(const Graph& g, int v, const Graph& h) {
    if (g.n() < 2 || h.n() < 2) throw std::invalid_argument("substitution needs both graphs on >= 2 vertices");
    if (v < 0 || v >= g.n()) throw std::invalid_argument("substituted vertex out of range");
    const int total = g.n() - 1 + h.n();
    if (total > kMaxVertices) throw std::invalid_argument("substitution would exceed 64 vertices");

    std::vector<int> relabel(std::size_t(g.n()), -1);
    int next = 0;
    for (int u = 0; u < g.n(); ++u) {
        if (u != v) relabel[std::size_t(u)] = next++;
    }
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < g.n(); ++a) {
        if (a == v) continue;
        for (int b : g.neighbors(a)) {
            if (b == v || b <= a) continue;
            edges.emplace_back(relabel[std::size_t(a)], relabel[std::size_t(b)]);
        }
    }
    const int base = g.n() - 1;
    for (int a = 0; a < h.n(); ++a) {
        for (int b : h.neighbors(a)) {
            if (b > a) edges.emplace_back(base + a, base + b);
        }
    }
    for (int u : g.neighbors(v)) {
        for (int a = 0; a < h.n(); ++a) edges.emplace_back(relabel[std::size_t(u)], base + a);
    }
    return make_graph(total, edges);
}

namespace {

std::pair<Graph, WeightFunction> expand_one(const Graph& g, const WeightFunction& h, int x) {
    const int size = h[x];
    const int total = g.n() - 1 + size;
    if (total > kMaxVertices) throw std::invalid_argument("expansion would exceed 64 vertices");

    std::vector<int> relabel(std::size_t(g.n()), -1);
    int next = 0;
    for (int u = 0; u < g.n(); ++u) {
        if (u != x) relabel[std::size_t(u)] = next++;
    }
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < g.n(); ++a) {
        if (a == x) continue;
        for (int b : g.neighbors(a)) {
            if (b == x || b <= a) continue;
            edges.emplace_back(relabel[std::size_t(a)], relabel[std::size_t(b)]);
        }
    }
    const int base = g.n() - 1;
    for (int a = 0; a < size; ++a) {
        for (int b = a + 1; b < size; ++b) edges.emplace_back(base + a, base + b);
        for (int u : g.neighbors(x)) edges.emplace_back(relabel[std::size_t(u)], base + a);
    }
    std::vector<int> weights(std::size_t(total), 1);
    for (int u = 0; u < g.n(); ++u) {
        if (u != x) weights[std::size_t(relabel[std::size_t(u)])] = h[u];
    }
    return {make_graph(total, edges), WeightFunction(std::move(weights))};
}

}  // namespace

std::pair<Graph, WeightFunction> weight_expand(const Graph& g, const WeightFunction& h,
                                               std::optional<int> x) {
    if (h.size() != g.n()) throw std::invalid_argument("weight function size does not match graph");
    if (x) {
        if (*x < 0 || *x >= g.n()) throw std::invalid_argument("expanded vertex out of range");
        if (h[*x] == 1) return {g, h};  // identity expansion
        return expand_one(g, h, *x);
    }
    Graph cur = g;
    WeightFunction w = h;
    for (;;) {
        int target = -1;
        for (int v = 0; v < cur.n(); ++v) {
            if (w[v] >= 2) {
                target = v;
                break;
            }
        }
        if (target < 0) return {cur, w};
        std::tie(cur, w) = expand_one(cur, w, target);
    }
}

namespace {

struct InducedSearch {
    const Graph& host;
    const Graph& pat;
    std::vector<int> map;
    std::uint64_t used = 0;

    bool extend(int i) {
        if (i == pat.n()) return true;
        for (int v = 0; v < host.n(); ++v) {
            if ((used >> v) & 1) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) {
                ok = host.adjacent(map[std::size_t(j)], v) == pat.adjacent(j, i);
            }
            if (!ok) continue;
            map[std::size_t(i)] = v;
            used |= 1ull << v;
            if (extend(i + 1)) return true;
            used &= ~(1ull << v);
        }
        return false;
    }
};

}  // namespace

PatternMatch induced_free(const Graph& g, const Graph& pattern) {
    if (pattern.n() > 8) throw std::invalid_argument("pattern search capped at 8 vertices");
    if (pattern.n() > g.n()) return {};
    InducedSearch search{g, pattern, std::vector<int>(std::size_t(pattern.n()), -1)};
    if (search.extend(0)) return PatternMatch{false, search.map};
    return {};
}

PatternMatch induced_free(const Graph& g, PatternName name) {
    return induced_free(g, pattern(name));
}

}  // namespace pdg
