#include "pdg/graph.hpp"

#include <algorithm>

namespace pdg {

namespace {

void check_vertex_count(int n) {
    if (n < 1 || n > kMaxVertices) {
        throw std::invalid_argument("vertex count " + std::to_string(n) + " outside 1..64");
    }
}

}  // namespace

Graph Graph::from_rows(int n, std::span<const std::uint64_t> rows, std::string name) {
    check_vertex_count(n);
    if (int(rows.size()) != n) throw std::invalid_argument("row count does not match vertex count");
    const std::uint64_t range = VertexSet::full(n).bits();
    for (int v = 0; v < n; ++v) {
        if (rows[std::size_t(v)] & ~range) {
            throw std::invalid_argument("adjacency row of vertex " + std::to_string(v) + " leaves 0..n-1");
        }
        if ((rows[std::size_t(v)] >> v) & 1) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(v));
        }
    }
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (((rows[std::size_t(u)] >> v) & 1) != ((rows[std::size_t(v)] >> u) & 1)) {
                throw std::invalid_argument("asymmetric adjacency between " + std::to_string(u) + " and " + std::to_string(v));
            }
        }
    }
    Graph g;
    g.n_ = n;
    g.adj_.assign(rows.begin(), rows.end());
    g.name_ = std::move(name);
    return g;
}

Graph make_graph(int n, std::span<const std::pair<int, int>> edges, std::string name) {
    check_vertex_count(n);
    std::vector<std::uint64_t> rows(std::size_t(n), 0);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") has a vertex outside 0.." + std::to_string(n - 1));
        }
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        rows[std::size_t(u)] |= 1ull << v;
        rows[std::size_t(v)] |= 1ull << u;
    }
    return Graph::from_rows(n, rows, std::move(name));
}

Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges, std::string name) {
    return make_graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()), std::move(name));
}

Graph complement(const Graph& g) {
    const int n = g.n();
    const std::uint64_t range = VertexSet::full(n).bits();
    std::vector<std::uint64_t> rows(std::size_t(n), 0);
    for (int v = 0; v < n; ++v) {
        rows[std::size_t(v)] = (~g.neighbors(v).bits() & range) & ~(1ull << v);
    }
    return Graph::from_rows(n, rows);
}

InducedSubgraph induced(const Graph& g, VertexSet s) {
    if (s.empty()) throw std::invalid_argument("induced subgraph on the empty set");
    if (!s.subset_of(g.vertices())) throw std::invalid_argument("subset leaves the vertex range");
    std::vector<int> map = s.to_vector();
    const int k = int(map.size());
    std::vector<std::uint64_t> rows(std::size_t(k), 0);
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            if (g.adjacent(map[std::size_t(i)], map[std::size_t(j)])) {
                rows[std::size_t(i)] |= 1ull << j;
                rows[std::size_t(j)] |= 1ull << i;
            }
        }
    }
    return InducedSubgraph{Graph::from_rows(k, rows), std::move(map)};
}

VertexSet neighborhood(const Graph& g, VertexSet x, NeighborhoodKind kind) {
    if (x.empty()) throw std::invalid_argument("neighborhood of the empty set");
    if (!x.subset_of(g.vertices())) throw std::invalid_argument("subset leaves the vertex range");
    VertexSet open;
    for (int v : x) open |= g.neighbors(v);
    open -= x;
    switch (kind) {
        case NeighborhoodKind::open: return open;
        case NeighborhoodKind::closed: return open | x;
        case NeighborhoodKind::non: return g.vertices() - (open | x);
    }
    return {};
}

SetRelation set_relation(const Graph& g, VertexSet x, VertexSet y) {
    if (x.empty() || y.empty()) throw std::invalid_argument("set_relation on an empty set");
    if (x.intersects(y)) throw std::invalid_argument("set_relation on overlapping sets");
    bool complete = true, anticomplete = true;
    for (int v : x) {
        const VertexSet hits = g.neighbors(v) & y;
        if (hits != y) complete = false;
        if (!hits.empty()) anticomplete = false;
        if (!complete && !anticomplete) return SetRelation::mixed;
    }
    return complete ? SetRelation::complete : SetRelation::anticomplete;
}

bool is_clique(const Graph& g, VertexSet x) {
    for (int v : x) {
        if ((g.neighbors(v) & x) != x.without(v)) return false;
    }
    return true;
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet rest = g.vertices();
    while (!rest.empty()) {
        VertexSet comp = VertexSet::single(rest.lowest());
        for (;;) {
            VertexSet grown = comp;
            for (int v : comp) grown |= g.neighbors(v);
            grown &= rest;
            if (grown == comp) break;
            comp = grown;
        }
        out.push_back(comp);
        rest -= comp;
    }
    std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) { return a.lowest() < b.lowest(); });
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool triangle_free(const Graph& g) {
    for (int v = 0; v < g.n(); ++v) {
        for (int u : g.neighbors(v)) {
            if (u <= v) continue;
            if (!(g.neighbors(u) & g.neighbors(v)).empty()) return false;
        }
    }
    return true;
}

}  // namespace pdg
