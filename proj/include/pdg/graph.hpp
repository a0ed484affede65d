#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pdg {

inline constexpr int kMaxVertices = 64;

/// Thrown when an input exceeds one of the documented exhaustive-search caps.
struct CapabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Subset of the vertices 0..n-1 of a host graph, packed into one word.
///
/// Subsets are ordered by their bitmask value; "lexicographically least"
/// throughout this library means least bitmask.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<int> vs) {
        for (int v : vs) bits_ |= bit(v);
    }

    static constexpr VertexSet single(int v) { return VertexSet(bit(v)); }
    static constexpr VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~0ull : (1ull << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int count() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const { return (bits_ & bit(v)) != 0; }
    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
    /// Index of the least vertex; 64 when empty.
    constexpr int lowest() const { return std::countr_zero(bits_); }

    constexpr VertexSet with(int v) const { return VertexSet(bits_ | bit(v)); }
    constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~bit(v)); }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return VertexSet(a.bits_ ^ b.bits_); }
    VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

    friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }
    friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr iterator operator++(int) { iterator t = *this; ++*this; return t; }
        friend constexpr bool operator==(iterator a, iterator b) { return a.rest_ == b.rest_; }
    private:
        std::uint64_t rest_ = 0;
    };
    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(std::size_t(count()));
        for (int v : *this) out.push_back(v);
        return out;
    }

private:
    static constexpr std::uint64_t bit(int v) { return 1ull << v; }
    std::uint64_t bits_ = 0;
};

/// Immutable simple undirected graph on 1..64 vertices with bit-row adjacency.
class Graph {
public:
    Graph() = default;

    int n() const { return n_; }
    bool adjacent(int u, int v) const { return (adj_[std::size_t(u)] >> v) & 1; }
    VertexSet neighbors(int v) const { return VertexSet(adj_[std::size_t(v)]); }
    VertexSet vertices() const { return VertexSet::full(n_); }
    int degree(int v) const { return std::popcount(adj_[std::size_t(v)]); }
    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += degree(v);
        return twice / 2;
    }
    const std::string& name() const { return name_; }

    /// Structural equality on the labeled graph; names are ignored.
    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

    /// Builds from raw adjacency rows, validating symmetry and loop-freeness.
    static Graph from_rows(int n, std::span<const std::uint64_t> rows, std::string name = {});

private:
    int n_ = 0;
    std::vector<std::uint64_t> adj_;
    std::string name_;
};

Graph make_graph(int n, std::span<const std::pair<int, int>> edges, std::string name = {});
Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges, std::string name = {});

Graph complement(const Graph& g);

/// Induced subgraph relabeled to 0..|s|-1 in ascending original order,
/// with the map back to the host graph's labels.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent;  // to_parent[i] = host vertex of local vertex i

    VertexSet lift(VertexSet local) const {
        VertexSet out;
        for (int v : local) out |= VertexSet::single(to_parent[std::size_t(v)]);
        return out;
    }
};
InducedSubgraph induced(const Graph& g, VertexSet s);

enum class NeighborhoodKind { open, closed, non };
VertexSet neighborhood(const Graph& g, VertexSet x, NeighborhoodKind kind);

enum class SetRelation { complete, anticomplete, mixed };
SetRelation set_relation(const Graph& g, VertexSet x, VertexSet y);

bool is_clique(const Graph& g, VertexSet x);

/// Connected components, sorted by least member vertex.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

bool triangle_free(const Graph& g);

}  // namespace pdg
