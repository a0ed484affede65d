#include "pdg/perfection.hpp"

#include <algorithm>
#include <array>
#include <tuple>

#include "pdg/subsets.hpp"

namespace pdg {

namespace {

// True iff rows restricted to s form a single chordless cycle covering s.
bool is_chordless_cycle(const std::vector<std::uint64_t>& rows, VertexSet s) {
    for (int v : s) {
        if (std::popcount(rows[std::size_t(v)] & s.bits()) != 2) return false;
    }
    // 2-regular on s: a disjoint union of cycles; walk to confirm a single one.
    const int start = s.lowest();
    int prev = start;
    int cur = VertexSet(rows[std::size_t(start)] & s.bits()).lowest();
    int steps = 1;
    while (cur != start) {
        const VertexSet nb = VertexSet(rows[std::size_t(cur)] & s.bits());
        const int next = nb.without(prev).lowest();
        prev = cur;
        cur = next;
        ++steps;
    }
    return steps == s.count();
}

std::vector<std::uint64_t> adjacency_rows(const Graph& g) {
    std::vector<std::uint64_t> rows(std::size_t(g.n()), 0);
    for (int v = 0; v < g.n(); ++v) rows[std::size_t(v)] = g.neighbors(v).bits();
    return rows;
}

std::vector<std::uint64_t> complement_rows(const Graph& g) {
    const std::uint64_t range = g.vertices().bits();
    std::vector<std::uint64_t> rows(std::size_t(g.n()), 0);
    for (int v = 0; v < g.n(); ++v) {
        rows[std::size_t(v)] = (~g.neighbors(v).bits() & range) & ~(1ull << v);
    }
    return rows;
}

struct WitnessBest {
    bool found = false;
    int len = 0;
    VertexSet mask;
    CycleClass kind = CycleClass::none;

    // Order: shorter first, then least bitmask, then holes before antiholes.
    void offer(int l, VertexSet m, CycleClass k) {
        const auto key = [](int ln, VertexSet ms, CycleClass kd) {
            return std::make_tuple(ln, ms.bits(), kd == CycleClass::odd_hole ? 0 : 1);
        };
        if (!found || key(l, m, k) < key(len, mask, kind)) {
            found = true;
            len = l;
            mask = m;
            kind = k;
        }
    }
};

// DFS over induced paths; reports every induced odd cycle of length >= 5 whose
// length does not exceed best.len (when set). Used above the subset-enumeration
// size threshold.
struct OddCycleDfs {
    const std::vector<std::uint64_t>& rows;
    std::uint64_t scope;
    CycleClass kind;
    WitnessBest& best;

    std::array<int, kMaxVertices> path{};

    void run() {
        for (int s : VertexSet(scope)) {
            path[0] = s;
            // Cycle vertices other than the start must exceed it.
            const std::uint64_t above = scope & ~((2ull << s) - 1);
            for (int w : VertexSet(rows[std::size_t(s)] & above)) {
                path[1] = w;
                dfs(2, (1ull << s) | (1ull << w), rows[std::size_t(s)], 0, above);
            }
        }
    }

    void dfs(int len, std::uint64_t used, std::uint64_t blocked_all, std::uint64_t blocked_inner,
             std::uint64_t above) {
        if (best.found && len + 1 > best.len) return;
        const int start = path[0];
        const int last = path[std::size_t(len - 1)];
        const std::uint64_t last_nb = rows[std::size_t(last)];
        // Closing vertex: adjacent to both ends, nothing else on the path.
        if (len + 1 >= 5 && (len + 1) % 2 == 1) {
            std::uint64_t close =
                last_nb & rows[std::size_t(start)] & above & ~used & ~blocked_inner;
            for (int w : VertexSet(close)) {
                if (path[1] < w) best.offer(len + 1, VertexSet(used | (1ull << w)), kind);
            }
        }
        std::uint64_t ext = last_nb & above & ~used & ~blocked_all;
        for (int w : VertexSet(ext)) {
            path[std::size_t(len)] = w;
            dfs(len + 1, used | (1ull << w), blocked_all | last_nb,
                blocked_inner | (len >= 2 ? last_nb : 0ull), above);
        }
    }
};

constexpr int kSubsetSearchThreshold = 20;

WitnessBest find_min_odd_structure(const Graph& g, VertexSet s) {
    WitnessBest best;
    const auto adj = adjacency_rows(g);
    const auto cadj = complement_rows(g);
    if (s.count() <= kSubsetSearchThreshold) {
        for (int k = 5; k <= s.count() && !best.found; k += 2) {
            for_each_ksubset(s, k, [&](VertexSet cand) {
                if (is_chordless_cycle(adj, cand)) {
                    best.offer(k, cand, CycleClass::odd_hole);
                    return true;
                }
                if (is_chordless_cycle(cadj, cand)) {
                    best.offer(k, cand, CycleClass::odd_antihole);
                    return true;
                }
                return false;
            });
        }
        return best;
    }
    OddCycleDfs holes{adj, s.bits(), CycleClass::odd_hole, best};
    holes.run();
    OddCycleDfs antiholes{cadj, s.bits(), CycleClass::odd_antihole, best};
    antiholes.run();
    return best;
}

}  // namespace

CycleClass classify_cycle_set(const Graph& g, VertexSet s) {
    if (s.count() < 5) throw std::invalid_argument("cycle classification needs at least 5 vertices");
    if (!s.subset_of(g.vertices())) throw std::invalid_argument("subset leaves the vertex range");
    if (s.count() % 2 == 0) return CycleClass::none;
    if (is_chordless_cycle(adjacency_rows(g), s)) return CycleClass::odd_hole;
    if (is_chordless_cycle(complement_rows(g), s)) return CycleClass::odd_antihole;
    return CycleClass::none;
}

PerfectionVerdict is_perfect(const Graph& g, std::optional<VertexSet> s) {
    const VertexSet scope = s.value_or(g.vertices());
    if (!scope.subset_of(g.vertices())) throw std::invalid_argument("subset leaves the vertex range");
    if (scope.count() > kChromaticCap) {
        throw CapabilityError("perfection search capped at " + std::to_string(kChromaticCap) + " vertices");
    }
    if (scope.count() < 5) return {};
    const WitnessBest best = find_min_odd_structure(g, scope);
    if (!best.found) return {};
    return PerfectionVerdict{false, best.mask, best.kind};
}

SubsetTable subset_perfection_table(const Graph& g, int cap) {
    const int n = g.n();
    if (n > cap) {
        throw CapabilityError("subset perfection table needs n <= " + std::to_string(cap) +
                              ", got " + std::to_string(n));
    }
    const auto adj = adjacency_rows(g);
    const auto cadj = complement_rows(g);
    SubsetTable table(n, 1);
    const std::uint64_t total = 1ull << n;
    for (std::uint64_t bits = 1; bits < total; ++bits) {
        const VertexSet s(bits);
        if (s.count() <= 4) continue;
        bool ok = true;
        for (std::uint64_t rest = bits; rest && ok; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            ok = table[s.without(v)] != 0;
        }
        // Odd holes and antiholes are minimal: every proper subset is already
        // vetted, so only the set itself can be the new obstruction.
        if (ok && s.count() % 2 == 1) {
            ok = !is_chordless_cycle(adj, s) && !is_chordless_cycle(cadj, s);
        }
        table.at(s) = ok ? 1 : 0;
    }
    return table;
}

}  // namespace pdg
