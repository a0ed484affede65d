#pragma once

#include "pdg/graph.hpp"

namespace pdg {

/// All submasks A of s (including s and the empty set), descending bitmask
/// order starting at s. Stops early when f returns true.
template <typename F>
bool for_each_submask(VertexSet s, F&& f) {
    for (std::uint64_t a = s.bits();; a = (a - 1) & s.bits()) {
        if (f(VertexSet(a))) return true;
        if (a == 0) return false;
    }
}

/// k-subsets of s in ascending bitmask order (Gosper over the bit positions
/// of s). Stops early when f returns true.
template <typename F>
bool for_each_ksubset(VertexSet s, int k, F&& f) {
    const std::vector<int> pos = s.to_vector();
    const int m = int(pos.size());
    if (k > m || k < 0) return false;
    if (k == 0) return f(VertexSet{});
    std::uint64_t compact = (1ull << k) - 1;
    const std::uint64_t limit = (m >= 64) ? ~0ull : (1ull << m);
    while (compact < limit) {
        VertexSet subset;
        for (std::uint64_t rest = compact; rest; rest &= rest - 1) {
            subset |= VertexSet::single(pos[std::size_t(std::countr_zero(rest))]);
        }
        if (f(subset)) return true;
        const std::uint64_t u = compact & (0 - compact);
        const std::uint64_t v = compact + u;
        if (v == 0) break;  // ran off the top of the word
        compact = v + (((v ^ compact) / u) >> 2);
    }
    return false;
}

/// Subsets of s ordered by (popcount, bitmask), sizes min_size..max_size.
template <typename F>
bool for_each_by_size(VertexSet s, int min_size, int max_size, F&& f) {
    for (int k = min_size; k <= std::min(max_size, s.count()); ++k) {
        if (for_each_ksubset(s, k, f)) return true;
    }
    return false;
}

}  // namespace pdg
