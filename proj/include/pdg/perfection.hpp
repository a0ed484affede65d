#pragma once

#include "pdg/invariants.hpp"

namespace pdg {

enum class CycleClass { none, odd_hole, odd_antihole };

/// Classifies a vertex set of size >= 5: odd_hole when it induces a chordless
/// odd cycle, odd_antihole when its complement does. A C5 is both and reports
/// odd_hole by the fixed tie-break.
CycleClass classify_cycle_set(const Graph& g, VertexSet s);

struct PerfectionVerdict {
    bool perfect = true;
    VertexSet witness;                          // present iff !perfect
    CycleClass witness_kind = CycleClass::none;
};

/// Perfection of G[S] via odd hole / odd antihole search. The witness is the
/// minimum-size offending subset, ties broken by least bitmask, holes before
/// antiholes on the same subset. Capped at 32 vertices.
PerfectionVerdict is_perfect(const Graph& g, std::optional<VertexSet> s = {});

/// table[S] = 1 iff G[S] is perfect, for every subset S.
SubsetTable subset_perfection_table(const Graph& g, int cap = kSubsetTableCap);

}  // namespace pdg
