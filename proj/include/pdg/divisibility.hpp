#pragma once

#include <array>

#include "pdg/structure.hpp"

namespace pdg {

/// Exhaustive-search caps; breaches raise CapabilityError, never truncate.
struct DivisibilityCaps {
    int exhaustive = 16;   // unweighted PD / MNPD / 2-division sweeps
    int weighted = 12;     // sweeps under a single weight function
    int pwd_bounded = 8;   // sweeps over all weight functions up to a bound
};

enum class DivisionKind { perfect, h_perfect, two };

struct Division {
    VertexSet a, b;
    DivisionKind kind = DivisionKind::perfect;
    std::optional<WeightFunction> h;  // host-graph weights for h_perfect
};

/// Re-validates a division against its kind's definition from scratch.
bool validate_division(const Graph& g, VertexSet target, const Division& d);

/// First valid division over `target` in (|A|, bitmask-of-A) order, or none
/// after exhausting all A-sides. A weight function upgrades kind perfect to
/// h_perfect.
std::optional<Division> find_division(const Graph& g, VertexSet target, DivisionKind kind,
                                      const WeightFunction* h = nullptr,
                                      const DivisibilityCaps& caps = {});

struct DivisibilityScheme {
    enum class Kind { pd, h_weighted, h2, pwd_bounded, two_div };
    Kind kind = Kind::pd;
    std::optional<WeightFunction> h;  // h_weighted
    int weight_bound = 3;             // pwd_bounded

    static DivisibilityScheme pd() { return {}; }
    static DivisibilityScheme weighted(WeightFunction w) {
        return {Kind::h_weighted, std::move(w), 0};
    }
    static DivisibilityScheme h2() { return {Kind::h2, {}, 0}; }
    static DivisibilityScheme pwd_bounded(int w) { return {Kind::pwd_bounded, {}, w}; }
    static DivisibilityScheme two_div() { return {Kind::two_div, {}, 0}; }
};

enum class MinimalityScheme { mnpd, mn2d };

struct CertificateClaim {
    enum class Kind { pd, h_weighted, h2, pwd_bounded, two_div, mnpd, mn2d };
    Kind kind = Kind::pd;
    std::optional<WeightFunction> h;
    int weight_bound = 0;
};

struct CertificateEvidence {
    std::optional<VertexSet> failing_subset;       // subset with no valid division
    std::optional<WeightFunction> failing_weights;  // weight function it failed under
    bool no_division_of_whole = false;
    std::uint64_t proper_subsets_confirmed = 0;
    std::uint64_t subsets_checked = 0;
};

/// Machine-checkable verdict record for divisibility and minimality claims.
struct Certificate {
    std::string subject_graph6;
    CertificateClaim claim;
    bool verdict = false;
    CertificateEvidence evidence;
    std::vector<std::string> assumptions;
    int exhaustive_bound = 0;  // n at certification time
    std::int64_t wall_ms = 0;
};

Certificate is_divisible(const Graph& g, const DivisibilityScheme& scheme,
                         const DivisibilityCaps& caps = {});
Certificate certify_minimal(const Graph& g, MinimalityScheme scheme,
                            const DivisibilityCaps& caps = {});

struct CutsetSplit {
    VertexSet x, v1, v2;     // host labels; v1 holds the least vertex of G - X
    InducedSubgraph g1, g2;  // induced on x|v1 and x|v2
};

CutsetSplit cutset_split(const Graph& g, VertexSet x);

struct RefineOutcome {
    bool merged = false;
    std::optional<Division> division;  // host labels, present when merged
    int iterations = 0;
    VertexSet disagreement;            // stuck case: cutset vertices still split
    VertexSet a1, b1, a2, b2;          // final divisions, host labels
};

/// Replays the move loop on two perfect divisions of the cutset sides (given
/// in the local labels of split.g1/split.g2). Either the divisions merge into
/// a perfect division of the host, or they jam with every split cutset vertex
/// pinned by both exchange conditions.
RefineOutcome refine_cutset_divisions(const Graph& g, const CutsetSplit& split,
                                      const Division& d1, const Division& d2);

struct P4Witness {
    int z;
    std::array<int, 4> path;  // induced P4, path[0] == z, interior in A2 \ X
};

/// Case analysis on the minimal odd structure of G[A2 + x]: produces a vertex
/// z in (A2 & X) | {x} and an induced P4 starting at z whose remaining
/// vertices avoid the clique X.
P4Witness find_p4_witness(const Graph& g, VertexSet a2, VertexSet x_clique, int x);

/// A perfect division of the whole graph with v on the perfect side, or none.
/// Requires the graph to admit some perfect division.
std::optional<Division> division_through_vertex(const Graph& g, int v,
                                                const DivisibilityCaps& caps = {});

}  // namespace pdg
