#include "pdg/divisibility.hpp"

#include <algorithm>
#include <chrono>

#include "pdg/subsets.hpp"

namespace pdg {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

void check_cap(const Graph& g, int cap, const char* what) {
    if (g.n() > cap) {
        throw CapabilityError(std::string(what) + " capped at n <= " + std::to_string(cap) +
                              ", got " + std::to_string(g.n()));
    }
}

// has_division[S] for perfect (optionally weighted) divisions, all S at once.
std::vector<char> perfect_division_bits(const SubsetTable& perf, const SubsetTable& cliq) {
    const std::uint64_t total = std::uint64_t(1) << perf.n();
    std::vector<char> bits(total, 0);
    bits[0] = 1;  // empty subset is divisible by convention
    for (std::uint64_t s = 1; s < total; ++s) {
        const std::int32_t omega = cliq[VertexSet(s)];
        char ok = 0;
        // Submask walk starts at A = S: perfect subsets settle immediately.
        for (std::uint64_t a = s;; a = (a - 1) & s) {
            if (perf[VertexSet(a)] && cliq[VertexSet(s & ~a)] < omega) {
                ok = 1;
                break;
            }
            if (a == 0) break;
        }
        bits[s] = ok;
    }
    return bits;
}

// has_division[S] for 2-divisions; subsets with no edge are exempt (set to 1).
std::vector<char> two_division_bits(const SubsetTable& cliq) {
    const std::uint64_t total = std::uint64_t(1) << cliq.n();
    std::vector<char> bits(total, 0);
    bits[0] = 1;
    for (std::uint64_t s = 1; s < total; ++s) {
        const std::int32_t omega = cliq[VertexSet(s)];
        if (omega <= 1) {
            bits[s] = 1;
            continue;
        }
        char ok = 0;
        for (std::uint64_t a = s;; a = (a - 1) & s) {
            if (cliq[VertexSet(a)] < omega && cliq[VertexSet(s & ~a)] < omega) {
                ok = 1;
                break;
            }
            if (a == 0) break;
        }
        bits[s] = ok;
    }
    return bits;
}

// Enumerates A-sides of `target` by (popcount, bitmask), optionally pinned to
// contain `through`; returns the first valid division.
template <typename Valid>
std::optional<VertexSet> first_valid_side(VertexSet target, std::optional<int> through,
                                          Valid&& valid) {
    VertexSet scope = target;
    if (through) scope = scope.without(*through);
    std::optional<VertexSet> hit;
    for_each_by_size(scope, 0, scope.count(), [&](VertexSet part) {
        const VertexSet a = through ? part.with(*through) : part;
        if (!valid(a)) return false;
        hit = a;
        return true;
    });
    return hit;
}

WeightFunction h2_member(int n, int x) {
    std::vector<int> w(std::size_t(n), 1);
    w[std::size_t(x)] = 2;
    return WeightFunction(std::move(w));
}

std::string subject_of(const Graph& g) { return emit_graph(g, GraphFormat::graph6); }

}  // namespace

bool validate_division(const Graph& g, VertexSet target, const Division& d) {
    if ((d.a & d.b) != VertexSet{} || (d.a | d.b) != target) return false;
    switch (d.kind) {
        case DivisionKind::perfect:
            return is_perfect(g, d.a).perfect && clique_number(g, d.b) < clique_number(g, target);
        case DivisionKind::h_perfect: {
            if (!d.h) return false;
            return is_perfect(g, d.a).perfect &&
                   clique_number(g, *d.h, d.b) < clique_number(g, *d.h, target);
        }
        case DivisionKind::two:
            return clique_number(g, d.a) < clique_number(g, target) &&
                   clique_number(g, d.b) < clique_number(g, target);
    }
    return false;
}

std::optional<Division> find_division(const Graph& g, VertexSet target, DivisionKind kind,
                                      const WeightFunction* h, const DivisibilityCaps& caps) {
    if (target.empty()) throw std::invalid_argument("division of the empty set");
    if (!target.subset_of(g.vertices())) throw std::invalid_argument("target leaves the vertex range");
    check_cap(g, h ? caps.weighted : caps.exhaustive, "division search");
    if (kind == DivisionKind::h_perfect && !h) {
        throw std::invalid_argument("h_perfect division needs a weight function");
    }

    if (kind == DivisionKind::two) {
        const SubsetTable cliq = subset_clique_table(g, nullptr, caps.exhaustive);
        const std::int32_t omega = cliq[target];
        const auto a = first_valid_side(target, {}, [&](VertexSet side) {
            return cliq[side] < omega && cliq[target - side] < omega;
        });
        if (!a) return {};
        return Division{*a, target - *a, DivisionKind::two, {}};
    }

    const SubsetTable perf = subset_perfection_table(g, caps.exhaustive);
    const SubsetTable cliq = subset_clique_table(g, h, h ? caps.weighted : caps.exhaustive);
    const std::int32_t omega = cliq[target];
    const auto a = first_valid_side(target, {}, [&](VertexSet side) {
        return perf[side] && cliq[target - side] < omega;
    });
    if (!a) return {};
    Division d{*a, target - *a, DivisionKind::perfect, {}};
    if (h) {
        d.kind = DivisionKind::h_perfect;
        d.h = *h;
    }
    return d;
}

namespace {

// First subset (ascending bitmask) without a division, under one weight
// function; nullopt when every subset passes.
std::optional<VertexSet> first_failing_subset(const std::vector<char>& bits) {
    for (std::uint64_t s = 1; s < bits.size(); ++s) {
        if (!bits[s]) return VertexSet(s);
    }
    return {};
}

}  // namespace

Certificate is_divisible(const Graph& g, const DivisibilityScheme& scheme,
                         const DivisibilityCaps& caps) {
    const auto start = Clock::now();
    Certificate cert;
    cert.subject_graph6 = subject_of(g);
    cert.exhaustive_bound = g.n();

    using Kind = DivisibilityScheme::Kind;
    switch (scheme.kind) {
        case Kind::pd: {
            check_cap(g, caps.exhaustive, "perfect divisibility");
            cert.claim.kind = CertificateClaim::Kind::pd;
            const SubsetTable perf = subset_perfection_table(g, caps.exhaustive);
            const SubsetTable cliq = subset_clique_table(g, nullptr, caps.exhaustive);
            const auto bits = perfect_division_bits(perf, cliq);
            cert.evidence.subsets_checked = bits.size() - 1;
            const auto failing = first_failing_subset(bits);
            cert.verdict = !failing;
            cert.evidence.failing_subset = failing;
            break;
        }
        case Kind::h_weighted: {
            check_cap(g, caps.weighted, "weighted divisibility");
            if (!scheme.h || scheme.h->size() != g.n()) {
                throw std::invalid_argument("weighted scheme needs weights matching the graph");
            }
            cert.claim.kind = CertificateClaim::Kind::h_weighted;
            cert.claim.h = scheme.h;
            const SubsetTable perf = subset_perfection_table(g, caps.weighted);
            const SubsetTable cliq = subset_clique_table(g, &*scheme.h, caps.weighted);
            const auto bits = perfect_division_bits(perf, cliq);
            cert.evidence.subsets_checked = bits.size() - 1;
            const auto failing = first_failing_subset(bits);
            cert.verdict = !failing;
            cert.evidence.failing_subset = failing;
            if (failing) cert.evidence.failing_weights = scheme.h;
            break;
        }
        case Kind::h2: {
            check_cap(g, caps.weighted, "doubled-vertex divisibility");
            cert.claim.kind = CertificateClaim::Kind::h2;
            const SubsetTable perf = subset_perfection_table(g, caps.weighted);
            cert.verdict = true;
            for (int x = 0; x < g.n() && cert.verdict; ++x) {
                const WeightFunction h = h2_member(g.n(), x);
                const SubsetTable cliq = subset_clique_table(g, &h, caps.weighted);
                const auto bits = perfect_division_bits(perf, cliq);
                cert.evidence.subsets_checked += bits.size() - 1;
                if (const auto failing = first_failing_subset(bits)) {
                    cert.verdict = false;
                    cert.evidence.failing_subset = failing;
                    cert.evidence.failing_weights = h;
                }
            }
            break;
        }
        case Kind::pwd_bounded: {
            if (scheme.weight_bound < 1) throw std::invalid_argument("weight bound must be positive");
            check_cap(g, scheme.weight_bound >= 2 ? caps.pwd_bounded : caps.exhaustive,
                      "bounded weight divisibility");
            cert.claim.kind = CertificateClaim::Kind::pwd_bounded;
            cert.claim.weight_bound = scheme.weight_bound;
            cert.assumptions.push_back("weights bounded by " + std::to_string(scheme.weight_bound) +
                                       "; not a decision of unbounded weight divisibility");
            const SubsetTable perf = subset_perfection_table(g, caps.exhaustive);
            std::vector<int> w(std::size_t(g.n()), 1);
            cert.verdict = true;
            for (;;) {
                const WeightFunction h{std::vector<int>(w)};
                const SubsetTable cliq = subset_clique_table(g, &h, caps.exhaustive);
                const auto bits = perfect_division_bits(perf, cliq);
                cert.evidence.subsets_checked += bits.size() - 1;
                if (const auto failing = first_failing_subset(bits)) {
                    cert.verdict = false;
                    cert.evidence.failing_subset = failing;
                    cert.evidence.failing_weights = h;
                    break;
                }
                // Odometer, rightmost fastest: ascending lexicographic order.
                int i = g.n() - 1;
                while (i >= 0 && w[std::size_t(i)] == scheme.weight_bound) {
                    w[std::size_t(i)] = 1;
                    --i;
                }
                if (i < 0) break;
                ++w[std::size_t(i)];
            }
            break;
        }
        case Kind::two_div: {
            check_cap(g, caps.exhaustive, "2-divisibility");
            cert.claim.kind = CertificateClaim::Kind::two_div;
            const SubsetTable cliq = subset_clique_table(g, nullptr, caps.exhaustive);
            const auto bits = two_division_bits(cliq);
            cert.evidence.subsets_checked = bits.size() - 1;
            const auto failing = first_failing_subset(bits);
            cert.verdict = !failing;
            cert.evidence.failing_subset = failing;
            break;
        }
    }
    cert.wall_ms = ms_since(start);
    return cert;
}

Certificate certify_minimal(const Graph& g, MinimalityScheme scheme, const DivisibilityCaps& caps) {
    const auto start = Clock::now();
    check_cap(g, caps.exhaustive, "minimality certification");
    Certificate cert;
    cert.subject_graph6 = subject_of(g);
    cert.exhaustive_bound = g.n();
    cert.claim.kind =
        scheme == MinimalityScheme::mnpd ? CertificateClaim::Kind::mnpd : CertificateClaim::Kind::mn2d;

    const SubsetTable cliq = subset_clique_table(g, nullptr, caps.exhaustive);
    std::vector<char> bits;
    if (scheme == MinimalityScheme::mnpd) {
        const SubsetTable perf = subset_perfection_table(g, caps.exhaustive);
        bits = perfect_division_bits(perf, cliq);
    } else {
        bits = two_division_bits(cliq);
    }
    cert.evidence.subsets_checked = bits.size() - 1;

    const std::uint64_t whole = g.vertices().bits();
    if (bits[whole]) {
        cert.verdict = false;  // the whole graph is already divisible
        cert.wall_ms = ms_since(start);
        return cert;
    }
    cert.evidence.no_division_of_whole = true;
    for (std::uint64_t s = 1; s < whole; ++s) {
        if (!bits[s]) {
            cert.verdict = false;  // some proper induced subgraph fails too
            cert.evidence.failing_subset = VertexSet(s);
            cert.wall_ms = ms_since(start);
            return cert;
        }
    }
    cert.verdict = true;
    cert.evidence.proper_subsets_confirmed = whole - 1;
    cert.wall_ms = ms_since(start);
    return cert;
}

CutsetSplit cutset_split(const Graph& g, VertexSet x) {
    if (!is_connected(g)) throw std::invalid_argument("cutset split needs a connected graph");
    if (!is_clique(g, x) || x.empty()) throw std::invalid_argument("cutset must be a nonempty clique");
    const VertexSet rest = g.vertices() - x;
    if (rest.empty()) throw std::invalid_argument("cutset must leave vertices behind");
    const auto rest_graph = induced(g, rest);
    const auto comps = components(rest_graph.graph);
    if (comps.size() < 2) throw std::invalid_argument("removing the clique does not disconnect");

    CutsetSplit split;
    split.x = x;
    split.v1 = rest_graph.lift(comps.front());
    split.v2 = rest - split.v1;
    split.g1 = induced(g, x | split.v1);
    split.g2 = induced(g, x | split.v2);
    return split;
}

RefineOutcome refine_cutset_divisions(const Graph& g, const CutsetSplit& split, const Division& d1,
                                      const Division& d2) {
    if (!validate_division(split.g1.graph, split.g1.graph.vertices(), d1) ||
        d1.kind != DivisionKind::perfect) {
        throw std::invalid_argument("first input is not a valid perfect division of its side");
    }
    if (!validate_division(split.g2.graph, split.g2.graph.vertices(), d2) ||
        d2.kind != DivisionKind::perfect) {
        throw std::invalid_argument("second input is not a valid perfect division of its side");
    }

    VertexSet a1 = split.g1.lift(d1.a), b1 = split.g1.lift(d1.b);
    VertexSet a2 = split.g2.lift(d2.a), b2 = split.g2.lift(d2.b);
    const int omega1 = clique_number(g, split.x | split.v1);
    const int omega2 = clique_number(g, split.x | split.v2);

    RefineOutcome out;
    for (;;) {
        bool moved = false;
        for (int x : split.x) {
            if (a1.contains(x) && b2.contains(x)) {
                if (clique_number(g, b1.with(x)) < omega1) {
                    a1 -= VertexSet::single(x);
                    b1 |= VertexSet::single(x);
                    moved = true;
                } else if (is_perfect(g, a2.with(x)).perfect) {
                    b2 -= VertexSet::single(x);
                    a2 |= VertexSet::single(x);
                    moved = true;
                }
            } else if (a2.contains(x) && b1.contains(x)) {
                if (clique_number(g, b2.with(x)) < omega2) {
                    a2 -= VertexSet::single(x);
                    b2 |= VertexSet::single(x);
                    moved = true;
                } else if (is_perfect(g, a1.with(x)).perfect) {
                    b1 -= VertexSet::single(x);
                    a1 |= VertexSet::single(x);
                    moved = true;
                }
            }
            if (moved) break;
        }
        if (!moved) break;
        ++out.iterations;
    }

    out.a1 = a1;
    out.b1 = b1;
    out.a2 = a2;
    out.b2 = b2;
    out.disagreement = split.x & ((a1 & b2) | (a2 & b1));
    if (out.disagreement.empty()) {
        Division merged{a1 | a2, b1 | b2, DivisionKind::perfect, {}};
        if (!validate_division(g, g.vertices(), merged)) {
            throw std::logic_error("merged cutset divisions failed re-validation");
        }
        out.merged = true;
        out.division = merged;
    }
    return out;
}

namespace {

// Cycle order of a chordless cycle on s under the given rows, starting at
// `start`, second vertex = least neighbor.
std::vector<int> cycle_order(const std::vector<std::uint64_t>& rows, VertexSet s, int start) {
    std::vector<int> order{start};
    int prev = start;
    int cur = VertexSet(rows[std::size_t(start)] & s.bits()).lowest();
    while (cur != start) {
        order.push_back(cur);
        const int next = VertexSet(rows[std::size_t(cur)] & s.bits()).without(prev).lowest();
        prev = cur;
        cur = next;
    }
    return order;
}

bool is_induced_p4(const Graph& g, const std::array<int, 4>& p) {
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (g.adjacent(p[std::size_t(i)], p[std::size_t(j)]) != (j == i + 1)) return false;
        }
    }
    return true;
}

}  // namespace

P4Witness find_p4_witness(const Graph& g, VertexSet a2, VertexSet x_clique, int x) {
    if (!x_clique.contains(x)) throw std::invalid_argument("x must lie in the clique");
    if (!is_clique(g, x_clique)) throw std::invalid_argument("X must be a clique");
    if (a2.contains(x)) throw std::invalid_argument("x must lie outside A2");
    if (!is_perfect(g, a2).perfect) throw std::invalid_argument("G[A2] must be perfect");
    const PerfectionVerdict verdict = is_perfect(g, a2.with(x));
    if (verdict.perfect) throw std::invalid_argument("G[A2 + x] must be imperfect");

    const VertexSet c = verdict.witness;  // contains x: G[A2] alone is perfect
    P4Witness out{};

    if (verdict.witness_kind == CycleClass::odd_hole) {
        std::vector<std::uint64_t> rows(std::size_t(g.n()), 0);
        for (int v = 0; v < g.n(); ++v) rows[std::size_t(v)] = g.neighbors(v).bits();
        const std::vector<int> cyc = cycle_order(rows, c, x);
        const int n = int(cyc.size()) - 1;  // x v1 .. vn
        // The clique meets the hole in at most one neighbor of x; walk the
        // clean direction.
        if (x_clique.contains(cyc[1])) {
            out = P4Witness{x, {x, cyc[std::size_t(n)], cyc[std::size_t(n - 1)], cyc[std::size_t(n - 2)]}};
        } else {
            out = P4Witness{x, {x, cyc[1], cyc[2], cyc[3]}};
        }
    } else {
        // Order the antihole along its complementary cycle u0 = x, u1, ..., uk.
        const std::uint64_t range = g.vertices().bits();
        std::vector<std::uint64_t> rows(std::size_t(g.n()), 0);
        for (int v = 0; v < g.n(); ++v) {
            rows[std::size_t(v)] = (~g.neighbors(v).bits() & range) & ~(1ull << v);
        }
        const std::vector<int> cyc = cycle_order(rows, c, x);
        const int m = int(cyc.size());  // k + 1, odd >= 7
        const auto at = [&](int idx) { return cyc[std::size_t(((idx % m) + m) % m)]; };
        int j = -1;
        for (int i = 0; i < m; ++i) {
            if (!x_clique.contains(at(i))) continue;
            const int in_x = int(x_clique.contains(at(i + 2))) + int(x_clique.contains(at(i - 2)));
            if (in_x <= 1) {
                j = i;
                break;
            }
        }
        if (j < 0) throw std::logic_error("antihole case: no pivot with a free second neighbor");
        if (!x_clique.contains(at(j + 2))) {
            out = P4Witness{at(j), {at(j), at(j + 2), at(j - 1), at(j + 1)}};
        } else {
            out = P4Witness{at(j), {at(j), at(j - 2), at(j + 1), at(j - 1)}};
        }
    }

    const VertexSet interior{out.path[1], out.path[2], out.path[3]};
    if (!is_induced_p4(g, out.path) || !interior.subset_of(a2 - x_clique) ||
        !(a2 & x_clique).with(x).contains(out.z)) {
        throw std::logic_error("constructed path failed re-validation");
    }
    return out;
}

std::optional<Division> division_through_vertex(const Graph& g, int v, const DivisibilityCaps& caps) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("vertex out of range");
    check_cap(g, caps.exhaustive, "division search");
    const SubsetTable perf = subset_perfection_table(g, caps.exhaustive);
    const SubsetTable cliq = subset_clique_table(g, nullptr, caps.exhaustive);
    const VertexSet whole = g.vertices();
    const std::int32_t omega = cliq[whole];
    const auto any = first_valid_side(whole, {}, [&](VertexSet side) {
        return perf[side] && cliq[whole - side] < omega;
    });
    if (!any) throw std::invalid_argument("graph admits no perfect division");
    const auto a = first_valid_side(whole, v, [&](VertexSet side) {
        return perf[side] && cliq[whole - side] < omega;
    });
    if (!a) return {};
    return Division{*a, whole - *a, DivisionKind::perfect, {}};
}

}  // namespace pdg
