#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "pdg/divisibility.hpp"

using namespace pdg;

namespace {

const Graph bowtie = make_graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});

}  // namespace

TEST_CASE("find_division on C5") {
    const Graph c5 = pattern(PatternName::c5);
    const auto d = find_division(c5, c5.vertices(), DivisionKind::perfect);
    REQUIRE(d);
    CHECK(validate_division(c5, c5.vertices(), *d));

    // the P4-plus-vertex split is one valid division of C5
    const Division textbook{VertexSet{0, 1, 2, 3}, VertexSet{4}, DivisionKind::perfect, {}};
    CHECK(validate_division(c5, c5.vertices(), textbook));

    CHECK_FALSE(find_division(c5, c5.vertices(), DivisionKind::two));
}

TEST_CASE("find_division is deterministic and valid across the n <= 5 corpus") {
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            const auto d = find_division(g, g.vertices(), DivisionKind::perfect);
            const auto d2 = find_division(g, g.vertices(), DivisionKind::perfect);
            if (d) {
                CHECK(validate_division(g, g.vertices(), *d));
                REQUIRE(d2);
                CHECK(d->a == d2->a);
            }
            const auto t = find_division(g, g.vertices(), DivisionKind::two);
            if (t) CHECK(validate_division(g, g.vertices(), *t));
        }
    }
}

TEST_CASE("find_division with weights") {
    const Graph k2 = make_graph(2, {{0, 1}});
    const WeightFunction h(std::vector<int>{2, 3});
    const auto d = find_division(k2, k2.vertices(), DivisionKind::perfect, &h);
    REQUIRE(d);
    CHECK(d->kind == DivisionKind::h_perfect);
    CHECK(validate_division(k2, k2.vertices(), *d));
}

TEST_CASE("no perfect division of the groetzsch graph") {
    const Graph gz = pattern(PatternName::groetzsch);
    CHECK_FALSE(find_division(gz, gz.vertices(), DivisionKind::perfect));
}

TEST_CASE("is_divisible schemes") {
    const Graph c5 = pattern(PatternName::c5);

    const Certificate pd = is_divisible(c5, DivisibilityScheme::pd());
    CHECK(pd.verdict);
    CHECK(pd.evidence.subsets_checked == 31);

    const Certificate two = is_divisible(c5, DivisibilityScheme::two_div());
    CHECK_FALSE(two.verdict);
    REQUIRE(two.evidence.failing_subset);
    CHECK(*two.evidence.failing_subset == c5.vertices());

    const Certificate gz_pd = is_divisible(pattern(PatternName::groetzsch), DivisibilityScheme::pd());
    CHECK_FALSE(gz_pd.verdict);
    REQUIRE(gz_pd.evidence.failing_subset);
    CHECK(*gz_pd.evidence.failing_subset == pattern(PatternName::groetzsch).vertices());

    CHECK(is_divisible(c5, DivisibilityScheme::h2()).verdict);
    CHECK(is_divisible(c5, DivisibilityScheme::pwd_bounded(3)).verdict);
    CHECK(is_divisible(c5, DivisibilityScheme::weighted(WeightFunction(std::vector<int>{2, 1, 2, 1, 1}))).verdict);
}

TEST_CASE("failing certificates name a re-checkable subset") {
    const Graph gz = pattern(PatternName::groetzsch);
    const Certificate cert = is_divisible(gz, DivisibilityScheme::pd());
    REQUIRE(cert.evidence.failing_subset);
    CHECK_FALSE(find_division(gz, *cert.evidence.failing_subset, DivisionKind::perfect));
}

TEST_CASE("certify_minimal") {
    CHECK(certify_minimal(pattern(PatternName::c5), MinimalityScheme::mn2d).verdict);
    CHECK(certify_minimal(pattern(PatternName::c7), MinimalityScheme::mn2d).verdict);
    CHECK_FALSE(certify_minimal(pattern(PatternName::c5), MinimalityScheme::mnpd).verdict);
    CHECK_FALSE(certify_minimal(pattern(PatternName::k3), MinimalityScheme::mn2d).verdict);

    const Certificate gz = certify_minimal(pattern(PatternName::groetzsch), MinimalityScheme::mnpd);
    CHECK(gz.verdict);
    CHECK(gz.evidence.no_division_of_whole);
    CHECK(gz.evidence.proper_subsets_confirmed == (1ull << 11) - 2);
}

TEST_CASE("perfect divisibility is hereditary, n <= 6") {
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            if (!is_divisible(g, DivisibilityScheme::pd()).verdict) continue;
            for (int v = 0; v < n; ++v) {
                const Graph sub = induced(g, g.vertices().without(v)).graph;
                CHECK(is_divisible(sub, DivisibilityScheme::pd()).verdict);
            }
        }
    }
}

TEST_CASE("cutset_split") {
    const auto split = cutset_split(bowtie, VertexSet{2});
    CHECK(split.v1 == VertexSet{0, 1});
    CHECK(split.v2 == VertexSet{3, 4});
    CHECK(clique_number(split.g1.graph) == 3);
    CHECK(clique_number(split.g2.graph) == 3);

    const Graph p3 = pattern(PatternName::p3);
    const auto ps = cutset_split(p3, VertexSet{1});
    CHECK(ps.v1 == VertexSet{0});
    CHECK(ps.v2 == VertexSet{2});

    CHECK_THROWS_AS(cutset_split(pattern(PatternName::c5), VertexSet{0, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(cutset_split(bowtie, VertexSet{0, 3}), std::invalid_argument);
}

TEST_CASE("refine merges the bowtie's side divisions") {
    const auto split = cutset_split(bowtie, VertexSet{2});
    const auto d1 = find_division(split.g1.graph, split.g1.graph.vertices(), DivisionKind::perfect);
    const auto d2 = find_division(split.g2.graph, split.g2.graph.vertices(), DivisionKind::perfect);
    REQUIRE(d1);
    REQUIRE(d2);
    const RefineOutcome out = refine_cutset_divisions(bowtie, split, *d1, *d2);
    CHECK(out.merged);
    REQUIRE(out.division);
    CHECK(validate_division(bowtie, bowtie.vertices(), *out.division));
    CHECK(out.iterations <= 1);
}

TEST_CASE("refine walks random chordal cutset instances to a merge") {
    std::mt19937 rng(97);
    int done = 0;
    while (done < 120) {
        std::uniform_int_distribution<int> size(4, 10);
        const Graph g = oracle::random_chordal(rng, size(rng));
        if (!is_connected(g)) continue;
        const auto cuts = clique_cutsets(g, CutsetMode::minimum);
        if (cuts.empty()) continue;
        const auto split = cutset_split(g, cuts.front());
        const auto d1 =
            find_division(split.g1.graph, split.g1.graph.vertices(), DivisionKind::perfect);
        const auto d2 =
            find_division(split.g2.graph, split.g2.graph.vertices(), DivisionKind::perfect);
        REQUIRE(d1);
        REQUIRE(d2);
        const RefineOutcome out = refine_cutset_divisions(g, split, *d1, *d2);
        CHECK(out.merged);
        CHECK(out.iterations <= split.x.count());
        REQUIRE(out.division);
        CHECK(validate_division(g, g.vertices(), *out.division));
        ++done;
    }
}

TEST_CASE("refine rejects invalid inputs") {
    const auto split = cutset_split(bowtie, VertexSet{2});
    const Division bogus{VertexSet{}, split.g1.graph.vertices(), DivisionKind::perfect, {}};
    const auto d2 = find_division(split.g2.graph, split.g2.graph.vertices(), DivisionKind::perfect);
    REQUIRE(d2);
    CHECK_THROWS_AS(refine_cutset_divisions(bowtie, split, bogus, *d2), std::invalid_argument);
}

TEST_CASE("find_p4_witness on odd holes") {
    // x plus a P4 completing a C5; X meets the hole only at x
    const Graph c5 = pattern(PatternName::c5);
    const P4Witness w = find_p4_witness(c5, VertexSet{1, 2, 3, 4}, VertexSet{0}, 0);
    CHECK(w.z == 0);
    CHECK(w.path[0] == 0);
    CHECK(w.path == std::array<int, 4>{0, 1, 2, 3});

    const Graph c7 = pattern(PatternName::c7);
    const P4Witness w7 = find_p4_witness(c7, VertexSet{1, 2, 3, 4, 5, 6}, VertexSet{0}, 0);
    CHECK(w7.z == 0);
}

TEST_CASE("find_p4_witness on odd antiholes, all placements") {
    const Graph ac7 = complement(pattern(PatternName::c7));
    for (int x = 0; x < ac7.n(); ++x) {
        const VertexSet a2 = ac7.vertices().without(x);
        REQUIRE(is_perfect(ac7, a2).perfect);
        const P4Witness w = find_p4_witness(ac7, a2, VertexSet::single(x), x);
        const VertexSet interior{w.path[1], w.path[2], w.path[3]};
        CHECK(interior.subset_of(a2));
        CHECK((w.z == x || a2.contains(w.z)));
        // the path really is an induced P4
        for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
                CHECK(ac7.adjacent(w.path[std::size_t(i)], w.path[std::size_t(j)]) == (j == i + 1));
            }
        }
    }
}

TEST_CASE("find_p4_witness checks its preconditions") {
    const Graph c5 = pattern(PatternName::c5);
    CHECK_THROWS_AS(find_p4_witness(c5, VertexSet{1, 2, 3}, VertexSet{0}, 0),
                    std::invalid_argument);  // G[A2 + x] is perfect
    CHECK_THROWS_AS(find_p4_witness(c5, VertexSet{0, 1, 2, 3}, VertexSet{0}, 0),
                    std::invalid_argument);  // x inside A2
}

TEST_CASE("division_through_vertex") {
    const Graph c5 = pattern(PatternName::c5);
    for (int v = 0; v < 5; ++v) {
        const auto d = division_through_vertex(c5, v);
        REQUIRE(d);
        CHECK(d->a.contains(v));
        CHECK(validate_division(c5, c5.vertices(), *d));
    }

    const Graph p4 = pattern(PatternName::p4);
    for (int v = 0; v < 4; ++v) {
        const auto d = division_through_vertex(p4, v);
        REQUIRE(d);
        CHECK(d->a.contains(v));
    }
    // the whole-graph side is itself a valid division of a perfect graph
    CHECK(validate_division(p4, p4.vertices(),
                            Division{p4.vertices(), VertexSet{}, DivisionKind::perfect, {}}));

    CHECK_THROWS_AS(division_through_vertex(pattern(PatternName::groetzsch), 0),
                    std::invalid_argument);
}

TEST_CASE("capability caps are reported, never truncated") {
    DivisibilityCaps tight;
    tight.exhaustive = 4;
    CHECK_THROWS_AS(is_divisible(pattern(PatternName::c5), DivisibilityScheme::pd(), tight),
                    CapabilityError);
    CHECK_THROWS_AS(certify_minimal(pattern(PatternName::c5), MinimalityScheme::mnpd, tight),
                    CapabilityError);
    DivisibilityCaps pwd_tight;
    pwd_tight.pwd_bounded = 4;
    CHECK_THROWS_AS(
        is_divisible(pattern(PatternName::c5), DivisibilityScheme::pwd_bounded(2), pwd_tight),
        CapabilityError);
}
