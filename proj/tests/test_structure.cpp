#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "pdg/structure.hpp"
#include "pdg/subsets.hpp"

using namespace pdg;

namespace {

const Graph bowtie = make_graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});

}  // namespace

TEST_CASE("homogeneous sets") {
    CHECK(homogeneous_sets(pattern(PatternName::p4), HomogeneousMode::any).empty());
    CHECK(homogeneous_sets(pattern(PatternName::c5), HomogeneousMode::any).empty());

    // substituting K2 for an endpoint of P4 plants a homogeneous 2-clique
    const Graph sub = substitute(pattern(PatternName::p4), 0, pattern(PatternName::p2));
    const VertexSet image{3, 4};  // trailing labels hold the substituted graph
    const auto all = homogeneous_sets(sub, HomogeneousMode::all_minimal);
    CHECK(std::find(all.begin(), all.end(), image) != all.end());
    const auto cliques2 = homogeneous_sets(sub, HomogeneousMode::two_clique);
    CHECK(std::find(cliques2.begin(), cliques2.end(), image) != cliques2.end());
}

TEST_CASE("minimal homogeneous sets are inclusion-minimal, n <= 5") {
    for (int n = 3; n <= 5; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            const auto minimal = homogeneous_sets(g, HomogeneousMode::all_minimal);
            for (std::size_t i = 0; i < minimal.size(); ++i) {
                for (std::size_t j = 0; j < minimal.size(); ++j) {
                    if (i != j) CHECK_FALSE(minimal[i].subset_of(minimal[j]));
                }
            }
        }
    }
}

TEST_CASE("clique cutsets") {
    const auto any = clique_cutsets(bowtie, CutsetMode::any);
    REQUIRE(any.size() == 1);
    CHECK(any.front() == VertexSet{2});
    const auto minimum = clique_cutsets(bowtie, CutsetMode::minimum);
    CHECK(minimum.front() == VertexSet{2});

    CHECK(clique_cutsets(pattern(PatternName::c5), CutsetMode::all).empty());
    CHECK(clique_cutsets(pattern(PatternName::groetzsch), CutsetMode::all).empty());

    CHECK_THROWS_AS(clique_cutsets(pattern(PatternName::two_p3), CutsetMode::any),
                    std::invalid_argument);
}

TEST_CASE("simplicial sets") {
    const Graph p4 = pattern(PatternName::p4);
    CHECK(is_simplicial_set_of(p4, VertexSet{0}, VertexSet{1, 2, 3}));
    CHECK_FALSE(is_simplicial_set_of(p4, VertexSet{1}, VertexSet{0, 2, 3}));

    const Graph claw = pattern(PatternName::claw);
    CHECK_FALSE(is_simplicial_set_of(claw, VertexSet{0}, VertexSet{1, 2, 3}));

    CHECK_THROWS_AS(is_simplicial_set_of(p4, VertexSet{}, VertexSet{1}), std::invalid_argument);
    CHECK_THROWS_AS(is_simplicial_set_of(p4, VertexSet{0, 1}, VertexSet{1}), std::invalid_argument);
}

TEST_CASE("simplicial sets are unions of pairwise anticomplete cliques, n <= 5") {
    for (int n = 2; n <= 5; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            const std::uint64_t total = g.vertices().bits();
            for (std::uint64_t xb = 1; xb <= total; ++xb) {
                const VertexSet x(xb);
                const VertexSet rest = g.vertices() - x;
                for_each_submask(rest, [&](VertexSet y) {
                    if (is_simplicial_set_of(g, x, y)) {
                        for (VertexSet comp : components(induced(g, x).graph)) {
                            CHECK(is_clique(induced(g, x).graph, comp));
                        }
                    }
                    return false;
                });
            }
        }
    }
}

TEST_CASE("simplicial peeling") {
    const Graph p4 = pattern(PatternName::p4);
    const SimplicialDecomposition dp = simplicial_peeling(p4, p4.vertices());
    REQUIRE(dp.parts.size() == 2);
    CHECK(dp.parts[0] == VertexSet{1, 2});
    CHECK(dp.parts[1] == VertexSet{0, 3});
    CHECK(dp.x1_perfect);

    const Graph c5 = pattern(PatternName::c5);
    const SimplicialDecomposition dc = simplicial_peeling(c5, c5.vertices());
    REQUIRE(dc.parts.size() == 1);
    CHECK(dc.parts[0] == c5.vertices());
    CHECK_FALSE(dc.x1_perfect);

    const Graph k3 = pattern(PatternName::k3);
    const SimplicialDecomposition dk = simplicial_peeling(k3, k3.vertices());
    REQUIRE(dk.parts.size() == 1);
    CHECK(dk.parts[0] == k3.vertices());
    CHECK(dk.x1_perfect);
}

TEST_CASE("peeling layers are simplicial sets of their prefixes, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            const std::uint64_t total = g.vertices().bits();
            for (std::uint64_t xb = 1; xb <= total; ++xb) {
                const SimplicialDecomposition d = simplicial_peeling(g, VertexSet(xb));
                VertexSet prefix = d.parts[0];
                for (std::size_t i = 1; i < d.parts.size(); ++i) {
                    CHECK(is_simplicial_set_of(g, d.parts[i], prefix));
                    prefix |= d.parts[i];
                }
                CHECK(prefix == VertexSet(xb));
            }
        }
    }
}

TEST_CASE("basins") {
    const Graph k3k1 = make_graph(4, {{0, 1}, {0, 2}, {1, 2}});
    const auto found = basins(k3k1);
    REQUIRE_FALSE(found.empty());
    CHECK(found.front().set == VertexSet{3});
    CHECK(found.front().minimal);

    CHECK(basins(pattern(PatternName::c5)).empty());
    CHECK(basins(pattern(PatternName::groetzsch)).empty());

    CHECK_THROWS_AS(basins(pattern(PatternName::c5), 6), std::invalid_argument);
}

TEST_CASE("substitution") {
    // C5 into one endpoint of K2: the other endpoint sees the whole cycle
    const Graph wheel = substitute(pattern(PatternName::p2), 0, pattern(PatternName::c5));
    CHECK(wheel.n() == 6);
    CHECK(wheel.edge_count() == 10);
    CHECK(wheel.degree(0) == 5);

    const Graph sub = substitute(pattern(PatternName::p4), 0, pattern(PatternName::p2));
    const auto homog = homogeneous_sets(sub, HomogeneousMode::all_minimal);
    CHECK(std::find(homog.begin(), homog.end(), VertexSet{3, 4}) != homog.end());

    CHECK_THROWS_AS(substitute(make_graph(1, {}), 0, pattern(PatternName::p2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(substitute(pattern(PatternName::p4), 0, make_graph(1, {})),
                    std::invalid_argument);
}

TEST_CASE("substituted images are always homogeneous (random pairs)") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> size(2, 5);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = oracle::random_graph(rng, size(rng));
        const Graph h = oracle::random_graph(rng, size(rng));
        std::uniform_int_distribution<int> pick(0, g.n() - 1);
        const int v = pick(rng);
        const Graph s = substitute(g, v, h);
        VertexSet image;
        for (int i = 0; i < h.n(); ++i) image |= VertexSet::single(g.n() - 1 + i);
        bool homogeneous = true;
        for (int u : s.vertices() - image) {
            const VertexSet hits = s.neighbors(u) & image;
            if (!hits.empty() && hits != image) homogeneous = false;
        }
        CHECK(homogeneous);
    }
}

TEST_CASE("weight expansion") {
    const auto [k3, ones] = weight_expand(make_graph(1, {}), WeightFunction(std::vector<int>{3}));
    CHECK(k3 == pattern(PatternName::k3));
    CHECK(ones.all_ones());

    const auto [k3b, w] = weight_expand(make_graph(2, {{0, 1}}), WeightFunction(std::vector<int>{2, 1}), 0);
    CHECK(oracle::isomorphic(k3b, pattern(PatternName::k3)));
    CHECK(w.all_ones());

    // weight-1 expansion is the identity
    const Graph p3 = pattern(PatternName::p3);
    const auto [same, hsame] = weight_expand(p3, WeightFunction(std::vector<int>{1, 2, 1}), 0);
    CHECK(same == p3);
    CHECK(hsame == WeightFunction(std::vector<int>{1, 2, 1}));
}

TEST_CASE("expansion preserves the weighted clique number (200 random cases)") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> size(1, 5);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = size(rng);
        const Graph g = oracle::random_graph(rng, n);
        const WeightFunction h = oracle::random_weights(rng, n, 3);
        std::uniform_int_distribution<int> pick(0, n - 1);
        const int x = pick(rng);
        const auto [ex, hx] = weight_expand(g, h, x);
        CHECK(oracle::clique_number(ex, ex.vertices(), &hx.weights) ==
              oracle::clique_number(g, g.vertices(), &h.weights));
    }
}

TEST_CASE("full expansion is order-independent up to isomorphism, n <= 4") {
    // ascending-index order is the fixed choice; compare against expanding in
    // descending order via repeated single steps
    std::mt19937 rng(59);
    std::uniform_int_distribution<int> size(1, 4);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = size(rng);
        const Graph g = oracle::random_graph(rng, n);
        const WeightFunction h = oracle::random_weights(rng, n, 3);
        const auto [fixed, fw] = weight_expand(g, h);
        CHECK(fw.all_ones());

        Graph cur = g;
        WeightFunction w = h;
        for (;;) {
            int target = -1;
            for (int v = cur.n() - 1; v >= 0; --v) {
                if (w[v] >= 2) {
                    target = v;
                    break;
                }
            }
            if (target < 0) break;
            std::tie(cur, w) = weight_expand(cur, w, target);
        }
        CHECK(canonical_code(fixed) == canonical_code(cur));
    }
}

TEST_CASE("induced_free") {
    CHECK(induced_free(pattern(PatternName::c5), PatternName::claw).free);

    const auto self = induced_free(pattern(PatternName::claw), PatternName::claw);
    CHECK_FALSE(self.free);
    CHECK(self.witness == std::vector<int>{0, 1, 2, 3});

    CHECK(induced_free(pattern(PatternName::groetzsch), PatternName::k3).free);
    CHECK_FALSE(induced_free(pattern(PatternName::groetzsch), PatternName::claw).free);
    CHECK_THROWS_AS(induced_free(pattern(PatternName::c5), PatternName::groetzsch),
                    std::invalid_argument);
}

TEST_CASE("induced_free witnesses are induced copies (random)") {
    std::mt19937 rng(67);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = oracle::random_graph(rng, 7);
        for (PatternName p : {PatternName::p4, PatternName::diamond, PatternName::claw}) {
            const auto match = induced_free(g, p);
            if (match.free) continue;
            const Graph pat = pattern(p);
            for (int a = 0; a < pat.n(); ++a) {
                for (int b = a + 1; b < pat.n(); ++b) {
                    CHECK(g.adjacent(match.witness[std::size_t(a)], match.witness[std::size_t(b)]) ==
                          pat.adjacent(a, b));
                }
            }
        }
    }
}
