#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pdg/graph.hpp"
#include "pdg/graph_io.hpp"

using namespace pdg;

TEST_CASE("make_graph basics") {
    const Graph k1 = make_graph(1, {});
    CHECK(k1.n() == 1);
    CHECK(k1.edge_count() == 0);

    const Graph c5 = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

    // duplicate orientations collapse to one edge
    const Graph k2 = make_graph(2, {{0, 1}, {1, 0}});
    CHECK(k2.edge_count() == 1);
}

TEST_CASE("make_graph rejects bad input") {
    CHECK_THROWS_AS(make_graph(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph(65, {}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph(3, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("complement") {
    const Graph k3 = make_graph(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(complement(k3).edge_count() == 0);

    // C5 is self-complementary under the reorder 0,2,4,1,3
    const Graph c5 = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    const Graph cc5 = complement(c5);
    CHECK(cc5.edge_count() == 5);
    const int order[] = {0, 2, 4, 1, 3};
    for (int i = 0; i < 5; ++i) {
        CHECK(cc5.adjacent(order[i], order[(i + 1) % 5]));
    }

    // complement of P4 0-1-2-3 is the path 1-3-0-2
    const Graph p4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    const Graph cp4 = complement(p4);
    CHECK(cp4.edge_count() == 3);
    CHECK(cp4.adjacent(1, 3));
    CHECK(cp4.adjacent(3, 0));
    CHECK(cp4.adjacent(0, 2));
}

TEST_CASE("complement is an involution on all graphs n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            CHECK(complement(complement(g)) == g);
        }
    }
}

TEST_CASE("induced subgraphs") {
    const Graph c5 = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    const auto p3 = induced(c5, VertexSet{0, 1, 2});
    CHECK(p3.graph.n() == 3);
    CHECK(p3.graph.edge_count() == 2);
    CHECK(p3.to_parent == std::vector<int>{0, 1, 2});

    CHECK(induced(c5, c5.vertices()).graph == c5);
    CHECK_THROWS_AS(induced(c5, VertexSet{}), std::invalid_argument);
}

TEST_CASE("induced composes through index maps") {
    const Graph g = make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}});
    const auto first = induced(g, VertexSet{0, 2, 3, 4, 5});
    const auto second = induced(first.graph, VertexSet{0, 1, 2, 4});
    const VertexSet composed = first.lift(VertexSet{0, 1, 2, 4});
    const auto direct = induced(g, composed);
    CHECK(second.graph == direct.graph);
}

TEST_CASE("neighborhood kinds partition the graph") {
    const Graph p3 = make_graph(3, {{0, 1}, {1, 2}});
    CHECK(neighborhood(p3, VertexSet{1}, NeighborhoodKind::open) == VertexSet{0, 2});
    CHECK(neighborhood(p3, VertexSet{0}, NeighborhoodKind::non) == VertexSet{2});

    const Graph c5 = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(neighborhood(c5, VertexSet{0}, NeighborhoodKind::closed) == VertexSet{4, 0, 1});
    CHECK_THROWS_AS(neighborhood(c5, VertexSet{}, NeighborhoodKind::open), std::invalid_argument);

    for (const Graph& g : enumerate_graphs(5)) {
        const std::uint64_t total = g.vertices().bits();
        for (std::uint64_t bits = 1; bits <= total; ++bits) {
            const VertexSet x(bits);
            const VertexSet open = neighborhood(g, x, NeighborhoodKind::open);
            const VertexSet non = neighborhood(g, x, NeighborhoodKind::non);
            CHECK((x & open).empty());
            CHECK((x & non).empty());
            CHECK((open & non).empty());
            CHECK((x | open | non) == g.vertices());
        }
    }
}

TEST_CASE("set_relation") {
    const Graph k22 = make_graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(set_relation(k22, VertexSet{0, 1}, VertexSet{2, 3}) == SetRelation::complete);

    const Graph two_p3 = make_graph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
    CHECK(set_relation(two_p3, VertexSet{0, 1, 2}, VertexSet{3, 4, 5}) == SetRelation::anticomplete);

    const Graph p3 = make_graph(3, {{0, 1}, {1, 2}});
    CHECK(set_relation(p3, VertexSet{0}, VertexSet{1, 2}) == SetRelation::mixed);

    CHECK_THROWS_AS(set_relation(p3, VertexSet{0, 1}, VertexSet{1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(set_relation(p3, VertexSet{}, VertexSet{1}), std::invalid_argument);
}

TEST_CASE("is_clique") {
    const Graph c5 = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(is_clique(c5, VertexSet{}));
    CHECK(is_clique(c5, VertexSet{3}));
    CHECK(is_clique(c5, VertexSet{0, 1}));
    CHECK_FALSE(is_clique(c5, VertexSet{0, 1, 2}));
}

TEST_CASE("components") {
    const Graph two_p3 = make_graph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
    const auto comps = components(two_p3);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet{0, 1, 2});
    CHECK(comps[1] == VertexSet{3, 4, 5});
    CHECK(set_relation(two_p3, comps[0], comps[1]) == SetRelation::anticomplete);

    const Graph c5 = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(components(c5).size() == 1);

    const Graph k3k1 = make_graph(4, {{0, 1}, {0, 2}, {1, 2}});
    const auto cc = components(k3k1);
    REQUIRE(cc.size() == 2);
    CHECK(cc[0].count() == 3);
    CHECK(cc[1].count() == 1);
}

TEST_CASE("components partition and are pairwise anticomplete, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            const auto comps = components(g);
            VertexSet all;
            for (VertexSet c : comps) {
                CHECK((all & c).empty());
                all |= c;
            }
            CHECK(all == g.vertices());
            for (std::size_t i = 0; i < comps.size(); ++i) {
                for (std::size_t j = i + 1; j < comps.size(); ++j) {
                    CHECK(set_relation(g, comps[i], comps[j]) == SetRelation::anticomplete);
                }
            }
        }
    }
}

TEST_CASE("triangle_free") {
    CHECK(triangle_free(make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})));
    CHECK_FALSE(triangle_free(make_graph(3, {{0, 1}, {0, 2}, {1, 2}})));
}
