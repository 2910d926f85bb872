#include <catch2/catch_amalgamated.hpp>

#include "srg/graph.hpp"
#include "srg/instances.hpp"

using namespace srg;

TEST_CASE("graph construction and edges") {
    Graph g(5);
    REQUIRE(g.order() == 5);
    REQUIRE(g.edge_count() == 0);
    g.add_edge(0, 3);
    REQUIRE(g.has_edge(0, 3));
    REQUIRE(g.has_edge(3, 0));
    REQUIRE_FALSE(g.has_edge(0, 1));
    REQUIRE(g.degree(0) == 1);
    REQUIRE(g.degree(3) == 1);

    REQUIRE_THROWS_AS(g.add_edge(2, 2), error);
    REQUIRE_THROWS_AS(g.add_edge(0, 5), error);
    REQUIRE_THROWS_AS(Graph(0), error);
    REQUIRE_THROWS_AS(Graph(1025), error);
}

TEST_CASE("induced subgraphs") {
    const Graph r9 = rook9();

    SECTION("one row induces K3") {
        const Graph row = r9.induced({0, 1, 2});
        REQUIRE(row.order() == 3);
        REQUIRE(row.edge_count() == 3);
    }
    SECTION("diagonal cells induce the empty graph") {
        const Graph diag = r9.induced({0, 4, 8});
        REQUIRE(diag.order() == 3);
        REQUIRE(diag.edge_count() == 0);
    }
    SECTION("bad subsets rejected") {
        REQUIRE_THROWS_AS(r9.induced({0, 0, 1}), error);
        REQUIRE_THROWS_AS(r9.induced({0, 9}), error);
    }
}

TEST_CASE("is_srg detects parameters") {
    REQUIRE(is_srg(rook9()) == SrgParams{9, 4, 1, 2});

    Graph p4(4);
    p4.add_edge(0, 1);
    p4.add_edge(1, 2);
    p4.add_edge(2, 3);
    REQUIRE_FALSE(is_srg(p4).has_value());

    // complete graphs are not reported (mu is undefined)
    Graph k4(4);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) k4.add_edge(i, j);
    REQUIRE_FALSE(is_srg(k4).has_value());

    // Petersen graph: srg(10,3,0,1)
    Graph pet(10);
    for (int i = 0; i < 5; ++i) {
        pet.add_edge(i, (i + 1) % 5);
        pet.add_edge(i, i + 5);
        pet.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    REQUIRE(is_srg(pet) == SrgParams{10, 3, 0, 1});
}

TEST_CASE("permuted relabels consistently") {
    const Graph r9 = rook9();
    std::vector<int> perm{8, 7, 6, 5, 4, 3, 2, 1, 0};
    const Graph h = r9.permuted(perm);
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j)
            REQUIRE(h.has_edge(i, j) == r9.has_edge(perm[i], perm[j]));
    REQUIRE(is_srg(h) == SrgParams{9, 4, 1, 2});
}
