#include <catch2/catch_amalgamated.hpp>

#include "srg/catalog.hpp"

using namespace srg;

TEST_CASE("catalog cardinalities") {
    const int expected_total[] = {0, 1, 2, 4, 11, 34, 156};
    const int expected_feasible[] = {0, 1, 2, 4, 9, 21, 62};
    for (int m = 1; m <= 6; ++m) {
        const IsoCatalog cat = build_catalog(m);
        REQUIRE(static_cast<int>(cat.size()) == expected_total[m]);
        int feas = 0;
        for (const auto& c : cat.classes) feas += c.feasible;
        REQUIRE(feas == expected_feasible[m]);
    }
}

TEST_CASE("order-4 infeasible classes are K4 and the diamond") {
    const IsoCatalog cat = build_catalog(4);
    std::vector<int> infeasible;
    for (int i = 0; i < static_cast<int>(cat.size()); ++i)
        if (!cat.classes[i].feasible) infeasible.push_back(i);
    REQUIRE(infeasible.size() == 2);

    Graph diamond(4);  // K4 minus one edge: shared edge has 2 common neighbors
    diamond.add_edge(0, 1);
    diamond.add_edge(0, 2);
    diamond.add_edge(0, 3);
    diamond.add_edge(1, 2);
    diamond.add_edge(1, 3);
    Graph k4(4);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) k4.add_edge(i, j);

    REQUIRE(cat.class_of(labeled_code(diamond)) == infeasible[0]);
    REQUIRE(cat.class_of(labeled_code(k4)) == infeasible[1]);
}

TEST_CASE("feasibility is hereditary from order 6 to order 5") {
    const IsoCatalog cat6 = build_catalog(6);
    const IsoCatalog cat5 = build_catalog(5);
    for (const auto& cls : cat6.classes) {
        if (!cls.feasible) continue;
        const Graph rep = graph_from_code(cls.code, 6);
        for (int drop = 0; drop < 6; ++drop) {
            std::vector<int> keep;
            for (int v = 0; v < 6; ++v)
                if (v != drop) keep.push_back(v);
            const int sub = cat5.class_of(labeled_code(rep.induced(keep)));
            REQUIRE(cat5.classes[sub].feasible);
        }
    }
}

TEST_CASE("catalog generation is deterministic") {
    const IsoCatalog a = build_catalog(5);
    const IsoCatalog b = build_catalog(5);
    REQUIRE(a.lookup == b.lookup);
    for (std::size_t i = 0; i < a.size(); ++i) {
        REQUIRE(a.classes[i].code == b.classes[i].code);
        REQUIRE(a.classes[i].components == b.classes[i].components);
    }
}

TEST_CASE("components recorded per class") {
    const IsoCatalog cat6 = build_catalog(6);
    Graph two_triangles(6);
    for (auto [a, b] : {std::pair{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}})
        two_triangles.add_edge(a, b);
    const auto& cls = cat6.classes[cat6.class_of(labeled_code(two_triangles))];
    REQUIRE_FALSE(cls.connected);
    REQUIRE(cls.components == std::vector<std::pair<int, std::uint32_t>>{{3, 7}, {3, 7}});

    int connected6 = 0;
    for (const auto& c : cat6.classes) connected6 += c.connected;
    REQUIRE(connected6 == 112);
}

TEST_CASE("anchor classes") {
    const IsoCatalog cat6 = build_catalog(6);
    const Anchors a = anchor_classes(cat6);

    const auto& n1 = cat6.classes[a.n1];
    REQUIRE(n1.edges == 9);
    REQUIRE(n1.feasible);

    const auto& n3 = cat6.classes[a.n3];
    REQUIRE(n3.edges == 8);
    REQUIRE(n3.feasible);

    const auto& n12 = cat6.classes[a.n12];
    REQUIRE(n12.edges == 6);
    // C6: connected, 2-regular
    const Graph c6 = graph_from_code(n12.code, 6);
    for (int v = 0; v < 6; ++v) REQUIRE(c6.degree(v) == 2);
    REQUIRE(n12.connected);

    // prism-minus-edge anchor: two vertex-disjoint triangles, exactly one
    // induced 4-cycle
    const Graph pm = graph_from_code(n3.code, 6);
    int triangles = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            for (int l = j + 1; l < 6; ++l)
                if (pm.has_edge(i, j) && pm.has_edge(i, l) && pm.has_edge(j, l)) ++triangles;
    REQUIRE(triangles == 2);
    int c4s = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            for (int l = j + 1; l < 6; ++l)
                for (int t = l + 1; t < 6; ++t) {
                    const Graph sub = pm.induced({i, j, l, t});
                    if (sub.edge_count() != 4) continue;
                    bool all2 = true;
                    for (int v = 0; v < 4; ++v)
                        if (sub.degree(v) != 2) all2 = false;
                    c4s += all2;
                }
    REQUIRE(c4s == 1);

    // positions in the deterministic (edges, code) ordering
    REQUIRE(a.n12 == 52);
    REQUIRE(a.n2 == 94);
    REQUIRE(a.n3 == 100);
    REQUIRE(a.n1 == 122);
}
