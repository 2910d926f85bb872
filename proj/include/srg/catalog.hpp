#pragma once

// Isomorphism-class catalogs of orders 1..6 with the srg(n,k,1,2)
// embeddability filter, plus the structurally forced anchor classes of the
// order-6 catalog.
//
// A class is feasible iff inside the subgraph every adjacent pair has at
// most 1 common neighbor and every non-adjacent pair at most 2; these are
// upper bounds because lambda and mu are exact only in the host graph.

#include <cstdint>
#include <vector>

#include "srg/canonical.hpp"
#include "srg/graph.hpp"

namespace srg {

struct IsoClass {
    std::uint32_t code = 0;      // canonical code, also the class key
    int edges = 0;
    bool connected = false;
    bool feasible = false;
    // canonical codes of connected components as (order, code), sorted
    std::vector<std::pair<int, std::uint32_t>> components;
};

struct IsoCatalog {
    int order = 0;
    std::vector<IsoClass> classes;
    std::vector<std::uint8_t> lookup;  // labeled code -> class index

    int class_of(std::uint32_t labeled) const { return lookup[labeled]; }
    std::size_t size() const { return classes.size(); }
    Graph representative(int idx) const { return graph_from_code(classes[idx].code, order); }
};

namespace detail {

inline bool feasible_class(const Graph& g) {
    const int m = g.order();
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const int c = g.common_neighbors(i, j);
            if (g.has_edge(i, j) ? c > 1 : c > 2) return false;
        }
    return true;
}

inline std::vector<std::vector<int>> components_of(const Graph& g) {
    const int m = g.order();
    std::vector<bool> seen(m, false);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < m; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            g.for_neighbors(u, [&](int v) {
                if (!seen[v]) {
                    seen[v] = true;
                    stack.push_back(v);
                }
            });
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

}  // namespace detail

inline IsoCatalog build_catalog(int m) {
    if (m < 1 || m > 6) throw error("build_catalog: order out of range: " + std::to_string(m));
    LabeledClasses lc = build_lookup_table(m);
    IsoCatalog cat;
    cat.order = m;
    cat.lookup = std::move(lc.table);
    cat.classes.reserve(lc.reps.size());
    for (std::uint32_t code : lc.reps) {
        IsoClass cls;
        cls.code = code;
        cls.edges = __builtin_popcount(code);
        const Graph rep = graph_from_code(code, m);
        cls.feasible = detail::feasible_class(rep);
        auto comps = detail::components_of(rep);
        cls.connected = comps.size() == 1;
        for (const auto& comp : comps)
            cls.components.emplace_back(static_cast<int>(comp.size()),
                                        canonical_code(rep.induced(comp)).code);
        std::sort(cls.components.begin(), cls.components.end());
        cat.classes.push_back(std::move(cls));
    }
    return cat;
}

// catalogs for orders 1..6, indexed by order (index 0 unused)
struct CatalogSet {
    std::vector<IsoCatalog> by_order;
    const IsoCatalog& at(int m) const { return by_order[m]; }
};

inline CatalogSet build_catalog_set() {
    CatalogSet set;
    set.by_order.resize(7);
    for (int m = 1; m <= 6; ++m) set.by_order[m] = build_catalog(m);
    return set;
}

// Structurally forced anchor classes of the order-6 catalog, reconstructed
// from their defining shapes:
//   n1: triangular prism (two disjoint triangles plus a perfect matching)
//   n3: prism minus one matching edge
//   n2: 4-cycle abcd with one apex on side ab and one on side bc
//   n12: the 6-cycle
struct Anchors {
    int n1 = -1;
    int n2 = -1;
    int n3 = -1;
    int n12 = -1;
};

inline Anchors anchor_classes(const IsoCatalog& cat6) {
    if (cat6.order != 6) throw error("anchor_classes: order-6 catalog required");
    auto class_of_edges = [&](std::initializer_list<std::pair<int, int>> edges) {
        Graph g(6);
        for (auto [a, b] : edges) g.add_edge(a, b);
        const int idx = cat6.class_of(labeled_code(g));
        if (!cat6.classes[idx].feasible) throw error("anchor class is not feasible");
        return idx;
    };
    Anchors a;
    a.n1 = class_of_edges({{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
    a.n3 = class_of_edges({{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}});
    a.n2 = class_of_edges({{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 0}, {4, 1}, {5, 1}, {5, 2}});
    a.n12 = class_of_edges({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
    return a;
}

}  // namespace srg
