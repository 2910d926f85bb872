#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "srg/census.hpp"
#include "srg/formulas.hpp"
#include "srg/instances.hpp"

using namespace srg;

namespace {

const CensusContext& ctx() {
    static const CensusContext c = make_census_context();
    return c;
}

Graph random_graph(int n, double p, std::mt19937& rng) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

// independent triangle oracle: sum common neighbors over edges
std::uint64_t triangles_by_trace(const Graph& g) {
    std::uint64_t total = 0;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.has_edge(u, v)) total += g.common_neighbors(u, v);
    return total / 3;
}

std::map<int, std::uint64_t> nonzero(const CensusResult& r) {
    std::map<int, std::uint64_t> out;
    for (int i = 0; i < static_cast<int>(r.counts.size()); ++i)
        if (r.counts[i]) out[i] = r.counts[i];
    return out;
}

}  // namespace

TEST_CASE("rook9 brute censuses match the frozen class counts") {
    const Graph r9 = rook9();

    const CensusResult c3 = brute_census(r9, 3, ctx().cats.at(3));
    REQUIRE(c3.total() == 84);
    REQUIRE(nonzero(c3) == std::map<int, std::uint64_t>{{0, 6}, {1, 36}, {2, 36}, {3, 6}});
    REQUIRE(c3.counts[3] == triangles_by_trace(r9));

    const CensusResult c4 = brute_census(r9, 4, ctx().cats.at(4));
    REQUIRE(c4.total() == 126);
    REQUIRE(nonzero(c4) == std::map<int, std::uint64_t>{{2, 36}, {3, 9}, {6, 36}, {7, 36}, {8, 9}});

    const CensusResult c5 = brute_census(r9, 5, ctx().cats.at(5));
    REQUIRE(c5.total() == 126);
    REQUIRE(nonzero(c5) ==
            std::map<int, std::uint64_t>{{11, 9}, {12, 36}, {16, 36}, {24, 9}, {25, 36}});

    const CensusResult c6 = brute_census(r9, 6, ctx().cats.at(6));
    REQUIRE(c6.total() == 84);
    REQUIRE(nonzero(c6) == std::map<int, std::uint64_t>{{52, 6}, {72, 36}, {94, 36}, {122, 6}});

    // infeasible classes never appear in an srg host
    for (int m = 3; m <= 6; ++m) {
        const CensusResult c = brute_census(r9, m, ctx().cats.at(m));
        for (int i = 0; i < static_cast<int>(c.counts.size()); ++i)
            if (!ctx().cats.at(m).classes[i].feasible) REQUIRE(c.counts[i] == 0);
    }
}

TEST_CASE("esu agrees with brute on rook9 order 6 (all subsets connected)") {
    const Graph r9 = rook9();
    const CensusResult brute = brute_census(r9, 6, ctx().cats.at(6));
    const CensusResult esu = esu_census(r9, 6, ctx().cats.at(6));
    REQUIRE(esu.counts == brute.counts);
}

TEST_CASE("esu counts one class once on a path host") {
    Graph p5(5);
    for (int i = 0; i < 4; ++i) p5.add_edge(i, i + 1);
    const CensusResult c = esu_census(p5, 5, ctx().cats.at(5));
    REQUIRE(c.total() == 1);
    const int cls = ctx().cats.at(5).class_of(labeled_code(p5));
    REQUIRE(c.counts[cls] == 1);
}

TEST_CASE("esu on a host smaller than the order finds nothing") {
    const CensusResult c = esu_census(Graph(4), 6, ctx().cats.at(6));
    REQUIRE(c.total() == 0);
}

TEST_CASE("completion on the two-triangles host") {
    Graph tt(6);
    for (auto [a, b] : {std::pair{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}})
        tt.add_edge(a, b);
    const auto suite = census_suite(tt, ctx());
    REQUIRE(suite[6].total() == 1);
    REQUIRE(suite[6].counts[53] == 1);  // the K3+K3 class
    REQUIRE(suite[6].method == "brute");

    // force the esu+completion path and compare
    LowerCounts lower(7);
    lower[1] = {Int(6)};
    lower[2] = {Int(9), Int(6)};
    for (int m = 3; m <= 5; ++m) {
        const auto full = brute_census(tt, m, ctx().cats.at(m));
        lower[m].assign(full.counts.begin(), full.counts.end());
    }
    const CensusResult conn = esu_census(tt, 6, ctx().cats.at(6));
    REQUIRE(conn.total() == 0);  // no connected 6-subset
    const CensusResult completed =
        complete_disconnected(conn, ctx().cats, ctx().split.at(6), ctx().overlap.at(6), lower);
    REQUIRE(completed.counts == suite[6].counts);
}

TEST_CASE("completion equals brute force on seeded random hosts") {
    std::mt19937 rng(987654321);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 8 + static_cast<int>(rng() % 8);  // 8..15
        const double p = 0.15 + 0.1 * (trial % 6);
        const Graph g = random_graph(n, p, rng);

        LowerCounts lower(7);
        lower[1] = {Int(n)};
        const Int edges = g.edge_count();
        lower[2] = {Int(n) * (n - 1) / 2 - edges, edges};
        for (int m = 3; m <= 6; ++m) {
            const CensusResult brute = brute_census(g, m, ctx().cats.at(m));
            if (m == 3) REQUIRE(brute.counts[3] == triangles_by_trace(g));
            const CensusResult conn = esu_census(g, m, ctx().cats.at(m));
            // connected classes must already agree
            for (int i = 0; i < static_cast<int>(brute.counts.size()); ++i)
                if (ctx().cats.at(m).classes[i].connected) REQUIRE(conn.counts[i] == brute.counts[i]);
            const CensusResult completed = complete_disconnected(
                conn, ctx().cats, ctx().split.at(m), ctx().overlap.at(m), lower);
            REQUIRE(completed.counts == brute.counts);
            REQUIRE(completed.total() == detail::subsets_of(n, m));
            lower[m].assign(brute.counts.begin(), brute.counts.end());
        }
    }
}

TEST_CASE("census results are identical for any worker count") {
    const Graph r9 = rook9();
    for (int m = 3; m <= 6; ++m) {
        CensusOptions one, four, eight;
        one.threads = 1;
        four.threads = 4;
        eight.threads = 8;
        const auto a = brute_census(r9, m, ctx().cats.at(m), one);
        const auto b = brute_census(r9, m, ctx().cats.at(m), four);
        const auto c = brute_census(r9, m, ctx().cats.at(m), eight);
        REQUIRE(a.counts == b.counts);
        REQUIRE(a.counts == c.counts);
        const auto d = esu_census(r9, m, ctx().cats.at(m), one);
        const auto e = esu_census(r9, m, ctx().cats.at(m), eight);
        REQUIRE(d.counts == e.counts);
    }
}

TEST_CASE("budget refusals") {
    const Graph b = bvls243();
    CensusOptions opts;
    REQUIRE_THROWS_AS(brute_census(b, 5, ctx().cats.at(5), opts), budget_error);
    opts.allow_long = true;
    REQUIRE_THROWS_AS(brute_census(b, 6, ctx().cats.at(6), opts), budget_error);
}

TEST_CASE("bvls243 low-order censuses match the closed forms") {
    const Graph b = bvls243();
    CensusOptions opts;
    opts.threads = 2;

    const CensusResult c3 = esu_census(b, 3, ctx().cats.at(3), opts);
    REQUIRE(c3.counts[3] == 891);    // triangles
    REQUIRE(c3.counts[2] == 53460);  // induced 3-paths

    // order-4 multiset must equal the nine nonzero l-values
    const CensusResult c4 = brute_census(b, 4, ctx().cats.at(4), opts);
    REQUIRE(c4.total() == detail::subsets_of(243, 4));
    const FormulaSet fs = eval_formulas(243, 22);
    std::multiset<std::uint64_t> measured(c4.counts.begin(), c4.counts.end());
    std::multiset<std::uint64_t> predicted;
    for (const auto& v : fs.l) predicted.insert(static_cast<std::uint64_t>(v));
    predicted.insert(0);
    predicted.insert(0);  // the two infeasible classes
    REQUIRE(measured == predicted);
}

TEST_CASE("pentagon profile") {
    REQUIRE(pentagon_profile(rook9()) == std::map<std::uint64_t, std::uint64_t>{{0, 36}});

    Graph p4(4);
    for (int i = 0; i < 3; ++i) p4.add_edge(i, i + 1);
    REQUIRE_THROWS_AS(pentagon_profile(p4), error);
}
