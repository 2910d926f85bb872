#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <numeric>
#include <random>

#include "srg/report_io.hpp"

using namespace srg;

namespace {

const CensusContext& ctx() {
    static const CensusContext c = make_census_context();
    return c;
}

}  // namespace

TEST_CASE("verify(rook9) is clean") {
    const VerificationReport r = verify(rook9(), ctx(), {}, "rook9");

    REQUIRE(r.params == SrgParams{9, 4, 1, 2});
    REQUIRE(r.n3_measured == 0);
    REQUIRE(r.totals[3] == 84);
    REQUIRE(r.totals[4] == 126);
    REQUIRE(r.totals[5] == 126);
    REQUIRE(r.totals[6] == 84);
    REQUIRE(r.multiset_match);
    for (const auto& d : r.discrepancies) INFO(d);
    REQUIRE(r.clean());

    // anchors pin n1, n2, n3, n12 and the measured nonzero multiset
    std::multiset<std::uint64_t> nonzero;
    for (auto c : r.counts6)
        if (c) nonzero.insert(c);
    REQUIRE(nonzero == std::multiset<std::uint64_t>{6, 6, 36, 36});

    // every adopted equation passes numerically on rook9 measurements
    for (const auto& e : r.equations) {
        INFO(e.name << " residual " << e.numeric_residual);
        REQUIRE(e.numeric_holds);
    }
    REQUIRE(r.equations.size() == 96);
}

TEST_CASE("verify rejects hosts outside the family") {
    Graph pet(10);  // Petersen: srg(10,3,0,1)
    for (int i = 0; i < 5; ++i) {
        pet.add_edge(i, (i + 1) % 5);
        pet.add_edge(i, i + 5);
        pet.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    REQUIRE_THROWS_AS(verify(pet, ctx()), error);

    Graph p4(4);
    for (int i = 0; i < 3; ++i) p4.add_edge(i, i + 1);
    REQUIRE_THROWS_AS(verify(p4, ctx()), error);
}

TEST_CASE("measure_n3 requires an srg host") {
    Graph tt(6);
    for (auto [a, b] : {std::pair{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}})
        tt.add_edge(a, b);
    const auto suite = census_suite(tt, ctx());
    const Anchors anchors = anchor_classes(ctx().cats.at(6));
    REQUIRE_THROWS_AS(measure_n3(tt, suite[6], anchors), error);

    const Graph r9 = rook9();
    const auto suite9 = census_suite(r9, ctx());
    REQUIRE(measure_n3(r9, suite9[6], anchors) == 0);
}

TEST_CASE("verify is invariant under host relabeling") {
    const Graph r9 = rook9();
    std::vector<int> perm(9);
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937 rng(31337);
    std::shuffle(perm.begin(), perm.end(), rng);

    const auto a = report_to_json(verify(r9, ctx(), {}, "rook9")).dump(2);
    const auto b = report_to_json(verify(r9.permuted(perm), ctx(), {}, "rook9")).dump(2);
    REQUIRE(a == b);
}

TEST_CASE("report round-trips through json and csv emits") {
    const VerificationReport r = verify(rook9(), ctx(), {}, "rook9");
    const std::string dir = (std::filesystem::temp_directory_path() / "srg_reports_test").string();
    std::filesystem::create_directories(dir);
    emit_report(r, dir + "/rook9.json", "json");
    const VerificationReport back = load_report(dir + "/rook9.json");
    REQUIRE(report_to_json(back) == report_to_json(r));

    emit_report(r, dir + "/rook9.csv", "csv");
    REQUIRE_FALSE(report_to_csv(r).empty());
    REQUIRE_THROWS_AS(emit_report(r, dir + "/rook9.xml", "xml"), error);

    // fixed cardinality: 9 + 21 + 62 assignment rows
    REQUIRE(r.assign_l.size() == 9);
    REQUIRE(r.assign_m.size() == 21);
    REQUIRE(r.assign_n.size() == 62);
}

TEST_CASE("tie groups are reported for identical formulas") {
    // at (9,4) the zero-valued formulas tie; the tie groups must be
    // consistent: every index in a tie group shares the same value
    const VerificationReport r = verify(rook9(), ctx(), {}, "rook9");
    for (const auto& e : r.assign_n) {
        if (e.tie_group.empty()) continue;
        for (int cls : e.tie_group)
            REQUIRE(Rat(r.counts6[cls]) == Rat(e.value));
    }
}
