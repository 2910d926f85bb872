#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <random>

#include "srg/graph6.hpp"
#include "srg/instances.hpp"

using namespace srg;

TEST_CASE("graph6 encodes K3 as Bw") {
    Graph k3(3);
    k3.add_edge(0, 1);
    k3.add_edge(0, 2);
    k3.add_edge(1, 2);
    REQUIRE(graph6_write(k3) == "Bw");
    REQUIRE(graph6_read("Bw") == k3);
}

TEST_CASE("graph6 round-trip on random graphs") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 50);
        Graph g(n);
        std::bernoulli_distribution coin(0.1 + 0.8 * (trial % 7) / 7.0);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin(rng)) g.add_edge(i, j);
        REQUIRE(graph6_read(graph6_write(g)) == g);
    }
}

TEST_CASE("graph6 six-vertex strings round-trip bit-exactly") {
    for (const std::string text : {"E?~o", "E~~w", "EFz_", "E???"}) {
        const Graph g = graph6_read(text);
        REQUIRE(g.order() == 6);
        REQUIRE(graph6_write(g) == text);
    }
}

TEST_CASE("graph6 long order form") {
    Graph g(100);
    for (int i = 0; i < 99; ++i) g.add_edge(i, i + 1);
    const std::string text = graph6_write(g);
    REQUIRE(static_cast<unsigned char>(text[0]) == 126);
    REQUIRE(graph6_read(text) == g);

    Graph big(1024);
    big.add_edge(0, 1023);
    REQUIRE(graph6_read(graph6_write(big)) == big);
}

TEST_CASE("graph6 malformed inputs") {
    REQUIRE_THROWS_AS(graph6_read(""), parse_error);
    REQUIRE_THROWS_AS(graph6_read("E?"), parse_error);       // truncated
    REQUIRE_THROWS_AS(graph6_read("Bw?"), parse_error);      // trailing garbage
    REQUIRE_THROWS_AS(graph6_read("B\x01"), parse_error);    // byte below range
    REQUIRE_THROWS_AS(graph6_read("B"), parse_error);        // missing bits
    REQUIRE_THROWS_AS(graph6_read(std::string(1, '?')), parse_error);  // order 0
    // nonzero padding: C2 has bits 110 000; force a padding bit
    REQUIRE_THROWS_AS(graph6_read("B~"), parse_error);
    REQUIRE_NOTHROW(graph6_read(">>graph6<<Bw"));
}

TEST_CASE("load_host reads exactly one graph") {
    const std::string dir = (std::filesystem::temp_directory_path() / "srg_hosts_test").string();
    std::filesystem::create_directories(dir);
    const Graph r9 = rook9();

    {
        std::ofstream out(dir + "/rook9.g6");
        out << graph6_write(r9) << "\n";
    }
    REQUIRE(is_srg(load_host(dir + "/rook9.g6")) == SrgParams{9, 4, 1, 2});

    {
        std::ofstream out(dir + "/empty.g6");
    }
    REQUIRE_THROWS_AS(load_host(dir + "/empty.g6"), parse_error);

    {
        std::ofstream out(dir + "/two.g6");
        out << graph6_write(r9) << "\n" << graph6_write(r9) << "\n";
    }
    REQUIRE_THROWS_WITH(load_host(dir + "/two.g6"), Catch::Matchers::ContainsSubstring("exactly one graph"));

    REQUIRE_THROWS_AS(load_host(dir + "/missing.g6"), io_error);
}
