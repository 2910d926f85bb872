#include <catch2/catch_amalgamated.hpp>

#include "srg/formulas.hpp"
#include "srg/instances.hpp"

using namespace srg;

TEST_CASE("eval_p at family members") {
    REQUIRE(eval_p(9, 4) == std::array<Int, 3>{6, 9, 0});
    REQUIRE(eval_p(99, 14) == std::array<Int, 3>{231, 2079, 33264});
    REQUIRE(eval_p(243, 22) == std::array<Int, 3>{891, 13365, 384912});
    REQUIRE_THROWS_AS(eval_formulas(9, 5), error);
}

TEST_CASE("eval_l and eval_m at (9,4)") {
    const FormulaSet fs = eval_formulas(9, 4);
    REQUIRE(eval_l(9, 4) == fs.l);
    REQUIRE(eval_m(9, 4) == fs.m);
    REQUIRE(fs.l == std::array<Int, 9>{0, 0, 9, 36, 36, 0, 0, 9, 36});
    Int suml = 0;
    for (const auto& v : fs.l) suml += v;
    REQUIRE(suml == binomial(9, 4));

    const std::array<Int, 21> expected_m{0, 0, 0, 0, 0, 0, 0, 0, 0, 9, 0,
                                         0, 36, 0, 0, 36, 0, 0, 9, 36, 0};
    REQUIRE(fs.m == expected_m);
    Int summ = 0;
    for (const auto& v : fs.m) summ += v;
    REQUIRE(summ == binomial(9, 5));
}

TEST_CASE("m18 equals p5 for all parameters") {
    for (int k : {4, 14, 22, 112}) {
        const Int n = order_from_valency(k);
        const FormulaSet fs = eval_formulas(n, k);
        REQUIRE(fs.m[17] == fs.p[2]);
    }
}

TEST_CASE("order-6 affine counts at (9,4)") {
    const FormulaSet fs = eval_formulas(9, 4);

    // n5 pins n3 to zero: a-part 0, b-part -1
    REQUIRE(fs.nf[4].a == 0);
    REQUIRE(fs.nf[4].b == -1);

    const auto values = instantiate(fs, 0);
    std::multiset<Int> nonzero;
    Int total = 0;
    for (const auto& v : values) {
        total += v;
        if (v != 0) nonzero.insert(v);
    }
    REQUIRE(total == binomial(9, 6));
    REQUIRE(nonzero == std::multiset<Int>{6, 6, 36, 36});
    // the survivors are n1, n2, n6, n12
    REQUIRE(values[0] == 6);
    REQUIRE(values[1] == 36);
    REQUIRE(values[5] == 36);
    REQUIRE(values[11] == 6);

    REQUIRE_THROWS_WITH(instantiate(fs, 3), Catch::Matchers::ContainsSubstring("index 5 value -3"));
}

TEST_CASE("order-6 a-parts at (99,14) and (243,22)") {
    const FormulaSet f99 = eval_formulas(99, 14);
    REQUIRE(f99.nf[0].a == 1386);
    Int sum_a = 0;
    Rat sum_b = 0;
    for (const auto& af : f99.nf) {
        REQUIRE(is_integer(af.a));
        sum_a += to_int(af.a);
        sum_b += af.b;
    }
    REQUIRE(sum_a == binomial(99, 6));
    REQUIRE(sum_b == 0);

    const FormulaSet f243 = eval_formulas(243, 22);
    REQUIRE(f243.nf[0].a == 8910);
    sum_a = 0;
    for (const auto& af : f243.nf) sum_a += to_int(af.a);
    REQUIRE(sum_a == binomial(243, 6));
}

TEST_CASE("feasible n3 ranges") {
    const N3Range r9 = feasible_n3_range(9, 4);
    REQUIRE_FALSE(r9.empty);
    REQUIRE(r9.min == 0);
    REQUIRE(r9.max == 0);
    REQUIRE(r9.contains(0));
    REQUIRE_FALSE(r9.contains(3));

    const N3Range r99 = feasible_n3_range(99, 14);
    REQUIRE_FALSE(r99.empty);
    REQUIRE(r99.min == 0);
    REQUIRE(r99.max <= 20790);  // n5 bound; tighter constraints reduce it further
    REQUIRE(r99.max == 4158);   // binding constraint is n1 = 1386 - n3/3
    REQUIRE(r99.modulus == 3);
    REQUIRE(r99.residue == 0);
    REQUIRE(r99.contains(0));
    REQUIRE(r99.contains(4158));
    REQUIRE_FALSE(r99.contains(4159));
    REQUIRE_FALSE(r99.contains(5));

    const N3Range r243 = feasible_n3_range(243, 22);
    REQUIRE(r243.min == 0);
    REQUIRE(r243.max == 26730);
    REQUIRE(r243.modulus == 3);

    // every in-range n3 instantiates cleanly at (99,14)
    const FormulaSet fs = eval_formulas(99, 14);
    REQUIRE(try_instantiate(fs, 0).ok());
    REQUIRE(try_instantiate(fs, 3).ok());
    REQUIRE(try_instantiate(fs, 4158).ok());
    REQUIRE_FALSE(try_instantiate(fs, 1).ok());     // breaks the mod-3 congruence
    REQUIRE_FALSE(try_instantiate(fs, 4161).ok());  // above the n1 bound
}
