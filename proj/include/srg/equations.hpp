#pragma once

// The combinatorial equation system relating the closed-form counts:
// construction identities for the order-6 counts, the path-count definition
// for m13, the pentagon completion relation, the 9 + 21 cross-order
// vertex-addition equations, and the three sum identities.
//
// Equations are data. Each entry carries the reading the checker adopts
// and, where the source rendering differs (typography slips, ambiguous
// parenthesization), the printed reading as well, so both can be audited
// independently. Display strings use E for the edge count n*k/2 and W for
// the size n-3-3*(k-2) of the distance-two set of a triangle; both expand
// to polynomials when the table is built.

#include <optional>
#include <string>
#include <vector>

#include "srg/formulas.hpp"

namespace srg {

struct Sym {
    char kind = 'p';  // 'p', 'l', 'm', 'n'
    int idx = 0;      // 1-based (p: 3..5)
    auto operator<=>(const Sym&) const = default;
};

struct Term {
    Poly coeff;
    Sym sym;
    int power = 1;  // almost always 1; the pair-of-triangles count needs p3^2
};

struct Reading {
    std::string display;
    std::vector<Term> lhs_terms;
    Poly lhs_poly;
    std::vector<Term> rhs_terms;
    Poly rhs_poly;
};

struct Equation {
    std::string name;
    Reading adopted;
    std::optional<Reading> printed;  // present when it differs from adopted
    std::string note;
};

namespace eqb {

// linear-combination builder for readable table entries
struct Lin {
    std::vector<Term> terms;
    Poly poly;
};

inline Lin operator+(Lin a, const Lin& b) {
    for (const auto& t : b.terms) a.terms.push_back(t);
    a.poly += b.poly;
    return a;
}

inline Lin sym(const Poly& c, Sym s, int power = 1) { return Lin{{Term{c, s, power}}, Poly()}; }
inline Lin sym(int c, Sym s, int power = 1) { return Lin{{Term{Poly(c), s, power}}, Poly()}; }
inline Lin pol(const Poly& p) { return Lin{{}, p}; }

}  // namespace eqb

inline const std::vector<Equation>& equation_table() {
    static const std::vector<Equation> table = [] {
        using eqb::Lin;
        using eqb::pol;
        using eqb::sym;
        std::vector<Equation> eqs;

        const Poly N = Poly::var_n();
        const Poly K = Poly::var_k();
        auto P = [](long long c) { return Poly(static_cast<int>(c)); };
        const Poly E = N * K / 2;
        const Poly W = N - P(3) - (K - P(2)) * 3;

        const Sym p3{'p', 3}, p4{'p', 4}, p5{'p', 5};
        auto L = [](int i) { return Sym{'l', i}; };
        auto M = [](int i) { return Sym{'m', i}; };
        auto Nn = [](int i) { return Sym{'n', i}; };

        auto add = [&](const std::string& name, const std::string& display, Lin lhs, Lin rhs,
                       const std::string& note = {}) {
            eqs.push_back(Equation{
                name,
                Reading{display, std::move(lhs.terms), std::move(lhs.poly), std::move(rhs.terms),
                        std::move(rhs.poly)},
                std::nullopt, note});
        };
        auto add_printed = [&](const std::string& display, Lin lhs, Lin rhs) {
            eqs.back().printed = Reading{display, std::move(lhs.terms), std::move(lhs.poly),
                                         std::move(rhs.terms), std::move(rhs.poly)};
        };

        // ----- order-6 construction identities -----
        add("n1", "2*p4 = 3*n1 + n3", sym(2, p4), sym(3, Nn(1)) + sym(1, Nn(3)));
        add("n2", "4*p4 = n2", sym(4, p4), sym(1, Nn(2)));
        add("n4", "3*(k-2)*p3 = 6*n1 + n4", sym((K - P(2)) * 3, p3), sym(6, Nn(1)) + sym(1, Nn(4)));
        add("n5", "E*(k/2-1)^2 = n5 + 2*n3 + 3*n1", pol(E * (K / 2 - P(1)) * (K / 2 - P(1))),
            sym(1, Nn(5)) + sym(2, Nn(3)) + sym(3, Nn(1)));
        add("n6", "4*(k-2)*p4 = n6 + 2*n4 + 6*n1", sym((K - P(2)) * 4, p4),
            sym(1, Nn(6)) + sym(2, Nn(4)) + sym(6, Nn(1)));
        add("n7", "4*p4*(k/2-2) = n7", sym((K / 2 - P(2)) * 4, p4), sym(1, Nn(7)));
        add("n8", "5*p5 = n8 + n4", sym(5, p5), sym(1, Nn(8)) + sym(1, Nn(4)));
        add("n9", "E*C(k-2,2) = n9 + n4 + 3*n1", pol(E * choose(K - P(2), 2)),
            sym(1, Nn(9)) + sym(1, Nn(4)) + sym(3, Nn(1)));
        add("n10", "5*p5 = 2*n10 + 2*n4", sym(5, p5), sym(2, Nn(10)) + sym(2, Nn(4)));
        add("n11", "n*(k*(k-2)*(k-4)/6)*3*(k-4) = n11 + 2*n10",
            pol(N * (K * (K - P(2)) * (K - P(4)) / 6) * (K - P(4)) * 3),
            sym(1, Nn(11)) + sym(2, Nn(10)));
        add("m13-def", "n*(k*(k-2)/2)*(k-3)^2 = m13 + 5*p5",
            pol(N * (K * (K - P(2)) / 2) * (K - P(3)) * (K - P(3))),
            sym(1, M(13)) + sym(5, p5));
        add("n12", "2*m13 = 6*n12 + 2*n9 + 2*n8 + n2", sym(2, M(13)),
            sym(6, Nn(12)) + sym(2, Nn(9)) + sym(2, Nn(8)) + sym(1, Nn(2)),
            "printed n8 coefficient 1 fails; coefficient 2 validates");
        add_printed("2*m13 = 6*n12 + 2*n9 + n8 + n2", sym(2, M(13)),
                    sym(6, Nn(12)) + sym(2, Nn(9)) + sym(1, Nn(8)) + sym(1, Nn(2)));
        add("n13", "p4*(E-12-4*(k-4)) = n13 + n11 + n10 + 2*n9 + n7 + n6 + 2*n4 + 3*n1",
            sym(E - P(12) - (K - P(4)) * 4, p4),
            sym(1, Nn(13)) + sym(1, Nn(11)) + sym(1, Nn(10)) + sym(2, Nn(9)) + sym(1, Nn(7)) +
                sym(1, Nn(6)) + sym(2, Nn(4)) + sym(3, Nn(1)));
        add("n14", "p3*(p3-1)/2 - n*(k/2)*(k/2-1)/2 = n1 + n3 + n5 + n14",
            sym(Poly(Rat(1, 2)), p3, 2) + sym(Poly(Rat(-1, 2)), p3) +
                pol(-(N * (K / 2) * (K / 2 - P(1)) / 2)),
            sym(1, Nn(1)) + sym(1, Nn(3)) + sym(1, Nn(5)) + sym(1, Nn(14)));
        add("n15", "n*C(k/2,2)*(k-4) = n15", pol(N * choose(K / 2, 2) * (K - P(4))), sym(1, Nn(15)));
        add("n16", "n*C(k/2,2)*4*(k-4) = n16", pol(N * choose(K / 2, 2) * (K - P(4)) * 4),
            sym(1, Nn(16)));
        add("n17", "p4*4*2*(k-4) = n17", sym((K - P(4)) * 8, p4), sym(1, Nn(17)));
        add("n18", "p4*4*2*(k-4) = n18 + 2*n4", sym((K - P(4)) * 8, p4),
            sym(1, Nn(18)) + sym(2, Nn(4)));
        add("n19", "n*(k/2)*(k-2)*(k-4)*(k-6)/6 = n19",
            pol(N * (K / 2) * (K - P(2)) * (K - P(4)) * (K - P(6)) / 6), sym(1, Nn(19)));
        add("n20", "n*(k/2)*((k-2)*(k-4)/2)*2*(k-4) = n20",
            pol(N * (K / 2) * ((K - P(2)) * (K - P(4)) / 2) * (K - P(4)) * 2), sym(1, Nn(20)));
        add("n21", "p3*(k-2)^3 = n21 + n6 + n4 + 2*n1", sym((K - P(2)) * (K - P(2)) * (K - P(2)), p3),
            sym(1, Nn(21)) + sym(1, Nn(6)) + sym(1, Nn(4)) + sym(2, Nn(1)),
            "printed exponent base (k-3)^3 fails; construction text says k-2 and (k-2)^3 validates");
        add_printed("p3*(k-3)^3 = n21 + n6 + n4 + 2*n1",
                    sym((K - P(3)) * (K - P(3)) * (K - P(3)), p3),
                    sym(1, Nn(21)) + sym(1, Nn(6)) + sym(1, Nn(4)) + sym(2, Nn(1)));
        add("n22", "n*(k/2)*((k-2)*(k-4)/2)*2*(k-5) = n22",
            pol(N * (K / 2) * ((K - P(2)) * (K - P(4)) / 2) * (K - P(5)) * 2), sym(1, Nn(22)));
        add("n23", "p3*3*(k-2)*(k-3)*2*(k-4) = n23 + 2*n8",
            sym((K - P(2)) * (K - P(3)) * (K - P(4)) * 6, p3), sym(1, Nn(23)) + sym(2, Nn(8)));
        add("n24", "E*2*(k/2-1)*((k-2)*(k-4)/2) = n24 + n18 + n4",
            pol(E * (K / 2 - P(1)) * (K - P(2)) * (K - P(4))),
            sym(1, Nn(24)) + sym(1, Nn(18)) + sym(1, Nn(4)));
        add("n25", "n*(k/2)*(k-2)*(k-4)*(k-3) = n25 + 2*n8",
            pol(N * (K / 2) * (K - P(2)) * (K - P(4)) * (K - P(3))),
            sym(1, Nn(25)) + sym(2, Nn(8)));
        add("n26", "p4*4*((k-4)*(k-6)/2) = n26", sym((K - P(4)) * (K - P(6)) * 2, p4),
            sym(1, Nn(26)));
        add("n27", "p4*4*(k-4)^2 = n27 + 2*n9", sym((K - P(4)) * (K - P(4)) * 4, p4),
            sym(1, Nn(27)) + sym(2, Nn(9)));
        add("n28", "p4*2*(k-4)^2 = n28 + n10", sym((K - P(4)) * (K - P(4)) * 2, p4),
            sym(1, Nn(28)) + sym(1, Nn(10)));
        add("n29", "p5*5*(k-4) = n29 + 4*n10 + n4", sym((K - P(4)) * 5, p5),
            sym(1, Nn(29)) + sym(4, Nn(10)) + sym(1, Nn(4)));
        add("n30", "n*k*(k-2)*(k-4)*(k-6)*(k-8)/120 = n30",
            pol(N * K * (K - P(2)) * (K - P(4)) * (K - P(6)) * (K - P(8)) / 120), sym(1, Nn(30)));
        add("n31", "n*(1/24)*k*(k-2)*(k-4)*(k-6)*4*(k-5) = n31",
            pol(N * K * (K - P(2)) * (K - P(4)) * (K - P(6)) * (K - P(5)) * 4 / 24), sym(1, Nn(31)));
        add("n32", "E*((k-2)*(k-4)/2)^2 = n32 + n27 + n9",
            pol(E * ((K - P(2)) * (K - P(4)) / 2) * ((K - P(2)) * (K - P(4)) / 2)),
            sym(1, Nn(32)) + sym(1, Nn(27)) + sym(1, Nn(9)));
        add("n33", "n*(k*(k-2)*(k-4)/6)*3*(k-4)^2 = n33 + n29",
            pol(N * (K * (K - P(2)) * (K - P(4)) / 6) * (K - P(4)) * (K - P(4)) * 3),
            sym(1, Nn(33)) + sym(1, Nn(29)));
        add("n34", "n*(k*(k-2)*(k-4)/6)*3*(k-4)*(k-3) = n34 + 2*n29 + 2*n10",
            pol(N * (K * (K - P(2)) * (K - P(4)) / 6) * (K - P(4)) * (K - P(3)) * 3),
            sym(1, Nn(34)) + sym(2, Nn(29)) + sym(2, Nn(10)));
        add("n35", "m13*2*(k-3) = 2*n35 + 2*n29 + 12*n12 + 2*n8", sym((K - P(3)) * 2, M(13)),
            sym(2, Nn(35)) + sym(2, Nn(29)) + sym(12, Nn(12)) + sym(2, Nn(8)));
        add("n44", "n*(1/24)*k*(k-2)*(k-4)*(k-6)*(n-k-1-6-4*(k-5)) = n44",
            pol(N * K * (K - P(2)) * (K - P(4)) * (K - P(6)) * (N - K - P(7) - (K - P(5)) * 4) / 24),
            sym(1, Nn(44)));
        add("n45", "p4*C(n-8-4*(k-4),2) = n45 + n13", sym(choose(N - P(8) - (K - P(4)) * 4, 2), p4),
            sym(1, Nn(45)) + sym(1, Nn(13)));
        add("n46", "n*(k*(k-2)*(k-4)/6)*3*(k-4)*(n-k-4-3*(k-4)) = n46 + n34",
            pol(N * (K * (K - P(2)) * (K - P(4)) / 6) * (K - P(4)) * (N - K - P(4) - (K - P(4)) * 3) * 3),
            sym(1, Nn(46)) + sym(1, Nn(34)));
        add("n60", "p3*3*(k-2)*(W-(k-4))*(k-6) = 2*n60 + n25",
            sym((K - P(2)) * (W - (K - P(4))) * (K - P(6)) * 3, p3),
            sym(2, Nn(60)) + sym(1, Nn(25)));
        add("n47", "n*(k/2)*(k-2)*C(n-k-1-2*(k-2)-(k-4),2) = n47 + n60",
            pol(N * (K / 2) * (K - P(2)) * choose(N - K - P(1) - (K - P(2)) * 2 - (K - P(4)), 2)),
            sym(1, Nn(47)) + sym(1, Nn(60)));
        add("prop2", "(n*k*(k-2)/2)*2*(k-4) = 5*p5", pol(N * K * (K - P(2)) * (K - P(4))),
            sym(5, p5));
        add("n48", "n*(k*(k-2)/2)*((k-3)^2-2*(k-4))*(n-3*k+4) = n48 + 2*n35 + 6*n12",
            pol(N * (K * (K - P(2)) / 2) * ((K - P(3)) * (K - P(3)) - (K - P(4)) * 2) *
                (N - K * 3 + P(4))),
            sym(1, Nn(48)) + sym(2, Nn(35)) + sym(6, Nn(12)),
            "printed parenthesization '((k-3)^2)-2*(k-4)*(n-3*k+4)' is ambiguous; the path-count "
            "reading ((k-3)^2-2*(k-4)) times (n-3*k+4) validates");
        add_printed("n*(k*(k-2)/2)*(k-3)^2 - 2*(k-4)*(n-3*k+4) = n48 + 2*n35 + 6*n12",
                    pol(N * (K * (K - P(2)) / 2) * (K - P(3)) * (K - P(3)) -
                        (K - P(4)) * (N - K * 3 + P(4)) * 2),
                    sym(1, Nn(48)) + sym(2, Nn(35)) + sym(6, Nn(12)));
        add("n62", "p3*W*C(k-6,2) = n62 + 6*n14", sym(W * choose(K - P(6), 2), p3),
            sym(1, Nn(62)) + sym(6, Nn(14)));
        add("n49", "p3*(W*(k-6)/2)*(W-2) = n49 + 2*n62 + 6*n14",
            sym(W * (K - P(6)) * (W - P(2)) / 2, p3),
            sym(1, Nn(49)) + sym(2, Nn(62)) + sym(6, Nn(14)));
        add("n50", "n*(1/6)*k*(k-2)*(k-4)*3*(n-k-1-2*(k-3)-1-(k-4)) = n50 + 2*n28",
            pol(N * K * (K - P(2)) * (K - P(4)) * (N - K - P(2) - (K - P(3)) * 2 - (K - P(4))) / 2),
            sym(1, Nn(50)) + sym(2, Nn(28)));
        add("n51", "(n*k/6)*3*(k-2)*(k-3)*((k-2)*(k-4)/2) = n51 + n23 + n8",
            pol((N * K / 6) * (K - P(2)) * (K - P(3)) * (K - P(2)) * (K - P(4)) * Rat(3, 2)),
            sym(1, Nn(51)) + sym(1, Nn(23)) + sym(1, Nn(8)));
        add("n52", "n*(k/2)*((k-2)*(k-4)/2)*(n-k-1-2*(k-2)-2*(k-5)-1) = n52",
            pol(N * (K / 2) * ((K - P(2)) * (K - P(4)) / 2) *
                (N - K - P(2) - (K - P(2)) * 2 - (K - P(5)) * 2)),
            sym(1, Nn(52)));
        add("n53", "p5*(n-10) = n53 + 2*n10 + n29", sym(N - P(10), p5),
            sym(1, Nn(53)) + sym(2, Nn(10)) + sym(1, Nn(29)));
        add("n54", "n*C(k/2,2)*(n-k-1-2*(k-2)-2*(k-4)) = n54",
            pol(N * choose(K / 2, 2) * (N - K - P(1) - (K - P(2)) * 2 - (K - P(4)) * 2)),
            sym(1, Nn(54)));
        add("n55", "p4*4*(n-8-4*(k-4)) = n55 + n6", sym((N - P(8) - (K - P(4)) * 4) * 4, p4),
            sym(1, Nn(55)) + sym(1, Nn(6)));
        add("n56", "n*(k/2)*(k-2)*(k-4)*(n-k-1-2*(k-2)-(k-4)) = n56 + n25",
            pol(N * (K / 2) * (K - P(2)) * (K - P(4)) *
                (N - K - P(1) - (K - P(2)) * 2 - (K - P(4)))),
            sym(1, Nn(56)) + sym(1, Nn(25)),
            "printed far-vertex count n-k-2-... fails; n-k-1-... validates");
        add_printed("n*(k/2)*(k-2)*(k-4)*(n-k-2-2*(k-2)-(k-4)) = n56 + n25",
                    pol(N * (K / 2) * (K - P(2)) * (K - P(4)) *
                        (N - K - P(2) - (K - P(2)) * 2 - (K - P(4)))),
                    sym(1, Nn(56)) + sym(1, Nn(25)));
        add("n58", "m6*2*(k-3) = 2*n58 + 2*n35 + n25", sym((K - P(3)) * 2, M(6)),
            sym(2, Nn(58)) + sym(2, Nn(35)) + sym(1, Nn(25)));
        add("n57", "E*C(E-3-7*(k-2)-2*(k-2)*(k-4),2) = 3*m14 + m6 + n60 + 2*n13 + n58 + 3*n57",
            pol(E * choose(E - P(3) - (K - P(2)) * 7 - (K - P(2)) * (K - P(4)) * 2, 2)),
            sym(3, M(14)) + sym(1, M(6)) + sym(1, Nn(60)) + sym(2, Nn(13)) + sym(1, Nn(58)) +
                sym(3, Nn(57)));
        add("n59", "n*(1/6)*k*(k-2)*(k-4)*(E-(3/2)*k-k*(k-2)-3*(k/2-1)) = n59 + n34 + n29 + 2*n28 + 2*n10",
            pol(N * K * (K - P(2)) * (K - P(4)) *
                (E - K * Rat(3, 2) - K * (K - P(2)) - (K / 2 - P(1)) * 3) / 6),
            sym(1, Nn(59)) + sym(1, Nn(34)) + sym(1, Nn(29)) + sym(2, Nn(28)) + sym(2, Nn(10)));
        add("n61", "2*m3 = 2*n61 + 2*n32 + n34 + n20 + n26", sym(2, M(3)),
            sym(2, Nn(61)) + sym(2, Nn(32)) + sym(1, Nn(34)) + sym(1, Nn(20)) + sym(1, Nn(26)));
        add("n43", "p3*C(W,3) = n43 + n62 + n49 + 2*n14", sym(choose(W, 3), p3),
            sym(1, Nn(43)) + sym(1, Nn(62)) + sym(1, Nn(49)) + sym(2, Nn(14)));
        add("n42", "m3*2*(k-3) = 2*n42 + 2*n48 + n34", sym((K - P(3)) * 2, M(3)),
            sym(2, Nn(42)) + sym(2, Nn(48)) + sym(1, Nn(34)));
        add("n41", "m3*2*(k-2) = 2*n41 + 2*n48 + n46 + 2*n51 + n50", sym((K - P(2)) * 2, M(3)),
            sym(2, Nn(41)) + sym(2, Nn(48)) + sym(1, Nn(46)) + sym(2, Nn(51)) + sym(1, Nn(50)));
        add("n40", "n*(k*(k-2)*(k-4)/6)*C(n-k-1-3-3*(k-4),2) = n40 + n59",
            pol(N * (K * (K - P(2)) * (K - P(4)) / 6) *
                choose(N - K - P(4) - (K - P(4)) * 3, 2)),
            sym(1, Nn(40)) + sym(1, Nn(59)),
            "printed companion term n54 fails; n59 validates");
        add_printed("n*(k*(k-2)*(k-4)/6)*C(n-k-1-3-3*(k-4),2) = n40 + n54",
                    pol(N * (K * (K - P(2)) * (K - P(4)) / 6) *
                        choose(N - K - P(4) - (K - P(4)) * 3, 2)),
                    sym(1, Nn(40)) + sym(1, Nn(54)));
        add("n39", "m4*(n-k-5) = n54 + n56 + 3*n49 + n48 + 2*n41 + 2*n39", sym(N - K - P(5), M(4)),
            sym(1, Nn(54)) + sym(1, Nn(56)) + sym(3, Nn(49)) + sym(1, Nn(48)) + sym(2, Nn(41)) +
                sym(2, Nn(39)));
        add("n38", "n*(k*(k-2)/2)*C(n-3*k+4,3) = n38 + n41 + 2*n61 + n62",
            pol(N * (K * (K - P(2)) / 2) * choose(N - K * 3 + P(4), 3)),
            sym(1, Nn(38)) + sym(1, Nn(41)) + sym(2, Nn(61)) + sym(1, Nn(62)));
        add("n37", "m1*5*k = 2*n37 + 2*n38 + 3*n40 + 4*n44 + 5*n30", sym(K * 5, M(1)),
            sym(2, Nn(37)) + sym(2, Nn(38)) + sym(3, Nn(40)) + sym(4, Nn(44)) + sym(5, Nn(30)));
        add("n36", "m1*(n-5) = n30 + 6*n36 + 2*n37 + n38 + n40 + n44", sym(N - P(5), M(1)),
            sym(1, Nn(30)) + sym(6, Nn(36)) + sym(2, Nn(37)) + sym(1, Nn(38)) + sym(1, Nn(40)) +
                sym(1, Nn(44)));

        // ----- the 9 vertex-addition equations for order-4 counts -----
        add("l1", "l1*(n-4) = 5*m1 + 2*m2 + m3 + m5 + m9", sym(N - P(4), L(1)),
            sym(5, M(1)) + sym(2, M(2)) + sym(1, M(3)) + sym(1, M(5)) + sym(1, M(9)));
        add("l2", "l2*(n-4) = 3*m2 + 2*m3 + 4*m4 + m6 + 2*m7 + 3*m8 + m11 + m12 + m17",
            sym(N - P(4), L(2)),
            sym(3, M(2)) + sym(2, M(3)) + sym(4, M(4)) + sym(1, M(6)) + sym(2, M(7)) +
                sym(3, M(8)) + sym(1, M(11)) + sym(1, M(12)) + sym(1, M(17)),
            "subscripts render as m_11+m_12+m_17 in the source; read as m11+m12+m17, which validates");
        add("l3", "l3*(n-4) = m4 + 2*m6 + m13 + 3*m14 + m19 + m21", sym(N - P(4), L(3)),
            sym(1, M(4)) + sym(2, M(6)) + sym(1, M(13)) + sym(3, M(14)) + sym(1, M(19)) +
                sym(1, M(21)));
        add("l4", "l4*(n-4) = 2*m3 + 3*m5 + 2*m6 + 2*m7 + 4*m10 + m11 + 2*m12 + 2*m13 + m15 + 2*m16",
            sym(N - P(4), L(4)),
            sym(2, M(3)) + sym(3, M(5)) + sym(2, M(6)) + sym(2, M(7)) + sym(4, M(10)) +
                sym(1, M(11)) + sym(2, M(12)) + sym(2, M(13)) + sym(1, M(15)) + sym(2, M(16)),
            "printed 2*m8 fails and the trailing term renders as 2m{16}; 2*m7 (with 2*m16) validates");
        add_printed("l4*(n-4) = 2*m3 + 3*m5 + 2*m6 + 2*m8 + 4*m10 + m11 + 2*m12 + 2*m13 + m15 + 2*m16",
                    sym(N - P(4), L(4)),
                    sym(2, M(3)) + sym(3, M(5)) + sym(2, M(6)) + sym(2, M(8)) + sym(4, M(10)) +
                        sym(1, M(11)) + sym(2, M(12)) + sym(2, M(13)) + sym(1, M(15)) + sym(2, M(16)));
        add("l5", "l5*(n-4) = m7 + 2*m11 + 2*m13 + 2*m15 + m16 + 5*m18 + 2*m20 + 2*m21",
            sym(N - P(4), L(5)),
            sym(1, M(7)) + sym(2, M(11)) + sym(2, M(13)) + sym(2, M(15)) + sym(1, M(16)) +
                sym(5, M(18)) + sym(2, M(20)) + sym(2, M(21)),
            "printed 5*m19 fails; 5*m18 validates (each pentagon holds five 4-paths)");
        add_printed("l5*(n-4) = m7 + 2*m11 + 2*m13 + 2*m15 + m16 + 5*m19 + 2*m20 + 2*m21",
                    sym(N - P(4), L(5)),
                    sym(1, M(7)) + sym(2, M(11)) + sym(2, M(13)) + sym(2, M(15)) + sym(1, M(16)) +
                        sym(5, M(19)) + sym(2, M(20)) + sym(2, M(21)));
        add("l6", "l6*(n-4) = m5 + 4*m9 + m11 + m15 + 2*m17", sym(N - P(4), L(6)),
            sym(1, M(5)) + sym(4, M(9)) + sym(1, M(11)) + sym(1, M(15)) + sym(2, M(17)));
        add("l7", "l7*(n-4) = 2*m8 + m12 + 2*m14 + m21", sym(N - P(4), L(7)),
            sym(2, M(8)) + sym(1, M(12)) + sym(2, M(14)) + sym(1, M(21)));
        add("l8", "l8*(n-4) = m10 + m15 + m20", sym(N - P(4), L(8)),
            sym(1, M(10)) + sym(1, M(15)) + sym(1, M(20)));
        add("l9", "l9*(n-4) = m12 + 2*m16 + 2*m17 + 4*m19 + 2*m20 + m21", sym(N - P(4), L(9)),
            sym(1, M(12)) + sym(2, M(16)) + sym(2, M(17)) + sym(4, M(19)) + sym(2, M(20)) +
                sym(1, M(21)));

        // ----- the 21 vertex-addition equations for order-5 counts -----
        add("m1", "m1*(n-5) = n30 + 6*n36 + 2*n37 + n38 + n40 + n44", sym(N - P(5), M(1)),
            sym(1, Nn(30)) + sym(6, Nn(36)) + sym(2, Nn(37)) + sym(1, Nn(38)) + sym(1, Nn(40)) +
                sym(1, Nn(44)));
        add("m2", "m2*(n-5) = n19 + n31 + 4*n37 + 2*n38 + 4*n39 + n41 + 2*n42 + 3*n43 + n46 + n47 + n52 + n59",
            sym(N - P(5), M(2)),
            sym(1, Nn(19)) + sym(1, Nn(31)) + sym(4, Nn(37)) + sym(2, Nn(38)) + sym(4, Nn(39)) +
                sym(1, Nn(41)) + sym(2, Nn(42)) + sym(3, Nn(43)) + sym(1, Nn(46)) + sym(1, Nn(47)) +
                sym(1, Nn(52)) + sym(1, Nn(59)));
        add("m3", "m3*(n-5) = n20 + n26 + 2*n32 + n34 + 3*n38 + 3*n40 + 2*n41 + 2*n42 + 4*n45 + n46 + 2*n47 + 2*n48 + n50 + 2*n51 + 2*n61",
            sym(N - P(5), M(3)),
            sym(1, Nn(20)) + sym(1, Nn(26)) + sym(2, Nn(32)) + sym(1, Nn(34)) + sym(3, Nn(38)) +
                sym(3, Nn(40)) + sym(2, Nn(41)) + sym(2, Nn(42)) + sym(4, Nn(45)) + sym(1, Nn(46)) +
                sym(2, Nn(47)) + sym(2, Nn(48)) + sym(1, Nn(50)) + sym(2, Nn(51)) + sym(2, Nn(61)));
        add("m4", "m4*(n-5) = n15 + n22 + n33 + 2*n39 + 2*n41 + n48 + 3*n49 + n54 + n56 + 6*n57 + 2*n58 + n60",
            sym(N - P(5), M(4)),
            sym(1, Nn(15)) + sym(1, Nn(22)) + sym(1, Nn(33)) + sym(2, Nn(39)) + sym(2, Nn(41)) +
                sym(1, Nn(48)) + sym(3, Nn(49)) + sym(1, Nn(54)) + sym(1, Nn(56)) + sym(6, Nn(57)) +
                sym(2, Nn(58)) + sym(1, Nn(60)));
        add("m5", "m5*(n-5) = n20 + 2*n28 + n31 + n34 + 2*n40 + 4*n44 + n46 + n50 + 2*n52 + 2*n59",
            sym(N - P(5), M(5)),
            sym(1, Nn(20)) + sym(2, Nn(28)) + sym(1, Nn(31)) + sym(1, Nn(34)) + sym(2, Nn(40)) +
                sym(4, Nn(44)) + sym(1, Nn(46)) + sym(1, Nn(50)) + sym(2, Nn(52)) + sym(2, Nn(59)));
        add("m6", "m6*(n-5) = n7 + n11 + 4*n13 + n16 + n23 + n24 + n25 + n34 + 2*n35 + n41 + 2*n58 + 3*n59 + 2*n60 + 4*n61 + 3*n62",
            sym(N - P(5), M(6)),
            sym(1, Nn(7)) + sym(1, Nn(11)) + sym(4, Nn(13)) + sym(1, Nn(16)) + sym(1, Nn(23)) +
                sym(1, Nn(24)) + sym(1, Nn(25)) + sym(1, Nn(34)) + sym(2, Nn(35)) + sym(1, Nn(41)) +
                sym(2, Nn(58)) + sym(3, Nn(59)) + sym(2, Nn(60)) + sym(4, Nn(61)) + sym(3, Nn(62)));
        add("m7", "m7*(n-5) = n17 + 3*n21 + 4*n27 + n29 + 2*n33 + 2*n35 + 2*n42 + 2*n46 + 2*n48 + 2*n50 + n51 + 5*n53 + 2*n55 + 2*n56 + 2*n58",
            sym(N - P(5), M(7)),
            sym(1, Nn(17)) + sym(3, Nn(21)) + sym(4, Nn(27)) + sym(1, Nn(29)) + sym(2, Nn(33)) +
                sym(2, Nn(35)) + sym(2, Nn(42)) + sym(2, Nn(46)) + sym(2, Nn(48)) + sym(2, Nn(50)) +
                sym(1, Nn(51)) + sym(5, Nn(53)) + sym(2, Nn(55)) + sym(2, Nn(56)) + sym(2, Nn(58)),
            "printed 2*n27 fails; 4*n27 validates (value-equivalent to adding n23, which the "
            "formulas leave indistinguishable)");
        add_printed("m7*(n-5) = n17 + 3*n21 + 2*n27 + n29 + 2*n33 + 2*n35 + 2*n42 + 2*n46 + 2*n48 + 2*n50 + n51 + 5*n53 + 2*n55 + 2*n56 + 2*n58",
                    sym(N - P(5), M(7)),
                    sym(1, Nn(17)) + sym(3, Nn(21)) + sym(2, Nn(27)) + sym(1, Nn(29)) +
                        sym(2, Nn(33)) + sym(2, Nn(35)) + sym(2, Nn(42)) + sym(2, Nn(46)) +
                        sym(2, Nn(48)) + sym(2, Nn(50)) + sym(1, Nn(51)) + sym(5, Nn(53)) +
                        sym(2, Nn(55)) + sym(2, Nn(56)) + sym(2, Nn(58)));
        add("m8", "m8*(n-5) = n24 + 3*n43 + n47 + 2*n49 + n56 + n62", sym(N - P(5), M(8)),
            sym(1, Nn(24)) + sym(3, Nn(43)) + sym(1, Nn(47)) + sym(2, Nn(49)) + sym(1, Nn(56)) +
                sym(1, Nn(62)));
        add("m9", "m9*(n-5) = 2*n19 + n26 + 5*n30 + n31 + n44", sym(N - P(5), M(9)),
            sym(2, Nn(19)) + sym(1, Nn(26)) + sym(5, Nn(30)) + sym(1, Nn(31)) + sym(1, Nn(44)));
        add("m10", "m10*(n-5) = n6 + n11 + 2*n13 + 2*n45 + n50 + n55", sym(N - P(5), M(10)),
            sym(1, Nn(6)) + sym(1, Nn(11)) + sym(2, Nn(13)) + sym(2, Nn(45)) + sym(1, Nn(50)) +
                sym(1, Nn(55)));
        add("m11", "m11*(n-5) = 2*n10 + n11 + n17 + n18 + n20 + 2*n22 + 2*n24 + 2*n26 + 2*n27 + 2*n29 + 3*n31 + 4*n32 + 2*n33 + n34 + n46",
            sym(N - P(5), M(11)),
            sym(2, Nn(10)) + sym(1, Nn(11)) + sym(1, Nn(17)) + sym(1, Nn(18)) + sym(1, Nn(20)) +
                sym(2, Nn(22)) + sym(2, Nn(24)) + sym(2, Nn(26)) + sym(2, Nn(27)) + sym(2, Nn(29)) +
                sym(3, Nn(31)) + sym(4, Nn(32)) + sym(2, Nn(33)) + sym(1, Nn(34)) + sym(1, Nn(46)));
        add("m12", "m12*(n-5) = n16 + n18 + n22 + n23 + n25 + 2*n47 + 2*n51 + 2*n52 + 4*n54 + 2*n55 + n56 + 2*n60",
            sym(N - P(5), M(12)),
            sym(1, Nn(16)) + sym(1, Nn(18)) + sym(1, Nn(22)) + sym(1, Nn(23)) + sym(1, Nn(25)) +
                sym(2, Nn(47)) + sym(2, Nn(51)) + sym(2, Nn(52)) + sym(4, Nn(54)) + sym(2, Nn(55)) +
                sym(1, Nn(56)) + sym(2, Nn(60)));
        add("m13", "m13*(n-5) = n2 + 2*n6 + 2*n8 + 2*n9 + 2*n11 + 6*n12 + n18 + n23 + 2*n25 + 2*n28 + 2*n29 + n33 + 2*n34 + 2*n35 + n48",
            sym(N - P(5), M(13)),
            sym(1, Nn(2)) + sym(2, Nn(6)) + sym(2, Nn(8)) + sym(2, Nn(9)) + sym(2, Nn(11)) +
                sym(6, Nn(12)) + sym(1, Nn(18)) + sym(1, Nn(23)) + sym(2, Nn(25)) + sym(2, Nn(28)) +
                sym(2, Nn(29)) + sym(1, Nn(33)) + sym(2, Nn(34)) + sym(2, Nn(35)) + sym(1, Nn(48)));
        add("m14", "m14*(n-5) = 2*n5 + 6*n14 + n25 + n49 + n60 + 2*n62", sym(N - P(5), M(14)),
            sym(2, Nn(5)) + sym(6, Nn(14)) + sym(1, Nn(25)) + sym(1, Nn(49)) + sym(1, Nn(60)) +
                sym(2, Nn(62)));
        add("m15", "m15*(n-5) = 2*n4 + 2*n7 + 4*n9 + 2*n10 + n11 + n17 + n18 + 2*n26 + 2*n27 + 2*n28 + n50",
            sym(N - P(5), M(15)),
            sym(2, Nn(4)) + sym(2, Nn(7)) + sym(4, Nn(9)) + sym(2, Nn(10)) + sym(1, Nn(11)) +
                sym(1, Nn(17)) + sym(1, Nn(18)) + sym(2, Nn(26)) + sym(2, Nn(27)) + sym(2, Nn(28)) +
                sym(1, Nn(50)));
        add("m16", "m16*(n-5) = 2*n2 + n4 + 2*n6 + n8 + 2*n16 + n17 + 2*n20 + 3*n21 + n23 + n51",
            sym(N - P(5), M(16)),
            sym(2, Nn(2)) + sym(1, Nn(4)) + sym(2, Nn(6)) + sym(1, Nn(8)) + sym(2, Nn(16)) +
                sym(1, Nn(17)) + sym(2, Nn(20)) + sym(3, Nn(21)) + sym(1, Nn(23)) + sym(1, Nn(51)));
        add("m17", "m17*(n-5) = n7 + 4*n15 + n17 + 3*n19 + n20 + n22 + n52", sym(N - P(5), M(17)),
            sym(1, Nn(7)) + sym(4, Nn(15)) + sym(1, Nn(17)) + sym(3, Nn(19)) + sym(1, Nn(20)) +
                sym(1, Nn(22)) + sym(1, Nn(52)));
        add("m18", "m18*(n-5) = n4 + n8 + 2*n10 + n29 + n53", sym(N - P(5), M(18)),
            sym(1, Nn(4)) + sym(1, Nn(8)) + sym(2, Nn(10)) + sym(1, Nn(29)) + sym(1, Nn(53)));
        add("m19", "m19*(n-5) = n2 + n15 + n16 + n54", sym(N - P(5), M(19)),
            sym(1, Nn(2)) + sym(1, Nn(15)) + sym(1, Nn(16)) + sym(1, Nn(54)));
        add("m20", "m20*(n-5) = 6*n1 + 2*n2 + 2*n3 + 2*n4 + n6 + n17 + n18 + n55", sym(N - P(5), M(20)),
            sym(6, Nn(1)) + sym(2, Nn(2)) + sym(2, Nn(3)) + sym(2, Nn(4)) + sym(1, Nn(6)) +
                sym(1, Nn(17)) + sym(1, Nn(18)) + sym(1, Nn(55)));
        add("m21", "m21*(n-5) = 4*n3 + 4*n5 + 2*n7 + 2*n8 + n16 + n18 + n22 + n23 + 2*n24 + n25 + n56",
            sym(N - P(5), M(21)),
            sym(4, Nn(3)) + sym(4, Nn(5)) + sym(2, Nn(7)) + sym(2, Nn(8)) + sym(1, Nn(16)) +
                sym(1, Nn(18)) + sym(1, Nn(22)) + sym(1, Nn(23)) + sym(2, Nn(24)) + sym(1, Nn(25)) +
                sym(1, Nn(56)));

        // ----- sum identities -----
        {
            Lin suml;
            for (int i = 1; i <= 9; ++i) suml = suml + sym(1, L(i));
            add("sum-l", "l1 + ... + l9 = C(n,4)", std::move(suml), pol(choose(N, 4)));
            Lin summ;
            for (int i = 1; i <= 21; ++i) summ = summ + sym(1, M(i));
            add("sum-m", "m1 + ... + m21 = C(n,5)", std::move(summ), pol(choose(N, 5)));
            Lin sumn;
            for (int i = 1; i <= 62; ++i) sumn = sumn + sym(1, Nn(i));
            add("sum-n", "n1 + ... + n62 = C(n,6)", std::move(sumn), pol(choose(N, 6)));
        }

        return eqs;
    }();
    return table;
}

}  // namespace srg
