#pragma once

// Closed-form subgraph counts for srg(n,k,1,2): the triangle/quadrilateral/
// pentagon counts p3..p5, the nine order-4 counts l1..l9, the twenty-one
// order-5 counts m1..m21, and the sixty-two order-6 counts n1..n62. Counts
// of order six are affine in the free parameter n3: value = a(n,k) + b*n3.
//
// Everything is exact rational arithmetic. Several prefactors (1/768,
// 1/23040) are only integral for admissible parameters, so integrality is a
// checked property, never an assumption.

#include <array>
#include <vector>

#include "srg/poly.hpp"

namespace srg {

struct AffineFormula {
    Poly a;  // polynomial in n and k
    Rat b;   // coefficient of n3

    Poly full() const { return a + Poly::var_n3() * b; }
};

struct FormulaTable {
    std::array<Poly, 3> p;             // p3, p4, p5
    std::array<Poly, 9> l;             // l1..l9
    std::array<Poly, 21> m;            // m1..m21
    std::array<AffineFormula, 62> n;   // n1..n62
};

inline const FormulaTable& formula_table() {
    static const FormulaTable table = [] {
        FormulaTable t;
        const Poly N = Poly::var_n();
        const Poly K = Poly::var_k();
        auto P = [](long long c) { return Poly(static_cast<int>(c)); };
        const Poly base = N * K * (K - P(2));        // nk(k-2)
        const Poly base4 = base * (K - P(4));        // nk(k-2)(k-4)

        t.p[0] = N * K / 6;
        t.p[1] = base / 8;
        t.p[2] = base4 / 5;

        t.l[0] = base4 * (K * K * K - K * K * 6 + K * 10 - P(12)) / 192;
        t.l[1] = base4 * (K * K - K * 4 + P(6)) / 16;
        t.l[2] = base * (K * K - K * 6 + P(10)) / 16;
        t.l[3] = base * (N - K * 3 + P(4)) / 2;
        t.l[4] = base * (K - P(3)) / 2;
        t.l[5] = base4 / 6;
        t.l[6] = base4 / 12;
        t.l[7] = base / 8;
        t.l[8] = base / 2;

        t.m[0] = base4 * (N - K * 4 + P(6)) * (K * K * K - K * K * 6 + K * 14 - P(36)) / 960;
        t.m[1] = base4 * (K - P(4)) * (K * K * K - K * K * 8 + K * 26 - P(48)) / 96;
        t.m[2] = base4 * (K * K * K - K * K * 10 + K * 38 - P(60)) / 16;
        t.m[3] = base4 * (K * K * K - K * K * 10 + K * 40 - P(68)) / 32;
        t.m[4] = base4 * (N - K * 4 + P(8)) / 6;
        t.m[5] = base4 * (K * K - K * 8 + P(20)) / 8;
        t.m[6] = base4 * (K * K - K * 7 + P(16)) / 4;
        t.m[7] = base4 * (N - K * 4 + P(8)) / 24;
        t.m[8] = base4 * (K - P(6)) / 24;
        t.m[9] = base * (N - K * 4 + P(8)) / 8;
        t.m[10] = base4 * (K - P(4)) / 2;
        t.m[11] = base4 * (K - P(4)) / 4;
        t.m[12] = base * (K * K - K * 8 + P(17)) / 2;
        t.m[13] = base4 * (K - P(6)) / 24;
        t.m[14] = base4 / 2;
        t.m[15] = base * (K - P(3)) / 2;
        t.m[16] = base4 / 4;
        t.m[17] = base4 / 5;
        t.m[18] = base / 8;
        t.m[19] = base / 2;
        t.m[20] = base4 / 2;

        auto& n = t.n;
        n[0] = {base / 12, Rat(-1, 3)};
        n[1] = {base / 2, 0};
        n[2] = {Poly(), 1};
        n[3] = {Poly(), 2};
        n[4] = {base4 / 8, -1};
        n[5] = {base * (K - P(3)) / 2, -2};
        n[6] = {base4 / 4, 0};
        n[7] = {base4, -2};
        n[8] = {base4 / 4, -1};
        n[9] = {base4 / 2, -2};
        n[10] = {base4 * (K - P(6)) / 2, 4};
        n[11] = {base * (K * K * 2 - K * 21 + P(53)) / 12, 1};
        n[12] = {base4 * (K * K - K * 12 + P(42)) / 32, -1};
        n[13] = {base4 * (K - P(12)) / 144, Rat(1, 3)};
        n[14] = {base4 / 8, 0};
        n[15] = {base4 / 2, 0};
        n[16] = {base4, 0};
        n[17] = {base4, -4};
        n[18] = {base4 * (K - P(6)) / 12, 0};
        n[19] = {base4 * (K - P(4)) / 2, 0};
        n[20] = {base * (K - P(3)) * (K - P(4)) / 6, Rat(2, 3)};
        n[21] = {base4 * (K - P(5)) / 2, 0};
        n[22] = {base4 * (K - P(5)), 4};
        n[23] = {base4 * (K - P(6)) / 4, 2};
        n[24] = {base4 * (K - P(7)) / 2, 4};
        n[25] = {base4 * (K - P(6)) / 4, 0};
        n[26] = {base4 * (K - P(5)) / 2, 2};
        n[27] = {base4 * (K - P(6)) / 4, 2};
        n[28] = {base4 * (K - P(6)), 6};
        n[29] = {base4 * (K - P(6)) * (K - P(8)) / 120, 0};
        n[30] = {base4 * (K - P(5)) * (K - P(6)) / 6, 0};
        n[31] = {base4 * (K * K - K * 10 + P(26)) / 8, -1};
        n[32] = {base4 * (K * K - K * 10 + P(28)) / 2, -6};
        n[33] = {base4 * (K * K - K * 11 + P(34)) / 2, -8};
        n[34] = {base4 * (K * K - K * 11 + P(36)) / 2, -10};
        n[35] = {base4 * (Poly::monomial(0, 7, 0) - Poly::monomial(0, 6, 0) * 24 +
                          Poly::monomial(0, 5, 0) * 248 - Poly::monomial(0, 4, 0) * 1520 +
                          Poly::monomial(0, 3, 0) * 6436 - Poly::monomial(0, 2, 0) * 19520 +
                          K * 38896 - P(40704)) / 23040,
                 Rat(1, 3)};
        n[36] = {base4 * (Poly::monomial(0, 6, 0) - Poly::monomial(0, 5, 0) * 22 +
                          Poly::monomial(0, 4, 0) * 212 - Poly::monomial(0, 3, 0) * 1208 +
                          Poly::monomial(0, 2, 0) * 4484 - K * 10456 + P(12288)) / 768,
                 -3};
        n[37] = {base4 * (Poly::monomial(0, 5, 0) - Poly::monomial(0, 4, 0) * 20 +
                          Poly::monomial(0, 3, 0) * 172 - Poly::monomial(0, 2, 0) * 828 +
                          K * 2300 - P(3048)) / 96,
                 6};
        n[38] = {base4 * (Poly::monomial(0, 5, 0) - Poly::monomial(0, 4, 0) * 20 +
                          Poly::monomial(0, 3, 0) * 176 - Poly::monomial(0, 2, 0) * 884 +
                          K * 2588 - P(3624)) / 128,
                 6};
        n[39] = {base4 * (Poly::monomial(0, 4, 0) - Poly::monomial(0, 3, 0) * 18 +
                          Poly::monomial(0, 2, 0) * 130 - K * 460 + P(696)) / 48,
                 -2};
        n[40] = {base4 * (Poly::monomial(0, 4, 0) - Poly::monomial(0, 3, 0) * 18 +
                          Poly::monomial(0, 2, 0) * 136 - K * 524 + P(892)) / 16,
                 -14};
        n[41] = {base4 * (Poly::monomial(0, 4, 0) - Poly::monomial(0, 3, 0) * 17 +
                          Poly::monomial(0, 2, 0) * 120 - K * 430 + P(684)) / 16,
                 -10};
        n[42] = {base4 * (Poly::monomial(0, 4, 0) - Poly::monomial(0, 3, 0) * 18 +
                          Poly::monomial(0, 2, 0) * 130 - K * 460 + P(720)) / 288,
                 Rat(-2, 3)};
        n[43] = {base4 * (K - P(6)) * (N - K * 5 + P(13)) / 24, 0};
        n[44] = {base4 * (K - P(6)) * (K * K - K * 8 + P(26)) / 64, 1};
        n[45] = {base4 * (Poly::monomial(0, 3, 0) - Poly::monomial(0, 2, 0) * 14 + K * 72 - P(140)) / 4, 8};
        n[46] = {base4 * (K - P(6)) * (K * K - K * 8 + P(22)) / 16, 2};
        n[47] = {base4 * (Poly::monomial(0, 3, 0) - Poly::monomial(0, 2, 0) * 14 + K * 75 - P(160)) / 4, 14};
        n[48] = {base4 * (Poly::monomial(0, 3, 0) - Poly::monomial(0, 2, 0) * 16 + K * 94 - P(216)) / 48, 2};
        n[49] = {base4 * (K * K - K * 10 + P(30)) / 4, -4};
        n[50] = {base4 * (K * K - K * 9 + P(22)) / 4, -2};
        n[51] = {base4 * (N - K * 5 + P(12)) / 4, 0};
        n[52] = {base4 * (N - K * 5 + P(15)) / 5, -2};
        n[53] = {base4 * (K - P(6)) / 16, 0};
        n[54] = {base4 * (K - P(6)) / 4, 2};
        n[55] = {base4 * (N - K * 5 + P(14)) / 2, -4};
        n[56] = {base4 * (Poly::monomial(0, 4, 0) - Poly::monomial(0, 3, 0) * 18 +
                          Poly::monomial(0, 2, 0) * 140 - K * 564 + P(996)) / 192,
                 Rat(-4, 3)};
        n[57] = {base4 * (Poly::monomial(0, 3, 0) - Poly::monomial(0, 2, 0) * 15 + K * 86 - P(190)) / 8, 8};
        n[58] = {base4 * (K - P(6)) * (K * K - K * 10 + P(34)) / 24, 2};
        n[59] = {base4 * (K * K - K * 12 + P(38)) / 8, -2};
        n[60] = {base4 * (Poly::monomial(0, 3, 0) - Poly::monomial(0, 2, 0) * 16 + K * 96 - P(220)) / 16, 5};
        n[61] = {base4 * (K * K - K * 14 + P(54)) / 24, -2};
        return t;
    }();
    return table;
}

// exact integer value + n3 coefficient pair for one order-6 class
struct AffineCount {
    Rat a;
    Rat b;
    Rat at(const Int& n3) const { return a + b * Rat(n3); }
};

struct FormulaSet {
    Int n;
    Int k;
    std::array<Int, 3> p{};
    std::array<Int, 9> l{};
    std::array<Int, 21> m{};
    std::array<AffineCount, 62> nf{};
};

// evaluate all closed forms at concrete parameters; every p/l/m value must
// come out a non-negative integer, reported by index otherwise
inline FormulaSet eval_formulas(const Int& n, const Int& k) {
    if (n <= 0 || k <= 0 || k % 2 != 0) throw error("eval_formulas: need positive n and even positive k");
    const FormulaTable& t = formula_table();
    const Rat rn(n), rk(k);
    FormulaSet fs;
    fs.n = n;
    fs.k = k;
    auto as_int = [](const Rat& v, const std::string& name) {
        if (!is_integer(v)) throw error("non-integral " + name + " = " + rat_string(v));
        return to_int(v);
    };
    for (int i = 0; i < 3; ++i) fs.p[i] = as_int(t.p[i].eval(rn, rk, 0), "p" + std::to_string(i + 3));
    for (int i = 0; i < 9; ++i) fs.l[i] = as_int(t.l[i].eval(rn, rk, 0), "l" + std::to_string(i + 1));
    for (int i = 0; i < 21; ++i) fs.m[i] = as_int(t.m[i].eval(rn, rk, 0), "m" + std::to_string(i + 1));
    for (int i = 0; i < 62; ++i) fs.nf[i] = AffineCount{t.n[i].a.eval(rn, rk, 0), t.n[i].b};
    return fs;
}

inline std::array<Int, 3> eval_p(const Int& n, const Int& k) { return eval_formulas(n, k).p; }
inline std::array<Int, 9> eval_l(const Int& n, const Int& k) { return eval_formulas(n, k).l; }
inline std::array<Int, 21> eval_m(const Int& n, const Int& k) { return eval_formulas(n, k).m; }
inline std::array<AffineCount, 62> eval_n(const Int& n, const Int& k) {
    return eval_formulas(n, k).nf;
}

struct InstantiationIssue {
    int index;  // 1-based class index
    Rat value;
    std::string reason;
};

struct Instantiation {
    std::vector<Rat> values;  // 62 exact values
    std::vector<InstantiationIssue> issues;
    bool ok() const { return issues.empty(); }
};

inline Instantiation try_instantiate(const FormulaSet& fs, const Int& n3) {
    Instantiation out;
    out.values.reserve(62);
    for (int i = 0; i < 62; ++i) {
        const Rat v = fs.nf[i].at(n3);
        out.values.push_back(v);
        if (!is_integer(v))
            out.issues.push_back({i + 1, v, "non-integral"});
        else if (v < 0)
            out.issues.push_back({i + 1, v, "negative"});
    }
    if (n3 < 0) out.issues.push_back({0, Rat(n3), "n3 must be non-negative"});
    return out;
}

inline std::vector<Int> instantiate(const FormulaSet& fs, const Int& n3) {
    const Instantiation inst = try_instantiate(fs, n3);
    if (!inst.ok()) {
        std::string msg = "infeasible n3 = " + n3.str() + ":";
        for (const auto& issue : inst.issues)
            msg += " index " + std::to_string(issue.index) + " value " + rat_string(issue.value) +
                   " (" + issue.reason + ");";
        throw error(msg);
    }
    std::vector<Int> out;
    out.reserve(62);
    for (const Rat& v : inst.values) out.push_back(to_int(v));
    return out;
}

// all n3 >= 0 for which every instantiated value is a non-negative integer,
// described as a congruence class intersected with an interval
struct N3Range {
    bool empty = false;
    Int modulus = 1;
    Int residue = 0;
    Int min = 0;
    Int max = -1;  // inclusive

    bool contains(const Int& x) const {
        return !empty && x >= min && x <= max && ((x - residue) % modulus == 0);
    }
};

inline N3Range feasible_n3_range(const Int& n, const Int& k) {
    const FormulaSet fs = eval_formulas(n, k);
    N3Range range;
    range.min = 0;
    range.max = -1;
    bool has_max = false;
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;

    for (int i = 0; i < 62; ++i) {
        const Rat a = fs.nf[i].a;
        const Rat b = fs.nf[i].b;
        if (b == 0) {
            if (!is_integer(a) || a < 0) {
                range.empty = true;
                return range;
            }
            continue;
        }
        // congruence: q*a + p*n3 = 0 (mod q) for b = p/q in lowest terms
        const Int p = numerator(b), q = denominator(b);
        if (q > 1) {
            const Rat qa = a * Rat(q);
            if (!is_integer(qa)) {
                range.empty = true;
                return range;
            }
            // solve p*x = -qa (mod q); gcd(p,q) = 1
            Int pinv = 1;
            while ((p * pinv - 1) % q != 0) ++pinv;  // q is tiny (3 here)
            Int res = ((-to_int(qa) * pinv) % q + q) % q;
            // merge with the accumulated congruence (moduli are small)
            const Int g = boost::multiprecision::gcd(range.modulus, q);
            if ((res - range.residue) % g != 0) {
                range.empty = true;
                return range;
            }
            Int mod = boost::multiprecision::lcm(range.modulus, q);
            Int r = range.residue;
            while (r % q != res) r += range.modulus;
            range.modulus = mod;
            range.residue = r % mod;
        } else if (!is_integer(a)) {
            range.empty = true;
            return range;
        }
        // sign bound: a + b*x >= 0
        if (b > 0) {
            const Rat bound = -a / b;  // x >= bound
            Int lo = to_int(bound);
            while (Rat(lo) < bound) ++lo;
            if (lo > range.min) range.min = lo;
        } else {
            const Rat bound = a / -b;  // x <= bound
            Int hi = to_int(bound);
            while (Rat(hi) > bound) --hi;
            if (!has_max || hi < range.max) {
                range.max = hi;
                has_max = true;
            }
        }
    }
    if (!has_max) throw error("feasible_n3_range: no upper bound found");
    // snap bounds onto the congruence class
    while (range.min <= range.max && (range.min - range.residue) % range.modulus != 0) ++range.min;
    while (range.max >= range.min && (range.max - range.residue) % range.modulus != 0) --range.max;
    if (range.min > range.max) range.empty = true;
    return range;
}

}  // namespace srg
