#pragma once

// Symbolic and numeric verification of the equation table.
//
// Symbolic: substitute every symbol's closed form (order-6 symbols as
// a + b*n3), eliminate n through the family relation, and expand. An
// equation holds iff the residual polynomial in (k, n3) is identically
// zero; the check is coefficient-wise, not pointwise, so it covers every
// n3 at once. Failing readings return their residual.
//
// Numeric: substitute concrete count values (usually measured censuses)
// and evaluate exactly.

#include <optional>
#include <vector>

#include "srg/equations.hpp"

namespace srg {

struct Verdict {
    bool holds = false;
    Poly residual;  // zero iff holds; variables k and n3
};

struct NumericVerdict {
    bool holds = false;
    Rat residual;
};

inline Poly symbol_poly(const FormulaTable& t, Sym s) {
    switch (s.kind) {
        case 'p': return t.p.at(s.idx - 3);
        case 'l': return t.l.at(s.idx - 1);
        case 'm': return t.m.at(s.idx - 1);
        case 'n': return t.n.at(s.idx - 1).full();
        default: throw error("unknown symbol kind");
    }
}

inline Verdict check_reading(const Reading& r, const FormulaTable& t) {
    Poly diff = r.lhs_poly - r.rhs_poly;
    auto accumulate = [&](const std::vector<Term>& terms, bool lhs) {
        for (const auto& term : terms) {
            Poly value(1);
            const Poly s = symbol_poly(t, term.sym);
            for (int i = 0; i < term.power; ++i) value *= s;
            if (lhs)
                diff += term.coeff * value;
            else
                diff -= term.coeff * value;
        }
    };
    accumulate(r.lhs_terms, true);
    accumulate(r.rhs_terms, false);
    Poly residual = diff.subst_n(family_order_poly());
    return Verdict{residual.is_zero(), std::move(residual)};
}

// concrete values for every symbol, e.g. a measured census mapped onto the
// count indices
struct SymbolValues {
    Int n;
    Int k;
    std::array<Int, 3> p{};
    std::array<Int, 9> l{};
    std::array<Int, 21> m{};
    std::array<Int, 62> nv{};

    Int value(Sym s) const {
        switch (s.kind) {
            case 'p': return p.at(s.idx - 3);
            case 'l': return l.at(s.idx - 1);
            case 'm': return m.at(s.idx - 1);
            case 'n': return nv.at(s.idx - 1);
            default: throw error("unknown symbol kind");
        }
    }
};

inline NumericVerdict check_reading_numeric(const Reading& r, const SymbolValues& vals) {
    const Rat n(vals.n), k(vals.k);
    Rat diff = r.lhs_poly.eval(n, k, 0) - r.rhs_poly.eval(n, k, 0);
    auto accumulate = [&](const std::vector<Term>& terms, int sign) {
        for (const auto& term : terms) {
            Rat value = 1;
            for (int i = 0; i < term.power; ++i) value *= Rat(vals.value(term.sym));
            diff += term.coeff.eval(n, k, 0) * value * sign;
        }
    };
    accumulate(r.lhs_terms, 1);
    accumulate(r.rhs_terms, -1);
    return NumericVerdict{diff == 0, diff};
}

struct EquationVerdict {
    std::string name;
    std::string display;
    std::string note;
    Verdict adopted;
    std::optional<std::string> printed_display;
    std::optional<Verdict> printed;
};

inline std::vector<EquationVerdict> check_all(const FormulaTable& t = formula_table()) {
    std::vector<EquationVerdict> out;
    for (const Equation& eq : equation_table()) {
        EquationVerdict v;
        v.name = eq.name;
        v.display = eq.adopted.display;
        v.note = eq.note;
        v.adopted = check_reading(eq.adopted, t);
        if (eq.printed) {
            v.printed_display = eq.printed->display;
            v.printed = check_reading(*eq.printed, t);
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace srg
