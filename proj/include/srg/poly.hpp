#pragma once

// Sparse exact polynomials over the rationals in the three variables that
// the formula system uses: the host order n, the valency k, and the free
// count n3. Equality is coefficient-wise on the normalized representation.

#include <map>
#include <sstream>
#include <string>

#include "srg/errors.hpp"
#include "srg/numeric.hpp"

namespace srg {

class Poly {
public:
    struct Monomial {
        int en = 0, ek = 0, e3 = 0;
        auto operator<=>(const Monomial&) const = default;
    };

    Poly() = default;
    Poly(int c) { *this = Poly(Rat(c)); }
    Poly(const Rat& c) {
        if (c != 0) terms_[Monomial{}] = c;
    }

    static Poly var_n() { return monomial(1, 0, 0); }
    static Poly var_k() { return monomial(0, 1, 0); }
    static Poly var_n3() { return monomial(0, 0, 1); }

    static Poly monomial(int en, int ek, int e3, Rat c = 1) {
        Poly p;
        if (c != 0) p.terms_[Monomial{en, ek, e3}] = c;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    Poly operator-() const {
        Poly out = *this;
        for (auto& [mono, c] : out.terms_) c = -c;
        return out;
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [mono, c] : o.terms_) {
            auto it = terms_.find(mono);
            if (it == terms_.end()) {
                terms_[mono] = c;
            } else {
                it->second += c;
                if (it->second == 0) terms_.erase(it);
            }
        }
        return *this;
    }
    Poly& operator-=(const Poly& o) { return *this += -o; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                const Monomial m{ma.en + mb.en, ma.ek + mb.ek, ma.e3 + mb.e3};
                auto& c = out.terms_[m];
                c += ca * cb;
                if (c == 0) out.terms_.erase(m);
            }
        return out;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly operator/(const Rat& s) const {
        if (s == 0) throw error("poly division by zero");
        return *this * Poly(Rat(1) / s);
    }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    // substitute a polynomial for the variable n
    Poly subst_n(const Poly& repl) const {
        Poly out;
        for (const auto& [mono, c] : terms_) {
            Poly term = monomial(0, mono.ek, mono.e3, c);
            for (int i = 0; i < mono.en; ++i) term *= repl;
            out += term;
        }
        return out;
    }

    Rat eval(const Rat& n, const Rat& k, const Rat& n3) const {
        Rat out = 0;
        for (const auto& [mono, c] : terms_) {
            Rat t = c;
            for (int i = 0; i < mono.en; ++i) t *= n;
            for (int i = 0; i < mono.ek; ++i) t *= k;
            for (int i = 0; i < mono.e3; ++i) t *= n3;
            out += t;
        }
        return out;
    }

    // coefficient of n3^d, as a polynomial in n and k
    Poly coeff_n3(int d) const {
        Poly out;
        for (const auto& [mono, c] : terms_)
            if (mono.e3 == d) out.terms_[Monomial{mono.en, mono.ek, 0}] = c;
        return out;
    }

    int degree_n3() const {
        int d = 0;
        for (const auto& [mono, c] : terms_) d = std::max(d, mono.e3);
        return d;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        // highest total degree first, then reverse-lexicographic on exponents
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [mono, c] = *it;
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            first = false;
            const Rat ac = boost::multiprecision::abs(c);
            const bool has_var = mono.en || mono.ek || mono.e3;
            bool lead = true;
            if (ac != 1 || !has_var) {
                os << rat_string(ac);
                lead = false;
            }
            auto var = [&](const char* name, int e) {
                if (!e) return;
                if (!lead) os << "*";
                lead = false;
                os << name;
                if (e > 1) os << "^" << e;
            };
            var("n", mono.en);
            var("k", mono.ek);
            var("n3", mono.e3);
        }
        return os.str();
    }

private:
    std::map<Monomial, Rat> terms_;
};

// product (x)(x-1)...(x-r+1)/r! for polynomial x
inline Poly choose(const Poly& x, int r) {
    Poly out(1);
    Rat fact = 1;
    for (int i = 0; i < r; ++i) {
        out *= x - Poly(i);
        fact *= i + 1;
    }
    return out / fact;
}

// the family relation n = 1 + k + k(k-2)/2
inline Poly family_order_poly() {
    const Poly k = Poly::var_k();
    return Poly(1) + k + k * (k - Poly(2)) / 2;
}

}  // namespace srg
