#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace srg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int binomial(const Int& n, int r) {
    if (r < 0 || n < r) return 0;
    Int out = 1;
    for (int i = 1; i <= r; ++i) {
        out *= n - (r - i);
        out /= i;
    }
    return out;
}

inline bool is_integer(const Rat& r) { return boost::multiprecision::denominator(r) == 1; }

inline Int to_int(const Rat& r) { return boost::multiprecision::numerator(r) / boost::multiprecision::denominator(r); }

inline std::string rat_string(const Rat& r) {
    if (is_integer(r)) return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

}  // namespace srg
