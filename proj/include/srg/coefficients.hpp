#pragma once

// Exact integer coefficient tables used to recover disconnected induced
// subgraph counts from connected ones.
//
// For ordered class pairs (A,B) with |A|+|B| = m:
//   q(F;A,B) = ordered bipartitions (S,T) of V(F), F[S] iso A, F[T] iso B,
//              over order-m classes F (cross edges between S and T allowed)
//   r(W;A,B) = ordered subset pairs (S,T) of V(W) with S cup T = V(W),
//              S cap T nonempty, W[S] iso A, W[T] iso B, over classes W of
//              order < m
// Both tables come from exhaustive subset enumeration on class
// representatives, so counting ordered pairs of induced copies in any host
// satisfies cnt(A)cnt(B) = sum_F q cnt(F) + sum_W r cnt(W).

#include <cstdint>
#include <map>
#include <sstream>
#include <vector>

#include "srg/catalog.hpp"

namespace srg {

struct ClassPairKey {
    int order_a = 0;  // |A|; |B| = m - |A|
    int idx_a = 0;
    int idx_b = 0;
    auto operator<=>(const ClassPairKey&) const = default;
};

struct SplitCoefficients {
    int m = 0;
    // key -> dense vector over order-m classes
    std::map<ClassPairKey, std::vector<long long>> q;
};

struct OverlapCoefficients {
    int m = 0;
    // key -> {(|W|, class index of W) -> coefficient}
    std::map<ClassPairKey, std::map<std::pair<int, int>, long long>> r;
};

namespace detail {

inline std::uint32_t induced_code(const Graph& g, const std::vector<int>& verts) {
    const int m = static_cast<int>(verts.size());
    std::uint32_t code = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (g.has_edge(verts[i], verts[j])) code |= std::uint32_t{1} << pair_bit(m, i, j);
    return code;
}

inline std::vector<int> bits_to_verts(unsigned mask) {
    std::vector<int> v;
    while (mask) {
        v.push_back(__builtin_ctz(mask));
        mask &= mask - 1;
    }
    return v;
}

}  // namespace detail

inline SplitCoefficients build_split_coefficients(const CatalogSet& cats, int m) {
    if (m < 2 || m > 6) throw error("split coefficients: order out of range");
    SplitCoefficients out;
    out.m = m;
    const auto& catm = cats.at(m);
    for (int f = 0; f < static_cast<int>(catm.size()); ++f) {
        const Graph rep = catm.representative(f);
        for (unsigned mask = 1; mask < (1u << m) - 1; ++mask) {
            const auto sv = detail::bits_to_verts(mask);
            const auto tv = detail::bits_to_verts(~mask & ((1u << m) - 1));
            const int a = static_cast<int>(sv.size());
            const int ca = cats.at(a).class_of(detail::induced_code(rep, sv));
            const int cb = cats.at(m - a).class_of(detail::induced_code(rep, tv));
            auto& vec = out.q[ClassPairKey{a, ca, cb}];
            if (vec.empty()) vec.assign(catm.size(), 0);
            ++vec[f];
        }
    }
    return out;
}

inline OverlapCoefficients build_overlap_coefficients(const CatalogSet& cats, int m) {
    if (m < 2 || m > 6) throw error("overlap coefficients: order out of range");
    OverlapCoefficients out;
    out.m = m;
    for (int wo = 1; wo < m; ++wo) {
        const auto& catw = cats.at(wo);
        for (int w = 0; w < static_cast<int>(catw.size()); ++w) {
            const Graph rep = catw.representative(w);
            const unsigned full = (1u << wo) - 1;
            for (unsigned smask = 1; smask <= full; ++smask) {
                const auto sv = detail::bits_to_verts(smask);
                const int a = static_cast<int>(sv.size());
                const int b = m - a;
                if (b < 1 || b > wo) continue;
                const int ca = cats.at(a).class_of(detail::induced_code(rep, sv));
                for (unsigned tmask = 1; tmask <= full; ++tmask) {
                    if (__builtin_popcount(tmask) != b) continue;
                    if ((smask | tmask) != full) continue;
                    if ((smask & tmask) == 0) continue;
                    const auto tv = detail::bits_to_verts(tmask);
                    const int cb = cats.at(b).class_of(detail::induced_code(rep, tv));
                    ++out.r[ClassPairKey{a, ca, cb}][{wo, w}];
                }
            }
        }
    }
    return out;
}

// canonical text renderings, used to pin down bit-exact reproducibility
inline std::string to_csv(const SplitCoefficients& sc) {
    std::ostringstream os;
    os << "order_a,class_a,class_b,class_f,q\n";
    for (const auto& [key, vec] : sc.q)
        for (std::size_t f = 0; f < vec.size(); ++f)
            if (vec[f])
                os << key.order_a << ',' << key.idx_a << ',' << key.idx_b << ',' << f << ',' << vec[f] << '\n';
    return os.str();
}

inline std::string to_csv(const OverlapCoefficients& oc) {
    std::ostringstream os;
    os << "order_a,class_a,class_b,order_w,class_w,r\n";
    for (const auto& [key, mp] : oc.r)
        for (const auto& [wk, coeff] : mp)
            os << key.order_a << ',' << key.idx_a << ',' << key.idx_b << ','
               << wk.first << ',' << wk.second << ',' << coeff << '\n';
    return os.str();
}

}  // namespace srg
