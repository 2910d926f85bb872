#pragma once

// Canonical forms for small graphs (order <= 8) by brute-force permutation
// minimization, and exhaustive classification tables for orders <= 6.
//
// Labeled code convention: bit t of the code holds the adjacency of the
// pair (i,j), i<j, enumerated row-major:
//   (0,1),(0,2),...,(0,m-1),(1,2),...,(1,m-1),...,(m-2,m-1)
// The canonical code is the minimum labeled code over all m! relabelings,
// so equal codes mean isomorphic graphs.

#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

#include "srg/graph.hpp"

namespace srg {

constexpr int max_small_order = 8;

constexpr int pair_bit(int m, int i, int j) {
    // requires i < j < m
    return i * (2 * m - i - 1) / 2 + (j - i - 1);
}

constexpr int pair_count(int m) { return m * (m - 1) / 2; }

struct CanonicalCode {
    int order = 0;
    std::uint32_t code = 0;
    bool operator==(const CanonicalCode&) const = default;
    auto operator<=>(const CanonicalCode&) const = default;
};

inline std::uint32_t labeled_code(const Graph& g) {
    const int m = g.order();
    std::uint32_t code = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (g.has_edge(i, j)) code |= std::uint32_t{1} << pair_bit(m, i, j);
    return code;
}

inline Graph graph_from_code(std::uint32_t code, int m) {
    Graph g(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if ((code >> pair_bit(m, i, j)) & 1u) g.add_edge(i, j);
    return g;
}

namespace detail {

// bit relocation maps for every permutation of 0..m-1, in lexicographic
// order of the permutations; map[t] = source bit of target bit t
inline const std::vector<std::array<std::uint8_t, 28>>& perm_bit_maps(int m) {
    static std::vector<std::vector<std::array<std::uint8_t, 28>>> cache(max_small_order + 1);
    auto& maps = cache[m];
    if (maps.empty()) {
        std::vector<int> perm(m);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::array<std::uint8_t, 28> mp{};
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j) {
                    int pi = perm[i], pj = perm[j];
                    if (pi > pj) std::swap(pi, pj);
                    mp[pair_bit(m, i, j)] = static_cast<std::uint8_t>(pair_bit(m, pi, pj));
                }
            maps.push_back(mp);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return maps;
}

inline std::uint32_t apply_perm_map(std::uint32_t code, const std::array<std::uint8_t, 28>& mp, int nbits) {
    std::uint32_t out = 0;
    for (int t = 0; t < nbits; ++t)
        if ((code >> mp[t]) & 1u) out |= std::uint32_t{1} << t;
    return out;
}

}  // namespace detail

inline CanonicalCode canonical_code(const Graph& g) {
    const int m = g.order();
    if (m < 1 || m > max_small_order)
        throw error("canonical_code: order out of range: " + std::to_string(m));
    const std::uint32_t code = labeled_code(g);
    std::uint32_t best = code;
    const int nbits = pair_count(m);
    for (const auto& mp : detail::perm_bit_maps(m))
        best = std::min(best, detail::apply_perm_map(code, mp, nbits));
    return CanonicalCode{m, best};
}

// Exhaustive classification of all 2^C(m,2) labeled graphs on m vertices.
// reps[i] is the canonical code of class i; classes are ordered by
// (edge count ascending, canonical code ascending). table[labeled] = class.
struct LabeledClasses {
    int order = 0;
    std::vector<std::uint32_t> reps;
    std::vector<std::uint8_t> table;
};

inline LabeledClasses build_lookup_table(int m) {
    if (m < 1 || m > 6)
        throw error("build_lookup_table: order out of range: " + std::to_string(m));
    const int nbits = pair_count(m);
    const std::uint32_t ncodes = std::uint32_t{1} << nbits;
    const auto& maps = detail::perm_bit_maps(m);

    LabeledClasses out;
    out.order = m;
    out.table.assign(ncodes, 0xff);
    // ascending scan: the first unassigned code is the minimum of its orbit,
    // hence its own canonical code
    for (std::uint32_t code = 0; code < ncodes; ++code) {
        if (out.table[code] != 0xff) continue;
        const auto idx = static_cast<std::uint8_t>(out.reps.size());
        out.reps.push_back(code);
        for (const auto& mp : maps)
            out.table[detail::apply_perm_map(code, mp, nbits)] = idx;
    }
    // reorder classes by (edges, code)
    std::vector<int> order(out.reps.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const int ea = __builtin_popcount(out.reps[a]);
        const int eb = __builtin_popcount(out.reps[b]);
        if (ea != eb) return ea < eb;
        return out.reps[a] < out.reps[b];
    });
    std::vector<std::uint8_t> remap(out.reps.size());
    std::vector<std::uint32_t> reps_sorted(out.reps.size());
    for (std::size_t t = 0; t < order.size(); ++t) {
        remap[order[t]] = static_cast<std::uint8_t>(t);
        reps_sorted[t] = out.reps[order[t]];
    }
    out.reps = std::move(reps_sorted);
    for (auto& c : out.table) c = remap[c];
    return out;
}

}  // namespace srg
