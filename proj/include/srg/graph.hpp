#pragma once

// Dense undirected graph with one fixed-width bit vector per vertex.
// Vertices are 0..order-1; adjacency is kept symmetric and loop-free.
// Orders up to 1024 are supported so that a row is at most 16 words.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "srg/errors.hpp"

namespace srg {

class Graph {
public:
    static constexpr int max_order = 1024;

    Graph() = default;

    explicit Graph(int order) {
        if (order < 1 || order > max_order)
            throw error("graph order out of range: " + std::to_string(order));
        order_ = order;
        words_ = (order + 63) / 64;
        bits_.assign(static_cast<std::size_t>(order) * words_, 0);
    }

    int order() const { return order_; }
    int words_per_row() const { return words_; }

    const std::uint64_t* row(int u) const { return bits_.data() + static_cast<std::size_t>(u) * words_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (row(u)[v >> 6] >> (v & 63)) & 1u;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw error("self-loop rejected");
        mut_row(u)[v >> 6] |= std::uint64_t{1} << (v & 63);
        mut_row(v)[u >> 6] |= std::uint64_t{1} << (u & 63);
    }

    int degree(int u) const {
        check_vertex(u);
        int d = 0;
        for (int w = 0; w < words_; ++w) d += __builtin_popcountll(row(u)[w]);
        return d;
    }

    long long edge_count() const {
        long long total = 0;
        for (int u = 0; u < order_; ++u) total += degree(u);
        return total / 2;
    }

    template <class Fn>
    void for_neighbors(int u, Fn&& fn) const {
        const std::uint64_t* r = row(u);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t bits = r[w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                fn(w * 64 + b);
                bits &= bits - 1;
            }
        }
    }

    int common_neighbors(int u, int v) const {
        const std::uint64_t* a = row(u);
        const std::uint64_t* b = row(v);
        int c = 0;
        for (int w = 0; w < words_; ++w) c += __builtin_popcountll(a[w] & b[w]);
        return c;
    }

    // induced subgraph on the given vertices, in the given order
    Graph induced(const std::vector<int>& subset) const {
        const int m = static_cast<int>(subset.size());
        if (m == 0) throw error("induced: empty vertex subset");
        std::vector<bool> seen(order_, false);
        for (int v : subset) {
            check_vertex(v);
            if (seen[v]) throw error("induced: duplicate vertex " + std::to_string(v));
            seen[v] = true;
        }
        Graph g(m);
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (has_edge(subset[i], subset[j])) g.add_edge(i, j);
        return g;
    }

    Graph permuted(const std::vector<int>& perm) const {
        if (static_cast<int>(perm.size()) != order_) throw error("permutation size mismatch");
        // image graph h: h.has_edge(i,j) iff has_edge(perm[i], perm[j])
        Graph h(order_);
        for (int i = 0; i < order_; ++i)
            for (int j = i + 1; j < order_; ++j)
                if (has_edge(perm[i], perm[j])) h.add_edge(i, j);
        return h;
    }

    bool operator==(const Graph& other) const {
        return order_ == other.order_ && bits_ == other.bits_;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= order_) throw error("vertex out of range: " + std::to_string(v));
    }
    std::uint64_t* mut_row(int u) { return bits_.data() + static_cast<std::size_t>(u) * words_; }

    int order_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

struct SrgParams {
    int n = 0;
    int k = 0;
    int lambda = 0;
    int mu = 0;
    bool operator==(const SrgParams&) const = default;
};

// strongly regular parameter detection: every vertex has the same degree k,
// adjacent pairs share exactly lambda neighbors, non-adjacent exactly mu
inline std::optional<SrgParams> is_srg(const Graph& g) {
    const int n = g.order();
    if (n < 3) return std::nullopt;
    const int k = g.degree(0);
    for (int u = 1; u < n; ++u)
        if (g.degree(u) != k) return std::nullopt;
    int lambda = -1, mu = -1;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const int c = g.common_neighbors(u, v);
            if (g.has_edge(u, v)) {
                if (lambda < 0) lambda = c;
                else if (lambda != c) return std::nullopt;
            } else {
                if (mu < 0) mu = c;
                else if (mu != c) return std::nullopt;
            }
        }
    }
    if (lambda < 0 || mu < 0) return std::nullopt;  // complete or empty graph
    return SrgParams{n, k, lambda, mu};
}

}  // namespace srg
