#pragma once

// Ground-truth induced-subgraph censuses.
//
// brute_census iterates every m-subset in colex order (rank-partitioned
// across workers, so results are identical for any thread count) and
// classifies each subset with the O(1) labeled-code lookup table.
//
// esu_census enumerates every *connected* m-subset exactly once with the
// extension-set discipline rooted at each vertex; complete_disconnected then
// recovers the disconnected class counts exactly by solving the linear
// system built from the split/overlap coefficient tables:
//   cnt(A)*cnt(B) - sum_W r(W;A,B) cnt(W) = sum_F q(F;A,B) cnt(F).
//
// All per-class counts fit in 64 bits for hosts up to 1024 vertices at
// order <= 6; the completion solver still runs in exact big rationals and
// range-checks on the way out.

#include <array>
#include <cstdint>
#include <map>
#include <thread>

#include "srg/coefficients.hpp"
#include "srg/numeric.hpp"

namespace srg {

struct CensusOptions {
    int threads = 1;
    bool allow_long = false;

    long long subset_budget() const { return allow_long ? 10'000'000'000LL : 1'000'000'000LL; }
    int worker_count() const { return threads > 0 ? threads : 1; }
};

struct CensusResult {
    std::string host;
    int order = 0;
    std::string method;       // "brute", "esu", "esu+completion", "analytic"
    bool complete = false;    // false while disconnected classes are missing
    std::vector<std::uint64_t> counts;

    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (auto c : counts) t += c;
        return t;
    }
};

namespace detail {

inline unsigned long long subsets_of(int n, int m) {
    if (n < m) return 0;
    unsigned long long out = 1;
    for (int i = 1; i <= m; ++i) out = out * static_cast<unsigned long long>(n - m + i) / i;
    return out;
}

// ---------------- brute force over colex-ordered subsets ----------------

// colex rank of a subset is sum_p C(subset[p], p+1)
inline void colex_unrank(unsigned long long rank, int m, std::array<int, 7>& subset) {
    for (int p = m - 1; p >= 0; --p) {
        int c = p;
        while (subsets_of(c + 1, p + 1) <= rank) ++c;
        subset[p] = c;
        rank -= subsets_of(c, p + 1);
    }
}

template <class Classify>
inline void brute_worker(const Graph& g, int m, unsigned long long start,
                         unsigned long long count, Classify&& classify) {
    if (count == 0) return;
    std::array<int, 7> v{};
    colex_unrank(start, m, v);

    // acc[p] holds the adjacency bits among positions p..m-1
    std::array<std::uint32_t, 8> acc{};
    auto recompute_from = [&](int top) {
        for (int p = top; p >= 0; --p) {
            std::uint32_t bits = acc[p + 1];
            const std::uint64_t* row = g.row(v[p]);
            for (int q = p + 1; q < m; ++q)
                if ((row[v[q] >> 6] >> (v[q] & 63)) & 1)
                    bits |= std::uint32_t{1} << pair_bit(m, p, q);
            acc[p] = bits;
        }
    };
    recompute_from(m - 1);

    for (unsigned long long done = 0;;) {
        classify(acc[0]);
        if (++done == count) break;
        int i = 0;
        while (i + 1 < m && v[i] + 1 == v[i + 1]) ++i;
        ++v[i];
        for (int j = 0; j < i; ++j) v[j] = j;
        recompute_from(i);
    }
}

}  // namespace detail

inline CensusResult brute_census(const Graph& g, int m, const IsoCatalog& cat,
                                 const CensusOptions& opts = {}) {
    if (m < 3 || m > 6) throw error("brute_census: order out of range");
    if (cat.order != m) throw error("brute_census: catalog order mismatch");
    const unsigned long long total = detail::subsets_of(g.order(), m);
    if (total > static_cast<unsigned long long>(opts.subset_budget()))
        throw budget_error("brute census of " + std::to_string(total) +
                           " subsets exceeds the budget; use the connected-enumeration engine "
                           "with completion instead");

    const int workers = opts.worker_count();
    std::vector<std::vector<std::uint64_t>> partial(workers,
                                                    std::vector<std::uint64_t>(cat.size(), 0));
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) {
        const unsigned long long lo = total * t / workers;
        const unsigned long long hi = total * (t + 1) / workers;
        pool.emplace_back([&, t, lo, hi] {
            auto& mine = partial[t];
            const std::uint8_t* lut = cat.lookup.data();
            detail::brute_worker(g, m, lo, hi - lo, [&](std::uint32_t code) { ++mine[lut[code]]; });
        });
    }
    for (auto& th : pool) th.join();

    CensusResult out;
    out.order = m;
    out.method = "brute";
    out.complete = true;
    out.counts.assign(cat.size(), 0);
    for (const auto& vec : partial)
        for (std::size_t i = 0; i < vec.size(); ++i) out.counts[i] += vec[i];
    return out;
}

namespace detail {

template <int W>
struct EsuKernel {
    using Mask = std::array<std::uint64_t, W>;

    const Graph& g;
    int m;
    const std::uint8_t* lookup;
    std::uint64_t* counts;
    std::array<const std::uint64_t*, 6> rows{};
    std::array<int, 6> sub{};
    std::array<std::array<std::uint8_t, 6>, 6> pb{};  // pair_bit(m, q, p)

    EsuKernel(const Graph& graph, int order, const std::uint8_t* lut, std::uint64_t* out)
        : g(graph), m(order), lookup(lut), counts(out) {
        for (int q = 0; q < m; ++q)
            for (int p = q + 1; p < m; ++p)
                pb[q][p] = static_cast<std::uint8_t>(pair_bit(m, q, p));
    }

    static Mask load(const std::uint64_t* src) {
        Mask mk;
        for (int w = 0; w < W; ++w) mk[w] = src[w];
        return mk;
    }

    std::uint32_t vertex_bits(int w, int depth) const {
        std::uint32_t bits = 0;
        const int word = w >> 6;
        const std::uint64_t bit = std::uint64_t{1} << (w & 63);
        for (int q = 0; q < depth; ++q)
            if (rows[q][word] & bit) bits |= std::uint32_t{1} << pb[q][depth];
        return bits;
    }

    void extend(int depth, std::uint32_t code, const Mask& ext, const Mask& forbidden) {
        if (depth >= 6) return;  // m <= 6; bounds the recursion for the optimizer
        if (depth == m - 1) {
            for (int w = 0; w < W; ++w) {
                std::uint64_t bits = ext[w];
                while (bits) {
                    const int v = w * 64 + __builtin_ctzll(bits);
                    bits &= bits - 1;
                    ++counts[lookup[code | vertex_bits(v, depth)]];
                }
            }
            return;
        }
        Mask remaining = ext;
        for (int w = 0; w < W; ++w) {
            while (remaining[w]) {
                const int v = w * 64 + __builtin_ctzll(remaining[w]);
                remaining[w] &= remaining[w] - 1;
                const std::uint64_t* vrow = g.row(v);
                Mask child_ext, child_forbidden;
                for (int x = 0; x < W; ++x) {
                    child_ext[x] = remaining[x] | (vrow[x] & ~forbidden[x]);
                    child_forbidden[x] = forbidden[x] | vrow[x];
                }
                sub[depth] = v;
                rows[depth] = vrow;
                extend(depth + 1, code | vertex_bits(v, depth), child_ext, child_forbidden);
            }
        }
    }

    void run_root(int root) {
        const std::uint64_t* rrow = g.row(root);
        // low = the root and everything below it
        Mask low{};
        const int word = root >> 6;
        for (int w = 0; w < word; ++w) low[w] = ~std::uint64_t{0};
        low[word] = (root & 63) == 63 ? ~std::uint64_t{0}
                                      : ((std::uint64_t{1} << ((root & 63) + 1)) - 1);
        Mask ext, forbidden;
        for (int w = 0; w < W; ++w) {
            ext[w] = rrow[w] & ~low[w];
            forbidden[w] = rrow[w] | low[w];
        }
        sub[0] = root;
        rows[0] = rrow;
        extend(1, 0, ext, forbidden);
    }
};

template <int W>
void esu_run(const Graph& g, int m, const IsoCatalog& cat, const CensusOptions& opts,
             std::vector<std::uint64_t>& counts) {
    const int n = g.order();
    const int workers = opts.worker_count();
    std::vector<std::vector<std::uint64_t>> partial(workers,
                                                    std::vector<std::uint64_t>(cat.size(), 0));
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) {
        // round-robin roots: low roots own most of the work (the root is the
        // subgraph minimum), so contiguous ranges would starve all but one worker
        pool.emplace_back([&, t] {
            EsuKernel<W> kernel(g, m, cat.lookup.data(), partial[t].data());
            for (int root = t; root < n; root += workers) kernel.run_root(root);
        });
    }
    for (auto& th : pool) th.join();
    counts.assign(cat.size(), 0);
    for (const auto& vec : partial)
        for (std::size_t i = 0; i < vec.size(); ++i) counts[i] += vec[i];
}

}  // namespace detail

// exact counts of every *connected* class; disconnected entries stay zero
inline CensusResult esu_census(const Graph& g, int m, const IsoCatalog& cat,
                               const CensusOptions& opts = {}) {
    if (m < 3 || m > 6) throw error("esu_census: order out of range");
    if (cat.order != m) throw error("esu_census: catalog order mismatch");
    CensusResult out;
    out.order = m;
    out.method = "esu";
    out.complete = false;
    const int w = g.words_per_row();
    switch (w) {
        case 1: detail::esu_run<1>(g, m, cat, opts, out.counts); break;
        case 2: detail::esu_run<2>(g, m, cat, opts, out.counts); break;
        case 3: detail::esu_run<3>(g, m, cat, opts, out.counts); break;
        case 4: detail::esu_run<4>(g, m, cat, opts, out.counts); break;
        case 8: detail::esu_run<8>(g, m, cat, opts, out.counts); break;
        case 16: detail::esu_run<16>(g, m, cat, opts, out.counts); break;
        default: {
            // words_per_row is 5..7 or 9..15: round the kernel width up
            if (w < 8)
                detail::esu_run<8>(g, m, cat, opts, out.counts);
            else
                detail::esu_run<16>(g, m, cat, opts, out.counts);
            break;
        }
    }
    return out;
}

// lower-order full censuses for completion, indexed by order 0..m-1
using LowerCounts = std::vector<std::vector<Int>>;

inline Int count_of(const LowerCounts& lower, int order, int idx) {
    return lower.at(order).at(idx);
}

inline CensusResult complete_disconnected(const CensusResult& connected, const CatalogSet& cats,
                                          const SplitCoefficients& sc,
                                          const OverlapCoefficients& oc,
                                          const LowerCounts& lower) {
    const int m = connected.order;
    if (sc.m != m || oc.m != m) throw error("completion: coefficient tables for wrong order");
    const IsoCatalog& cat = cats.at(m);

    std::vector<int> unknowns;
    std::vector<int> col_of(cat.size(), -1);
    for (int i = 0; i < static_cast<int>(cat.size()); ++i)
        if (!cat.classes[i].connected) {
            col_of[i] = static_cast<int>(unknowns.size());
            unknowns.push_back(i);
        }
    const int ncols = static_cast<int>(unknowns.size());

    // rows of the exact system: coefficients over unknowns, then the rhs
    std::vector<std::vector<Rat>> rows;
    for (const auto& [key, qvec] : sc.q) {
        const Int cnt_a = count_of(lower, key.order_a, key.idx_a);
        const Int cnt_b = count_of(lower, m - key.order_a, key.idx_b);
        Int rhs = cnt_a * cnt_b;
        auto rit = oc.r.find(key);
        if (rit != oc.r.end())
            for (const auto& [wk, coeff] : rit->second)
                rhs -= coeff * count_of(lower, wk.first, wk.second);
        std::vector<Rat> row(ncols + 1, 0);
        for (int f = 0; f < static_cast<int>(cat.size()); ++f) {
            if (qvec[f] == 0) continue;
            if (col_of[f] >= 0)
                row[col_of[f]] = qvec[f];
            else
                rhs -= Int(qvec[f]) * Int(connected.counts[f]);
        }
        row[ncols] = Rat(rhs);
        rows.push_back(std::move(row));
    }

    // exact Gaussian elimination; the system must be consistent and of full
    // column rank, otherwise the engine or the tables are broken
    int rank = 0;
    for (int col = 0; col < ncols; ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        const Rat pv = rows[rank][col];
        for (auto& x : rows[rank]) x /= pv;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            const Rat f = rows[r][col];
            for (int c = col; c <= ncols; ++c) rows[r][c] -= f * rows[rank][c];
        }
        ++rank;
    }
    if (rank != ncols) throw error("completion: singular system (rank " + std::to_string(rank) +
                                   " of " + std::to_string(ncols) + ")");
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
        if (rows[r][ncols] != 0) throw error("completion: inconsistent system");

    CensusResult out;
    out.host = connected.host;
    out.order = m;
    out.method = connected.method + "+completion";
    out.complete = true;
    out.counts = connected.counts;
    // rows 0..rank-1 are now the identity over reordered columns; recover by
    // scanning each row's leading column
    for (int r = 0; r < rank; ++r) {
        int lead = -1;
        for (int c = 0; c < ncols; ++c)
            if (rows[r][c] != 0) {
                lead = c;
                break;
            }
        const Rat v = rows[r][ncols];
        if (!is_integer(v) || v < 0)
            throw error("completion: non-integral or negative solution " + rat_string(v));
        out.counts[unknowns[lead]] = static_cast<std::uint64_t>(to_int(v));
    }
    return out;
}

// bundles everything a census run needs
struct CensusContext {
    CatalogSet cats;
    std::map<int, SplitCoefficients> split;
    std::map<int, OverlapCoefficients> overlap;
};

inline CensusContext make_census_context() {
    CensusContext ctx;
    ctx.cats = build_catalog_set();
    for (int m = 3; m <= 6; ++m) {
        ctx.split.emplace(m, build_split_coefficients(ctx.cats, m));
        ctx.overlap.emplace(m, build_overlap_coefficients(ctx.cats, m));
    }
    return ctx;
}

// full censuses of orders 1..6 (index by order; slot 0 unused); brute when
// the subset count fits the budget, connected enumeration plus completion
// otherwise
inline std::vector<CensusResult> census_suite(const Graph& g, const CensusContext& ctx,
                                              const CensusOptions& opts = {},
                                              const std::string& host = "host") {
    const int n = g.order();
    std::vector<CensusResult> results(7);

    results[1] = CensusResult{host, 1, "analytic", true, {static_cast<std::uint64_t>(n)}};
    const std::uint64_t edges = static_cast<std::uint64_t>(g.edge_count());
    const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    results[2] = CensusResult{host, 2, "analytic", true, {pairs - edges, edges}};

    LowerCounts lower(7);
    lower[1] = {Int(n)};
    lower[2] = {Int(pairs - edges), Int(edges)};

    for (int m = 3; m <= 6; ++m) {
        const IsoCatalog& cat = ctx.cats.at(m);
        const unsigned long long total = detail::subsets_of(n, m);
        if (total <= static_cast<unsigned long long>(opts.subset_budget())) {
            results[m] = brute_census(g, m, cat, opts);
        } else {
            const CensusResult conn = esu_census(g, m, cat, opts);
            results[m] =
                complete_disconnected(conn, ctx.cats, ctx.split.at(m), ctx.overlap.at(m), lower);
        }
        results[m].host = host;
        lower[m].reserve(cat.size());
        for (auto c : results[m].counts) lower[m].push_back(Int(c));
    }
    return results;
}

// per-path histogram of induced pentagons through each induced 3-path
inline std::map<std::uint64_t, std::uint64_t> pentagon_profile(const Graph& g,
                                                               const CensusOptions& opts = {}) {
    const auto params = is_srg(g);
    if (!params || params->lambda != 1 || params->mu != 2)
        throw error("pentagon_profile: host is not an srg(n,k,1,2)");

    const int n = g.order();
    const int words = g.words_per_row();
    const int workers = opts.worker_count();
    std::vector<std::map<std::uint64_t, std::uint64_t>> partial(workers);
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
            auto& hist = partial[t];
            std::vector<std::uint64_t> xmask(words);
            for (int v0 = t; v0 < n; v0 += workers) {
                const std::uint64_t* r0 = g.row(v0);
                std::vector<int> nbrs;
                g.for_neighbors(v0, [&](int u) { nbrs.push_back(u); });
                for (std::size_t i = 0; i < nbrs.size(); ++i) {
                    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                        const int v1 = nbrs[i], v2 = nbrs[j];
                        if (g.has_edge(v1, v2)) continue;  // need an induced path
                        const std::uint64_t* r1 = g.row(v1);
                        const std::uint64_t* r2 = g.row(v2);
                        std::uint64_t pentagons = 0;
                        for (int w = 0; w < words; ++w) xmask[w] = r1[w] & ~r0[w] & ~r2[w];
                        for (int w = 0; w < words; ++w) {
                            std::uint64_t bits = xmask[w];
                            while (bits) {
                                const int x = w * 64 + __builtin_ctzll(bits);
                                bits &= bits - 1;
                                const std::uint64_t* rx = g.row(x);
                                for (int ww = 0; ww < words; ++ww)
                                    pentagons += __builtin_popcountll(rx[ww] & r2[ww] & ~r0[ww] &
                                                                      ~r1[ww]);
                            }
                        }
                        ++hist[pentagons];
                    }
                }
            }
        });
    }
    for (auto& th : pool) th.join();

    std::map<std::uint64_t, std::uint64_t> hist;
    for (const auto& h : partial)
        for (const auto& [count, paths] : h) hist[count] += paths;
    return hist;
}

}  // namespace srg
