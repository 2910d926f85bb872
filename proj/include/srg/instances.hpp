#pragma once

// Concrete members of the srg(n,k,1,2) family and parameter admissibility.
//
// With lambda=1 every neighborhood is a perfect matching, so k must be even,
// and counting common-neighbor paths gives n = 1 + k + k(k-2)/2. Integrality
// of the eigenvalue multiplicities additionally requires 4k-7 to be a square.

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "srg/graph.hpp"
#include "srg/graph6.hpp"

namespace srg {

struct FamilyParams {
    int k = 0;
    long long n = 0;
};

inline long long order_from_valency(int k) {
    if (k < 2) throw error("valency too small: " + std::to_string(k));
    if (k % 2 != 0) throw error("valency must be even: " + std::to_string(k));
    return 1LL + k + static_cast<long long>(k) * (k - 2) / 2;
}

// Admissible valencies: k even, 4k-7 = s^2 a perfect square, and both
// eigenvalue multiplicities (k^2/2 +- (k^2/2 - 2k)/s)/2 non-negative
// integers. Squareness alone is not enough (k = 8 gives s = 5 but
// multiplicities 16 +- 8/5).
inline std::vector<int> admissible_valencies(int limit) {
    if (limit < 4) throw error("limit must be at least 4");
    std::vector<int> out;
    for (int k = 4; k <= limit; k += 2) {
        const long long d = 4LL * k - 7;
        long long s = static_cast<long long>(std::sqrt(static_cast<double>(d)));
        while (s * s > d) --s;
        while ((s + 1) * (s + 1) <= d) ++s;
        if (s * s != d) continue;
        const long long half_k2 = static_cast<long long>(k) * k / 2;
        const long long path_diff = half_k2 - 2LL * k;
        if (path_diff % s != 0) continue;
        const long long q = path_diff / s;
        if ((half_k2 + q) % 2 != 0 || (half_k2 - q) % 2 != 0) continue;
        if (half_k2 + q < 0 || half_k2 - q < 0) continue;
        out.push_back(k);
    }
    return out;
}

// the 3x3 rook graph: cells (r,c), adjacent iff same row or same column;
// the unique srg(9,4,1,2)
inline Graph rook9() {
    Graph g(9);
    for (int a = 0; a < 9; ++a)
        for (int b = a + 1; b < 9; ++b)
            if (a / 3 == b / 3 || a % 3 == b % 3) g.add_edge(a, b);
    return g;
}

namespace detail {

// generator matrix of the perfect ternary Golay [11,6,5] code: cyclic shifts
// of g(x) = 2 + 2x + x^2 + 2x^3 + x^5, a degree-5 factor of x^11 - 1 over GF(3)
inline constexpr std::array<std::array<int, 11>, 6> golay_generator() {
    constexpr std::array<int, 6> gpoly = {2, 2, 1, 2, 0, 1};
    std::array<std::array<int, 11>, 6> g{};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            g[i][(i + j) % 11] = gpoly[j];
    return g;
}

inline void golay_weight_check() {
    const auto gen = golay_generator();
    std::array<int, 12> wt{};
    for (int msg = 0; msg < 729; ++msg) {
        std::array<int, 11> v{};
        int t = msg;
        for (int i = 0; i < 6; ++i, t /= 3) {
            const int a = t % 3;
            if (a)
                for (int j = 0; j < 11; ++j) v[j] = (v[j] + a * gen[i][j]) % 3;
        }
        int w = 0;
        for (int j = 0; j < 11; ++j)
            if (v[j]) ++w;
        ++wt[w];
    }
    const std::array<int, 12> expected = {1, 0, 0, 0, 0, 132, 132, 0, 330, 110, 0, 24};
    if (wt != expected) throw error("ternary Golay generator failed weight enumeration check");
}

// null space of the generator over GF(3): a 5x11 parity check matrix
inline std::array<std::array<int, 11>, 5> golay_parity_check() {
    auto mat = golay_generator();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < 11 && r < 6; ++c) {
        int pr = -1;
        for (int i = r; i < 6; ++i)
            if (mat[i][c] % 3 != 0) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(mat[r], mat[pr]);
        const int inv = (mat[r][c] % 3 == 1) ? 1 : 2;
        for (auto& x : mat[r]) x = (x * inv) % 3;
        for (int i = 0; i < 6; ++i) {
            if (i == r) continue;
            const int f = mat[i][c] % 3;
            if (f)
                for (int j = 0; j < 11; ++j) mat[i][j] = ((mat[i][j] - f * mat[r][j]) % 3 + 3) % 3;
        }
        pivots.push_back(c);
        ++r;
    }
    if (r != 6) throw error("Golay generator matrix is rank-deficient");
    std::array<std::array<int, 11>, 5> h{};
    int hr = 0;
    for (int fc = 0; fc < 11; ++fc) {
        bool is_pivot = false;
        for (int p : pivots)
            if (p == fc) is_pivot = true;
        if (is_pivot) continue;
        h[hr][fc] = 1;
        for (std::size_t ri = 0; ri < pivots.size(); ++ri)
            h[hr][pivots[ri]] = (3 - mat[ri][fc] % 3) % 3;
        ++hr;
    }
    return h;
}

}  // namespace detail

// Coset graph of the perfect ternary Golay [11,6,5] code: vertices are the
// 3^5 = 243 syndromes, adjacent iff their difference is the syndrome of a
// weight-1 vector. The result is checked to be srg(243,22,1,2).
inline Graph bvls243() {
    detail::golay_weight_check();
    const auto h = detail::golay_parity_check();

    auto syndrome_index = [&](const std::array<int, 11>& v) {
        int idx = 0;
        for (int r = 0; r < 5; ++r) {
            int s = 0;
            for (int j = 0; j < 11; ++j) s += h[r][j] * v[j];
            idx = idx * 3 + s % 3;
        }
        return idx;
    };

    std::vector<int> diffs;
    for (int j = 0; j < 11; ++j)
        for (int c = 1; c <= 2; ++c) {
            std::array<int, 11> v{};
            v[j] = c;
            diffs.push_back(syndrome_index(v));
        }
    std::sort(diffs.begin(), diffs.end());
    if (std::adjacent_find(diffs.begin(), diffs.end()) != diffs.end() || diffs.front() == 0)
        throw error("weight-1 syndromes are not 22 distinct nonzero values");

    // vertices are GF(3)^5 vectors encoded base 3 (most significant digit first)
    auto add_mod3 = [](int a, int b) {
        int out = 0, mul = 81;
        for (int d = 0; d < 5; ++d) {
            const int da = (a / mul) % 3 + (b / mul) % 3;
            out += (da % 3) * mul;
            mul /= 3;
        }
        return out;
    };

    Graph g(243);
    for (int u = 0; u < 243; ++u)
        for (int d : diffs) {
            const int v = add_mod3(u, d);
            if (u < v) g.add_edge(u, v);
        }

    const auto params = is_srg(g);
    if (!params || !(*params == SrgParams{243, 22, 1, 2}))
        throw error("coset graph construction failed the srg(243,22,1,2) check");
    return g;
}

// Read a single-graph graph6 file. The host is not required to be strongly
// regular; censuses run on arbitrary graphs.
inline Graph load_host(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open file: " + path);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw io_error("read failure: " + path);

    std::vector<std::string> lines;
    std::string cur;
    std::istringstream ss(content);
    while (std::getline(ss, cur)) {
        if (!cur.empty() && cur.back() == '\r') cur.pop_back();
        if (!cur.empty()) lines.push_back(cur);
    }
    if (lines.empty()) throw parse_error("no graph in file: " + path);
    if (lines.size() > 1) throw parse_error("exactly one graph expected, found " + std::to_string(lines.size()));
    return graph6_read(lines[0]);
}

}  // namespace srg
