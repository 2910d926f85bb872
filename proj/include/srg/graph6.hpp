#pragma once

// graph6 text format, bit-exact per the standard specification.
//
// One graph is N(n) R(x) where N(n) encodes the order (single byte n+63 for
// n <= 62, otherwise 126 followed by a big-endian 18-bit value in three
// bytes) and R(x) packs the upper triangle of the adjacency matrix in
// column-major order (0,1),(0,2),(1,2),(0,3),... six bits per byte,
// big-endian within a byte, each byte offset by 63. Padding bits must be 0.

#include <fstream>
#include <string>

#include "srg/graph.hpp"

namespace srg {

inline std::string graph6_write(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, nacc = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nacc == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nacc = 0;
            }
        }
    }
    if (nacc > 0) out.push_back(static_cast<char>((acc << (6 - nacc)) + 63));
    return out;
}

inline Graph graph6_read(const std::string& text) {
    std::size_t pos = 0;
    if (text.rfind(">>graph6<<", 0) == 0) pos = 10;
    if (pos >= text.size()) throw parse_error("graph6: empty input");

    auto byte = [&](std::size_t p) -> int {
        const int c = static_cast<unsigned char>(text[p]);
        if (c < 63 || c > 126) throw parse_error("graph6: byte out of range at position " + std::to_string(p));
        return c - 63;
    };

    long long n;
    if (static_cast<unsigned char>(text[pos]) == 126) {
        if (pos + 4 > text.size()) throw parse_error("graph6: truncated order field");
        if (pos + 1 < text.size() && static_cast<unsigned char>(text[pos + 1]) == 126)
            throw parse_error("graph6: order above supported range");
        n = (static_cast<long long>(byte(pos + 1)) << 12) | (byte(pos + 2) << 6) | byte(pos + 3);
        pos += 4;
    } else {
        n = byte(pos);
        pos += 1;
    }
    if (n < 1 || n > Graph::max_order)
        throw parse_error("graph6: order out of range: " + std::to_string(n));

    const long long nbits = n * (n - 1) / 2;
    const long long nbytes = (nbits + 5) / 6;
    if (static_cast<long long>(text.size() - pos) < nbytes)
        throw parse_error("graph6: truncated bit stream");
    if (static_cast<long long>(text.size() - pos) > nbytes)
        throw parse_error("graph6: trailing garbage after graph data");

    Graph g(static_cast<int>(n));
    int acc = 0, nacc = 0;
    std::size_t next = pos;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (nacc == 0) {
                acc = byte(next++);
                nacc = 6;
            }
            if ((acc >> (nacc - 1)) & 1) g.add_edge(i, j);
            --nacc;
        }
    }
    if (nacc > 0 && (acc & ((1 << nacc) - 1)))
        throw parse_error("graph6: nonzero padding bits");
    return g;
}

}  // namespace srg
