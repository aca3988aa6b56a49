#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace lexsweep {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// graph6: N(n) followed by the upper triangle packed column by column
// (x(0,1), x(0,2), x(1,2), x(0,3), ...), six bits per byte, each byte + 63.

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

inline std::string to_graph6(const Graph& g) {
    const std::uint64_t n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
        }
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
        }
    }

    unsigned bits = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            bits = (bits << 1) | (g.has_edge(i, j) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(bits + 63));
                bits = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) {
        out.push_back(static_cast<char>((bits << (6 - filled)) + 63));
    }
    return out;
}

inline Graph from_graph6(std::string_view text) {
    if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
        text.remove_suffix(1);
    }
    if (text.empty()) throw ParseError("graph6: empty input");
    for (char c : text) {
        if (c < 63 || c > 126) {
            throw ParseError("graph6: byte " + std::to_string(static_cast<int>(c)) +
                             " outside the printable range 63..126");
        }
    }

    std::size_t cursor = 0;
    auto take = [&](std::size_t count) {
        if (cursor + count > text.size()) throw ParseError("graph6: truncated size field");
        std::uint64_t value = 0;
        for (std::size_t i = 0; i < count; ++i) {
            value = (value << 6) | static_cast<std::uint64_t>(text[cursor++] - 63);
        }
        return value;
    };

    std::uint64_t n = 0;
    if (text[0] != 126) {
        n = take(1);
    } else if (text.size() > 1 && text[1] != 126) {
        cursor = 1;
        n = take(3);
    } else {
        cursor = 2;
        n = take(6);
    }

    const std::uint64_t pairs = n * (n > 0 ? n - 1 : 0) / 2;
    const std::uint64_t expected = (pairs + 5) / 6;
    if (text.size() - cursor != expected) {
        throw ParseError("graph6: expected " + std::to_string(expected) +
                         " data bytes for n=" + std::to_string(n) + ", found " +
                         std::to_string(text.size() - cursor));
    }

    std::vector<Edge> edges;
    std::uint64_t bit_index = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++bit_index) {
            const auto byte = static_cast<unsigned>(text[cursor + bit_index / 6] - 63);
            if ((byte >> (5 - bit_index % 6)) & 1u) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edge_list(n, edges);
}

/// Reads every non-empty graph6 line; a leading header line or prefix is skipped.
inline std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> graphs;
    std::string line;
    while (std::getline(in, line)) {
        std::string_view view(line);
        if (view.starts_with(kGraph6Header)) view.remove_prefix(kGraph6Header.size());
        while (!view.empty() && (view.back() == '\r' || view.back() == ' ')) view.remove_suffix(1);
        if (view.empty()) continue;
        graphs.push_back(from_graph6(view));
    }
    return graphs;
}

// Edge-list text: "n m" then m lines "u v", 0-based.

inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline Graph read_edge_list(std::istream& in) {
    long long n = -1;
    long long m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0) {
        throw ParseError("edge list: header must be two non-negative integers \"n m\"");
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u = -1;
        long long v = -1;
        if (!(in >> u >> v)) {
            throw ParseError("edge list: expected " + std::to_string(m) + " edges, read " +
                             std::to_string(i));
        }
        if (u < 0 || v < 0) {
            throw ParseError("edge list: negative vertex id on edge " + std::to_string(i));
        }
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return Graph::from_edge_list(static_cast<std::size_t>(n), edges);
}

inline std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

}  // namespace lexsweep
