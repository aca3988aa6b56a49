#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lexsweep {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Raised when an edge list does not describe a simple graph on 0..n-1.
class GraphError : public std::invalid_argument {
public:
    GraphError(const std::string& what, Edge offending)
        : std::invalid_argument(what), offending_(offending) {}

    Edge offending() const noexcept { return offending_; }

private:
    Edge offending_;
};

/// Raised when a brute-force routine is asked to work past its size guard.
class SizeLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

/**
 * Simple undirected graph on the vertex ids 0..n-1.
 *
 * Adjacency is stored in compressed rows; every row is sorted ascending, so
 * membership is a binary search and iteration visits neighbours in id order.
 * A Graph is immutable once built. Equality is labeled equality.
 */
class Graph {
public:
    Graph() : offsets_(1, 0) {}

    explicit Graph(std::size_t n) : n_(n), offsets_(n + 1, 0) {}

    /// Builds a normalized graph. Duplicate edges (in either orientation) collapse.
    static Graph from_edge_list(std::size_t n, std::span<const Edge> edges) {
        std::vector<Edge> arcs;
        arcs.reserve(edges.size() * 2);
        for (const auto& [u, v] : edges) {
            if (u >= n || v >= n) {
                throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                     ") has an endpoint outside 0.." +
                                     (n == 0 ? std::string("-1") : std::to_string(n - 1)),
                                 {u, v});
            }
            if (u == v) {
                throw GraphError("self-loop at vertex " + std::to_string(u), {u, v});
            }
            arcs.emplace_back(u, v);
            arcs.emplace_back(v, u);
        }
        std::sort(arcs.begin(), arcs.end());
        arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

        Graph g(n);
        g.targets_.reserve(arcs.size());
        for (const auto& arc : arcs) {
            ++g.offsets_[arc.first + 1];
            g.targets_.push_back(arc.second);
        }
        for (std::size_t v = 0; v < n; ++v) {
            g.offsets_[v + 1] += g.offsets_[v];
        }
        return g;
    }

    static Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges) {
        return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return targets_.size() / 2; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }

    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

    bool has_edge(Vertex u, Vertex v) const {
        auto row = neighbors(u);
        return std::binary_search(row.begin(), row.end(), v);
    }

    /// All edges as (u, v) with u < v, ascending.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(size());
        for (Vertex u = 0; u < n_; ++u) {
            for (Vertex v : neighbors(u)) {
                if (u < v) out.emplace_back(u, v);
            }
        }
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.offsets_ == b.offsets_ && a.targets_ == b.targets_;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> targets_;
};

inline Graph complement(const Graph& g) {
    const auto n = static_cast<Vertex>(g.order());
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        auto row = g.neighbors(u);
        auto it = std::upper_bound(row.begin(), row.end(), u);
        for (Vertex v = u + 1; v < n; ++v) {
            if (it != row.end() && *it == v) {
                ++it;
                continue;
            }
            edges.emplace_back(u, v);
        }
    }
    return Graph::from_edge_list(g.order(), edges);
}

struct InducedSubgraph {
    Graph graph;
    /// host_ids[i] is the host vertex behind local vertex i, ascending.
    std::vector<Vertex> host_ids;
};

inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> members) {
    std::vector<Vertex> ids(members.begin(), members.end());
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (!ids.empty() && ids.back() >= g.order()) {
        throw std::out_of_range("vertex " + std::to_string(ids.back()) +
                                " is not in a graph of order " + std::to_string(g.order()));
    }

    std::vector<Edge> edges;
    for (Vertex i = 0; i < ids.size(); ++i) {
        for (Vertex j = i + 1; j < ids.size(); ++j) {
            if (g.has_edge(ids[i], ids[j])) edges.emplace_back(i, j);
        }
    }
    return {Graph::from_edge_list(ids.size(), edges), std::move(ids)};
}

inline constexpr std::size_t kInfiniteGirth = std::numeric_limits<std::size_t>::max();

/// Length of a shortest cycle, or kInfiniteGirth for forests.
inline std::size_t girth(const Graph& g) {
    const std::size_t n = g.order();
    constexpr std::size_t unseen = std::numeric_limits<std::size_t>::max();
    std::size_t best = kInfiniteGirth;
    std::vector<std::size_t> dist(n, unseen);
    std::vector<Vertex> parent(n);
    std::vector<Vertex> touched;
    std::deque<Vertex> queue;

    for (Vertex root = 0; root < n; ++root) {
        for (Vertex v : touched) dist[v] = unseen;
        touched.clear();
        dist[root] = 0;
        parent[root] = root;
        touched.push_back(root);
        queue.assign(1, root);
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            // Nothing shorter can close beyond this depth.
            if (best != kInfiniteGirth && 2 * dist[u] + 1 >= best) break;
            for (Vertex w : g.neighbors(u)) {
                if (dist[w] == unseen) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    touched.push_back(w);
                    queue.push_back(w);
                } else if (parent[u] != w) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    return best;
}

}  // namespace lexsweep
