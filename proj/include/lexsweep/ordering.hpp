#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace lexsweep {

/**
 * A vertex ordering: a bijection between vertices and positions 0..n-1.
 *
 * Keeps both directions so that `position(v)` and `at(i)` are O(1).
 * `before(u, v)` is u ≺ v.
 */
class Ordering {
public:
    Ordering() = default;

    /// Throws std::invalid_argument unless `sequence` is a permutation of 0..n-1.
    explicit Ordering(std::vector<Vertex> sequence) : seq_(std::move(sequence)) {
        const std::size_t n = seq_.size();
        constexpr auto unset = static_cast<Vertex>(-1);
        pos_.assign(n, unset);
        for (std::size_t i = 0; i < n; ++i) {
            const Vertex v = seq_[i];
            if (v >= n) {
                throw std::invalid_argument("ordering: vertex " + std::to_string(v) +
                                            " out of range for " + std::to_string(n) +
                                            " vertices");
            }
            if (pos_[v] != unset) {
                throw std::invalid_argument("ordering: vertex " + std::to_string(v) +
                                            " appears twice");
            }
            pos_[v] = static_cast<Vertex>(i);
        }
    }

    static Ordering identity(std::size_t n) {
        std::vector<Vertex> seq(n);
        std::iota(seq.begin(), seq.end(), Vertex{0});
        return Ordering(std::move(seq));
    }

    std::size_t size() const noexcept { return seq_.size(); }
    bool empty() const noexcept { return seq_.empty(); }

    Vertex at(std::size_t index) const { return seq_[index]; }
    Vertex operator[](std::size_t index) const { return seq_[index]; }
    std::size_t position(Vertex v) const { return pos_[v]; }
    bool before(Vertex u, Vertex v) const { return pos_[u] < pos_[v]; }

    Vertex front() const { return seq_.front(); }
    Vertex back() const { return seq_.back(); }

    std::span<const Vertex> sequence() const noexcept { return seq_; }
    auto begin() const noexcept { return seq_.begin(); }
    auto end() const noexcept { return seq_.end(); }

    Ordering reversed() const {
        return Ordering(std::vector<Vertex>(seq_.rbegin(), seq_.rend()));
    }

    friend bool operator==(const Ordering& a, const Ordering& b) { return a.seq_ == b.seq_; }
    friend auto operator<=>(const Ordering& a, const Ordering& b) { return a.seq_ <=> b.seq_; }

private:
    std::vector<Vertex> seq_;
    std::vector<Vertex> pos_;
};

/// Throws std::invalid_argument when `sigma` does not cover exactly the vertices of `g`.
inline void require_covers(const Graph& g, const Ordering& sigma, const char* what) {
    if (sigma.size() != g.order()) {
        throw std::invalid_argument(std::string(what) + ": ordering has " +
                                    std::to_string(sigma.size()) + " vertices, graph has " +
                                    std::to_string(g.order()));
    }
}

inline std::string to_string(const Ordering& sigma) {
    std::string out;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (i) out.push_back(' ');
        out += std::to_string(sigma[i]);
    }
    return out;
}

}  // namespace lexsweep
