#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace lexsweep {

/// Induced embedding of a pattern: image[a] is the host vertex for pattern vertex a.
struct Embedding {
    std::vector<Vertex> image;

    friend bool operator==(const Embedding&, const Embedding&) = default;
};

inline constexpr std::size_t kMaxPatternOrder = 10;

/// True when `e` is injective and maps edges to edges and non-edges to non-edges.
inline bool is_induced_embedding(const Graph& host, const Graph& pattern, const Embedding& e) {
    const std::size_t k = pattern.order();
    if (e.image.size() != k) return false;
    for (std::size_t a = 0; a < k; ++a) {
        if (e.image[a] >= host.order()) return false;
        for (std::size_t b = a + 1; b < k; ++b) {
            if (e.image[a] == e.image[b]) return false;
            const bool in_pattern =
                pattern.has_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
            if (in_pattern != host.has_edge(e.image[a], e.image[b])) return false;
        }
    }
    return true;
}

namespace detail {

class InducedMatcher {
public:
    InducedMatcher(const Graph& host, const Graph& pattern)
        : host_(host), pattern_(pattern), image_(pattern.order()),
          used_(host.order(), false), anchor_(pattern.order(), kNoAnchor) {
        // Anchor each pattern vertex on its lowest-numbered earlier neighbour so that
        // candidates come from that neighbour's host row instead of all of V.
        for (Vertex a = 0; a < pattern.order(); ++a) {
            for (Vertex b : pattern.neighbors(a)) {
                if (b < a) {
                    anchor_[a] = b;
                    break;
                }
            }
        }
    }

    std::optional<Embedding> run() {
        if (pattern_.order() > host_.order()) return std::nullopt;
        if (extend(0)) return Embedding{image_};
        return std::nullopt;
    }

private:
    static constexpr Vertex kNoAnchor = static_cast<Vertex>(-1);

    bool consistent(Vertex a, Vertex h) const {
        if (host_.degree(h) < pattern_.degree(a)) return false;
        for (Vertex b = 0; b < a; ++b) {
            if (pattern_.has_edge(a, b) != host_.has_edge(h, image_[b])) return false;
        }
        return true;
    }

    bool try_candidate(Vertex a, Vertex h) {
        if (used_[h] || !consistent(a, h)) return false;
        image_[a] = h;
        used_[h] = true;
        if (extend(a + 1)) return true;
        used_[h] = false;
        return false;
    }

    // Candidates are tried in ascending host id, so the first complete
    // assignment is the lexicographically least embedding.
    bool extend(Vertex a) {
        if (a == pattern_.order()) return true;
        if (anchor_[a] != kNoAnchor) {
            for (Vertex h : host_.neighbors(image_[anchor_[a]])) {
                if (try_candidate(a, h)) return true;
            }
        } else {
            for (Vertex h = 0; h < host_.order(); ++h) {
                if (try_candidate(a, h)) return true;
            }
        }
        return false;
    }

    const Graph& host_;
    const Graph& pattern_;
    std::vector<Vertex> image_;
    std::vector<bool> used_;
    std::vector<Vertex> anchor_;
};

}  // namespace detail

/**
 * Searches `host` for an induced copy of `pattern`.
 *
 * Returns the lexicographically least embedding (compared as the tuple
 * image[0], image[1], ...) or nullopt when the host is pattern-free.
 * Patterns are limited to kMaxPatternOrder vertices.
 */
inline std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern) {
    if (pattern.order() > kMaxPatternOrder) {
        throw SizeLimitError("pattern has " + std::to_string(pattern.order()) +
                             " vertices; find_induced accepts at most " +
                             std::to_string(kMaxPatternOrder));
    }
    return detail::InducedMatcher(host, pattern).run();
}

}  // namespace lexsweep
