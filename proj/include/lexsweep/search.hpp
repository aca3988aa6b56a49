#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "graph.hpp"
#include "ordering.hpp"
#include "random.hpp"

namespace lexsweep {

/**
 * How LBFS picks among vertices whose labels tie for the maximum.
 *
 *  - min_index: smallest vertex id (library default).
 *  - prior_rightmost: the vertex appearing rightmost in a prior ordering (the
 *    LBFS+ rule).
 *  - seeded: the vertex with the smallest priority in a uniformly random
 *    priority permutation drawn from the seed.
 *
 * Every rule reduces to a rank per vertex; the tied vertex with the smallest
 * rank is picked.
 */
class TieBreak {
public:
    enum class Kind { MinIndex, PriorRightmost, Seeded };

    static TieBreak min_index() { return TieBreak(MinIndex{}); }
    static TieBreak prior_rightmost(Ordering prior) {
        return TieBreak(PriorRightmost{std::move(prior)});
    }
    static TieBreak seeded(std::uint64_t seed) { return TieBreak(Seeded{seed}); }

    Kind kind() const noexcept { return static_cast<Kind>(rule_.index()); }

    const Ordering* prior() const noexcept {
        const auto* rule = std::get_if<PriorRightmost>(&rule_);
        return rule ? &rule->prior : nullptr;
    }

    std::optional<std::uint64_t> seed() const noexcept {
        const auto* rule = std::get_if<Seeded>(&rule_);
        return rule ? std::optional<std::uint64_t>(rule->seed) : std::nullopt;
    }

    /// Throws std::invalid_argument when a prior ordering does not cover n vertices.
    std::vector<Vertex> ranks(std::size_t n) const {
        std::vector<Vertex> rank(n);
        switch (kind()) {
            case Kind::MinIndex:
                for (Vertex v = 0; v < n; ++v) rank[v] = v;
                break;
            case Kind::PriorRightmost: {
                const Ordering& p = *prior();
                if (p.size() != n) {
                    throw std::invalid_argument("tie-break prior ordering has " +
                                                std::to_string(p.size()) + " vertices, graph has " +
                                                std::to_string(n));
                }
                for (Vertex v = 0; v < n; ++v) {
                    rank[v] = static_cast<Vertex>(n - 1 - p.position(v));
                }
                break;
            }
            case Kind::Seeded: {
                Rng rng(*seed());
                rank = random_permutation(rng, n);
                break;
            }
        }
        return rank;
    }

private:
    struct MinIndex {};
    struct PriorRightmost {
        Ordering prior;
    };
    struct Seeded {
        std::uint64_t seed;
    };

    template <typename Rule>
    explicit TieBreak(Rule rule) : rule_(std::move(rule)) {}

    std::variant<MinIndex, PriorRightmost, Seeded> rule_;
};

namespace detail {

inline void require_start(const Graph& g, Vertex start) {
    if (start >= g.order()) {
        throw std::out_of_range("lbfs: start vertex " + std::to_string(start) +
                                " out of range for " + std::to_string(g.order()) + " vertices");
    }
}

/// Adjacency rows re-sorted by ascending rank, built in O(n + m).
struct RankedAdjacency {
    std::vector<std::size_t> offsets;
    std::vector<Vertex> targets;

    RankedAdjacency(const Graph& g, const std::vector<Vertex>& by_rank)
        : offsets(g.order() + 1, 0), targets(2 * g.size()) {
        const std::size_t n = g.order();
        for (Vertex v = 0; v < n; ++v) offsets[v + 1] = offsets[v] + g.degree(v);
        std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
        for (Vertex v : by_rank) {
            for (Vertex w : g.neighbors(v)) targets[fill[w]++] = v;
        }
    }

    std::span<const Vertex> row(Vertex v) const {
        return {targets.data() + offsets[v], offsets[v + 1] - offsets[v]};
    }
};

/**
 * Partition refinement over the unnumbered vertices.
 *
 * Classes form a doubly linked list ordered by decreasing label; the head class
 * holds the vertices with the lexicographically largest label. Inside a class
 * vertices are linked in ascending rank, so the head of the head class is the
 * tie-break winner. Visiting a pivot moves each unnumbered neighbour into a
 * fresh class placed directly in front of its old one.
 */
class RefinementLbfs {
public:
    static constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);

    explicit RefinementLbfs(std::size_t n)
        : cls_(n, kNone), next_(n, kNone), prev_(n, kNone) {
        head_.reserve(n + 1);
    }

    Ordering run(Vertex start, const std::vector<Vertex>& by_rank,
                 const auto& neighbors_in_rank_order) {
        const std::size_t n = cls_.size();
        if (n == 0) return {};
        const std::uint32_t all = new_class(kNone);
        for (Vertex v : by_rank) append(all, v);

        std::vector<Vertex> seq;
        seq.reserve(n);
        for (std::uint32_t step = 1; step <= n; ++step) {
            const Vertex pivot = step == 1 ? start : head_[first_];
            detach(pivot);
            cls_[pivot] = kNone;
            seq.push_back(pivot);

            for (Vertex w : neighbors_in_rank_order(pivot)) {
                const std::uint32_t old_class = cls_[w];
                if (old_class == kNone) continue;
                if (stamp_[old_class] != step) {
                    stamp_[old_class] = step;
                    split_[old_class] = new_class(old_class);
                    stamp_[split_[old_class]] = step;
                }
                detach(w);
                append(split_[old_class], w);
            }
        }
        return Ordering(std::move(seq));
    }

private:
    // Allocates an empty class linked in front of `before` (or as the only class).
    std::uint32_t new_class(std::uint32_t before) {
        std::uint32_t c;
        if (!free_.empty()) {
            c = free_.back();
            free_.pop_back();
        } else {
            c = static_cast<std::uint32_t>(head_.size());
            head_.push_back(kNone);
            tail_.push_back(kNone);
            cnext_.push_back(kNone);
            cprev_.push_back(kNone);
            stamp_.push_back(0);
            split_.push_back(kNone);
        }
        head_[c] = tail_[c] = kNone;
        stamp_[c] = 0;
        if (before == kNone) {
            cprev_[c] = cnext_[c] = kNone;
            first_ = c;
        } else {
            cnext_[c] = before;
            cprev_[c] = cprev_[before];
            if (cprev_[before] != kNone) {
                cnext_[cprev_[before]] = c;
            } else {
                first_ = c;
            }
            cprev_[before] = c;
        }
        return c;
    }

    void drop_class(std::uint32_t c) {
        if (cprev_[c] != kNone) {
            cnext_[cprev_[c]] = cnext_[c];
        } else {
            first_ = cnext_[c];
        }
        if (cnext_[c] != kNone) cprev_[cnext_[c]] = cprev_[c];
        free_.push_back(c);
    }

    void append(std::uint32_t c, Vertex v) {
        cls_[v] = c;
        next_[v] = kNone;
        prev_[v] = tail_[c];
        if (tail_[c] != kNone) {
            next_[tail_[c]] = v;
        } else {
            head_[c] = v;
        }
        tail_[c] = v;
    }

    void detach(Vertex v) {
        const std::uint32_t c = cls_[v];
        if (prev_[v] != kNone) {
            next_[prev_[v]] = next_[v];
        } else {
            head_[c] = next_[v];
        }
        if (next_[v] != kNone) {
            prev_[next_[v]] = prev_[v];
        } else {
            tail_[c] = prev_[v];
        }
        if (head_[c] == kNone) drop_class(c);
    }

    std::vector<std::uint32_t> cls_, next_, prev_;
    std::vector<std::uint32_t> head_, tail_, cnext_, cprev_, stamp_, split_;
    std::vector<std::uint32_t> free_;
    std::uint32_t first_ = kNone;
};

inline std::vector<Vertex> invert(const std::vector<Vertex>& rank) {
    std::vector<Vertex> by_rank(rank.size());
    for (Vertex v = 0; v < rank.size(); ++v) by_rank[rank[v]] = v;
    return by_rank;
}

}  // namespace detail

/// Lexicographic BFS from `start` with ties resolved by `tb`; O(n + m).
inline Ordering lbfs(const Graph& g, Vertex start, const TieBreak& tb = TieBreak::min_index()) {
    detail::require_start(g, start);
    const std::vector<Vertex> by_rank = detail::invert(tb.ranks(g.order()));
    detail::RefinementLbfs engine(g.order());
    if (tb.kind() == TieBreak::Kind::MinIndex) {
        return engine.run(start, by_rank, [&g](Vertex v) { return g.neighbors(v); });
    }
    const detail::RankedAdjacency ranked(g, by_rank);
    return engine.run(start, by_rank, [&ranked](Vertex v) { return ranked.row(v); });
}

/// LBFS+: starts at the last vertex of `prior` and breaks ties toward its rightmost vertex.
inline Ordering lbfs_plus(const Graph& g, const Ordering& prior) {
    require_covers(g, prior, "lbfs_plus");
    if (g.order() == 0) return {};
    const Vertex start = prior.back();
    return lbfs(g, start, TieBreak::prior_rightmost(prior));
}

/**
 * Reference LBFS that keeps every label as an explicit sequence of visit
 * stamps and compares them lexicographically. Quadratic; used as an oracle
 * for `lbfs`.
 */
inline Ordering lbfs_naive(const Graph& g, Vertex start,
                           const TieBreak& tb = TieBreak::min_index()) {
    detail::require_start(g, start);
    const std::size_t n = g.order();
    const std::vector<Vertex> seeded_rank =
        tb.kind() == TieBreak::Kind::Seeded ? tb.ranks(n) : std::vector<Vertex>{};
    if (tb.kind() == TieBreak::Kind::PriorRightmost) tb.ranks(n);  // validates the prior

    auto preferred = [&](Vertex a, Vertex b) {
        switch (tb.kind()) {
            case TieBreak::Kind::MinIndex:
                return a < b;
            case TieBreak::Kind::PriorRightmost:
                return tb.prior()->position(a) > tb.prior()->position(b);
            case TieBreak::Kind::Seeded:
                return seeded_rank[a] < seeded_rank[b];
        }
        return false;
    };

    std::vector<std::vector<std::size_t>> label(n);
    std::vector<bool> numbered(n, false);
    label[start].push_back(n);
    std::vector<Vertex> seq;
    seq.reserve(n);

    for (std::size_t i = 1; i <= n; ++i) {
        std::optional<Vertex> pick;
        for (Vertex v = 0; v < n; ++v) {
            if (numbered[v]) continue;
            if (!pick || label[*pick] < label[v] ||
                (label[*pick] == label[v] && preferred(v, *pick))) {
                pick = v;
            }
        }
        const Vertex u = *pick;
        numbered[u] = true;
        seq.push_back(u);
        for (Vertex w : g.neighbors(u)) {
            if (!numbered[w]) label[w].push_back(n - i);
        }
    }
    return Ordering(std::move(seq));
}

/**
 * Leftmost private neighbour of y with respect to z in sigma: the first vertex
 * w in sigma with wy ∈ E, wz ∉ E and w ≠ z. No constraint on where w sits
 * relative to y.
 */
inline std::optional<Vertex> lmpn(const Graph& g, const Ordering& sigma, Vertex y, Vertex z) {
    if (y == z) throw std::invalid_argument("lmpn: y and z must differ");
    require_covers(g, sigma, "lmpn");
    std::optional<Vertex> best;
    for (Vertex w : g.neighbors(y)) {
        if (w == z || g.has_edge(w, z)) continue;
        if (!best || sigma.before(w, *best)) best = w;
    }
    return best;
}

}  // namespace lexsweep
