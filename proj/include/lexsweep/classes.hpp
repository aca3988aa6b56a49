#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "certify.hpp"
#include "graph.hpp"
#include "ordering.hpp"
#include "pattern_search.hpp"
#include "random.hpp"
#include "search.hpp"

namespace lexsweep {

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

enum class PatternName { P2P3Bar, Diamond, C4, Domino, Triangle };

inline std::string_view to_string(PatternName p) {
    switch (p) {
        case PatternName::P2P3Bar: return "p2p3bar";
        case PatternName::Diamond: return "diamond";
        case PatternName::C4: return "c4";
        case PatternName::Domino: return "domino";
        case PatternName::Triangle: return "triangle";
    }
    return "?";
}

inline PatternName parse_pattern_name(std::string_view name) {
    for (auto p : {PatternName::P2P3Bar, PatternName::Diamond, PatternName::C4,
                   PatternName::Domino, PatternName::Triangle}) {
        if (to_string(p) == name) return p;
    }
    throw std::invalid_argument("unknown pattern \"" + std::string(name) +
                                "\" (expected p2p3bar, diamond, c4, domino or triangle)");
}

namespace catalog {

inline Graph path(std::size_t k) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < k; ++v) edges.emplace_back(v - 1, v);
    return Graph::from_edge_list(k, edges);
}

inline Graph cycle(std::size_t k) {
    if (k < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < k; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % k));
    return Graph::from_edge_list(k, edges);
}

inline Graph complete(std::size_t k) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < k; ++u) {
        for (Vertex v = u + 1; v < k; ++v) edges.emplace_back(u, v);
    }
    return Graph::from_edge_list(k, edges);
}

/**
 * k-ladder on 2k + 2 vertices: a = 0, b = 1, a_j = 2j, b_j = 2j + 1 (1 <= j <= k).
 * Edges: ab, a a_1, b b_1, every rung a_j b_j, and the rails a_j a_{j+1}, b_j b_{j+1}.
 * Dropping the last two ids leaves the (k-1)-ladder.
 */
inline Graph k_ladder(std::size_t k) {
    if (k < 1) throw std::invalid_argument("k_ladder needs k >= 1");
    auto a = [](std::size_t j) { return static_cast<Vertex>(2 * j); };
    auto b = [](std::size_t j) { return static_cast<Vertex>(2 * j + 1); };
    std::vector<Edge> edges{{a(0), b(0)}, {a(0), a(1)}, {b(0), b(1)}};
    for (std::size_t j = 1; j <= k; ++j) {
        edges.emplace_back(a(j), b(j));
        if (j < k) {
            edges.emplace_back(a(j), a(j + 1));
            edges.emplace_back(b(j), b(j + 1));
        }
    }
    return Graph::from_edge_list(2 * k + 2, edges);
}

/// Complement of P2 ∪ P3: K5 minus the non-edges 01, 23, 34.
inline Graph p2p3bar() {
    return Graph::from_edge_list(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 4}});
}

/// K4 minus the edge 23.
inline Graph diamond() {
    return Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

/// The 4-cycles 0-1-2-3 and 2-3-4-5 sharing the edge 23.
inline Graph domino() {
    return Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}, {4, 5}, {5, 2}});
}

}  // namespace catalog

inline Graph pattern_graph(PatternName p) {
    switch (p) {
        case PatternName::P2P3Bar: return catalog::p2p3bar();
        case PatternName::Diamond: return catalog::diamond();
        case PatternName::C4: return catalog::cycle(4);
        case PatternName::Domino: return catalog::domino();
        case PatternName::Triangle: return catalog::complete(3);
    }
    throw std::invalid_argument("unknown pattern");
}

/// Catalog lookup by name: path, cycle, complete, k_ladder take `k`; p2p3bar, diamond, domino ignore it.
inline Graph named(std::string_view name, std::size_t k = 0) {
    if (name == "path") return catalog::path(k);
    if (name == "cycle") return catalog::cycle(k);
    if (name == "complete") return catalog::complete(k);
    if (name == "k_ladder") return catalog::k_ladder(k);
    if (name == "p2p3bar") return catalog::p2p3bar();
    if (name == "diamond") return catalog::diamond();
    if (name == "domino") return catalog::domino();
    throw std::invalid_argument("unknown catalog graph \"" + std::string(name) + "\"");
}

// ---------------------------------------------------------------------------
// Recognition
// ---------------------------------------------------------------------------

struct PatternCheck {
    bool free = true;
    std::optional<Embedding> embedding;
};

inline PatternCheck pattern_free(const Graph& g, PatternName which) {
    PatternCheck result;
    result.embedding = find_induced(g, pattern_graph(which));
    result.free = !result.embedding.has_value();
    return result;
}

inline PatternCheck pattern_free(const Graph& g, std::string_view which) {
    return pattern_free(g, parse_pattern_name(which));
}

struct CocompRecognition {
    bool cocomparability = false;
    /// The first umbrella-free sweep, when one was found.
    std::optional<Ordering> witness;
    /// Number of sweeps computed (σ1 counts as one).
    std::size_t sweeps = 0;
};

/**
 * Repeated LBFS+ recognition: σ1 = LBFS(G, 0) with min-index ties, then n
 * more LBFS+ sweeps. The graph is reported cocomparability as soon as one
 * sweep is umbrella-free.
 */
inline CocompRecognition is_cocomparability(const Graph& g) {
    CocompRecognition result;
    if (g.order() == 0) {
        result.cocomparability = true;
        result.witness = Ordering{};
        return result;
    }
    Ordering sigma = lbfs(g, 0);
    for (std::size_t sweep = 0; sweep <= g.order(); ++sweep) {
        if (sweep > 0) sigma = lbfs_plus(g, sigma);
        ++result.sweeps;
        if (is_umbrella_free(g, sigma).passed()) {
            result.cocomparability = true;
            result.witness = std::move(sigma);
            return result;
        }
    }
    return result;
}

enum class OracleMode { Auto, OrderingScan, OrientationScan };

inline constexpr std::size_t kOrderingScanLimit = 9;
inline constexpr std::size_t kOrientationScanLimit = 20;

namespace detail {

/// Backtracking over orderings, pruning any prefix that already contains an umbrella.
class UmbrellaFreeSearch {
public:
    explicit UmbrellaFreeSearch(const Graph& g)
        : n_(g.order()), adj_(n_ * n_, 0), used_(n_, false) {
        for (const auto& [u, v] : g.edges()) adj_[u * n_ + v] = adj_[v * n_ + u] = 1;
    }

    bool run() { return extend(); }

private:
    bool edge(Vertex u, Vertex v) const { return adj_[u * n_ + v] != 0; }

    bool extend() {
        if (prefix_.size() == n_) return true;
        for (Vertex z = 0; z < n_; ++z) {
            if (used_[z] || closes_umbrella(z)) continue;
            used_[z] = true;
            prefix_.push_back(z);
            if (extend()) return true;
            prefix_.pop_back();
            used_[z] = false;
        }
        return false;
    }

    bool closes_umbrella(Vertex z) const {
        for (std::size_t i = 0; i < prefix_.size(); ++i) {
            const Vertex x = prefix_[i];
            if (!edge(x, z)) continue;
            for (std::size_t j = i + 1; j < prefix_.size(); ++j) {
                const Vertex y = prefix_[j];
                if (!edge(x, y) && !edge(y, z)) return true;
            }
        }
        return false;
    }

    std::size_t n_;
    std::vector<char> adj_;
    std::vector<bool> used_;
    std::vector<Vertex> prefix_;
};

/// Backtracking over orientations of the complement, pruning on transitivity violations.
class TransitiveOrientationSearch {
public:
    explicit TransitiveOrientationSearch(const Graph& g) {
        const Graph co = complement(g);
        pairs_ = co.edges();
        // Only vertices touched by complement edges matter.
        for (const auto& [u, v] : pairs_) {
            local_.push_back(u);
            local_.push_back(v);
        }
        std::sort(local_.begin(), local_.end());
        local_.erase(std::unique(local_.begin(), local_.end()), local_.end());
        k_ = local_.size();
        state_.assign(k_ * k_, kAbsent);
        for (auto& [u, v] : pairs_) {
            u = index_of(u);
            v = index_of(v);
            state_[u * k_ + v] = state_[v * k_ + u] = kUnset;
        }
    }

    bool run() { return assign(0); }

private:
    static constexpr char kAbsent = 0;  // an edge of G: no arc either way
    static constexpr char kUnset = 1;
    static constexpr char kForward = 2;  // arc from row to column
    static constexpr char kBackward = 3;

    Vertex index_of(Vertex v) const {
        return static_cast<Vertex>(std::lower_bound(local_.begin(), local_.end(), v) -
                                   local_.begin());
    }

    char& at(Vertex a, Vertex b) { return state_[a * k_ + b]; }
    char at(Vertex a, Vertex b) const { return state_[a * k_ + b]; }

    void set_arc(Vertex a, Vertex b) {
        at(a, b) = kForward;
        at(b, a) = kBackward;
    }

    // a -> c must hold whenever a -> b -> c; checks every implication the arc a -> b takes part in.
    bool consistent(Vertex a, Vertex b) const {
        for (Vertex c = 0; c < k_; ++c) {
            if (c == a || c == b) continue;
            if (at(b, c) == kForward && !(at(a, c) == kForward || at(a, c) == kUnset)) return false;
            if (at(c, a) == kForward && !(at(c, b) == kForward || at(c, b) == kUnset)) return false;
        }
        return true;
    }

    bool assign(std::size_t index) {
        if (index == pairs_.size()) return closed();
        const auto [u, v] = pairs_[index];
        // Reversing every arc of a transitive orientation keeps it transitive, so the
        // first pair's direction can be fixed.
        for (int dir = 0; dir < (index == 0 ? 1 : 2); ++dir) {
            const Vertex a = dir == 0 ? u : v;
            const Vertex b = dir == 0 ? v : u;
            set_arc(a, b);
            if (consistent(a, b) && assign(index + 1)) return true;
            at(a, b) = at(b, a) = kUnset;
        }
        return false;
    }

    bool closed() const {
        for (Vertex a = 0; a < k_; ++a) {
            for (Vertex b = 0; b < k_; ++b) {
                if (at(a, b) != kForward) continue;
                for (Vertex c = 0; c < k_; ++c) {
                    if (at(b, c) == kForward && at(a, c) != kForward) return false;
                }
            }
        }
        return true;
    }

    std::vector<Edge> pairs_;
    std::vector<Vertex> local_;
    std::size_t k_ = 0;
    std::vector<char> state_;
};

}  // namespace detail

/**
 * Brute-force cocomparability test. OrderingScan searches for an umbrella-free
 * ordering (n <= 9); OrientationScan searches for a transitive orientation of
 * the complement (at most 20 complement edges). Auto picks whichever guard
 * admits the graph, preferring the ordering scan.
 */
inline bool cocomp_oracle(const Graph& g, OracleMode mode = OracleMode::Auto) {
    const std::size_t n = g.order();
    const std::size_t co_edges = n * (n > 0 ? n - 1 : 0) / 2 - g.size();
    if (mode == OracleMode::Auto) {
        if (n <= kOrderingScanLimit) {
            mode = OracleMode::OrderingScan;
        } else if (co_edges <= kOrientationScanLimit) {
            mode = OracleMode::OrientationScan;
        } else {
            throw SizeLimitError("cocomp_oracle: n=" + std::to_string(n) + " and " +
                                 std::to_string(co_edges) +
                                 " complement edges exceed both brute-force guards");
        }
    }
    if (mode == OracleMode::OrderingScan) {
        if (n > kOrderingScanLimit) {
            throw SizeLimitError("cocomp_oracle: ordering scan accepts n <= " +
                                 std::to_string(kOrderingScanLimit));
        }
        return detail::UmbrellaFreeSearch(g).run();
    }
    if (co_edges > kOrientationScanLimit) {
        throw SizeLimitError("cocomp_oracle: orientation scan accepts at most " +
                             std::to_string(kOrientationScanLimit) + " complement edges");
    }
    return detail::TransitiveOrientationSearch(g).run();
}

enum class ClassTag {
    Cocomparability,
    P2P3BarFree,
    DiamondFree,
    GirthAtLeast4,
    Interval,
    P2P3BarFreeCocomp,
};

inline constexpr ClassTag kAllClassTags[] = {
    ClassTag::Cocomparability, ClassTag::P2P3BarFree, ClassTag::DiamondFree,
    ClassTag::GirthAtLeast4,   ClassTag::Interval,    ClassTag::P2P3BarFreeCocomp};

inline std::string_view to_string(ClassTag t) {
    switch (t) {
        case ClassTag::Cocomparability: return "cocomparability";
        case ClassTag::P2P3BarFree: return "p2p3bar-free";
        case ClassTag::DiamondFree: return "diamond-free";
        case ClassTag::GirthAtLeast4: return "girth>=4";
        case ClassTag::Interval: return "interval";
        case ClassTag::P2P3BarFreeCocomp: return "p2p3bar-free-cocomp";
    }
    return "?";
}

inline ClassTag parse_class_tag(std::string_view name) {
    for (ClassTag t : kAllClassTags) {
        if (to_string(t) == name) return t;
    }
    throw std::invalid_argument("unknown class tag \"" + std::string(name) + "\"");
}

/// Interval graph recognition: cocomparability and C4-free.
inline bool is_interval(const Graph& g) {
    return pattern_free(g, PatternName::C4).free && is_cocomparability(g).cocomparability;
}

/// Decides a single tag, running only the detectors it needs.
inline bool has_class(const Graph& g, ClassTag tag) {
    switch (tag) {
        case ClassTag::Cocomparability: return is_cocomparability(g).cocomparability;
        case ClassTag::P2P3BarFree: return pattern_free(g, PatternName::P2P3Bar).free;
        case ClassTag::DiamondFree: return pattern_free(g, PatternName::Diamond).free;
        case ClassTag::GirthAtLeast4: return girth(g) >= 4;
        case ClassTag::Interval: return is_interval(g);
        case ClassTag::P2P3BarFreeCocomp:
            return pattern_free(g, PatternName::P2P3Bar).free &&
                   is_cocomparability(g).cocomparability;
    }
    return false;
}

struct Classification {
    std::set<ClassTag> tags;
    std::optional<Ordering> cocomp_witness;
    std::size_t girth = kInfiniteGirth;

    bool has(ClassTag t) const { return tags.count(t) != 0; }
};

inline Classification classify(const Graph& g) {
    Classification c;
    const CocompRecognition cocomp = is_cocomparability(g);
    const bool p2p3bar_free = pattern_free(g, PatternName::P2P3Bar).free;
    c.girth = girth(g);
    c.cocomp_witness = cocomp.witness;
    if (cocomp.cocomparability) c.tags.insert(ClassTag::Cocomparability);
    if (p2p3bar_free) c.tags.insert(ClassTag::P2P3BarFree);
    if (pattern_free(g, PatternName::Diamond).free) c.tags.insert(ClassTag::DiamondFree);
    if (c.girth >= 4) c.tags.insert(ClassTag::GirthAtLeast4);
    if (cocomp.cocomparability && pattern_free(g, PatternName::C4).free) {
        c.tags.insert(ClassTag::Interval);
    }
    if (cocomp.cocomparability && p2p3bar_free) c.tags.insert(ClassTag::P2P3BarFreeCocomp);
    return c;
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

/// Strict partial order on 0..n-1 as a transitively closed set of pairs (a, b) meaning a < b.
struct PosetSpec {
    std::size_t n = 0;
    std::vector<Edge> relation;
};

struct Interval {
    double lo, hi;
    friend bool operator==(const Interval&, const Interval&) = default;
};

using IntervalModel = std::vector<Interval>;

struct ClassSample {
    Graph graph;
    /// A cocomparability ordering (linear extension of the sampled poset) or an interval model.
    std::variant<std::monostate, Ordering, IntervalModel> witness;
};

inline Graph interval_graph(const IntervalModel& model) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < model.size(); ++u) {
        for (Vertex v = u + 1; v < model.size(); ++v) {
            if (model[u].lo <= model[v].hi && model[v].lo <= model[u].hi) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edge_list(model.size(), edges);
}

/// Vertices by left endpoint, ties by id. Umbrella-free for the model's graph.
inline Ordering left_endpoint_order(const IntervalModel& model) {
    std::vector<Vertex> seq(model.size());
    std::iota(seq.begin(), seq.end(), Vertex{0});
    std::stable_sort(seq.begin(), seq.end(),
                     [&model](Vertex a, Vertex b) { return model[a].lo < model[b].lo; });
    return Ordering(std::move(seq));
}

/// The witness as an ordering: the stored one, or the left-endpoint order of an interval model.
inline std::optional<Ordering> witness_ordering(const ClassSample& sample) {
    if (const auto* o = std::get_if<Ordering>(&sample.witness)) return *o;
    if (const auto* m = std::get_if<IntervalModel>(&sample.witness)) return left_endpoint_order(*m);
    return std::nullopt;
}

namespace detail {

struct SampledPoset {
    PosetSpec poset;
    Ordering linear_extension;
};

inline SampledPoset sample_poset(std::size_t n, double p, Rng& rng) {
    std::vector<Vertex> order = random_permutation(rng, n);
    // reach[i] holds the positions j > i reachable from position i.
    const std::size_t words = (n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> reach(n, std::vector<std::uint64_t>(words, 0));
    std::vector<std::vector<std::size_t>> arcs(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (bernoulli(rng, p)) arcs[i].push_back(j);
        }
    }
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t j : arcs[i]) {
            reach[i][j / 64] |= std::uint64_t{1} << (j % 64);
            for (std::size_t w = 0; w < words; ++w) reach[i][w] |= reach[j][w];
        }
    }
    SampledPoset out;
    out.poset.n = n;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if ((reach[i][j / 64] >> (j % 64)) & 1u) out.poset.relation.emplace_back(order[i], order[j]);
        }
    }
    std::sort(out.poset.relation.begin(), out.poset.relation.end());
    out.linear_extension = Ordering(std::move(order));
    return out;
}

inline void require_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability must lie in [0, 1]");
}

}  // namespace detail

/**
 * Random poset: uniform linear order of the ids, each forward pair an arc with
 * probability p, then transitive closure.
 */
inline PosetSpec random_poset(std::size_t n, double p, std::uint64_t seed) {
    detail::require_probability(p);
    Rng rng(seed);
    return detail::sample_poset(n, p, rng).poset;
}

/// The comparability graph's complement, with the sampled linear extension as witness.
inline ClassSample gen_poset_cocomp(std::size_t n, double p, std::uint64_t seed) {
    detail::require_probability(p);
    Rng rng(seed);
    detail::SampledPoset sampled = detail::sample_poset(n, p, rng);
    std::vector<char> comparable(n * n, 0);
    for (const auto& [a, b] : sampled.poset.relation) comparable[a * n + b] = comparable[b * n + a] = 1;
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (!comparable[u * n + v]) edges.emplace_back(u, v);
        }
    }
    return {Graph::from_edge_list(n, edges), std::move(sampled.linear_extension)};
}

/**
 * Random interval graph: the 2n endpoints are a random permutation of
 * 0..2n-1, so all endpoints are distinct; vertex v takes slots 2v and 2v+1.
 */
inline ClassSample gen_interval(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    const std::vector<Vertex> slots = random_permutation(rng, 2 * n);
    IntervalModel model(n);
    for (std::size_t v = 0; v < n; ++v) {
        const double a = slots[2 * v];
        const double b = slots[2 * v + 1];
        model[v] = {std::min(a, b), std::max(a, b)};
    }
    Graph g = interval_graph(model);
    return {std::move(g), std::move(model)};
}

class RejectionBudgetExhausted : public std::runtime_error {
public:
    RejectionBudgetExhausted(ClassTag predicate, std::size_t draws)
        : std::runtime_error("no " + std::string(to_string(predicate)) + " sample in " +
                             std::to_string(draws) + " draws"),
          draws_(draws) {}

    std::size_t draws() const noexcept { return draws_; }

private:
    std::size_t draws_;
};

/// Draws gen_poset_cocomp samples (sub-seeds from `seed`) until one carries `predicate`.
inline ClassSample gen_rejection(std::size_t n, double p, std::uint64_t seed, ClassTag predicate,
                                 std::size_t budget) {
    detail::require_probability(p);
    Rng seeds(seed);
    for (std::size_t draw = 0; draw < budget; ++draw) {
        ClassSample sample = gen_poset_cocomp(n, p, seeds());
        if (has_class(sample.graph, predicate)) return sample;
    }
    throw RejectionBudgetExhausted(predicate, budget);
}

}  // namespace lexsweep
