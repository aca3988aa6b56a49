#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "graph.hpp"
#include "ordering.hpp"

namespace lexsweep {

/// x ≺ y ≺ z with xz ∈ E and xy ∉ E.
struct BadTriple {
    Vertex x, y, z;
    friend bool operator==(const BadTriple&, const BadTriple&) = default;
};

/// A non-adjacent pair, u before v in the first ordering of the check.
struct NonEdge {
    Vertex u, v;
    friend bool operator==(const NonEdge&, const NonEdge&) = default;
};

using Witness = std::variant<std::monostate, BadTriple, NonEdge>;

enum class Verdict { Pass, Fail, NotApplicable };

enum class CheckKind { UmbrellaFree, LbfsOrdering, FlipPair, C4Property };

struct CheckReport {
    CheckKind check;
    Verdict verdict = Verdict::Pass;
    Witness witness{};
    /// Set when verdict is NotApplicable: which precondition the witness violates.
    std::optional<CheckKind> failed_precondition{};

    bool passed() const noexcept { return verdict == Verdict::Pass; }
};

inline std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::NotApplicable: return "not-applicable";
    }
    return "?";
}

inline std::string_view to_string(CheckKind k) {
    switch (k) {
        case CheckKind::UmbrellaFree: return "umbrella";
        case CheckKind::LbfsOrdering: return "lbfs";
        case CheckKind::FlipPair: return "flip";
        case CheckKind::C4Property: return "c4";
    }
    return "?";
}

inline std::optional<CheckKind> parse_check_kind(std::string_view name) {
    for (auto k : {CheckKind::UmbrellaFree, CheckKind::LbfsOrdering, CheckKind::FlipPair,
                   CheckKind::C4Property}) {
        if (to_string(k) == name) return k;
    }
    return std::nullopt;
}

namespace detail {

/// For every vertex, the positions of its later neighbours in ascending order.
inline std::vector<std::vector<std::size_t>> later_neighbor_positions(const Graph& g,
                                                                      const Ordering& sigma) {
    std::vector<std::vector<std::size_t>> later(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        for (Vertex w : g.neighbors(v)) {
            if (sigma.before(v, w)) later[v].push_back(sigma.position(w));
        }
        std::sort(later[v].begin(), later[v].end());
    }
    return later;
}

/// table[y * n + z] = position of LMPN(y | z), or n when y has no private neighbour.
inline std::vector<std::size_t> lmpn_positions(const Graph& g, const Ordering& sigma) {
    const std::size_t n = g.order();
    std::vector<std::size_t> table(n * n, n);
    for (Vertex y = 0; y < n; ++y) {
        for (Vertex z = 0; z < n; ++z) {
            if (y == z) continue;
            std::size_t best = n;
            for (Vertex w : g.neighbors(y)) {
                if (w != z && !g.has_edge(w, z)) best = std::min(best, sigma.position(w));
            }
            table[y * n + z] = best;
        }
    }
    return table;
}

/// Calls visit(x, y, z) on each bad triple in lexicographic position order until it returns true.
template <typename Visit>
std::optional<BadTriple> first_bad_triple(const Graph& g, const Ordering& sigma, Visit visit) {
    const std::size_t n = g.order();
    const auto later = later_neighbor_positions(g, sigma);
    for (std::size_t i = 0; i < n; ++i) {
        const Vertex x = sigma[i];
        if (later[x].empty()) continue;
        const std::size_t last = later[x].back();
        for (std::size_t j = i + 1; j < last; ++j) {
            const Vertex y = sigma[j];
            if (g.has_edge(x, y)) continue;
            auto it = std::upper_bound(later[x].begin(), later[x].end(), j);
            for (; it != later[x].end(); ++it) {
                const Vertex z = sigma[*it];
                if (visit(x, y, z)) return BadTriple{x, y, z};
            }
        }
    }
    return std::nullopt;
}

}  // namespace detail

/**
 * Umbrella-free (cocomparability) check: no x ≺ y ≺ z with xz ∈ E while both
 * xy and yz are non-edges. A failure carries the violating triple that is
 * first in lexicographic order of positions.
 */
inline CheckReport is_umbrella_free(const Graph& g, const Ordering& sigma) {
    require_covers(g, sigma, "is_umbrella_free");
    CheckReport report{.check = CheckKind::UmbrellaFree};
    auto umbrella = detail::first_bad_triple(
        g, sigma, [&g](Vertex, Vertex y, Vertex z) { return !g.has_edge(y, z); });
    if (umbrella) {
        report.verdict = Verdict::Fail;
        report.witness = *umbrella;
    }
    return report;
}

/**
 * 4-point condition: every bad triple (x, y, z) has some w ≺ x with wy ∈ E and
 * wz ∉ E. This holds exactly for orderings some LBFS can produce.
 */
inline CheckReport is_lbfs_ordering(const Graph& g, const Ordering& sigma) {
    require_covers(g, sigma, "is_lbfs_ordering");
    CheckReport report{.check = CheckKind::LbfsOrdering};
    const std::size_t n = g.order();
    const auto private_pos = detail::lmpn_positions(g, sigma);
    auto bad = detail::first_bad_triple(g, sigma, [&](Vertex x, Vertex y, Vertex z) {
        return private_pos[y * n + z] >= sigma.position(x);
    });
    if (bad) {
        report.verdict = Verdict::Fail;
        report.witness = *bad;
    }
    return report;
}

/// Every non-edge must appear in opposite relative order in sigma and tau.
inline CheckReport check_flip_pair(const Graph& g, const Ordering& sigma, const Ordering& tau) {
    require_covers(g, sigma, "check_flip_pair");
    require_covers(g, tau, "check_flip_pair");
    CheckReport report{.check = CheckKind::FlipPair};
    const std::size_t n = g.order();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vertex u = sigma[i];
            const Vertex v = sigma[j];
            if (!g.has_edge(u, v) && tau.before(u, v)) {
                report.verdict = Verdict::Fail;
                report.witness = NonEdge{u, v};
                return report;
            }
        }
    }
    return report;
}

namespace detail {

inline bool has_c4_closer(const Graph& g, const Ordering& sigma, Vertex x, Vertex y, Vertex z) {
    if (!g.has_edge(y, z)) return false;
    for (Vertex w : g.neighbors(x)) {
        if (sigma.before(w, x) && g.has_edge(w, y) && !g.has_edge(w, z)) return true;
    }
    return false;
}

}  // namespace detail

/**
 * C4 property of LBFS cocomparability orderings: every bad triple (x, y, z)
 * has a w ≺ x such that w, x, z, y induce a 4-cycle (wx, xz, zy, yw ∈ E,
 * wz, xy ∉ E).
 *
 * The ordering must be umbrella-free and an LBFS ordering. When it is not, the
 * verdict is NotApplicable and the witness is the precondition's witness.
 */
inline CheckReport check_c4_property(const Graph& g, const Ordering& sigma) {
    CheckReport report{.check = CheckKind::C4Property};
    for (const CheckReport& pre : {is_umbrella_free(g, sigma), is_lbfs_ordering(g, sigma)}) {
        if (!pre.passed()) {
            report.verdict = Verdict::NotApplicable;
            report.witness = pre.witness;
            report.failed_precondition = pre.check;
            return report;
        }
    }
    auto bad = detail::first_bad_triple(g, sigma, [&](Vertex x, Vertex y, Vertex z) {
        return !detail::has_c4_closer(g, sigma, x, y, z);
    });
    if (bad) {
        report.verdict = Verdict::Fail;
        report.witness = *bad;
    }
    return report;
}

/// Runs the named check; `tau` is required only by CheckKind::FlipPair.
inline CheckReport run_check(CheckKind kind, const Graph& g, const Ordering& sigma,
                             const Ordering* tau = nullptr) {
    switch (kind) {
        case CheckKind::UmbrellaFree: return is_umbrella_free(g, sigma);
        case CheckKind::LbfsOrdering: return is_lbfs_ordering(g, sigma);
        case CheckKind::C4Property: return check_c4_property(g, sigma);
        case CheckKind::FlipPair:
            if (!tau) throw std::invalid_argument("flip check needs a second ordering");
            return check_flip_pair(g, sigma, *tau);
    }
    throw std::invalid_argument("unknown check");
}

namespace detail {

inline bool is_bad_triple(const Graph& g, const Ordering& sigma, const BadTriple& t) {
    return sigma.before(t.x, t.y) && sigma.before(t.y, t.z) && g.has_edge(t.x, t.z) &&
           !g.has_edge(t.x, t.y);
}

inline bool violates(CheckKind kind, const Graph& g, const Ordering& sigma, const Ordering* tau,
                     const Witness& witness) {
    if (kind == CheckKind::FlipPair) {
        const auto* pair = std::get_if<NonEdge>(&witness);
        return pair && tau && pair->u < g.order() && pair->v < g.order() && pair->u != pair->v &&
               !g.has_edge(pair->u, pair->v) && sigma.before(pair->u, pair->v) ==
                                                    tau->before(pair->u, pair->v);
    }
    const auto* t = std::get_if<BadTriple>(&witness);
    if (!t || t->x >= g.order() || t->y >= g.order() || t->z >= g.order()) return false;
    if (!is_bad_triple(g, sigma, *t)) return false;
    switch (kind) {
        case CheckKind::UmbrellaFree:
            return !g.has_edge(t->y, t->z);
        case CheckKind::LbfsOrdering:
            for (Vertex w : g.neighbors(t->y)) {
                if (w != t->z && sigma.before(w, t->x) && !g.has_edge(w, t->z)) return false;
            }
            return true;
        case CheckKind::C4Property:
            return !has_c4_closer(g, sigma, t->x, t->y, t->z);
        case CheckKind::FlipPair:
            break;
    }
    return false;
}

}  // namespace detail

/**
 * Re-checks a report's witness from scratch: true when the witness really
 * violates the clause the report claims (for NotApplicable, the failed
 * precondition). Pass reports replay as true when they carry no witness.
 */
inline bool replay_witness(const Graph& g, const Ordering& sigma, const CheckReport& report,
                           const Ordering* tau = nullptr) {
    switch (report.verdict) {
        case Verdict::Pass:
            return std::holds_alternative<std::monostate>(report.witness);
        case Verdict::Fail:
            return detail::violates(report.check, g, sigma, tau, report.witness);
        case Verdict::NotApplicable:
            return report.failed_precondition &&
                   detail::violates(*report.failed_precondition, g, sigma, tau, report.witness);
    }
    return false;
}

}  // namespace lexsweep
