#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "certify.hpp"
#include "graph.hpp"
#include "ordering.hpp"
#include "parallel.hpp"
#include "random.hpp"
#include "search.hpp"

namespace lexsweep {

// Multi-sweep dynamics of the deterministic map f(σ) = LBFS+(G, σ).

/// [σ0, ..., σ(k-1)] with σ0 = LBFS+(pi) and σi = LBFS+(σ(i-1)).
inline std::vector<Ordering> sweep_sequence(const Graph& g, const Ordering& pi, std::size_t k) {
    require_covers(g, pi, "sweep_sequence");
    if (k == 0) throw std::invalid_argument("sweep_sequence: k must be at least 1");
    std::vector<Ordering> out;
    out.reserve(k);
    out.push_back(lbfs_plus(g, pi));
    while (out.size() < k) out.push_back(lbfs_plus(g, out.back()));
    return out;
}

struct OrbitResult {
    /// Sweeps before the orbit enters its cycle; σ(preperiod) is the first cycle element.
    std::size_t preperiod = 0;
    std::size_t period = 0;
    /// Cycle orderings in visit order; LBFS+ of the last one is the first one.
    std::vector<Ordering> cycle;
    /// σ0 .. σ(preperiod + period); the final entry repeats σ(preperiod).
    std::vector<Ordering> trace;
};

class OrbitBudgetExhausted : public std::runtime_error {
public:
    OrbitBudgetExhausted(std::size_t budget, std::vector<Ordering> trace)
        : std::runtime_error("no repeated ordering within " + std::to_string(budget) +
                             " LBFS+ sweeps"),
          trace_(std::move(trace)) {}

    const std::vector<Ordering>& trace() const noexcept { return trace_; }

private:
    std::vector<Ordering> trace_;
};

inline std::size_t default_sweep_budget(std::size_t n) { return 4 * n + 4; }

/**
 * Iterates the LBFS+ map from σ0 = LBFS+(pi) until an ordering repeats.
 * `max_sweeps` bounds the sweeps taken after σ0 (default 4n + 4).
 * Throws OrbitBudgetExhausted, carrying the trace, when no repeat shows up.
 */
inline OrbitResult detect_orbit(const Graph& g, const Ordering& pi,
                                std::optional<std::size_t> max_sweeps = std::nullopt) {
    require_covers(g, pi, "detect_orbit");
    const std::size_t budget = max_sweeps.value_or(default_sweep_budget(g.order()));
    if (budget == 0) throw std::invalid_argument("detect_orbit: max_sweeps must be at least 1");

    OrbitResult result;
    std::map<std::vector<Vertex>, std::size_t> first_seen;
    result.trace.push_back(lbfs_plus(g, pi));
    first_seen.emplace(std::vector<Vertex>(result.trace[0].begin(), result.trace[0].end()), 0);

    for (std::size_t step = 1; step <= budget; ++step) {
        Ordering next = lbfs_plus(g, result.trace.back());
        std::vector<Vertex> key(next.begin(), next.end());
        result.trace.push_back(std::move(next));
        auto [it, inserted] = first_seen.emplace(std::move(key), step);
        if (!inserted) {
            result.preperiod = it->second;
            result.period = step - it->second;
            result.cycle.assign(result.trace.begin() + static_cast<std::ptrdiff_t>(it->second),
                                result.trace.end() - 1);
            return result;
        }
    }
    throw OrbitBudgetExhausted(budget, std::move(result.trace));
}

enum class EstimateMode { Exact, Sampled };

inline std::string_view to_string(EstimateMode m) {
    return m == EstimateMode::Exact ? "exact" : "sampled";
}

struct LexCycleEstimate {
    /// Largest terminal-cycle period seen. A lower bound on LexCycle in sampled mode.
    std::size_t value = 0;
    EstimateMode mode = EstimateMode::Exact;
    std::size_t starts_examined = 0;
    /// First start (in enumeration order) that reached `value`, and its orbit.
    Ordering argmax_start;
    OrbitResult argmax_orbit;
};

inline constexpr std::size_t kExactOrderLimit = 8;

namespace detail {

inline std::size_t factorial(std::size_t n) {
    std::size_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
}

/// The rank-th permutation of 0..n-1 in lexicographic order.
inline std::vector<Vertex> unrank_permutation(std::size_t n, std::size_t rank) {
    std::vector<Vertex> pool(n);
    std::iota(pool.begin(), pool.end(), Vertex{0});
    std::vector<Vertex> perm;
    perm.reserve(n);
    for (std::size_t i = n; i > 0; --i) {
        const std::size_t block = factorial(i - 1);
        const std::size_t pick = rank / block;
        rank %= block;
        perm.push_back(pool[pick]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return perm;
}

/// Evaluates the orbits of `starts(i)` for i < count and keeps the first maximum.
template <typename StartAt>
LexCycleEstimate best_orbit(const Graph& g, std::size_t count, StartAt starts,
                            std::optional<std::size_t> max_sweeps, unsigned jobs) {
    const unsigned workers = std::max(1u, std::min<unsigned>(jobs == 0 ? 64u : jobs, 64u));
    const std::size_t chunk = (count + workers - 1) / workers;
    struct Best {
        std::size_t index = 0;
        std::optional<OrbitResult> orbit;
    };
    std::vector<Best> partial((count + chunk - 1) / std::max<std::size_t>(chunk, 1));
    parallel_for(partial.size(), jobs, [&](std::size_t part) {
        const std::size_t lo = part * chunk;
        const std::size_t hi = std::min(count, lo + chunk);
        Best& best = partial[part];
        for (std::size_t i = lo; i < hi; ++i) {
            OrbitResult orbit = detect_orbit(g, starts(i), max_sweeps);
            if (!best.orbit || orbit.period > best.orbit->period) {
                best.index = i;
                best.orbit = std::move(orbit);
            }
        }
    });

    LexCycleEstimate estimate;
    estimate.starts_examined = count;
    const Best* winner = nullptr;
    for (const Best& b : partial) {
        if (b.orbit && (!winner || b.orbit->period > winner->orbit->period)) winner = &b;
    }
    if (winner) {
        estimate.value = winner->orbit->period;
        estimate.argmax_start = starts(winner->index);
        estimate.argmax_orbit = *winner->orbit;
    }
    return estimate;
}

}  // namespace detail

/**
 * LexCycle by brute force: the orbit of every one of the n! initial orderings.
 * Each orbit gets a budget of n! sweeps, which guarantees a repeat. Throws
 * SizeLimitError above kExactOrderLimit vertices; use lexcycle_sampled there.
 */
inline LexCycleEstimate lexcycle_exact(const Graph& g, unsigned jobs = 1) {
    const std::size_t n = g.order();
    if (n > kExactOrderLimit) {
        throw SizeLimitError("lexcycle_exact enumerates n! starts and accepts n <= " +
                             std::to_string(kExactOrderLimit) + " (got n=" + std::to_string(n) +
                             "); use lexcycle_sampled");
    }
    const std::size_t count = detail::factorial(n);
    auto start_at = [n](std::size_t rank) {
        return Ordering(detail::unrank_permutation(n, rank));
    };
    LexCycleEstimate estimate =
        detail::best_orbit(g, count, start_at, std::max<std::size_t>(count, 1), jobs);
    estimate.mode = EstimateMode::Exact;
    return estimate;
}

/**
 * Lower bound on LexCycle from `trials` seeded uniform random starts followed
 * by the n starts LBFS(G, v) with min-index ties. Deterministic in `seed`.
 */
inline LexCycleEstimate lexcycle_sampled(const Graph& g, std::size_t trials, std::uint64_t seed,
                                         std::optional<std::size_t> max_sweeps = std::nullopt,
                                         unsigned jobs = 1) {
    if (trials == 0) throw std::invalid_argument("lexcycle_sampled: trials must be at least 1");
    const std::size_t n = g.order();
    std::vector<Ordering> starts;
    starts.reserve(trials + n);
    Rng rng(seed);
    for (std::size_t t = 0; t < trials; ++t) starts.emplace_back(random_permutation(rng, n));
    for (Vertex v = 0; v < n; ++v) starts.push_back(lbfs(g, v));

    LexCycleEstimate estimate = detail::best_orbit(
        g, starts.size(), [&starts](std::size_t i) { return starts[i]; }, max_sweeps, jobs);
    estimate.mode = EstimateMode::Sampled;
    return estimate;
}

struct SweepMismatch {
    /// Leftmost position where σ1 and σ3 differ.
    std::size_t position;
    /// σ1[position] and σ3[position].
    Vertex a, b;
};

struct TheoremCheck {
    Verdict verdict = Verdict::Pass;
    /// Umbrella-freeness of the start ordering; its witness explains NotApplicable.
    CheckReport hypothesis{.check = CheckKind::UmbrellaFree};
    /// σ0 .. σ3 with σ0 = LBFS+(pi); empty when NotApplicable.
    std::vector<Ordering> sweeps;
    std::optional<SweepMismatch> mismatch;
};

/**
 * Runs four LBFS+ sweeps from a cocomparability ordering pi and checks that
 * σ1 and σ3 coincide. A pi that is not umbrella-free yields NotApplicable.
 */
inline TheoremCheck theorem_check(const Graph& g, const Ordering& pi) {
    TheoremCheck result;
    result.hypothesis = is_umbrella_free(g, pi);
    if (!result.hypothesis.passed()) {
        result.verdict = Verdict::NotApplicable;
        return result;
    }
    result.sweeps = sweep_sequence(g, pi, 4);
    const Ordering& s1 = result.sweeps[1];
    const Ordering& s3 = result.sweeps[3];
    for (std::size_t k = 0; k < s1.size(); ++k) {
        if (s1[k] != s3[k]) {
            result.verdict = Verdict::Fail;
            result.mismatch = SweepMismatch{k, s1[k], s3[k]};
            break;
        }
    }
    return result;
}

}  // namespace lexsweep
