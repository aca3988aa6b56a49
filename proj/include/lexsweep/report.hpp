#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "certify.hpp"
#include "classes.hpp"
#include "dynamics.hpp"
#include "graph_io.hpp"
#include "parallel.hpp"
#include "random.hpp"

namespace lexsweep {

inline constexpr std::string_view kVersion = "0.1.0";

using nlohmann::json;

// ---------------------------------------------------------------------------
// JSON encodings
// ---------------------------------------------------------------------------

inline json to_json(const Ordering& sigma) {
    return json(std::vector<Vertex>(sigma.begin(), sigma.end()));
}

inline json to_json(const Witness& w) {
    if (const auto* t = std::get_if<BadTriple>(&w)) {
        return {{"kind", "triple"}, {"x", t->x}, {"y", t->y}, {"z", t->z}};
    }
    if (const auto* e = std::get_if<NonEdge>(&w)) {
        return {{"kind", "non-edge"}, {"u", e->u}, {"v", e->v}};
    }
    return nullptr;
}

inline json to_json(const CheckReport& r) {
    json out{{"check", to_string(r.check)},
             {"verdict", to_string(r.verdict)},
             {"witness", to_json(r.witness)}};
    if (r.failed_precondition) out["failed_precondition"] = to_string(*r.failed_precondition);
    return out;
}

inline json to_json(const OrbitResult& orbit, bool with_cycle = true) {
    json out{{"preperiod", orbit.preperiod}, {"period", orbit.period}};
    if (with_cycle) {
        json cycle = json::array();
        for (const auto& o : orbit.cycle) cycle.push_back(to_json(o));
        out["cycle"] = std::move(cycle);
    }
    return out;
}

inline json to_json(const LexCycleEstimate& e) {
    return {{"value", e.value},
            {"mode", to_string(e.mode)},
            {"starts_examined", e.starts_examined},
            {"argmax_start", to_json(e.argmax_start)},
            {"orbit", to_json(e.argmax_orbit)}};
}

inline json to_json(const TheoremCheck& t) {
    json out{{"verdict", to_string(t.verdict)}};
    if (t.verdict == Verdict::NotApplicable) {
        out["hypothesis"] = to_json(t.hypothesis);
        return out;
    }
    if (t.mismatch) {
        json sweeps = json::array();
        for (const auto& s : t.sweeps) sweeps.push_back(to_json(s));
        out["sweeps"] = std::move(sweeps);
        out["position"] = t.mismatch->position;
        out["a"] = t.mismatch->a;
        out["b"] = t.mismatch->b;
    }
    return out;
}

inline json to_json(const IntervalModel& model) {
    json out = json::array();
    for (const auto& iv : model) out.push_back({iv.lo, iv.hi});
    return out;
}

inline json tags_to_json(const std::set<ClassTag>& tags) {
    json out = json::array();
    for (ClassTag t : kAllClassTags) {
        if (tags.count(t)) out.push_back(to_string(t));
    }
    return out;
}

inline json to_json(const Classification& c) {
    json out{{"tags", tags_to_json(c.tags)}};
    out["girth"] = c.girth == kInfiniteGirth ? json("inf") : json(c.girth);
    if (c.cocomp_witness) out["cocomp_witness"] = to_json(*c.cocomp_witness);
    return out;
}

/// Sidecar text: an ordering as one line of ids, an interval model as "lo hi" lines.
inline std::string witness_sidecar(const ClassSample& sample) {
    if (const auto* o = std::get_if<Ordering>(&sample.witness)) return to_string(*o) + "\n";
    std::string out;
    if (const auto* m = std::get_if<IntervalModel>(&sample.witness)) {
        for (const auto& iv : *m) {
            out += std::to_string(static_cast<long long>(iv.lo)) + " " +
                   std::to_string(static_cast<long long>(iv.hi)) + "\n";
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Instance generation
// ---------------------------------------------------------------------------

enum class SampleClass { Interval, Cocomp, P2P3BarFreeCocomp, DiamondFreeCocomp, Girth4Cocomp };

inline std::string_view to_string(SampleClass c) {
    switch (c) {
        case SampleClass::Interval: return "interval";
        case SampleClass::Cocomp: return "cocomp";
        case SampleClass::P2P3BarFreeCocomp: return "p2p3bar-free-cocomp";
        case SampleClass::DiamondFreeCocomp: return "diamond-free-cocomp";
        case SampleClass::Girth4Cocomp: return "girth4-cocomp";
    }
    return "?";
}

inline SampleClass parse_sample_class(std::string_view name) {
    for (auto c : {SampleClass::Interval, SampleClass::Cocomp, SampleClass::P2P3BarFreeCocomp,
                   SampleClass::DiamondFreeCocomp, SampleClass::Girth4Cocomp}) {
        if (to_string(c) == name) return c;
    }
    throw std::invalid_argument("unknown class \"" + std::string(name) + "\"");
}

/// Draws one sample of the class. Poset-backed classes go through rejection sampling.
inline ClassSample sample_class(SampleClass cls, std::size_t n, double p, std::uint64_t seed,
                                std::size_t rejection_budget) {
    switch (cls) {
        case SampleClass::Interval: return gen_interval(n, seed);
        case SampleClass::Cocomp: return gen_poset_cocomp(n, p, seed);
        case SampleClass::P2P3BarFreeCocomp:
            return gen_rejection(n, p, seed, ClassTag::P2P3BarFree, rejection_budget);
        case SampleClass::DiamondFreeCocomp:
            return gen_rejection(n, p, seed, ClassTag::DiamondFree, rejection_budget);
        case SampleClass::Girth4Cocomp:
            return gen_rejection(n, p, seed, ClassTag::GirthAtLeast4, rejection_budget);
    }
    throw std::invalid_argument("unknown class");
}

/// Arc probabilities at which rejection sampling for the class stays cheap up to n = 12.
inline std::vector<double> default_probabilities(SampleClass c) {
    if (c == SampleClass::DiamondFreeCocomp || c == SampleClass::Girth4Cocomp) return {0.5, 0.8};
    return {0.2, 0.5, 0.8};
}

struct ExperimentConfig {
    SampleClass cls = SampleClass::P2P3BarFreeCocomp;
    std::size_t count = 1;
    std::size_t n_min = 2;
    std::size_t n_max = 12;
    std::vector<double> probabilities{0.2, 0.5, 0.8};
    std::uint64_t seed = 1;
    std::size_t rejection_budget = 10000;
    std::size_t extra_starts = 3;
    /// Orbit sweep budget per instance; 0 means the default 4n + 4.
    std::size_t sweep_budget = 0;
    unsigned jobs = 1;

    void validate() const {
        if (count < 1) throw std::invalid_argument("count must be at least 1");
        if (n_min > n_max) throw std::invalid_argument("n-min exceeds n-max");
        if (probabilities.empty()) throw std::invalid_argument("at least one probability needed");
        for (double p : probabilities) detail::require_probability(p);
    }
};

inline json to_json(const ExperimentConfig& c) {
    return {{"class", to_string(c.cls)},
            {"count", c.count},
            {"n_min", c.n_min},
            {"n_max", c.n_max},
            {"p", c.probabilities},
            {"seed", c.seed},
            {"rejection_budget", c.rejection_budget},
            {"extra_starts", c.extra_starts},
            {"sweep_budget", c.sweep_budget}};
}

/// Instance `index` uses seed + index for the generator; n, p and extra starts
/// come from a stream keyed on the same value.
struct InstanceParams {
    std::size_t index;
    std::uint64_t seed;
    std::size_t n;
    double p;
};

inline InstanceParams instance_params(const ExperimentConfig& c, std::size_t index) {
    InstanceParams params{index, c.seed + index, 0, 0.0};
    Rng rng(mix_seed(params.seed));
    params.n = c.n_min + static_cast<std::size_t>(uniform_below(rng, c.n_max - c.n_min + 1));
    params.p = c.probabilities[uniform_below(rng, c.probabilities.size())];
    return params;
}

inline Rng instance_stream(const InstanceParams& params) {
    Rng rng(mix_seed(params.seed));
    rng.discard(2);
    return rng;
}

/**
 * A further cocomparability ordering: LBFS+ sweeps from a random permutation
 * until one is umbrella-free (at most n + 1 sweeps).
 */
inline std::optional<Ordering> random_cocomp_start(const Graph& g, Rng& rng) {
    Ordering sigma(random_permutation(rng, g.order()));
    for (std::size_t sweep = 0; sweep <= g.order(); ++sweep) {
        sigma = lbfs_plus(g, sigma);
        if (is_umbrella_free(g, sigma).passed()) return sigma;
    }
    return std::nullopt;
}

struct GeneratedInstance {
    InstanceParams params;
    std::optional<ClassSample> sample;
    std::string error;
};

inline GeneratedInstance generate_instance(const ExperimentConfig& c, std::size_t index) {
    GeneratedInstance inst{instance_params(c, index), std::nullopt, {}};
    try {
        inst.sample = sample_class(c.cls, inst.params.n, inst.params.p, inst.params.seed,
                                   c.rejection_budget);
    } catch (const RejectionBudgetExhausted& e) {
        inst.error = e.what();
    }
    return inst;
}

// ---------------------------------------------------------------------------
// check-theorem
// ---------------------------------------------------------------------------

struct Tally {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t not_applicable = 0;
    std::size_t exhausted = 0;

    void add(Verdict v) {
        switch (v) {
            case Verdict::Pass: ++pass; break;
            case Verdict::Fail: ++fail; break;
            case Verdict::NotApplicable: ++not_applicable; break;
        }
    }
};

struct ExperimentReport {
    std::vector<json> records;
    json summary;
    Tally instances;
    Tally starts;
};

/// Checks σ1 = σ3 for one instance, from the generator witness plus extra starts.
inline json check_instance(const ExperimentConfig& c, std::size_t index) {
    GeneratedInstance inst = generate_instance(c, index);
    json record{{"type", "instance"},
                {"index", index},
                {"seed", inst.params.seed},
                {"n", inst.params.n},
                {"p", inst.params.p}};
    if (!inst.sample) {
        record["verdict"] = "exhausted";
        record["error"] = inst.error;
        return record;
    }
    const Graph& g = inst.sample->graph;
    record["graph6"] = to_graph6(g);
    record["tags"] = tags_to_json(classify(g).tags);

    std::vector<std::pair<std::string, std::optional<Ordering>>> starts;
    starts.emplace_back("witness", witness_ordering(*inst.sample));
    Rng rng = instance_stream(inst.params);
    for (std::size_t e = 0; e < c.extra_starts; ++e) {
        starts.emplace_back("sweep", random_cocomp_start(g, rng));
    }

    Tally tally;
    json checks = json::array();
    for (const auto& [origin, pi] : starts) {
        json check{{"origin", origin}};
        if (!pi) {
            check["verdict"] = to_string(Verdict::NotApplicable);
            check["note"] = "no umbrella-free sweep within n + 1 LBFS+ sweeps";
            tally.add(Verdict::NotApplicable);
        } else {
            const TheoremCheck t = theorem_check(g, *pi);
            check.update(to_json(t));
            check["pi"] = to_json(*pi);
            tally.add(t.verdict);
        }
        checks.push_back(std::move(check));
    }
    record["checks"] = std::move(checks);

    if (const auto& pi = starts.front().second) {
        try {
            const std::size_t budget =
                c.sweep_budget ? c.sweep_budget : default_sweep_budget(g.order());
            record["orbit"] = to_json(detect_orbit(g, *pi, budget), false);
        } catch (const OrbitBudgetExhausted& e) {
            record["orbit"] = {{"error", e.what()}};
        }
    }

    if (tally.fail) {
        record["verdict"] = to_string(Verdict::Fail);
    } else if (tally.pass) {
        record["verdict"] = to_string(Verdict::Pass);
    } else {
        record["verdict"] = to_string(Verdict::NotApplicable);
    }
    record["start_tally"] = {{"pass", tally.pass},
                             {"fail", tally.fail},
                             {"not_applicable", tally.not_applicable}};
    return record;
}

/// Records come back in instance order regardless of `jobs`.
inline ExperimentReport run_check_theorem(const ExperimentConfig& c) {
    c.validate();
    ExperimentReport report;
    report.records.resize(c.count);
    parallel_for(c.count, c.jobs,
                 [&](std::size_t i) { report.records[i] = check_instance(c, i); });

    for (const json& r : report.records) {
        const std::string verdict = r.at("verdict");
        if (verdict == "exhausted") {
            ++report.instances.exhausted;
            continue;
        }
        if (verdict == "pass") report.instances.add(Verdict::Pass);
        if (verdict == "fail") report.instances.add(Verdict::Fail);
        if (verdict == "not-applicable") report.instances.add(Verdict::NotApplicable);
        const json& st = r.at("start_tally");
        report.starts.pass += st.at("pass").get<std::size_t>();
        report.starts.fail += st.at("fail").get<std::size_t>();
        report.starts.not_applicable += st.at("not_applicable").get<std::size_t>();
    }
    report.summary = {{"type", "summary"},
                      {"command", "check-theorem"},
                      {"version", kVersion},
                      {"config", to_json(c)},
                      {"instances", c.count},
                      {"pass", report.instances.pass},
                      {"fail", report.instances.fail},
                      {"not_applicable", report.instances.not_applicable},
                      {"exhausted", report.instances.exhausted},
                      {"starts", {{"pass", report.starts.pass},
                                  {"fail", report.starts.fail},
                                  {"not_applicable", report.starts.not_applicable}}}};
    return report;
}

}  // namespace lexsweep
