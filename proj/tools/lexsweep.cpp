#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <lexsweep/lexsweep.hpp>

namespace {

using namespace lexsweep;

// Exit codes shared by every command.
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitNotApplicable = 2;
constexpr int kExitError = 3;

struct Globals {
    std::uint64_t seed = 1;
    unsigned jobs = 1;
    std::string output;
    std::string input;
    std::string format = "jsonl";
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

int exit_code(Verdict v) {
    switch (v) {
        case Verdict::Pass: return kExitPass;
        case Verdict::Fail: return kExitFail;
        case Verdict::NotApplicable: return kExitNotApplicable;
    }
    return kExitError;
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path, std::ios::trunc);
            if (!*file_) throw UsageError("cannot open output file " + path);
        }
    }

    std::ostream& stream() { return file_ ? *file_ : std::cout; }

    void record(const json& j) { stream() << j.dump() << '\n'; }

private:
    std::unique_ptr<std::ofstream> file_;
};

std::vector<Graph> read_input(const Globals& g) {
    std::vector<Graph> graphs;
    if (g.input.empty() || g.input == "-") {
        graphs = read_graph6_stream(std::cin);
    } else {
        std::ifstream in(g.input);
        if (!in) throw UsageError("cannot open input file " + g.input);
        graphs = read_graph6_stream(in);
    }
    if (graphs.empty()) throw ParseError("no graph6 input");
    return graphs;
}

Ordering parse_ordering(const std::string& text) {
    std::vector<Vertex> seq;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        Vertex v = 0;
        const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc{} || end != token.data() + token.size()) {
            throw ParseError("malformed ordering token \"" + token + "\"");
        }
        seq.push_back(v);
    }
    return Ordering(std::move(seq));
}

void require_format(const Globals& g, std::initializer_list<std::string_view> allowed) {
    for (auto f : allowed) {
        if (g.format == f) return;
    }
    throw UsageError("unsupported --format " + g.format + " for this command");
}

json graph_fields(const Graph& g) {
    return {{"graph6", to_graph6(g)}, {"n", g.order()}, {"m", g.size()}};
}

// ---------------------------------------------------------------------------

struct BatchOptions {
    std::string cls;
    std::optional<std::size_t> n;
    std::size_t n_min = 2;
    std::size_t n_max = 12;
    std::size_t count = 1;
    std::vector<double> p;
    std::size_t budget = 10000;

    ExperimentConfig config(const Globals& g) const {
        ExperimentConfig c;
        c.cls = parse_sample_class(cls);
        c.count = count;
        c.n_min = n ? *n : n_min;
        c.n_max = n ? *n : n_max;
        c.probabilities = p.empty() ? default_probabilities(c.cls) : p;
        c.seed = g.seed;
        c.rejection_budget = budget;
        c.jobs = g.jobs;
        return c;
    }
};

void add_batch_options(CLI::App* cmd, BatchOptions& b) {
    cmd->add_option("--class", b.cls,
                    "interval, cocomp, p2p3bar-free-cocomp, diamond-free-cocomp or girth4-cocomp");
    cmd->add_option("--n", b.n, "Fixed number of vertices");
    cmd->add_option("--n-min", b.n_min, "Smallest number of vertices")->capture_default_str();
    cmd->add_option("--n-max", b.n_max, "Largest number of vertices")->capture_default_str();
    cmd->add_option("--count", b.count, "Number of instances")->capture_default_str();
    cmd->add_option("--p", b.p,
                    "Arc probabilities, one drawn per instance (default 0.5,0.8 for diamond-free "
                    "and girth4 classes, else 0.2,0.5,0.8)")
        ->delimiter(',');
    cmd->add_option("--budget", b.budget, "Rejection-sampling draws per instance")
        ->capture_default_str();
}

struct GenerateOptions {
    BatchOptions batch;
    std::string named;
    std::size_t k = 0;
};

json witness_json(const ClassSample& s) {
    if (const auto* o = std::get_if<Ordering>(&s.witness)) {
        return {{"kind", "ordering"}, {"ordering", to_json(*o)}};
    }
    if (const auto* m = std::get_if<IntervalModel>(&s.witness)) {
        return {{"kind", "intervals"}, {"intervals", to_json(*m)}};
    }
    return nullptr;
}

void write_sidecar(const std::string& base, std::size_t index, const ClassSample& s) {
    const char* ext = std::holds_alternative<IntervalModel>(s.witness) ? "intervals" : "order";
    if (std::holds_alternative<std::monostate>(s.witness)) return;
    const std::string path = base + "." + std::to_string(index) + "." + ext;
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw UsageError("cannot open sidecar " + path);
    out << witness_sidecar(s);
}

int cmd_generate(const Globals& g, const GenerateOptions& opt) {
    if (!opt.named.empty() && !opt.batch.cls.empty()) {
        throw UsageError("--class and --named are exclusive");
    }
    require_format(g, {"graph6", "jsonl", "plain"});
    Output out(g.output);

    if (!opt.named.empty()) {
        const Graph graph = named(opt.named, opt.k);
        if (g.format == "graph6") {
            out.stream() << to_graph6(graph) << '\n';
        } else if (g.format == "plain") {
            out.stream() << opt.named << ": n=" << graph.order() << " m=" << graph.size() << ' '
                         << to_graph6(graph) << '\n';
        } else {
            json rec{{"type", "graph"}, {"name", opt.named}, {"k", opt.k}};
            rec.update(graph_fields(graph));
            out.record(rec);
        }
        return kExitPass;
    }
    if (opt.batch.cls.empty()) throw UsageError("generate needs --class or --named");

    const ExperimentConfig config = opt.batch.config(g);
    config.validate();
    std::vector<GeneratedInstance> instances(config.count);
    parallel_for(config.count, config.jobs,
                 [&](std::size_t i) { instances[i] = generate_instance(config, i); });

    std::size_t exhausted = 0;
    for (const GeneratedInstance& inst : instances) {
        const std::size_t i = inst.params.index;
        json rec{{"type", "instance"},
                 {"index", i},
                 {"seed", inst.params.seed},
                 {"n", inst.params.n},
                 {"p", inst.params.p}};
        if (!inst.sample) {
            ++exhausted;
            rec["error"] = inst.error;
            if (g.format == "jsonl") {
                out.record(rec);
            } else {
                rec["type"] = "error";
                std::cerr << rec.dump() << '\n';
            }
            continue;
        }
        const Graph& graph = inst.sample->graph;
        if (g.format == "graph6") {
            out.stream() << to_graph6(graph) << '\n';
            if (!g.output.empty()) write_sidecar(g.output, i, *inst.sample);
        } else if (g.format == "plain") {
            out.stream() << "instance " << i << ": n=" << graph.order() << " m=" << graph.size()
                         << ' ' << to_graph6(graph) << '\n';
        } else {
            rec["m"] = graph.size();
            rec["graph6"] = to_graph6(graph);
            rec["witness"] = witness_json(*inst.sample);
            out.record(rec);
        }
    }
    if (g.format == "jsonl") {
        out.record({{"type", "summary"},
                    {"command", "generate"},
                    {"version", kVersion},
                    {"config", to_json(config)},
                    {"generated", config.count - exhausted},
                    {"exhausted", exhausted}});
    }
    return kExitPass;
}

// ---------------------------------------------------------------------------

struct LexCycleOptions {
    bool exact = false;
    bool sampled = false;
    std::size_t trials = 100;
    std::optional<std::size_t> max_sweeps;
    std::string start;
};

int cmd_lexcycle(const Globals& g, const LexCycleOptions& opt) {
    require_format(g, {"jsonl", "plain"});
    const std::vector<Graph> graphs = read_input(g);
    Output out(g.output);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const Graph& graph = graphs[i];
        json rec{{"type", "lexcycle"}, {"index", i}};
        rec.update(graph_fields(graph));

        if (!opt.start.empty()) {
            const Ordering pi = parse_ordering(opt.start);
            require_covers(graph, pi, "lexcycle --start");
            const OrbitResult orbit = detect_orbit(graph, pi, opt.max_sweeps);
            rec["start"] = to_json(pi);
            rec["orbit"] = to_json(orbit);
            if (g.format == "plain") {
                out.stream() << "graph " << i << ": preperiod " << orbit.preperiod << ", period "
                             << orbit.period << '\n';
            } else {
                out.record(rec);
            }
            continue;
        }

        const bool exact = opt.exact || (!opt.sampled && graph.order() <= kExactOrderLimit);
        const LexCycleEstimate est =
            exact ? lexcycle_exact(graph, g.jobs)
                  : lexcycle_sampled(graph, opt.trials, g.seed + i, opt.max_sweeps, g.jobs);
        rec.update(to_json(est));
        if (g.format == "plain") {
            out.stream() << "graph " << i << " (n=" << graph.order() << ", m=" << graph.size()
                         << "): LexCycle " << (exact ? "= " : ">= ") << est.value << " ("
                         << to_string(est.mode) << ", " << est.starts_examined << " starts)\n";
        } else {
            out.record(rec);
        }
    }
    return kExitPass;
}

// ---------------------------------------------------------------------------

struct TheoremOptions {
    BatchOptions batch;
    std::size_t extra_starts = 3;
    std::size_t max_sweeps = 0;
    std::string ordering;
};

int cmd_check_theorem(const Globals& g, TheoremOptions opt) {
    require_format(g, {"jsonl", "plain"});
    Output out(g.output);

    if (!opt.ordering.empty()) {
        const Graph graph = read_input(g).front();
        const Ordering pi = parse_ordering(opt.ordering);
        require_covers(graph, pi, "check-theorem --ordering");
        const TheoremCheck t = theorem_check(graph, pi);
        json rec{{"type", "theorem"}, {"pi", to_json(pi)}};
        rec.update(graph_fields(graph));
        rec.update(to_json(t));
        if (g.format == "plain") {
            out.stream() << to_string(t.verdict) << '\n';
        } else {
            out.record(rec);
        }
        return exit_code(t.verdict);
    }

    if (opt.batch.cls.empty()) opt.batch.cls = "p2p3bar-free-cocomp";
    ExperimentConfig config = opt.batch.config(g);
    config.extra_starts = opt.extra_starts;
    config.sweep_budget = opt.max_sweeps;
    const ExperimentReport report = run_check_theorem(config);
    if (g.format == "plain") {
        for (const json& r : report.records) {
            out.stream() << "instance " << r.at("index").get<std::size_t>() << ": "
                         << r.at("verdict").get<std::string>();
            if (r.contains("graph6")) out.stream() << ' ' << r.at("graph6").get<std::string>();
            out.stream() << '\n';
        }
        out.stream() << "instances " << config.count << ": pass " << report.instances.pass
                     << ", fail " << report.instances.fail << ", not-applicable "
                     << report.instances.not_applicable << ", exhausted "
                     << report.instances.exhausted << '\n';
    } else {
        for (const json& r : report.records) out.record(r);
        out.record(report.summary);
    }
    return report.instances.fail ? kExitFail : kExitPass;
}

// ---------------------------------------------------------------------------

struct CertifyOptions {
    std::string ordering;
    std::string tau;
    std::string check = "umbrella";
};

int cmd_certify(const Globals& g, const CertifyOptions& opt) {
    require_format(g, {"jsonl", "plain"});
    const auto kind = parse_check_kind(opt.check);
    if (!kind) throw UsageError("unknown check \"" + opt.check + "\" (umbrella, lbfs, flip, c4)");
    const Graph graph = read_input(g).front();
    const Ordering sigma = parse_ordering(opt.ordering);
    require_covers(graph, sigma, "certify --ordering");
    std::optional<Ordering> tau;
    if (*kind == CheckKind::FlipPair) {
        if (opt.tau.empty()) throw UsageError("the flip check needs --tau");
        tau = parse_ordering(opt.tau);
        require_covers(graph, *tau, "certify --tau");
    }
    const CheckReport report = run_check(*kind, graph, sigma, tau ? &*tau : nullptr);

    Output out(g.output);
    if (g.format == "plain") {
        out.stream() << to_string(report.check) << ": " << to_string(report.verdict);
        if (!std::holds_alternative<std::monostate>(report.witness)) {
            out.stream() << ' ' << to_json(report.witness).dump();
        }
        out.stream() << '\n';
    } else {
        json rec{{"type", "certify"}, {"ordering", to_json(sigma)}};
        if (tau) rec["tau"] = to_json(*tau);
        rec.update(graph_fields(graph));
        rec.update(to_json(report));
        out.record(rec);
    }
    return exit_code(report.verdict);
}

// ---------------------------------------------------------------------------

int cmd_recognize(const Globals& g) {
    require_format(g, {"jsonl", "plain"});
    const std::vector<Graph> graphs = read_input(g);
    std::vector<json> records(graphs.size());
    parallel_for(graphs.size(), g.jobs, [&](std::size_t i) {
        const Classification c = classify(graphs[i]);
        json rec{{"type", "recognize"}, {"index", i}};
        rec.update(graph_fields(graphs[i]));
        rec["cocomparability"] = c.has(ClassTag::Cocomparability);
        rec.update(to_json(c));
        records[i] = std::move(rec);
    });
    Output out(g.output);
    for (const json& rec : records) {
        if (g.format == "plain") {
            out.stream() << "graph " << rec.at("index").get<std::size_t>() << ':';
            for (const auto& t : rec.at("tags")) out.stream() << ' ' << t.get<std::string>();
            out.stream() << '\n';
        } else {
            out.record(rec);
        }
    }
    return kExitPass;
}

int report_error(std::string_view command, std::string_view kind, const std::string& message) {
    json rec{{"type", "error"}, {"command", command}, {"error", kind}, {"message", message}};
    std::cerr << rec.dump() << '\n';
    return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lexicographic graph search sweeps: generation, certification and LBFS+ dynamics"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    Globals globals;
    auto add_globals = [&globals](CLI::App* cmd) {
        cmd->add_option("--seed", globals.seed, "Master seed")->capture_default_str();
        cmd->add_option("--jobs", globals.jobs, "Worker threads (0 = all cores)")
            ->capture_default_str();
        cmd->add_option("--output", globals.output, "Output file (default standard output)");
        cmd->add_option("--input", globals.input, "graph6 input file (default standard input)");
        cmd->add_option("--format", globals.format, "jsonl, plain (generate also: graph6)");
    };

    GenerateOptions gen;
    auto* generate = app.add_subcommand("generate", "Sample graphs of a class or build a named one");
    add_batch_options(generate, gen.batch);
    generate->add_option("--named", gen.named,
                         "path, cycle, complete, k_ladder, p2p3bar, diamond or domino");
    generate->add_option("--k", gen.k, "Parameter of the named graph");
    add_globals(generate);

    LexCycleOptions lc;
    auto* lexcycle = app.add_subcommand("lexcycle", "LexCycle of each input graph");
    lexcycle->add_flag("--exact", lc.exact, "Enumerate all n! starts (n <= 8)");
    lexcycle->add_flag("--sampled", lc.sampled, "Random starts plus one LBFS per vertex");
    lexcycle->add_option("--trials", lc.trials, "Random starts in sampled mode")
        ->capture_default_str();
    lexcycle->add_option("--max-sweeps", lc.max_sweeps, "Sweep budget per orbit");
    lexcycle->add_option("--start", lc.start, "Report the orbit of this ordering only");
    add_globals(lexcycle);

    TheoremOptions th;
    th.batch.count = 100;
    auto* theorem = app.add_subcommand("check-theorem", "Check sigma1 == sigma3 on generated graphs");
    add_batch_options(theorem, th.batch);
    theorem->add_option("--extra-starts", th.extra_starts,
                        "Further cocomparability starts per instance")
        ->capture_default_str();
    theorem->add_option("--max-sweeps", th.max_sweeps, "Orbit sweep budget (0 = 4n + 4)");
    theorem->add_option("--ordering", th.ordering,
                        "Check one input graph from this start instead of generating");
    add_globals(theorem);

    CertifyOptions cert;
    auto* certify = app.add_subcommand("certify", "Check an ordering of the input graph");
    certify->add_option("--ordering", cert.ordering, "Space-separated 0-based ids")->required();
    certify->add_option("--tau", cert.tau, "Second ordering for the flip check");
    certify->add_option("--check", cert.check, "umbrella, lbfs, flip or c4")->capture_default_str();
    add_globals(certify);

    auto* recognize = app.add_subcommand("recognize", "Class tags of each input graph");
    add_globals(recognize);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return report_error("", "usage", e.what());
    }

    if (generate->parsed() && globals.format == "jsonl" && !generate->count("--format")) {
        globals.format = "graph6";
    }
    const std::string command = app.get_subcommands().front()->get_name();
    try {
        if (generate->parsed()) return cmd_generate(globals, gen);
        if (lexcycle->parsed()) return cmd_lexcycle(globals, lc);
        if (theorem->parsed()) return cmd_check_theorem(globals, th);
        if (certify->parsed()) return cmd_certify(globals, cert);
        if (recognize->parsed()) return cmd_recognize(globals);
    } catch (const ParseError& e) {
        return report_error(command, "parse", e.what());
    } catch (const SizeLimitError& e) {
        return report_error(command, "size-limit", e.what());
    } catch (const UsageError& e) {
        return report_error(command, "usage", e.what());
    } catch (const std::invalid_argument& e) {
        return report_error(command, "invalid-argument", e.what());
    } catch (const std::out_of_range& e) {
        return report_error(command, "out-of-range", e.what());
    } catch (const std::exception& e) {
        return report_error(command, "internal", e.what());
    }
    return kExitError;
}
