// zfgp: command-line front end for the solvers, generators and harness.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "zfgp/families.hpp"
#include "zfgp/graph6.hpp"
#include "zfgp/harness.hpp"
#include "zfgp/report.hpp"

using namespace zfgp;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFound = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int n = std::stoi(text);
            return {n, n};
        }
        int a = std::stoi(text.substr(0, dots));
        int b = std::stoi(text.substr(dots + 2));
        if (a > b) throw UsageError("empty range " + text);
        return {a, b};
    } catch (const std::logic_error&) {
        throw UsageError("bad range '" + text + "', expected N or A..B");
    }
}

int default_cap() {
    if (const char* env = std::getenv("ZFGP_CAP")) {
        try {
            return std::stoi(env);
        } catch (const std::logic_error&) {
            throw UsageError(std::string("ZFGP_CAP is not an integer: ") + env);
        }
    }
    return kDefaultSolverCap;
}

// Single writer: the whole report is assembled, then written once.
class Sink {
public:
    explicit Sink(const std::string& path) : path_(path) {}
    void line(const std::string& s) { buffer_ << s << '\n'; }
    void text(const std::string& s) { buffer_ << s; }
    void flush() {
        if (path_.empty()) {
            std::cout << buffer_.str() << std::flush;
            return;
        }
        std::ofstream out(path_, std::ios::app);
        if (!out) throw UsageError("cannot open output " + path_);
        out << buffer_.str();
    }

private:
    std::string path_;
    std::ostringstream buffer_;
};

std::vector<Graph> read_graphs(const std::vector<std::string>& inline_lines, const std::vector<std::string>& files) {
    std::vector<Graph> out;
    auto take = [&](const std::string& line, const std::string& where) {
        if (line.empty()) return;
        try {
            out.push_back(decode_graph6(line));
        } catch (const GraphError& e) {
            throw UsageError(where + ": " + e.what());
        }
    };
    for (const auto& l : inline_lines) take(l, "graph6 '" + l + "'");
    for (const auto& path : files) {
        std::ifstream file;
        std::istream* in = &std::cin;
        if (path != "-") {
            file.open(path);
            if (!file) throw UsageError("cannot read " + path);
            in = &file;
        }
        std::string line;
        int lineno = 0;
        while (std::getline(*in, line)) take(line, path + ":" + std::to_string(++lineno));
    }
    return out;
}

std::vector<Graph> enumerate_class(const std::string& what, int n_min, int n_max) {
    std::vector<Graph> out;
    for (int n = n_min; n <= n_max; ++n) {
        std::vector<Graph> level;
        if (what == "trees") level = enumerate_trees(n);
        else if (what == "unicyclic") level = n >= 3 ? enumerate_unicyclic(n) : std::vector<Graph>{};
        else if (what == "bicyclic") level = n >= 4 ? enumerate_connected(n, n + 1) : std::vector<Graph>{};
        else if (what == "connected") level = enumerate_connected(n);
        else if (what == "blocks") {
            for (auto& g : enumerate_connected(n))
                if (is_block_graph(g)) level.push_back(std::move(g));
        } else {
            throw UsageError("unknown enumeration '" + what + "' (trees, unicyclic, bicyclic, connected, blocks)");
        }
        for (auto& g : level) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact zero forcing, general position and path cover numbers of small graphs"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    RunConfig cfg;
    std::vector<std::string> graph6_args, input_files;
    std::string range = "1..8", format = "json";
    int cap = -1;
    bool no_timestamp_header = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--cap", cap, "Solver order cap (default: $ZFGP_CAP or 16)");
        sub->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
        sub->add_option("--output,-o", cfg.output, "Append report to this file instead of standard output");
        sub->add_flag("--no-header", no_timestamp_header, "Omit the run header line (json only)");
    };
    auto add_inputs = [&](CLI::App* sub) {
        sub->add_option("--graph6,-g", graph6_args, "Graph in graph6 form (repeatable)");
        sub->add_option("--input,-i", input_files, "File of graph6 lines, '-' for standard input");
    };

    auto* compute = app.add_subcommand("compute", "Invariant record per input graph");
    add_inputs(compute);
    add_common(compute);

    auto* classify_cmd = app.add_subcommand("classify", "Class flags per input graph");
    add_inputs(classify_cmd);
    add_common(classify_cmd);

    bool trim_random = false;
    auto* trim = app.add_subcommand("trim", "Trimmed form with deletion log per input graph");
    add_inputs(trim);
    add_common(trim);
    trim->add_flag("--random", trim_random, "Random legal deletion order (uses --seed)");
    trim->add_option("--seed", cfg.seed, "Random seed");

    std::string enumerate_what;
    auto* gen = app.add_subcommand("gen", "Write graphs as graph6 lines");
    add_common(gen);
    gen->add_option("--family", cfg.family, "Family spec, e.g. cycle:7, spider:2,2,3, H1:2,2, random_tree:10");
    gen->add_option("--enumerate", enumerate_what, "All graphs of a class: trees, unicyclic, bicyclic, connected, blocks");
    gen->add_option("--n", range, "Order range A..B for --enumerate");
    gen->add_option("--seed", cfg.seed, "Seed for random families");
    gen->add_option("--count", cfg.count, "Number of random graphs (seeds seed, seed+1, ...)");

    std::string theorem, source = "trees", quasi_mode = "no_pendants";
    auto* verify = app.add_subcommand("verify", "Check a theorem on a graph source");
    add_inputs(verify);
    add_common(verify);
    verify->add_option("--theorem", theorem, "T1..T9, T10a, T10b")->required();
    verify->add_option("--source", source,
                       "trees, unicyclic, blocks, connected (exhaustive over --n); random_blocks, "
                       "random_quasi_trees, random_forests (use --count, --seed); ignored with --graph6/--input");
    verify->add_flag("--trees", [&](std::int64_t) { source = "trees"; }, "Shorthand for --source trees");
    verify->add_flag("--unicyclic", [&](std::int64_t) { source = "unicyclic"; }, "Shorthand for --source unicyclic");
    verify->add_flag("--blocks", [&](std::int64_t) { source = "blocks"; }, "Shorthand for --source blocks");
    verify->add_option("--n", range, "Order range A..B");
    verify->add_option("--count", cfg.count, "Sample size for random sources");
    verify->add_option("--seed", cfg.seed, "Seed for random sources");
    verify->add_option("--mode", quasi_mode, "Quasi-tree condition: no_pendants or no_deg2_neighbors")
        ->check(CLI::IsMember({"no_pendants", "no_deg2_neighbors"}));
    verify->add_flag("--fast", cfg.fast_paths, "Use closed forms after their self-check passes");

    std::string hunt_class = "bicyclic", relation = "Z>gp";
    auto* hunt_cmd = app.add_subcommand("hunt", "Search a graph class for a relation between Z and gp");
    add_common(hunt_cmd);
    hunt_cmd->add_option("--class", hunt_class, "any, tree, unicyclic, bicyclic, quasi_tree, bipartite, block");
    hunt_cmd->add_option("--relation", relation, "Z>gp, gp>Z, Z>=gp, gp>=Z, Z=gp");
    hunt_cmd->add_option("--n", range, "Order range A..B");
    hunt_cmd->add_flag("--exhaustive", cfg.exhaustive, "Every graph of the class (default: random sampling)");
    hunt_cmd->add_option("--seed", cfg.seed, "Seed for random sampling");
    hunt_cmd->add_option("--budget", cfg.budget, "Random samples per order")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        cfg.cap = cap >= 0 ? cap : default_cap();
        cfg.format = format == "table" ? OutputFormat::table : OutputFormat::json;
        cfg.inputs = graph6_args;
        cfg.inputs.insert(cfg.inputs.end(), input_files.begin(), input_files.end());
        HarnessOptions options{cfg.cap, cfg.workers, cfg.fast_paths};
        const bool json = cfg.format == OutputFormat::json;
        Sink out(cfg.output);
        auto header = [&] {
            if (json && !no_timestamp_header) out.line(header_line(cfg));
        };
        int exit_code = kExitOk;

        if (compute->parsed()) {
            cfg.command = "compute";
            auto graphs = read_graphs(graph6_args, input_files);
            if (graphs.empty()) throw UsageError("compute: no input graphs (use --graph6 or --input)");
            std::vector<InvariantRecord> records(graphs.size());
            parallel_for(graphs.size(), cfg.workers,
                         [&](std::size_t i) { records[i] = invariant_record(graphs[i], options); });
            header();
            if (json) {
                for (const auto& r : records) out.line(to_json(r).dump());
            } else {
                out.text(table(records));
            }
        } else if (classify_cmd->parsed()) {
            cfg.command = "classify";
            auto graphs = read_graphs(graph6_args, input_files);
            if (graphs.empty()) throw UsageError("classify: no input graphs");
            header();
            for (const auto& g : graphs) {
                nlohmann::ordered_json j;
                j["type"] = "classification";
                j["graph6"] = encode_graph6(g);
                j["n"] = g.order();
                j["m"] = g.size();
                j["flags"] = to_json(classify(g));
                out.line(json ? j.dump() : j.dump(2));
            }
        } else if (trim->parsed()) {
            cfg.command = "trim";
            cfg.source = trim_random ? "random" : "deterministic";
            auto graphs = read_graphs(graph6_args, input_files);
            if (graphs.empty()) throw UsageError("trim: no input graphs");
            std::mt19937_64 rng(cfg.seed);
            header();
            for (const auto& g : graphs) {
                TrimResult r = trim_random ? trimmed_form(g, rng) : trimmed_form(g);
                out.line(json ? to_json(r, g).dump() : to_json(r, g).dump(2));
            }
        } else if (gen->parsed()) {
            cfg.command = "gen";
            if (cfg.family.empty() == enumerate_what.empty())
                throw UsageError("gen: give exactly one of --family or --enumerate");
            std::vector<Graph> graphs;
            if (!enumerate_what.empty()) {
                std::tie(cfg.n_min, cfg.n_max) = parse_range(range);
                cfg.source = enumerate_what;
                graphs = enumerate_class(enumerate_what, cfg.n_min, cfg.n_max);
            } else {
                FamilySpec spec;
                try {
                    spec = parse_family(cfg.family);
                } catch (const GraphError& e) {
                    throw UsageError(e.what());
                }
                const int count = std::max(1, cfg.count);
                for (int i = 0; i < count; ++i) {
                    spec.seed = cfg.seed + static_cast<std::uint64_t>(i);
                    graphs.push_back(generate(spec).graph);
                }
            }
            // gen writes bare graph6 lines so its output feeds --input directly.
            for (const auto& g : graphs) out.line(encode_graph6(g));
        } else if (verify->parsed()) {
            cfg.command = "verify";
            cfg.theorem = theorem;
            auto id = parse_theorem(theorem);
            if (!id) throw UsageError("unknown theorem '" + theorem + "'");
            GraphSource src;
            if (!graph6_args.empty() || !input_files.empty()) {
                cfg.source = "inputs";
                src = {"input graphs", read_graphs(graph6_args, input_files)};
            } else {
                cfg.source = source;
                std::tie(cfg.n_min, cfg.n_max) = parse_range(range);
                const int count = cfg.count > 0 ? cfg.count : 500;
                if (source == "trees") src = all_trees(cfg.n_min, cfg.n_max);
                else if (source == "unicyclic") src = all_unicyclic(cfg.n_min, cfg.n_max);
                else if (source == "blocks") src = all_block_graphs(cfg.n_min, cfg.n_max);
                else if (source == "connected")
                    src = {"all connected graphs", enumerate_class("connected", cfg.n_min, cfg.n_max)};
                else if (source == "random_blocks") src = random_block_graphs(count, cfg.n_max, cfg.seed);
                else if (source == "random_quasi_trees")
                    src = random_quasi_trees(count, cfg.n_max,
                                             quasi_mode == "no_pendants" ? QuasiTreeMode::no_pendants
                                                                         : QuasiTreeMode::no_deg2_neighbors,
                                             cfg.seed);
                else if (source == "random_forests") src = random_forests(count, 4, cfg.n_max, cfg.seed);
                else throw UsageError("unknown source '" + source + "'");
                if (source.rfind("random_", 0) == 0) cfg.count = count;
            }
            TheoremReport report = verify_theorem(*id, src, options);
            header();
            out.text(json ? to_json(report).dump() + "\n" : table(report));
            if (!report.pass()) exit_code = kExitFound;
        } else if (hunt_cmd->parsed()) {
            cfg.command = "hunt";
            cfg.hunt_class = hunt_class;
            cfg.relation = relation;
            HuntConfig hc;
            auto cls = parse_hunt_class(hunt_class);
            if (!cls) throw UsageError("unknown class '" + hunt_class + "'");
            auto rel = parse_relation(relation);
            if (!rel) throw UsageError("unknown relation '" + relation + "'");
            hc.cls = *cls;
            hc.relation = *rel;
            std::tie(hc.n_min, hc.n_max) = parse_range(range);
            cfg.n_min = hc.n_min;
            cfg.n_max = hc.n_max;
            hc.exhaustive = cfg.exhaustive;
            hc.seed = cfg.seed;
            if (cfg.budget > 0) hc.budget = cfg.budget;
            cfg.budget = hc.budget;
            hc.options = options;
            HuntReport report = hunt(hc);
            header();
            out.text(json ? to_json(report).dump() + "\n" : table(report));
            if (!report.hits.empty()) exit_code = kExitFound;
        }
        out.flush();
        return exit_code;
    } catch (const UsageError& e) {
        std::cerr << "zfgp: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CapExceeded& e) {
        std::cerr << "zfgp: " << e.what() << "\n";
        return kExitUsage;
    } catch (const GraphError& e) {
        std::cerr << "zfgp: " << e.what() << "\n";
        return kExitUsage;
    }
}
