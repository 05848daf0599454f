#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zfgp/families.hpp"
#include "zfgp/forcing.hpp"
#include "zfgp/genpos.hpp"
#include "zfgp/graph.hpp"
#include "zfgp/pathcover.hpp"

namespace zfgp {

struct HarnessOptions {
    int cap = kDefaultSolverCap;
    int workers = 1;
    /// Request the closed-form shortcuts (tree gp, block gp, unicyclic Z).
    /// They are only switched on after fast_path_self_check() passes.
    bool fast_paths = false;
};

struct TrimSummary {
    int n1 = 0;
    int n2 = 0;
    int n3 = 0;
    int trimmed_order = 0;
    bool partial_sun = false;
    int leafed = 0;  // |U| when the trimmed form is a partial sun
    std::vector<int> segment_sizes;
    int path_cover_via_trim = 0;
};

struct SolverTimes {
    double zero_forcing_ms = 0;
    double general_position_ms = 0;
    double path_cover_ms = 0;
};

/// Everything the harness knows about one graph. Fields a solver refused
/// (cap exceeded, or gp on a disconnected graph) are empty and named in
/// `refused`.
struct InvariantRecord {
    std::string id;
    std::string graph6;
    int n = 0;
    int m = 0;
    int leaves = 0;
    ClassFlags flags;
    std::optional<ZeroForcingResult> zero_forcing;
    std::optional<GeneralPositionResult> general_position;
    std::optional<PathCoverResult> path_cover;
    std::optional<TrimSummary> trim;
    std::vector<std::string> refused;
    SolverTimes times;
};

InvariantRecord invariant_record(const Graph& g, const HarnessOptions& options = {}, std::string id = {});

/// Recomputes the cheap parts of a record from the graph and checks every
/// witness; returns a description of the first inconsistency.
std::optional<std::string> recheck_record(const Graph& g, const InvariantRecord& r);

enum class TheoremId { T1, T2, T3, T4, T5, T6, T7, T8, T9, T10a, T10b };

std::string to_string(TheoremId id);
std::optional<TheoremId> parse_theorem(std::string_view text);
/// One-line statement of what the check asserts.
std::string statement(TheoremId id);

struct GraphSource {
    std::string description;
    std::vector<Graph> graphs;
};

// Ready-made sources.
GraphSource all_trees(int n_min, int n_max);
GraphSource all_unicyclic(int n_min, int n_max);
GraphSource all_block_graphs(int n_min, int n_max);
GraphSource random_block_graphs(int count, int max_order, std::uint64_t seed);
GraphSource random_quasi_trees(int count, int max_order, QuasiTreeMode mode, std::uint64_t seed);
GraphSource random_forests(int count, int max_components, int max_order, std::uint64_t seed);

struct Violation {
    std::string graph6;
    std::string detail;
    InvariantRecord record;
};

struct TheoremReport {
    TheoremId id = TheoremId::T1;
    std::string source;
    int graphs_checked = 0;
    int not_applicable = 0;  // precondition of the statement fails
    std::vector<std::string> unchecked;  // graph6 of cap-refused graphs
    std::vector<Violation> violations;
    bool fast_paths_used = false;

    bool pass() const { return violations.empty() && unchecked.empty(); }
};

/// Checks the statement on every graph of the source. Violations are
/// recomputed from their graph6 string before being reported.
TheoremReport verify_theorem(TheoremId id, const GraphSource& source, const HarnessOptions& options = {});

/// Exhaustive cross-check of the closed forms against the exact solvers on
/// small graphs: trees up to 8 vertices, unicyclic up to 7, block graphs up to 6.
bool fast_path_self_check();

enum class HuntClass { any, tree, unicyclic, bicyclic, quasi_tree, bipartite, block };
enum class Relation { z_gt_gp, gp_gt_z, z_ge_gp, gp_ge_z, z_eq_gp };

std::string to_string(HuntClass c);
std::string to_string(Relation r);
std::optional<HuntClass> parse_hunt_class(std::string_view text);
std::optional<Relation> parse_relation(std::string_view text);
bool in_class(const Graph& g, HuntClass c);
bool holds(Relation r, int zero_forcing, int general_position);

struct HuntConfig {
    HuntClass cls = HuntClass::any;
    Relation relation = Relation::z_gt_gp;
    int n_min = 1;
    int n_max = 8;
    bool exhaustive = true;
    std::uint64_t seed = 0;
    int budget = 1000;  // random samples per order
    HarnessOptions options;
};

struct HuntHit {
    std::string graph6;
    std::string key;  // canonical key (hex) or graph6 above the canonical cap
    int n = 0;
    int m = 0;
    ZeroForcingResult zero_forcing;
    GeneralPositionResult general_position;
};

struct HuntReport {
    HuntConfig config;
    long long examined = 0;
    long long in_class = 0;
    std::vector<HuntHit> hits;  // sorted by (n, key)
    std::vector<std::string> unchecked;
};

HuntReport hunt(const HuntConfig& config);

/// Trims each graph under `orders` random deletion orders and compares the
/// results: the trimmed form up to isomorphism, and the counters n1, n2, n3.
struct TrimOrderReport {
    int graphs = 0;
    int orders = 0;
    std::vector<std::string> form_differs;      // graph6 of graphs whose trimmed form varied
    std::vector<std::string> counters_differ;   // graph6 of graphs whose (n1, n2, n3) varied
    std::vector<std::string> difference_differs; // graph6 of graphs whose n2 - n1 varied
    std::vector<std::string> replay_failed;
};

TrimOrderReport measure_trim_orders(const std::vector<Graph>& graphs, int orders, std::uint64_t seed);

/// Runs body(i) for i in [0, count) on `workers` threads.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& body);

}  // namespace zfgp
