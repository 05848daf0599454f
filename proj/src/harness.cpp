#include "zfgp/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "zfgp/canonical.hpp"
#include "zfgp/graph6.hpp"

namespace zfgp {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string hex(const std::string& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

bool fast_paths_enabled(const HarnessOptions& options) {
    if (!options.fast_paths) return false;
    static const bool ok = fast_path_self_check();
    return ok;
}

bool connected_unicyclic(const ClassFlags& f) { return f.connected && f.unicyclic; }

// Outcome of one theorem on one graph.
struct Check {
    enum Kind { pass, not_applicable, violation } kind = pass;
    std::string detail;
};

Check fail(std::string detail) { return {Check::violation, std::move(detail)}; }

std::string cmp(const char* lhs, int a, const char* op, const char* rhs, int b) {
    std::ostringstream s;
    s << lhs << "=" << a << " " << op << " " << rhs << "=" << b << " fails";
    return s.str();
}

Check check_theorem(TheoremId id, const Graph& g, int cap, bool fast) {
    const ClassFlags f = classify(g);
    const int n = g.order();
    const int ell = leaves(g).size();
    switch (id) {
        case TheoremId::T1: {
            if (!f.tree || n < 2) return {Check::not_applicable, {}};
            const int z = zero_forcing_number(g, cap).number;
            const int gp = fast ? gp_tree_fast(g) : gp_number(g, cap).number;
            if (gp < z + 1) return fail(cmp("gp", gp, ">=", "Z+1", z + 1));
            return {};
        }
        case TheoremId::T2: {
            if (!connected_unicyclic(f)) return {Check::not_applicable, {}};
            const int z = fast ? zero_forcing_unicyclic_fast(g) : zero_forcing_number(g, cap).number;
            const int gp = gp_number(g, cap).number;
            if (gp < z) return fail(cmp("gp", gp, ">=", "Z", z));
            return {};
        }
        case TheoremId::T3: {
            if (!f.connected || !f.block_graph || n < 2) return {Check::not_applicable, {}};
            const int z = zero_forcing_number(g, cap).number;
            const int gp = fast ? gp_block_fast(g) : gp_number(g, cap).number;
            if (gp < z + 1) return fail(cmp("gp", gp, ">=", "Z+1", z + 1));
            return {};
        }
        case TheoremId::T4: {
            if (!satisfies_quasi_tree_mode(g, QuasiTreeMode::no_pendants) &&
                !satisfies_quasi_tree_mode(g, QuasiTreeMode::no_deg2_neighbors))
                return {Check::not_applicable, {}};
            const int z = zero_forcing_number(g, cap).number;
            const int gp = gp_number(g, cap).number;
            if (gp < z) return fail(cmp("gp", gp, ">=", "Z", z));
            return {};
        }
        case TheoremId::T5: {
            if (!f.forest) return {Check::not_applicable, {}};
            int k = 0, isolated = 0, z_sum = 0, gp_sum = 0;
            for (VertexSet c : components(g)) {
                if (c.size() == 1) {
                    ++isolated;
                    continue;
                }
                ++k;
                Graph t = induced_subgraph(g, c).graph;
                z_sum += zero_forcing_number(t, cap).number;
                gp_sum += gp_number(t, cap).number;
            }
            if (k == 0) return {Check::not_applicable, {}};
            const int z = zero_forcing_number(g, cap).number;
            const int gp = gp_number_unrestricted(g, cap).number;
            if (gp < z + k) return fail(cmp("gp(F)", gp, ">=", "Z(F)+k", z + k));
            if (z != z_sum + isolated) return fail(cmp("Z(F)", z, "==", "sum Z(Ti)+s", z_sum + isolated));
            if (gp != gp_sum + isolated) return fail(cmp("gp(F)", gp, "==", "sum gp(Ti)+s", gp_sum + isolated));
            return {};
        }
        case TheoremId::T6: {
            if (!connected_unicyclic(f)) return {Check::not_applicable, {}};
            const int z = zero_forcing_number(g, cap).number;
            const int p = path_cover_number(g, cap).number;
            if (z != p) return fail(cmp("Z", z, "==", "P", p));
            const int via = path_cover_via_trim(g);
            if (via != p) return fail(cmp("P(trim)+n2-n1", via, "==", "P", p));
            return {};
        }
        case TheoremId::T7: {
            if (!f.tree || n < 2) return {Check::not_applicable, {}};
            const int gp = gp_number(g, cap).number;
            if (gp != ell) return fail(cmp("gp", gp, "==", "leaves", ell));
            return {};
        }
        case TheoremId::T8: {
            if (!f.tree || n < 2) return {Check::not_applicable, {}};
            const int z = zero_forcing_number(g, cap).number;
            if (z > ell - 1) return fail(cmp("Z", z, "<=", "leaves-1", ell - 1));
            return {};
        }
        case TheoremId::T9: {
            if (!f.connected || !f.block_graph || n < 1) return {Check::not_applicable, {}};
            const int gp = gp_number(g, cap).number;
            const int s = simplicial_vertices(g).size();
            if (gp != s) return fail(cmp("gp", gp, "==", "simplicial", s));
            return {};
        }
        case TheoremId::T10a:
        case TheoremId::T10b: {
            if (!connected_unicyclic(f)) return {Check::not_applicable, {}};
            if (n > cap)
                throw CapExceeded("order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
            TrimResult tr = trimmed_form(g);
            const int diff = tr.n2 - tr.n1;
            if (id == TheoremId::T10a) {
                auto ps = recognize_partial_sun(tr.trimmed.graph);
                if (!ps) return {Check::not_applicable, {}};
                const int gp = gp_number(g, cap).number;
                const int bound = std::max(2, ps->leafed.size()) + diff;
                if (gp < bound) return fail(cmp("gp", gp, ">=", "max{2,|U|}+n2-n1", bound));
                return {};
            }
            if (tr.trimmed.graph.order() != 0) return {Check::not_applicable, {}};
            if (diff > ell) return fail(cmp("n2-n1", diff, "<=", "leaves", ell));
            return {};
        }
    }
    return {Check::not_applicable, {}};
}

}  // namespace

InvariantRecord invariant_record(const Graph& g, const HarnessOptions& options, std::string id) {
    InvariantRecord r;
    r.n = g.order();
    r.m = g.size();
    r.graph6 = encode_graph6(g);
    r.leaves = leaves(g).size();
    r.flags = classify(g);
    if (id.empty()) {
        id = r.n <= kDefaultCanonicalCap ? hex(canonical_key(g)) : r.graph6;
    }
    r.id = std::move(id);

    auto t0 = Clock::now();
    try {
        r.zero_forcing = zero_forcing_number(g, options.cap);
    } catch (const CapExceeded&) {
        r.refused.push_back("zero_forcing: cap");
    }
    r.times.zero_forcing_ms = ms_since(t0);

    t0 = Clock::now();
    if (!r.flags.connected) {
        r.refused.push_back("general_position: disconnected");
    } else {
        try {
            r.general_position = gp_number(g, options.cap);
        } catch (const CapExceeded&) {
            r.refused.push_back("general_position: cap");
        }
    }
    r.times.general_position_ms = ms_since(t0);

    t0 = Clock::now();
    try {
        r.path_cover = path_cover_number(g, options.cap);
    } catch (const CapExceeded&) {
        r.refused.push_back("path_cover: cap");
    }
    r.times.path_cover_ms = ms_since(t0);

    if (r.flags.connected && r.flags.unicyclic) {
        TrimResult tr = trimmed_form(g);
        TrimSummary s;
        s.n1 = tr.n1;
        s.n2 = tr.n2;
        s.n3 = tr.n3;
        s.trimmed_order = tr.trimmed.graph.order();
        if (auto ps = recognize_partial_sun(tr.trimmed.graph)) {
            s.partial_sun = true;
            s.leafed = ps->leafed.size();
            for (auto& seg : ps->segments) s.segment_sizes.push_back(static_cast<int>(seg.size()));
        }
        s.path_cover_via_trim = path_cover_via_trim(g);
        r.trim = s;
    }
    return r;
}

std::optional<std::string> recheck_record(const Graph& g, const InvariantRecord& r) {
    if (r.n != g.order() || r.m != g.size()) return "order or size mismatch";
    if (r.graph6 != encode_graph6(g)) return "graph6 mismatch";
    if (r.leaves != leaves(g).size()) return "leaf count mismatch";
    if (r.zero_forcing) {
        const auto& z = *r.zero_forcing;
        if (z.witness.size() != z.number) return "zero forcing witness size differs from Z";
        if (!is_zero_forcing_set(g, z.witness)) return "zero forcing witness does not force";
    }
    if (r.general_position) {
        const auto& p = *r.general_position;
        if (p.witness.size() != p.number) return "gp witness size differs from gp";
        if (!is_general_position_set(g, p.witness)) return "gp witness not in general position";
    }
    if (r.path_cover) {
        const auto& p = *r.path_cover;
        if (static_cast<int>(p.paths.size()) != p.number) return "path count differs from P";
        if (!is_valid_path_cover(g, p.paths)) return "invalid path cover";
    }
    return std::nullopt;
}

std::string to_string(TheoremId id) {
    switch (id) {
        case TheoremId::T1: return "T1";
        case TheoremId::T2: return "T2";
        case TheoremId::T3: return "T3";
        case TheoremId::T4: return "T4";
        case TheoremId::T5: return "T5";
        case TheoremId::T6: return "T6";
        case TheoremId::T7: return "T7";
        case TheoremId::T8: return "T8";
        case TheoremId::T9: return "T9";
        case TheoremId::T10a: return "T10a";
        case TheoremId::T10b: return "T10b";
    }
    return "?";
}

std::optional<TheoremId> parse_theorem(std::string_view text) {
    static const TheoremId all[] = {TheoremId::T1, TheoremId::T2, TheoremId::T3,  TheoremId::T4,
                                    TheoremId::T5, TheoremId::T6, TheoremId::T7,  TheoremId::T8,
                                    TheoremId::T9, TheoremId::T10a, TheoremId::T10b};
    for (TheoremId id : all)
        if (to_string(id) == text) return id;
    return std::nullopt;
}

std::string statement(TheoremId id) {
    switch (id) {
        case TheoremId::T1: return "tree, n >= 2: gp >= Z + 1";
        case TheoremId::T2: return "connected unicyclic: gp >= Z";
        case TheoremId::T3: return "connected block graph, n >= 2: gp >= Z + 1";
        case TheoremId::T4: return "quasi-tree without pendant vertices, or with a quasi-vertex free of degree-2 neighbours: gp >= Z";
        case TheoremId::T5: return "forest with k >= 1 nontrivial components: gp >= Z + k, Z and gp additive over components";
        case TheoremId::T6: return "connected unicyclic: Z = P = P(trimmed) + n2 - n1";
        case TheoremId::T7: return "tree, n >= 2: gp = number of leaves";
        case TheoremId::T8: return "tree, n >= 2: Z <= leaves - 1";
        case TheoremId::T9: return "connected block graph: gp = number of simplicial vertices";
        case TheoremId::T10a: return "connected unicyclic, trimmed form a partial sun: gp >= max{2, |U|} + n2 - n1";
        case TheoremId::T10b: return "connected unicyclic, trimmed form empty: n2 - n1 <= leaves";
    }
    return {};
}

GraphSource all_trees(int n_min, int n_max) {
    GraphSource s{"all trees n=" + std::to_string(n_min) + ".." + std::to_string(n_max), {}};
    for (int n = n_min; n <= n_max; ++n)
        for (auto& g : enumerate_trees(n)) s.graphs.push_back(std::move(g));
    return s;
}

GraphSource all_unicyclic(int n_min, int n_max) {
    GraphSource s{"all connected unicyclic n=" + std::to_string(n_min) + ".." + std::to_string(n_max), {}};
    for (int n = std::max(3, n_min); n <= n_max; ++n)
        for (auto& g : enumerate_unicyclic(n)) s.graphs.push_back(std::move(g));
    return s;
}

GraphSource all_block_graphs(int n_min, int n_max) {
    GraphSource s{"all connected block graphs n=" + std::to_string(n_min) + ".." + std::to_string(n_max), {}};
    for (int n = n_min; n <= n_max; ++n)
        for (auto& g : enumerate_connected(n))
            if (is_block_graph(g)) s.graphs.push_back(std::move(g));
    return s;
}

GraphSource random_block_graphs(int count, int max_order, std::uint64_t seed) {
    GraphSource s{"random block graphs count=" + std::to_string(count) + " n<=" + std::to_string(max_order) +
                      " seed=" + std::to_string(seed),
                  {}};
    std::mt19937_64 rng(seed);
    while (static_cast<int>(s.graphs.size()) < count) {
        const int blocks = 1 + static_cast<int>(rng() % 7);
        const int max_block = 2 + static_cast<int>(rng() % 4);
        s.graphs.push_back(random_block_graph(blocks, max_block, max_order, rng));
    }
    return s;
}

GraphSource random_quasi_trees(int count, int max_order, QuasiTreeMode mode, std::uint64_t seed) {
    GraphSource s{"random quasi-trees (" + to_string(mode) + ") count=" + std::to_string(count) +
                      " n<=" + std::to_string(max_order) + " seed=" + std::to_string(seed),
                  {}};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i) {
        const int n = 4 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_order - 3));
        s.graphs.push_back(random_quasi_tree(n, mode, rng));
    }
    return s;
}

GraphSource random_forests(int count, int max_components, int max_order, std::uint64_t seed) {
    GraphSource s{"random forests count=" + std::to_string(count) + " k<=" + std::to_string(max_components) +
                      " n<=" + std::to_string(max_order) + " seed=" + std::to_string(seed),
                  {}};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i) {
        const int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_components));
        const int n = 2 * k + static_cast<int>(rng() % static_cast<std::uint64_t>(max_order - 2 * k + 1));
        const int isolated = static_cast<int>(rng() % static_cast<std::uint64_t>(n - 2 * k + 1));
        s.graphs.push_back(random_forest(n, k, isolated, rng));
    }
    return s;
}

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& body) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto run = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next = count;
            }
        }
    };
    std::vector<std::thread> pool;
    const int threads = std::min<std::size_t>(static_cast<std::size_t>(workers), count);
    for (int t = 0; t < threads; ++t) pool.emplace_back(run);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

TheoremReport verify_theorem(TheoremId id, const GraphSource& source, const HarnessOptions& options) {
    TheoremReport report;
    report.id = id;
    report.source = source.description;
    const bool fast = fast_paths_enabled(options);
    report.fast_paths_used = fast;

    struct Slot {
        enum { pass, not_applicable, violation, unchecked } kind = pass;
        std::string detail;
    };
    std::vector<Slot> slots(source.graphs.size());
    parallel_for(source.graphs.size(), options.workers, [&](std::size_t i) {
        try {
            Check c = check_theorem(id, source.graphs[i], options.cap, fast);
            if (c.kind == Check::not_applicable) slots[i].kind = Slot::not_applicable;
            else if (c.kind == Check::violation) slots[i] = {Slot::violation, c.detail};
        } catch (const CapExceeded&) {
            slots[i].kind = Slot::unchecked;
        }
    });

    for (std::size_t i = 0; i < slots.size(); ++i) {
        const Graph& g = source.graphs[i];
        switch (slots[i].kind) {
            case Slot::pass: ++report.graphs_checked; break;
            case Slot::not_applicable: ++report.not_applicable; break;
            case Slot::unchecked: report.unchecked.push_back(encode_graph6(g)); break;
            case Slot::violation: {
                ++report.graphs_checked;
                // Recompute from the serialised graph with exact solvers only.
                const std::string line = encode_graph6(g);
                const Graph again = decode_graph6(line);
                Check c = check_theorem(id, again, options.cap, false);
                if (c.kind != Check::violation)
                    throw std::logic_error("violation on " + line + " did not reproduce: " + slots[i].detail);
                report.violations.push_back({line, c.detail, invariant_record(again, options)});
                break;
            }
        }
    }
    return report;
}

bool fast_path_self_check() {
    for (int n = 2; n <= 8; ++n)
        for (const Graph& t : enumerate_trees(n))
            if (gp_tree_fast(t) != gp_number(t).number) return false;
    for (int n = 3; n <= 7; ++n)
        for (const Graph& g : enumerate_unicyclic(n))
            if (zero_forcing_unicyclic_fast(g) != zero_forcing_number(g).number) return false;
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_connected(n))
            if (is_block_graph(g) && gp_block_fast(g) != gp_number(g).number) return false;
    return true;
}

std::string to_string(HuntClass c) {
    switch (c) {
        case HuntClass::any: return "any";
        case HuntClass::tree: return "tree";
        case HuntClass::unicyclic: return "unicyclic";
        case HuntClass::bicyclic: return "bicyclic";
        case HuntClass::quasi_tree: return "quasi_tree";
        case HuntClass::bipartite: return "bipartite";
        case HuntClass::block: return "block";
    }
    return "?";
}

std::string to_string(Relation r) {
    switch (r) {
        case Relation::z_gt_gp: return "Z>gp";
        case Relation::gp_gt_z: return "gp>Z";
        case Relation::z_ge_gp: return "Z>=gp";
        case Relation::gp_ge_z: return "gp>=Z";
        case Relation::z_eq_gp: return "Z=gp";
    }
    return "?";
}

std::optional<HuntClass> parse_hunt_class(std::string_view text) {
    for (HuntClass c : {HuntClass::any, HuntClass::tree, HuntClass::unicyclic, HuntClass::bicyclic,
                        HuntClass::quasi_tree, HuntClass::bipartite, HuntClass::block})
        if (to_string(c) == text) return c;
    return std::nullopt;
}

std::optional<Relation> parse_relation(std::string_view text) {
    std::string s;
    for (char c : text)
        if (c != ' ') s.push_back(c);
    if (s == "Z==gp") s = "Z=gp";
    for (Relation r : {Relation::z_gt_gp, Relation::gp_gt_z, Relation::z_ge_gp, Relation::gp_ge_z, Relation::z_eq_gp})
        if (to_string(r) == s) return r;
    if (s == "gp<Z") return Relation::z_gt_gp;
    if (s == "Z<gp") return Relation::gp_gt_z;
    if (s == "gp<=Z") return Relation::z_ge_gp;
    if (s == "Z<=gp") return Relation::gp_ge_z;
    if (s == "gp=Z") return Relation::z_eq_gp;
    return std::nullopt;
}

bool in_class(const Graph& g, HuntClass c) {
    const ClassFlags f = classify(g);
    if (!f.connected) return false;
    switch (c) {
        case HuntClass::any: return true;
        case HuntClass::tree: return f.tree;
        case HuntClass::unicyclic: return f.unicyclic;
        case HuntClass::bicyclic: return f.bicyclic;
        case HuntClass::quasi_tree: return f.quasi_tree;
        case HuntClass::bipartite: return f.bipartite;
        case HuntClass::block: return f.block_graph;
    }
    return false;
}

bool holds(Relation r, int z, int gp) {
    switch (r) {
        case Relation::z_gt_gp: return z > gp;
        case Relation::gp_gt_z: return gp > z;
        case Relation::z_ge_gp: return z >= gp;
        case Relation::gp_ge_z: return gp >= z;
        case Relation::z_eq_gp: return z == gp;
    }
    return false;
}

namespace {

std::vector<Graph> exhaustive_candidates(HuntClass c, int n) {
    switch (c) {
        case HuntClass::tree: return enumerate_trees(n);
        case HuntClass::unicyclic: return n >= 3 ? enumerate_unicyclic(n) : std::vector<Graph>{};
        case HuntClass::bicyclic: return n >= 4 ? enumerate_connected(n, n + 1) : std::vector<Graph>{};
        default: return enumerate_connected(n);
    }
}

// Tree plus `extra` random non-edges, optionally restricted to pairs that
// keep the graph bipartite.
Graph random_augmented_tree(int n, int extra, bool keep_bipartite, std::mt19937_64& rng) {
    Graph t = random_tree(n, rng);
    std::vector<int> side(n, -1);
    if (keep_bipartite && n > 0) {
        std::vector<Vertex> stack{0};
        side[0] = 0;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : t.neighbors(v))
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    stack.push_back(w);
                }
        }
    }
    EdgeList pool;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!t.adjacent(u, v) && (!keep_bipartite || side[u] != side[v])) pool.emplace_back(u, v);
    std::shuffle(pool.begin(), pool.end(), rng);
    EdgeList e = t.edges();
    for (int i = 0; i < extra && i < static_cast<int>(pool.size()); ++i) e.push_back(pool[static_cast<std::size_t>(i)]);
    return Graph(n, e);
}

Graph random_candidate(HuntClass c, int n, std::mt19937_64& rng) {
    switch (c) {
        case HuntClass::tree: return random_tree(n, rng);
        case HuntClass::unicyclic: return random_unicyclic(n, rng);
        case HuntClass::bicyclic: return random_augmented_tree(n, 2, false, rng);
        case HuntClass::bipartite:
            return random_augmented_tree(n, static_cast<int>(rng() % static_cast<std::uint64_t>(n + 1)), true, rng);
        case HuntClass::quasi_tree: {
            if (n < 2) return random_tree(n, rng);
            Graph t = random_tree(n - 1, rng);
            EdgeList e = t.edges();
            const std::uint64_t mask = 1 + rng() % ((std::uint64_t{1} << (n - 1)) - 1);
            for (Vertex v = 0; v < n - 1; ++v)
                if (mask >> v & 1) e.emplace_back(n - 1, v);
            return Graph(n, e);
        }
        case HuntClass::block:
            return random_block_graph(1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n)), 4, n, rng);
        case HuntClass::any: return random_connected(n, rng);
    }
    return random_connected(n, rng);
}

}  // namespace

HuntReport hunt(const HuntConfig& config) {
    HuntReport report;
    report.config = config;
    const int cap = config.options.cap;

    std::vector<Graph> candidates;
    std::mt19937_64 rng(config.seed);
    for (int n = config.n_min; n <= config.n_max; ++n) {
        if (config.exhaustive) {
            for (auto& g : exhaustive_candidates(config.cls, n)) candidates.push_back(std::move(g));
        } else {
            for (int i = 0; i < config.budget; ++i) candidates.push_back(random_candidate(config.cls, n, rng));
        }
    }
    report.examined = static_cast<long long>(candidates.size());

    struct Slot {
        bool member = false;
        bool refused = false;
        std::optional<HuntHit> hit;
    };
    std::vector<Slot> slots(candidates.size());
    parallel_for(candidates.size(), config.options.workers, [&](std::size_t i) {
        const Graph& g = candidates[i];
        if (!in_class(g, config.cls)) return;
        slots[i].member = true;
        try {
            ZeroForcingResult z = zero_forcing_number(g, cap);
            GeneralPositionResult p = gp_number(g, cap);
            if (!holds(config.relation, z.number, p.number)) return;
            HuntHit h;
            h.n = g.order();
            h.m = g.size();
            // Report the hit in canonical labelling so equal graphs print equally.
            Graph shown = g;
            if (g.order() <= kDefaultCanonicalCap) {
                CanonicalForm cf = canonical_form(g);
                shown = relabel(g, cf.labeling);
                h.key = hex(cf.key);
                z = zero_forcing_number(shown, cap);
                p = gp_number(shown, cap);
            }
            h.graph6 = encode_graph6(shown);
            if (h.key.empty()) h.key = h.graph6;
            h.zero_forcing = z;
            h.general_position = p;
            slots[i].hit = std::move(h);
        } catch (const CapExceeded&) {
            slots[i].refused = true;
        }
    });

    std::set<std::pair<int, std::string>> seen;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (slots[i].member) ++report.in_class;
        if (slots[i].refused) report.unchecked.push_back(encode_graph6(candidates[i]));
        if (slots[i].hit && seen.emplace(slots[i].hit->n, slots[i].hit->key).second)
            report.hits.push_back(std::move(*slots[i].hit));
    }
    std::sort(report.hits.begin(), report.hits.end(),
              [](const HuntHit& a, const HuntHit& b) { return std::tie(a.n, a.key) < std::tie(b.n, b.key); });
    return report;
}

TrimOrderReport measure_trim_orders(const std::vector<Graph>& graphs, int orders, std::uint64_t seed) {
    TrimOrderReport report;
    report.graphs = static_cast<int>(graphs.size());
    report.orders = orders;
    std::mt19937_64 rng(seed);
    for (const Graph& g : graphs) {
        std::set<std::string> forms;
        std::set<std::tuple<int, int, int>> counters;
        std::set<int> differences;
        bool replay_ok = true;
        for (int k = 0; k < orders; ++k) {
            TrimResult tr = trimmed_form(g, rng);
            try {
                Subgraph again = replay_trim(g, tr.log);
                replay_ok = replay_ok && again.graph == tr.trimmed.graph && is_trim_fixpoint(again.graph);
            } catch (const GraphError&) {
                replay_ok = false;
            }
            forms.insert(canonical_key(tr.trimmed.graph, VertexSet::kCapacity));
            counters.emplace(tr.n1, tr.n2, tr.n3);
            differences.insert(tr.n2 - tr.n1);
        }
        const std::string line = encode_graph6(g);
        if (forms.size() > 1) report.form_differs.push_back(line);
        if (counters.size() > 1) report.counters_differ.push_back(line);
        if (differences.size() > 1) report.difference_differs.push_back(line);
        if (!replay_ok) report.replay_failed.push_back(line);
    }
    return report;
}

}  // namespace zfgp
