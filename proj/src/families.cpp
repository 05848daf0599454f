#include "zfgp/families.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "zfgp/canonical.hpp"
#include "zfgp/genpos.hpp"

namespace zfgp {

namespace {

constexpr int kRetryBudget = 1000;

void require(bool ok, const std::string& what) {
    if (!ok) throw GraphError("invalid family parameters: " + what);
}

int uniform(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::vector<int> split_ints(std::string_view text) {
    std::vector<int> out;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size()) throw GraphError("invalid family parameters: '" + item + "' is not an integer");
        out.push_back(value);
    }
    return out;
}

Graph path_graph(int n) {
    EdgeList e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph cycle_graph(int n) {
    EdgeList e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

Graph complete_graph(int n) {
    EdgeList e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

Graph shuffled(const Graph& g, std::mt19937_64& rng) {
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return relabel(g, perm);
}

// Random non-edge of g, or (-1, -1) when g is complete.
std::pair<Vertex, Vertex> random_non_edge(const Graph& g, std::mt19937_64& rng) {
    EdgeList missing;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) missing.emplace_back(u, v);
    if (missing.empty()) return {-1, -1};
    return missing[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(missing.size()) - 1))];
}

Graph with_edges(const Graph& g, const EdgeList& extra) {
    EdgeList e = g.edges();
    e.insert(e.end(), extra.begin(), extra.end());
    return Graph(g.order(), e);
}

// Two 4-cycles a x c z and b y c w sharing c, with u_1..u_s pendant at a
// and v_1..v_t pendant at b.
LabeledGraph make_h1(int s, int t) {
    LabeledGraph out;
    EdgeList e{{1, 2}, {2, 0}, {0, 3}, {3, 1}, {4, 5}, {5, 0}, {0, 6}, {6, 4}};
    out.labels = {{"c", 0}, {"a", 1}, {"x", 2}, {"z", 3}, {"b", 4}, {"y", 5}, {"w", 6}};
    int next = 7;
    for (int i = 1; i <= s; ++i, ++next) {
        e.emplace_back(1, next);
        out.labels["u" + std::to_string(i)] = next;
    }
    for (int j = 1; j <= t; ++j, ++next) {
        e.emplace_back(4, next);
        out.labels["v" + std::to_string(j)] = next;
    }
    out.graph = Graph(next, e);
    return out;
}

// Two triangles v1 v2 v3 and v3 v4 v5 sharing v3.
LabeledGraph make_h2() {
    LabeledGraph out;
    out.graph = Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    for (int i = 0; i < 5; ++i) out.labels["v" + std::to_string(i + 1)] = i;
    return out;
}

// Path v1..v8 with v adjacent to all of it.
LabeledGraph make_h3() {
    LabeledGraph out;
    EdgeList e;
    for (int i = 0; i < 7; ++i) e.emplace_back(i, i + 1);
    for (int i = 0; i < 8; ++i) e.emplace_back(i, 8);
    out.graph = Graph(9, e);
    for (int i = 0; i < 8; ++i) out.labels["v" + std::to_string(i + 1)] = i;
    out.labels["v"] = 8;
    return out;
}

LabeledGraph make_h4(int s, int t);

}  // namespace

std::string to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::path: return "path";
        case FamilyKind::cycle: return "cycle";
        case FamilyKind::star: return "star";
        case FamilyKind::complete: return "complete";
        case FamilyKind::spider: return "spider";
        case FamilyKind::partial_sun: return "partial_sun";
        case FamilyKind::random_tree: return "random_tree";
        case FamilyKind::random_unicyclic: return "random_unicyclic";
        case FamilyKind::random_connected: return "random_connected";
        case FamilyKind::random_forest: return "random_forest";
        case FamilyKind::random_block: return "random_block";
        case FamilyKind::random_quasi_tree: return "random_quasi_tree";
        case FamilyKind::H1: return "H1";
        case FamilyKind::H2: return "H2";
        case FamilyKind::H3: return "H3";
        case FamilyKind::H4: return "H4";
    }
    return "unknown";
}

std::string to_string(QuasiTreeMode mode) {
    return mode == QuasiTreeMode::no_pendants ? "no_pendants" : "no_deg2_neighbors";
}

std::string to_string(FigureFamily f) {
    switch (f) {
        case FigureFamily::H1: return "H1";
        case FigureFamily::H2: return "H2";
        case FigureFamily::H3: return "H3";
        case FigureFamily::H4: return "H4";
    }
    return "unknown";
}

std::string describe(const FamilySpec& spec) {
    std::string out = to_string(spec.kind);
    auto join = [](const std::vector<int>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s;
    };
    switch (spec.kind) {
        case FamilyKind::spider: return out + ":" + join(spec.sizes);
        case FamilyKind::partial_sun: return out + ":" + std::to_string(spec.n) + ":" + join(spec.sizes);
        case FamilyKind::random_forest:
        case FamilyKind::random_block: return out + ":" + std::to_string(spec.n) + ":" + join(spec.sizes);
        case FamilyKind::random_quasi_tree: return out + ":" + std::to_string(spec.n) + ":" + to_string(spec.mode);
        case FamilyKind::H1:
        case FamilyKind::H4: return out + ":" + std::to_string(spec.s) + "," + std::to_string(spec.t);
        case FamilyKind::H2:
        case FamilyKind::H3: return out;
        default: return out + ":" + std::to_string(spec.n);
    }
}

FamilySpec parse_family(std::string_view text) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ':')) parts.push_back(item);
    require(!parts.empty(), "empty family");
    static const std::map<std::string, FamilyKind> kinds = {
        {"path", FamilyKind::path},
        {"cycle", FamilyKind::cycle},
        {"star", FamilyKind::star},
        {"complete", FamilyKind::complete},
        {"spider", FamilyKind::spider},
        {"partial_sun", FamilyKind::partial_sun},
        {"random_tree", FamilyKind::random_tree},
        {"random_unicyclic", FamilyKind::random_unicyclic},
        {"random_connected", FamilyKind::random_connected},
        {"random_forest", FamilyKind::random_forest},
        {"random_block", FamilyKind::random_block},
        {"random_quasi_tree", FamilyKind::random_quasi_tree},
        {"H1", FamilyKind::H1},
        {"H2", FamilyKind::H2},
        {"H3", FamilyKind::H3},
        {"H4", FamilyKind::H4},
    };
    auto it = kinds.find(parts[0]);
    require(it != kinds.end(), "unknown family '" + parts[0] + "'");
    FamilySpec spec;
    spec.kind = it->second;
    auto arg = [&](std::size_t i) -> const std::string& {
        require(parts.size() > i, "family '" + parts[0] + "' needs more arguments");
        return parts[i];
    };
    auto single = [&](std::size_t i) {
        auto v = split_ints(arg(i));
        require(v.size() == 1, "expected one integer in '" + parts[i] + "'");
        return v[0];
    };
    switch (spec.kind) {
        case FamilyKind::spider: spec.sizes = split_ints(arg(1)); break;
        case FamilyKind::partial_sun:
            spec.n = single(1);
            spec.sizes = parts.size() > 2 ? split_ints(parts[2]) : std::vector<int>{};
            break;
        case FamilyKind::random_forest:
        case FamilyKind::random_block:
            spec.n = single(1);
            spec.sizes = split_ints(arg(2));
            break;
        case FamilyKind::random_quasi_tree:
            spec.n = single(1);
            if (arg(2) == "no_pendants") spec.mode = QuasiTreeMode::no_pendants;
            else if (arg(2) == "no_deg2_neighbors") spec.mode = QuasiTreeMode::no_deg2_neighbors;
            else require(false, "unknown quasi-tree mode '" + parts[2] + "'");
            break;
        case FamilyKind::H1:
        case FamilyKind::H4: {
            auto v = split_ints(arg(1));
            require(v.size() == 2, "H1/H4 take s,t");
            spec.s = v[0];
            spec.t = v[1];
            break;
        }
        case FamilyKind::H2:
        case FamilyKind::H3: break;
        default: spec.n = single(1); break;
    }
    return spec;
}

Graph random_tree(int n, std::mt19937_64& rng) {
    require(n >= 1, "tree order must be at least 1");
    if (n <= 2) return path_graph(n);
    // Decode a uniformly random Pruefer sequence.
    std::vector<int> code(n - 2);
    for (int& c : code) c = uniform(rng, 0, n - 1);
    std::vector<int> degree(n, 1);
    for (int c : code) ++degree[c];
    EdgeList e;
    for (int c : code) {
        int leaf = 0;
        while (degree[leaf] != 1) ++leaf;
        e.emplace_back(leaf, c);
        --degree[leaf];
        --degree[c];
    }
    int a = -1;
    for (int v = 0; v < n; ++v) {
        if (degree[v] == 1) {
            if (a < 0) a = v;
            else e.emplace_back(a, v);
        }
    }
    return Graph(n, e);
}

Graph random_unicyclic(int n, std::mt19937_64& rng) {
    require(n >= 3, "unicyclic order must be at least 3");
    Graph t = random_tree(n, rng);
    return with_edges(t, {random_non_edge(t, rng)});
}

Graph random_connected(int n, std::mt19937_64& rng) {
    require(n >= 1, "order must be at least 1");
    Graph g = random_tree(n, rng);
    const int max_extra = n * (n - 1) / 2 - (n - 1);
    const int extra = uniform(rng, 0, std::min(max_extra, n));
    for (int i = 0; i < extra; ++i) g = with_edges(g, {random_non_edge(g, rng)});
    return g;
}

Graph random_forest(int n, int nontrivial_components, int isolated, std::mt19937_64& rng) {
    require(nontrivial_components >= 0 && isolated >= 0, "negative component counts");
    require(n >= 2 * nontrivial_components + isolated, "order too small for the requested components");
    // Each non-trivial component gets 2 vertices, the rest is spread at random.
    std::vector<int> sizes(nontrivial_components, 2);
    const int spare = n - 2 * nontrivial_components - isolated;
    require(spare == 0 || nontrivial_components > 0, "spare vertices need a non-trivial component");
    for (int i = 0; i < spare; ++i) ++sizes[static_cast<std::size_t>(uniform(rng, 0, nontrivial_components - 1))];
    EdgeList e;
    int base = 0;
    for (int size : sizes) {
        for (auto [u, v] : random_tree(size, rng).edges()) e.emplace_back(base + u, base + v);
        base += size;
    }
    return shuffled(Graph(n, e), rng);
}

Graph random_block_graph(int blocks, int max_block_size, int max_order, std::mt19937_64& rng) {
    require(blocks >= 1 && max_block_size >= 2 && max_order >= 2, "block graph needs blocks >= 1, sizes >= 2");
    EdgeList e;
    int n = 0;
    auto add_clique = [&](Vertex shared, int size) {
        std::vector<Vertex> members;
        if (shared >= 0) members.push_back(shared);
        while (static_cast<int>(members.size()) < size) members.push_back(n++);
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) e.emplace_back(members[i], members[j]);
    };
    add_clique(-1, std::min(uniform(rng, 2, max_block_size), max_order));
    for (int b = 1; b < blocks && n < max_order; ++b) {
        const int size = std::min(uniform(rng, 2, max_block_size), max_order - n + 1);
        add_clique(uniform(rng, 0, n - 1), size);
    }
    return shuffled(Graph(n, e), rng);
}

bool satisfies_quasi_tree_mode(const Graph& g, QuasiTreeMode mode) {
    ClassFlags f = classify(g);
    if (!f.quasi_tree) return false;
    if (mode == QuasiTreeMode::no_pendants) return leaves(g).empty();
    for (Vertex x : f.quasi_vertices) {
        bool ok = true;
        for (Vertex y : g.neighbors(x)) ok = ok && g.degree(y) != 2;
        if (ok) return true;
    }
    return false;
}

Graph random_quasi_tree(int n, QuasiTreeMode mode, std::mt19937_64& rng) {
    require(n >= 4, "random quasi-tree needs n >= 4");
    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
        // Tree on 0..n-2 plus vertex n-1 joined to a random subset.
        Graph t = random_tree(n - 1, rng);
        Graph base(n, t.edges());
        VertexSet tree_leaves = leaves(t);
        VertexSet pool = t.vertices() - tree_leaves;
        EdgeList extra;
        const Vertex x = n - 1;
        if (mode == QuasiTreeMode::no_pendants) {
            for (Vertex l : tree_leaves) extra.emplace_back(x, l);
            pool = t.vertices() - tree_leaves;
        }
        // For the second condition only tree vertices of degree >= 2 are
        // eligible, so every neighbour of x ends with degree >= 3.
        std::vector<Vertex> eligible = pool.to_vector();
        if (mode == QuasiTreeMode::no_deg2_neighbors && eligible.empty()) continue;
        std::shuffle(eligible.begin(), eligible.end(), rng);
        const int lo = mode == QuasiTreeMode::no_deg2_neighbors ? 1 : 0;
        const int take = eligible.empty() ? 0 : uniform(rng, lo, static_cast<int>(eligible.size()));
        for (int i = 0; i < take; ++i) extra.emplace_back(x, eligible[static_cast<std::size_t>(i)]);
        Graph g = shuffled(with_edges(base, extra), rng);
        if (satisfies_quasi_tree_mode(g, mode)) return g;
    }
    throw std::runtime_error("random_quasi_tree: retry budget exhausted");
}

LabeledGraph generate(const FamilySpec& spec) {
    std::mt19937_64 rng(spec.seed);
    LabeledGraph out;
    switch (spec.kind) {
        case FamilyKind::path:
            require(spec.n >= 1, "path needs n >= 1");
            out.graph = path_graph(spec.n);
            break;
        case FamilyKind::cycle:
            require(spec.n >= 3, "cycle length must be at least 3");
            out.graph = cycle_graph(spec.n);
            break;
        case FamilyKind::star: {
            require(spec.n >= 1, "star needs at least one leaf");
            EdgeList e;
            for (int i = 1; i <= spec.n; ++i) e.emplace_back(0, i);
            out.graph = Graph(spec.n + 1, e);
            out.labels["center"] = 0;
            break;
        }
        case FamilyKind::complete:
            require(spec.n >= 1, "complete graph needs n >= 1");
            out.graph = complete_graph(spec.n);
            break;
        case FamilyKind::spider: {
            require(!spec.sizes.empty(), "spider needs at least one leg");
            EdgeList e;
            int next = 1;
            for (int len : spec.sizes) {
                require(len >= 1, "spider legs must have length >= 1");
                Vertex prev = 0;
                for (int i = 0; i < len; ++i, ++next) {
                    e.emplace_back(prev, next);
                    prev = next;
                }
            }
            out.graph = Graph(next, e);
            out.labels["center"] = 0;
            break;
        }
        case FamilyKind::partial_sun: {
            require(spec.n >= 3, "partial sun cycle length must be at least 3");
            EdgeList e = cycle_graph(spec.n).edges();
            VertexSet leafed;
            for (int p : spec.sizes) {
                require(p >= 0 && p < spec.n, "partial sun position out of range");
                leafed.insert(p);
            }
            int next = spec.n;
            for (Vertex p : leafed) e.emplace_back(p, next++);
            out.graph = Graph(next, e);
            break;
        }
        case FamilyKind::random_tree: out.graph = random_tree(spec.n, rng); break;
        case FamilyKind::random_unicyclic: out.graph = random_unicyclic(spec.n, rng); break;
        case FamilyKind::random_connected: out.graph = random_connected(spec.n, rng); break;
        case FamilyKind::random_forest:
            require(spec.sizes.size() == 2, "random_forest takes components,isolated");
            out.graph = random_forest(spec.n, spec.sizes[0], spec.sizes[1], rng);
            break;
        case FamilyKind::random_block:
            require(spec.sizes.size() == 2, "random_block takes blocks,max_block_size (n is the max order)");
            out.graph = random_block_graph(spec.sizes[0], spec.sizes[1], spec.n, rng);
            break;
        case FamilyKind::random_quasi_tree: out.graph = random_quasi_tree(spec.n, spec.mode, rng); break;
        case FamilyKind::H1:
            require(spec.s >= 0 && spec.t >= 1, "H1 requires s >= 0, t >= 1");
            out = make_h1(spec.s, spec.t);
            break;
        case FamilyKind::H2: out = make_h2(); break;
        case FamilyKind::H3: out = make_h3(); break;
        case FamilyKind::H4:
            require(spec.s >= 0 && spec.t >= 1, "H4 requires s >= 0, t >= 1");
            out = make_h4(spec.s, spec.t);
            break;
    }
    return out;
}

FigureVerdict validate_figure_family(FigureFamily family, const Graph& candidate, int s, int t, int cap) {
    FigureVerdict v;
    switch (family) {
        case FigureFamily::H1:
            v.expected_zero_forcing = s + t + 1;
            v.expected_general_position = (s + t >= 4) ? s + t : 4;
            break;
        case FigureFamily::H2:
            v.expected_zero_forcing = 3;
            v.expected_general_position = 4;
            break;
        case FigureFamily::H3:
            v.expected_zero_forcing = 2;
            v.expected_general_position = 6;
            break;
        case FigureFamily::H4:
            v.expected_zero_forcing = s + t + 3;
            v.expected_general_position = s + t;
            break;
    }
    v.zero_forcing = zero_forcing_number(candidate, cap).number;
    v.general_position = gp_number(candidate, cap).number;
    v.confirmed = v.zero_forcing == v.expected_zero_forcing && v.general_position == v.expected_general_position;
    std::ostringstream msg;
    msg << to_string(family) << (family == FigureFamily::H1 || family == FigureFamily::H4
                                     ? "(s=" + std::to_string(s) + ",t=" + std::to_string(t) + ")"
                                     : std::string())
        << ": computed Z=" << v.zero_forcing << " gp=" << v.general_position << ", published Z="
        << v.expected_zero_forcing << " gp=" << v.expected_general_position << " -> "
        << (v.confirmed ? "confirmed" : "refuted");
    v.detail = msg.str();
    return v;
}

namespace {

void check_enumeration_cap(int n, int cap, const char* what) {
    if (n > cap)
        throw CapExceeded(std::string(what) + " enumeration refused: order " + std::to_string(n) + " exceeds cap " +
                          std::to_string(cap));
}

using Catalogue = std::map<std::string, Graph>;

void insert_canonical(Catalogue& out, const Graph& g) {
    CanonicalForm form = canonical_form(g, kTreeEnumerationCap);
    if (out.find(form.key) == out.end()) out.emplace(std::move(form.key), relabel(g, form.labeling));
}

std::vector<Graph> values(Catalogue&& c) {
    std::vector<Graph> out;
    out.reserve(c.size());
    for (auto& [key, g] : c) out.push_back(std::move(g));
    return out;
}

// Connected graphs on n vertices with m edges for m = n-1, n, ..., built one
// edge at a time from the trees. Every connected graph with a cycle has an
// edge whose removal keeps it connected, so each level is exhaustive.
std::vector<std::vector<Graph>> connected_levels(int n, int max_m) {
    std::vector<std::vector<Graph>> levels;
    levels.push_back(enumerate_trees(n));
    for (int m = n; m <= max_m; ++m) {
        Catalogue next;
        for (const Graph& g : levels.back())
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    if (!g.adjacent(u, v)) insert_canonical(next, with_edges(g, {{u, v}}));
        levels.push_back(values(std::move(next)));
    }
    return levels;
}

}  // namespace

std::vector<Graph> enumerate_trees(int n) {
    check_enumeration_cap(n, kTreeEnumerationCap, "tree");
    if (n < 1) throw GraphError("tree enumeration needs n >= 1");
    std::vector<Graph> level{Graph(1, EdgeList{})};
    for (int k = 2; k <= n; ++k) {
        Catalogue next;
        for (const Graph& t : level)
            for (Vertex v = 0; v < t.order(); ++v) {
                EdgeList e = t.edges();
                e.emplace_back(v, k - 1);
                insert_canonical(next, Graph(k, e));
            }
        level = values(std::move(next));
    }
    return level;
}

std::vector<Graph> enumerate_connected(int n, int m) {
    check_enumeration_cap(n, m == n ? kUnicyclicEnumerationCap : kConnectedEnumerationCap, "connected graph");
    if (n < 1) throw GraphError("enumeration needs n >= 1");
    if (m < n - 1 || m > n * (n - 1) / 2) return {};
    return std::move(connected_levels(n, m).back());
}

std::vector<Graph> enumerate_unicyclic(int n) {
    check_enumeration_cap(n, kUnicyclicEnumerationCap, "unicyclic");
    if (n < 3) return {};
    return enumerate_connected(n, n);
}

std::vector<Graph> enumerate_connected(int n) {
    check_enumeration_cap(n, kConnectedEnumerationCap, "connected graph");
    if (n < 1) throw GraphError("enumeration needs n >= 1");
    std::vector<Graph> out;
    for (auto& level : connected_levels(n, n * (n - 1) / 2))
        for (auto& g : level) out.push_back(std::move(g));
    return out;
}

namespace {

// Six-cycle x y z w a b with the chord x w (two 4-cycles, bipartite; deleting
// x leaves a path), u_1..u_s pendant at y and v_1..v_t pendant at a.
LabeledGraph make_h4(int s, int t) {
    LabeledGraph out;
    EdgeList e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}};
    out.labels = {{"x", 0}, {"y", 1}, {"z", 2}, {"w", 3}, {"a", 4}, {"b", 5}};
    int next = 6;
    for (int i = 1; i <= s; ++i, ++next) {
        e.emplace_back(1, next);
        out.labels["u" + std::to_string(i)] = next;
    }
    for (int j = 1; j <= t; ++j, ++next) {
        e.emplace_back(4, next);
        out.labels["v" + std::to_string(j)] = next;
    }
    out.graph = Graph(next, e);
    return out;
}

}  // namespace

}  // namespace zfgp
