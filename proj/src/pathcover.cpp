#include "zfgp/pathcover.hpp"

#include <algorithm>
#include <limits>

namespace zfgp {

namespace {

std::vector<Vertex> path_order(const Graph& g, VertexSet s) {
    auto [start, other] = path_endpoints(g, s);
    start = std::min(start, other);
    std::vector<Vertex> out{start};
    VertexSet seen{start};
    Vertex cur = start;
    while (static_cast<int>(out.size()) < s.size()) {
        cur = ((g.neighbors(cur) & s) - seen).first();
        seen.insert(cur);
        out.push_back(cur);
    }
    return out;
}

}  // namespace

PathCoverResult path_cover_number(const Graph& g, int cap) {
    const int n = g.order();
    if (n > cap)
        throw CapExceeded("path cover search refused: order " + std::to_string(n) + " exceeds cap " +
                          std::to_string(cap));
    if (n == 0) return {};
    const std::uint64_t full = VertexSet::full(n).bits();
    std::vector<bool> is_path(full + 1, false);
    for (std::uint64_t s = 1; s <= full; ++s) is_path[s] = induces_path(g, VertexSet(s));

    // best[mask]: fewest induced paths covering mask; the part containing the
    // lowest vertex of mask is recorded in part[mask].
    constexpr int kUnset = std::numeric_limits<int>::max();
    std::vector<int> best(full + 1, kUnset);
    std::vector<std::uint64_t> part(full + 1, 0);
    best[0] = 0;
    for (std::uint64_t mask = 1; mask <= full; ++mask) {
        const std::uint64_t low = mask & (~mask + 1);
        const std::uint64_t rest = mask ^ low;
        // Submasks of rest, each joined with the lowest vertex.
        std::uint64_t sub = rest;
        while (true) {
            const std::uint64_t piece = sub | low;
            if (is_path[piece] && best[mask ^ piece] != kUnset && best[mask ^ piece] + 1 < best[mask]) {
                best[mask] = best[mask ^ piece] + 1;
                part[mask] = piece;
            }
            if (sub == 0) break;
            sub = (sub - 1) & rest;
        }
    }
    PathCoverResult out;
    out.number = best[full];
    for (std::uint64_t mask = full; mask != 0; mask ^= part[mask]) out.paths.push_back(path_order(g, VertexSet(part[mask])));
    return out;
}

bool is_valid_path_cover(const Graph& g, const std::vector<std::vector<Vertex>>& paths) {
    VertexSet covered;
    for (const auto& p : paths) {
        if (p.empty()) return false;
        VertexSet part;
        for (Vertex v : p) {
            if (v < 0 || v >= g.order() || part.contains(v) || covered.contains(v)) return false;
            part.insert(v);
        }
        if (!induces_path(g, part)) return false;
        for (std::size_t i = 1; i < p.size(); ++i)
            if (!g.adjacent(p[i - 1], p[i])) return false;
        covered |= part;
    }
    return covered == g.vertices();
}

namespace {

int degree_in(const Graph& g, Vertex v, VertexSet alive) { return (g.neighbors(v) & alive).size(); }

bool appropriate_in(const Graph& g, Vertex x, VertexSet alive) {
    const VertexSet rest = alive - VertexSet{x};
    int attached_paths = 0;
    for (VertexSet comp : components(g, rest)) {
        if (!induces_path(g, comp)) continue;
        VertexSet touch = g.neighbors(x) & comp;
        if (touch.size() != 1) continue;
        auto [a, b] = path_endpoints(g, comp);
        Vertex t = touch.first();
        if (t == a || t == b) ++attached_paths;
    }
    return attached_paths >= 2;
}

VertexSet appropriate_in(const Graph& g, VertexSet alive) {
    VertexSet out;
    for (Vertex x : alive)
        if (appropriate_in(g, x, alive)) out.insert(x);
    return out;
}

std::vector<VertexSet> isolated_paths_in(const Graph& g, VertexSet alive) {
    std::vector<VertexSet> out;
    for (VertexSet comp : components(g, alive))
        if (induces_path(g, comp)) out.push_back(comp);
    return out;
}

VertexSet peripheral_in(const Graph& g, VertexSet alive) {
    VertexSet out;
    for (Vertex x : alive) {
        VertexSet nb = g.neighbors(x) & alive;
        if (nb.size() == 1 && degree_in(g, nb.first(), alive) <= 2) out.insert(x);
    }
    return out;
}

std::vector<TrimStep> legal_steps(const Graph& g, VertexSet alive) {
    std::vector<TrimStep> out;
    for (Vertex x : appropriate_in(g, alive)) out.push_back({DeletionKind::appropriate_vertex, VertexSet{x}});
    for (VertexSet p : isolated_paths_in(g, alive)) out.push_back({DeletionKind::isolated_path, p});
    for (Vertex x : peripheral_in(g, alive)) out.push_back({DeletionKind::peripheral_leaf, VertexSet{x}});
    return out;
}

bool is_legal(const Graph& g, VertexSet alive, const TrimStep& step) {
    if (!step.deleted.is_subset_of(alive) || step.deleted.empty()) return false;
    switch (step.kind) {
        case DeletionKind::appropriate_vertex:
            return step.deleted.size() == 1 && appropriate_in(g, step.deleted.first(), alive);
        case DeletionKind::isolated_path:
            return component_of(g, step.deleted.first(), alive) == step.deleted && induces_path(g, step.deleted);
        case DeletionKind::peripheral_leaf:
            return step.deleted.size() == 1 && peripheral_in(g, alive).contains(step.deleted.first());
    }
    return false;
}

void count(TrimResult& r, DeletionKind kind) {
    switch (kind) {
        case DeletionKind::appropriate_vertex: ++r.n1; break;
        case DeletionKind::isolated_path: ++r.n2; break;
        case DeletionKind::peripheral_leaf: ++r.n3; break;
    }
}

template <typename Choose>
TrimResult trim_with(const Graph& g, Choose choose) {
    TrimResult r;
    VertexSet alive = g.vertices();
    while (true) {
        auto steps = legal_steps(g, alive);
        if (steps.empty()) break;
        const TrimStep& step = choose(steps);
        alive -= step.deleted;
        count(r, step.kind);
        r.log.push_back(step);
    }
    r.trimmed = induced_subgraph(g, alive);
    return r;
}

}  // namespace

VertexSet appropriate_vertices(const Graph& g) { return appropriate_in(g, g.vertices()); }

VertexSet peripheral_leaves(const Graph& g) { return peripheral_in(g, g.vertices()); }

std::string to_string(DeletionKind kind) {
    switch (kind) {
        case DeletionKind::appropriate_vertex: return "appropriate_vertex";
        case DeletionKind::isolated_path: return "isolated_path";
        case DeletionKind::peripheral_leaf: return "peripheral_leaf";
    }
    return "unknown";
}

TrimResult trimmed_form(const Graph& g) {
    // legal_steps lists kinds in policy order, each by lowest vertex.
    return trim_with(g, [](const std::vector<TrimStep>& steps) -> const TrimStep& { return steps.front(); });
}

TrimResult trimmed_form(const Graph& g, std::mt19937_64& rng) {
    return trim_with(g, [&rng](const std::vector<TrimStep>& steps) -> const TrimStep& {
        std::uniform_int_distribution<std::size_t> pick(0, steps.size() - 1);
        return steps[pick(rng)];
    });
}

Subgraph replay_trim(const Graph& g, const std::vector<TrimStep>& log) {
    VertexSet alive = g.vertices();
    for (std::size_t i = 0; i < log.size(); ++i) {
        if (!is_legal(g, alive, log[i]))
            throw GraphError("trim log step " + std::to_string(i) + " (" + to_string(log[i].kind) +
                             ") is not a legal deletion");
        alive -= log[i].deleted;
    }
    return induced_subgraph(g, alive);
}

bool is_trim_fixpoint(const Graph& g) { return legal_steps(g, g.vertices()).empty(); }

std::optional<PartialSun> recognize_partial_sun(const Graph& g) {
    const int n = g.order();
    if (n < 3 || g.size() != n || !is_connected(g)) return std::nullopt;
    PartialSun ps;
    ps.cycle = unique_cycle(g);
    const VertexSet on_cycle = VertexSet::from_range(ps.cycle);
    for (Vertex v : g.vertices() - on_cycle) {
        if (g.degree(v) != 1 || !g.neighbors(v).is_subset_of(on_cycle)) return std::nullopt;
    }
    for (Vertex c : ps.cycle) {
        const int pendants = (g.neighbors(c) - on_cycle).size();
        if (pendants > 1) return std::nullopt;
        if (pendants == 1) ps.leafed.insert(c);
    }
    const int l = ps.cycle_length();
    if (ps.leafed.size() == l) {
        ps.segments.push_back(ps.cycle);
    } else if (!ps.leafed.empty()) {
        int start = 0;
        while (ps.leafed.contains(ps.cycle[start]) || !ps.leafed.contains(ps.cycle[(start + 1) % l])) ++start;
        std::vector<Vertex> run;
        for (int step = 1; step <= l; ++step) {
            Vertex v = ps.cycle[(start + step) % l];
            if (ps.leafed.contains(v)) {
                run.push_back(v);
            } else if (!run.empty()) {
                ps.segments.push_back(run);
                run.clear();
            }
        }
        if (!run.empty()) ps.segments.push_back(run);
    }
    return ps;
}

int partial_sun_path_cover(const std::vector<int>& segment_sizes) {
    int sum = 0;
    for (int s : segment_sizes) sum += (s + 1) / 2;
    return std::max(2, sum);
}

int partial_sun_path_cover(const PartialSun& ps) {
    std::vector<int> sizes;
    for (const auto& s : ps.segments) sizes.push_back(static_cast<int>(s.size()));
    return partial_sun_path_cover(sizes);
}

int path_cover_via_trim(const Graph& g) {
    if (!(g.order() >= 3 && is_connected(g) && g.size() == g.order()))
        throw GraphError("path_cover_via_trim requires a connected unicyclic graph");
    TrimResult r = trimmed_form(g);
    int trimmed_cover = 0;
    if (r.trimmed.graph.order() > 0) {
        auto ps = recognize_partial_sun(r.trimmed.graph);
        if (!ps) throw std::logic_error("trimmed form of a unicyclic graph is neither empty nor a partial sun");
        trimmed_cover = partial_sun_path_cover(*ps);
    }
    return trimmed_cover + r.n2 - r.n1;
}

}  // namespace zfgp
