#include "zfgp/genpos.hpp"

namespace zfgp {

namespace {

void require_connected(const Graph& g, const char* what) {
    if (!is_connected(g)) throw GraphError(std::string(what) + " requires a connected graph");
}

}  // namespace

namespace {

// Betweenness triples among mutually reachable vertices.
std::vector<ConflictTriple> triples_within_components(const Graph& g) {
    const DistanceMatrix d(g);
    const int n = g.order();
    std::vector<ConflictTriple> out;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) {
            if (!d.reachable(a, b)) continue;
            for (Vertex c = 0; c < n; ++c)
                if (c != a && c != b && d(a, c) + d(c, b) == d(a, b)) out.push_back({a, b, c});
        }
    return out;
}

}  // namespace

std::vector<ConflictTriple> conflict_triples(const Graph& g) {
    require_connected(g, "conflict_triples");
    return triples_within_components(g);
}

std::optional<ConflictTriple> find_position_violation(const Graph& /*g*/, VertexSet r, const DistanceMatrix& d) {
    for (Vertex a : r)
        for (Vertex b : r) {
            if (b <= a || !d.reachable(a, b)) continue;
            for (Vertex c : r)
                if (c != a && c != b && d(a, c) + d(c, b) == d(a, b)) return ConflictTriple{a, b, c};
        }
    return std::nullopt;
}

std::optional<ConflictTriple> find_position_violation(const Graph& g, VertexSet r) {
    require_connected(g, "general position check");
    return find_position_violation(g, r, DistanceMatrix(g));
}

bool is_general_position_set(const Graph& g, VertexSet r) { return !find_position_violation(g, r).has_value(); }

namespace {

// Maximum conflict-free subset over the 3-uniform conflict hypergraph.
// Candidates are always compatible with the chosen set; the bound subtracts
// one vertex per triple of a greedy packing of disjoint triples that lie
// entirely among the candidates (at most two of each can be taken).
class GeneralPositionSearch {
public:
    explicit GeneralPositionSearch(const Graph& g) : n_(g.order()), blocked_(n_ * n_) {
        for (const ConflictTriple& t : triples_within_components(g)) {
            triples_.push_back(VertexSet{t.a, t.b, t.middle});
            blocked_[index(t.a, t.b)].insert(t.middle);
            blocked_[index(t.b, t.a)].insert(t.middle);
            blocked_[index(t.a, t.middle)].insert(t.b);
            blocked_[index(t.middle, t.a)].insert(t.b);
            blocked_[index(t.b, t.middle)].insert(t.a);
            blocked_[index(t.middle, t.b)].insert(t.a);
        }
    }

    int maximum() {
        best_ = 0;
        target_ = -1;
        search(VertexSet{}, VertexSet::full(n_));
        return best_;
    }

    /// Whether `chosen` (conflict-free) extends to `target` vertices using
    /// only vertices of `candidates`.
    bool reaches(VertexSet chosen, VertexSet candidates, int target) {
        best_ = 0;
        target_ = target;
        return search(chosen, compatible(chosen, candidates));
    }

    VertexSet compatible(VertexSet chosen, VertexSet candidates) const {
        VertexSet out = candidates - chosen;
        for (Vertex a : chosen)
            for (Vertex b : chosen)
                if (a < b) out -= blocked_[index(a, b)];
        return out;
    }

    VertexSet add(VertexSet chosen, VertexSet candidates, Vertex v) const {
        VertexSet out = candidates - VertexSet{v};
        for (Vertex r : chosen) out -= blocked_[index(v, r)];
        return out;
    }

private:
    std::size_t index(Vertex a, Vertex b) const { return static_cast<std::size_t>(a) * n_ + b; }

    bool search(VertexSet chosen, VertexSet candidates) {
        const int size = chosen.size();
        if (size > best_) best_ = size;
        if (target_ >= 0 && best_ >= target_) return true;
        if (candidates.empty()) return false;

        VertexSet packed;
        int packed_count = 0;
        std::vector<int> conflict_degree(n_, 0);
        for (VertexSet t : triples_) {
            if (!t.is_subset_of(candidates)) continue;
            for (Vertex v : t) ++conflict_degree[v];
            if (!t.intersects(packed)) {
                packed |= t;
                ++packed_count;
            }
        }
        const int bound = size + candidates.size() - packed_count;
        if (bound <= best_ || (target_ >= 0 && bound < target_)) return false;

        Vertex pick = candidates.first();
        for (Vertex v : candidates)
            if (conflict_degree[v] > conflict_degree[pick]) pick = v;

        VertexSet with = chosen;
        with.insert(pick);
        if (search(with, add(chosen, candidates, pick))) return true;
        return search(chosen, candidates - VertexSet{pick});
    }

    int n_;
    std::vector<VertexSet> blocked_;
    std::vector<VertexSet> triples_;
    int best_ = 0;
    int target_ = -1;
};

}  // namespace

GeneralPositionResult gp_number(const Graph& g, int cap) {
    require_connected(g, "gp_number");
    return gp_number_unrestricted(g, cap);
}

GeneralPositionResult gp_number_unrestricted(const Graph& g, int cap) {
    if (g.order() > cap)
        throw CapExceeded("general position search refused: order " + std::to_string(g.order()) +
                          " exceeds cap " + std::to_string(cap));
    if (g.order() == 0) return {};
    GeneralPositionSearch search(g);
    const int value = search.maximum();

    // Lexicographically smallest optimum: take each vertex in index order
    // whenever an optimum containing the current choice still exists.
    VertexSet chosen;
    VertexSet excluded;
    for (Vertex v = 0; v < g.order() && chosen.size() < value; ++v) {
        VertexSet candidates = search.compatible(chosen, g.vertices() - excluded);
        if (!candidates.contains(v)) {
            excluded.insert(v);
            continue;
        }
        VertexSet with = chosen;
        with.insert(v);
        VertexSet rest = g.vertices() - excluded - VertexSet::full(v + 1);
        if (search.reaches(with, rest, value)) chosen = with;
        else excluded.insert(v);
    }
    return {value, chosen};
}

int gp_tree_fast(const Graph& t) {
    if (t.order() < 2 || !is_tree(t)) throw GraphError("gp_tree_fast requires a tree on at least two vertices");
    return leaves(t).size();
}

int gp_block_fast(const Graph& g) {
    if (!is_block_graph(g)) throw GraphError("gp_block_fast requires a connected block graph");
    return simplicial_vertices(g).size();
}

}  // namespace zfgp
