#include "zfgp/forcing.hpp"

#include <algorithm>

#include "zfgp/pathcover.hpp"

namespace zfgp {

VertexSet closure_of(const Graph& g, VertexSet initial) {
    VertexSet black = initial;
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex v : black) {
            VertexSet white = g.neighbors(v) - black;
            if (white.size() == 1) {
                black |= white;
                changed = true;
            }
        }
    }
    return black;
}

ForcingChronicle forcing_closure(const Graph& g, VertexSet initial) {
    ForcingChronicle c{initial, {}, initial};
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex v = 0; v < g.order(); ++v) {
            if (!c.final_set.contains(v)) continue;
            VertexSet white = g.neighbors(v) - c.final_set;
            if (white.size() == 1) {
                c.forces.push_back({v, white.first()});
                c.final_set |= white;
                changed = true;
            }
        }
    }
    return c;
}

ForcingChronicle forcing_closure_random(const Graph& g, VertexSet initial, std::mt19937_64& rng) {
    ForcingChronicle c{initial, {}, initial};
    while (true) {
        std::vector<Force> legal;
        for (Vertex v : c.final_set) {
            VertexSet white = g.neighbors(v) - c.final_set;
            if (white.size() == 1) legal.push_back({v, white.first()});
        }
        if (legal.empty()) return c;
        std::uniform_int_distribution<std::size_t> pick(0, legal.size() - 1);
        Force f = legal[pick(rng)];
        c.forces.push_back(f);
        c.final_set.insert(f.forced);
    }
}

bool replay_is_valid(const Graph& g, const ForcingChronicle& c) {
    VertexSet black = c.initial;
    for (const Force& f : c.forces) {
        if (!black.contains(f.forcer) || black.contains(f.forced)) return false;
        if (g.neighbors(f.forcer) - black != VertexSet{f.forced}) return false;
        black.insert(f.forced);
    }
    return black == c.final_set;
}

bool is_zero_forcing_set(const Graph& g, VertexSet s) { return closure_of(g, s) == g.vertices(); }

namespace {

// Exhausts k-subsets in lexicographic order. Every failed closure leaves a
// white set W that no outside vertex can force into (a fort), and every zero
// forcing set must contain a vertex of every fort; candidates that cannot hit
// a recorded fort are skipped without simulation.
class ZeroForcingSearch {
public:
    explicit ZeroForcingSearch(const Graph& g) : g_(g), n_(g.order()) {}

    bool find(int k, VertexSet& witness) {
        k_ = k;
        return descend(0, VertexSet{}, witness);
    }

private:
    static constexpr std::size_t kMaxForts = 4096;

    bool descend(Vertex start, VertexSet chosen, VertexSet& witness) {
        const int remaining = k_ - chosen.size();
        const VertexSet available = VertexSet::full(n_) - VertexSet::full(start);
        for (VertexSet fort : forts_)
            if (!fort.intersects(chosen) && (remaining == 0 || !fort.intersects(available))) return false;
        if (remaining == 0) {
            VertexSet black = closure_of(g_, chosen);
            if (black == g_.vertices()) {
                witness = chosen;
                return true;
            }
            if (forts_.size() < kMaxForts) forts_.push_back(g_.vertices() - black);
            return false;
        }
        for (Vertex v = start; v <= n_ - remaining; ++v) {
            VertexSet next = chosen;
            next.insert(v);
            if (descend(v + 1, next, witness)) return true;
        }
        return false;
    }

    const Graph& g_;
    const int n_;
    int k_ = 0;
    std::vector<VertexSet> forts_;
};

}  // namespace

ZeroForcingResult zero_forcing_number(const Graph& g, int cap) {
    if (g.order() > cap)
        throw CapExceeded("zero forcing search refused: order " + std::to_string(g.order()) + " exceeds cap " +
                          std::to_string(cap));
    if (g.order() == 0) return {0, VertexSet{}};
    ZeroForcingSearch search(g);
    for (int k = 1; k <= g.order(); ++k) {
        VertexSet witness;
        if (search.find(k, witness)) return {k, witness};
    }
    return {g.order(), g.vertices()};  // unreachable: V(G) always forces
}

int zero_forcing_unicyclic_fast(const Graph& g) {
    if (!(g.order() >= 3 && is_connected(g) && g.size() == g.order()))
        throw GraphError("zero_forcing_unicyclic_fast requires a connected unicyclic graph");
    return path_cover_via_trim(g);
}

}  // namespace zfgp
