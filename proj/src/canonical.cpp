#include "zfgp/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace zfgp {

namespace {

using Colouring = std::vector<int>;

int rank_signatures(std::vector<std::vector<int>>& sigs, Colouring& out) {
    const int n = static_cast<int>(sigs.size());
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return sigs[a] < sigs[b]; });
    out.assign(n, 0);
    int rank = 0;
    for (int i = 0; i < n; ++i) {
        if (i > 0 && sigs[idx[i]] != sigs[idx[i - 1]]) ++rank;
        out[idx[i]] = rank;
    }
    return n == 0 ? 0 : rank + 1;
}

int cell_count(const Colouring& c) {
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

// Equitable refinement. Cell order is derived from colours and neighbour
// colour counts only, so it commutes with relabelling.
Colouring refine(const Graph& g, Colouring colour) {
    const int n = g.order();
    int cells = cell_count(colour);
    std::vector<std::vector<int>> sigs(n);
    while (true) {
        for (Vertex v = 0; v < n; ++v) {
            auto& s = sigs[v];
            s.assign(cells + 1, 0);
            s[0] = colour[v];
            for (Vertex w : g.neighbors(v)) ++s[1 + colour[w]];
        }
        Colouring next;
        int next_cells = rank_signatures(sigs, next);
        colour = std::move(next);
        if (next_cells == cells) return colour;
        cells = next_cells;
    }
}

Colouring individualise(const Graph& g, const Colouring& colour, Vertex target) {
    std::vector<std::vector<int>> sigs(colour.size());
    for (std::size_t v = 0; v < colour.size(); ++v)
        sigs[v] = {colour[v], static_cast<int>(v) == target ? 0 : 1};
    Colouring next;
    rank_signatures(sigs, next);
    return refine(g, std::move(next));
}

std::string key_for(const Graph& g, const std::vector<Vertex>& pos) {
    const int n = g.order();
    std::vector<Vertex> at(n);
    for (Vertex v = 0; v < n; ++v) at[pos[v]] = v;
    std::string key(1, static_cast<char>(n));
    unsigned char acc = 0;
    int bits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = static_cast<unsigned char>((acc << 1) | (g.adjacent(at[i], at[j]) ? 1 : 0));
            if (++bits == 8) {
                key.push_back(static_cast<char>(acc));
                acc = 0;
                bits = 0;
            }
        }
    }
    if (bits > 0) key.push_back(static_cast<char>(acc << (8 - bits)));
    return key;
}

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

    void run() {
        std::vector<Vertex> path;
        search(refine(g_, Colouring(n_, 0)), path);
    }

    const std::string& best_key() const { return best_key_; }
    const std::vector<Vertex>& best_labeling() const { return best_pos_; }

private:
    static constexpr int kContinue = -1;

    // Returns kContinue, or the depth of the ancestor at which the search should
    // resume after an automorphism showed the rest of this subtree is redundant.
    int search(const Colouring& colour, std::vector<Vertex>& path) {
        const int depth = static_cast<int>(path.size());
        const int cells = cell_count(colour);
        if (cells == n_) return at_leaf(colour, path);

        // First non-singleton cell by colour; members in index order.
        std::vector<int> cell_size(cells, 0);
        for (int c : colour) ++cell_size[c];
        int target = 0;
        while (cell_size[target] == 1) ++target;
        std::vector<Vertex> members;
        for (Vertex v = 0; v < n_; ++v)
            if (colour[v] == target) members.push_back(v);

        std::vector<Vertex> tried;
        for (Vertex w : members) {
            if (!tried.empty() && shares_orbit(w, tried, path)) continue;
            path.push_back(w);
            int resume = search(individualise(g_, colour, w), path);
            path.pop_back();
            tried.push_back(w);
            if (resume != kContinue && resume < depth) return resume;
        }
        return kContinue;
    }

    int at_leaf(const Colouring& colour, const std::vector<Vertex>& path) {
        std::vector<Vertex> pos(colour.begin(), colour.end());
        std::string key = key_for(g_, pos);
        if (!have_leaf_) {
            have_leaf_ = true;
            first_key_ = best_key_ = key;
            first_pos_ = best_pos_ = pos;
            first_path_ = best_path_ = path;
            return kContinue;
        }
        if (key == first_key_) {
            record_automorphism(first_pos_, pos);
            return divergence(first_path_, path);
        }
        if (key == best_key_) {
            record_automorphism(best_pos_, pos);
            return divergence(best_path_, path);
        }
        if (key > best_key_) {
            best_key_ = std::move(key);
            best_pos_ = std::move(pos);
            best_path_ = path;
        }
        return kContinue;
    }

    static int divergence(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
        int i = 0;
        while (i < static_cast<int>(std::min(a.size(), b.size())) && a[i] == b[i]) ++i;
        return i;
    }

    // Two leaves with equal keys: v and the vertex taking v's position in the
    // other labelling are exchanged by an automorphism.
    void record_automorphism(const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
        std::vector<Vertex> at(n_);
        for (Vertex v = 0; v < n_; ++v) at[to[v]] = v;
        std::vector<Vertex> gamma(n_);
        for (Vertex v = 0; v < n_; ++v) gamma[v] = at[from[v]];
        automorphisms_.push_back(std::move(gamma));
    }

    // Orbits of the group generated by recorded automorphisms that fix the
    // current path pointwise; a subgroup of the true stabiliser, so pruning by
    // it is sound.
    bool shares_orbit(Vertex w, const std::vector<Vertex>& tried, const std::vector<Vertex>& path) const {
        std::vector<int> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        bool any = false;
        for (const auto& gamma : automorphisms_) {
            bool fixes = std::all_of(path.begin(), path.end(), [&](Vertex p) { return gamma[p] == p; });
            if (!fixes) continue;
            any = true;
            for (Vertex v = 0; v < n_; ++v) parent[find(v)] = find(gamma[v]);
        }
        if (!any) return false;
        const int root = find(w);
        return std::any_of(tried.begin(), tried.end(), [&](Vertex t) { return find(t) == root; });
    }

    const Graph& g_;
    const int n_;
    bool have_leaf_ = false;
    std::string first_key_, best_key_;
    std::vector<Vertex> first_pos_, best_pos_;
    std::vector<Vertex> first_path_, best_path_;
    std::vector<std::vector<Vertex>> automorphisms_;
};

void check_cap(const Graph& g, int cap) {
    if (g.order() > cap)
        throw CapExceeded("canonical form refused: order " + std::to_string(g.order()) + " exceeds cap " +
                          std::to_string(cap));
}

}  // namespace

CanonicalForm canonical_form(const Graph& g, int cap) {
    check_cap(g, cap);
    if (g.order() == 0) return {std::string(1, '\0'), {}};
    CanonicalSearch search(g);
    search.run();
    return {search.best_key(), search.best_labeling()};
}

std::string canonical_key(const Graph& g, int cap) { return canonical_form(g, cap).key; }

std::vector<Vertex> canonical_labeling(const Graph& g, int cap) { return canonical_form(g, cap).labeling; }

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
    if (static_cast<int>(perm.size()) != g.order()) throw GraphError("relabel: permutation size mismatch");
    EdgeList edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph(g.order(), edges);
}

}  // namespace zfgp
