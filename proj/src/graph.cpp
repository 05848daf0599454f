#include "zfgp/graph.hpp"

#include <algorithm>
#include <functional>

namespace zfgp {

namespace {

std::string pair_str(Vertex u, Vertex v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph::Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
    if (n < 0 || n > kMaxOrder)
        throw GraphError("graph order " + std::to_string(n) + " outside 0.." + std::to_string(kMaxOrder));
    adj_.assign(n, VertexSet{});
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw GraphError("edge " + pair_str(u, v) + " has an index outside 0.." + std::to_string(n - 1));
        if (u == v) throw GraphError("edge " + pair_str(u, v) + " is a loop");
        if (!adj_[u].contains(v)) {
            adj_[u].insert(v);
            adj_[v].insert(u);
            ++m_;
        }
    }
}

EdgeList Graph::edges() const {
    EdgeList out;
    out.reserve(m_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph build_graph(int n, const EdgeList& edges) { return Graph(n, edges); }

Subgraph induced_subgraph(const Graph& g, VertexSet keep) {
    if (!keep.is_subset_of(g.vertices()))
        throw GraphError("vertex set is not contained in the graph's vertex range");
    Subgraph sub;
    sub.original = keep.to_vector();
    std::vector<Vertex> index_of(g.order(), -1);
    for (int i = 0; i < static_cast<int>(sub.original.size()); ++i) index_of[sub.original[i]] = i;
    EdgeList edges;
    for (auto [u, v] : g.edges())
        if (keep.contains(u) && keep.contains(v)) edges.emplace_back(index_of[u], index_of[v]);
    sub.graph = Graph(static_cast<int>(sub.original.size()), edges);
    return sub;
}

Subgraph delete_vertices(const Graph& g, VertexSet drop) {
    if (!drop.is_subset_of(g.vertices()))
        throw GraphError("vertex set is not contained in the graph's vertex range");
    return induced_subgraph(g, g.vertices() - drop);
}

VertexSet component_of(const Graph& g, Vertex v, VertexSet within) {
    VertexSet seen{v};
    VertexSet frontier{v};
    while (!frontier.empty()) {
        VertexSet next;
        for (Vertex u : frontier) next |= g.neighbors(u);
        next = (next & within) - seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

std::vector<VertexSet> components(const Graph& g, VertexSet within) {
    std::vector<VertexSet> out;
    VertexSet rest = within;
    while (!rest.empty()) {
        VertexSet c = component_of(g, rest.first(), within);
        out.push_back(c);
        rest -= c;
    }
    return out;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

bool is_connected(const Graph& g) {
    return g.order() == 0 || component_of(g, 0, g.vertices()) == g.vertices();
}

bool is_forest(const Graph& g) {
    return g.size() == g.order() - static_cast<int>(components(g).size());
}

bool is_tree(const Graph& g) { return g.order() >= 1 && is_connected(g) && g.size() == g.order() - 1; }

bool is_bipartite(const Graph& g) {
    std::vector<int> side(g.order(), -1);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::vector<Vertex> stack{s};
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(u)) {
                if (side[w] < 0) {
                    side[w] = 1 - side[u];
                    stack.push_back(w);
                } else if (side[w] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

int edges_within(const Graph& g, VertexSet s) {
    int twice = 0;
    for (Vertex v : s) twice += (g.neighbors(v) & s).size();
    return twice / 2;
}

bool induces_path(const Graph& g, VertexSet s) {
    if (s.empty()) return false;
    if (edges_within(g, s) != s.size() - 1) return false;
    for (Vertex v : s)
        if ((g.neighbors(v) & s).size() > 2) return false;
    return component_of(g, s.first(), s) == s;
}

std::pair<Vertex, Vertex> path_endpoints(const Graph& g, VertexSet s) {
    if (s.size() == 1) return {s.first(), s.first()};
    Vertex a = -1, b = -1;
    for (Vertex v : s) {
        if ((g.neighbors(v) & s).size() == 1) {
            if (a < 0) a = v;
            else b = v;
        }
    }
    return {a, b};
}

namespace {

// Tarjan's biconnected components; each block is reported as its vertex set.
std::vector<VertexSet> blocks(const Graph& g) {
    const int n = g.order();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::pair<Vertex, Vertex>> edge_stack;
    std::vector<VertexSet> out;
    int timer = 0;
    std::function<void(Vertex, Vertex)> dfs = [&](Vertex u, Vertex parent) {
        disc[u] = low[u] = timer++;
        for (Vertex w : g.neighbors(u)) {
            if (disc[w] < 0) {
                edge_stack.emplace_back(u, w);
                dfs(w, u);
                low[u] = std::min(low[u], low[w]);
                if (low[w] >= disc[u]) {
                    VertexSet block;
                    while (true) {
                        auto [a, b] = edge_stack.back();
                        edge_stack.pop_back();
                        block.insert(a);
                        block.insert(b);
                        if (a == u && b == w) break;
                    }
                    out.push_back(block);
                }
            } else if (w != parent && disc[w] < disc[u]) {
                edge_stack.emplace_back(u, w);
                low[u] = std::min(low[u], disc[w]);
            }
        }
    };
    for (Vertex v = 0; v < n; ++v) {
        if (disc[v] >= 0) continue;
        if (g.degree(v) == 0) {
            out.push_back(VertexSet{v});
            continue;
        }
        dfs(v, -1);
    }
    return out;
}

bool is_clique(const Graph& g, VertexSet s) {
    for (Vertex v : s)
        if (!(s - VertexSet{v}).is_subset_of(g.neighbors(v))) return false;
    return true;
}

}  // namespace

bool is_block_graph(const Graph& g) {
    if (g.order() == 0 || !is_connected(g)) return false;
    for (VertexSet b : blocks(g))
        if (!is_clique(g, b)) return false;
    return true;
}

VertexSet leaves(const Graph& g) {
    VertexSet out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1) out.insert(v);
    return out;
}

VertexSet simplicial_vertices(const Graph& g) {
    VertexSet out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (is_clique(g, g.neighbors(v))) out.insert(v);
    return out;
}

ClassFlags classify(const Graph& g) {
    ClassFlags f;
    const int n = g.order();
    const int m = g.size();
    f.connected = n >= 1 && is_connected(g);
    f.forest = is_forest(g);
    f.tree = f.connected && f.forest;
    f.unicyclic = f.connected && m == n;
    f.bicyclic = f.connected && m == n + 1;
    f.complete = n >= 1 && m == n * (n - 1) / 2;
    f.cycle_graph = f.unicyclic && n >= 3;
    for (Vertex v = 0; v < n && f.cycle_graph; ++v) f.cycle_graph = g.degree(v) == 2;
    f.block_graph = is_block_graph(g);
    f.bipartite = is_bipartite(g);
    if (f.connected) {
        for (Vertex v = 0; v < n; ++v)
            if (is_tree(delete_vertices(g, VertexSet{v}).graph)) f.quasi_vertices.insert(v);
    }
    f.quasi_tree = !f.quasi_vertices.empty();
    return f;
}

std::vector<Vertex> unique_cycle(const Graph& g) {
    if (g.order() == 0 || !is_connected(g) || g.size() != g.order())
        throw GraphError("unique_cycle requires a connected unicyclic graph");
    // Peel leaves until only the cycle remains.
    VertexSet core = g.vertices();
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex v : core) {
            if ((g.neighbors(v) & core).size() <= 1) {
                core.erase(v);
                changed = true;
            }
        }
    }
    std::vector<Vertex> order;
    Vertex start = core.first();
    Vertex prev = -1, cur = start;
    do {
        order.push_back(cur);
        VertexSet nb = g.neighbors(cur) & core;
        Vertex next = -1;
        for (Vertex w : nb) {
            if (w == prev) continue;
            if (prev < 0) { next = w; break; }  // lowest neighbour first
            next = w;
        }
        prev = cur;
        cur = next;
    } while (cur != start);
    return order;
}

namespace {

std::pair<Vertex, Vertex> cycle_neighbours(const std::vector<Vertex>& cycle, Vertex v) {
    auto it = std::find(cycle.begin(), cycle.end(), v);
    if (it == cycle.end()) throw GraphError("vertex " + std::to_string(v) + " is not on the cycle");
    const auto l = cycle.size();
    const auto i = static_cast<std::size_t>(it - cycle.begin());
    return {cycle[(i + l - 1) % l], cycle[(i + 1) % l]};
}

}  // namespace

Subgraph root_tree(const Graph& g, Vertex v) {
    auto cycle = unique_cycle(g);
    auto [u, w] = cycle_neighbours(cycle, v);
    VertexSet rest = g.vertices() - VertexSet{u, w};
    return induced_subgraph(g, component_of(g, v, rest));
}

VertexSet branch_vertices(const Graph& g) {
    VertexSet out;
    for (Vertex v : unique_cycle(g))
        if (g.degree(v) >= 3) out.insert(v);
    return out;
}

}  // namespace zfgp
