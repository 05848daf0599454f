#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zfgp/vertex_set.hpp"

namespace zfgp {

/// Malformed graph input (bad index, loop) or a query whose precondition fails.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An exact solver or enumerator refused an input above its size cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

/// Immutable simple undirected graph on vertices 0..n-1 with one adjacency
/// word per vertex. At most 64 vertices.
class Graph {
public:
    static constexpr int kMaxOrder = VertexSet::kCapacity;

    Graph() = default;

    /// Duplicate pairs collapse; loops and out-of-range indices throw GraphError.
    Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges);
    Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
        : Graph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size())) {}

    int order() const { return static_cast<int>(adj_.size()); }
    int size() const { return m_; }

    VertexSet vertices() const { return VertexSet::full(order()); }
    VertexSet neighbors(Vertex v) const { return adj_[check(v)]; }
    int degree(Vertex v) const { return adj_[check(v)].size(); }
    bool adjacent(Vertex u, Vertex v) const { return adj_[check(u)].contains(v); }

    /// Edges as (u, v) with u < v, sorted.
    EdgeList edges() const;

    bool operator==(const Graph&) const = default;

private:
    Vertex check(Vertex v) const {
        if (v < 0 || v >= order())
            throw GraphError("vertex " + std::to_string(v) + " out of range for graph of order " +
                             std::to_string(order()));
        return v;
    }

    std::vector<VertexSet> adj_;
    int m_ = 0;
};

Graph build_graph(int n, const EdgeList& edges);

/// A graph derived from a parent by keeping a vertex subset. Vertex i of
/// `graph` is vertex `original[i]` of the parent.
struct Subgraph {
    Graph graph;
    std::vector<Vertex> original;

    Vertex to_original(Vertex v) const { return original.at(v); }
    VertexSet to_original(VertexSet s) const {
        VertexSet out;
        for (Vertex v : s) out.insert(original.at(v));
        return out;
    }
};

Subgraph induced_subgraph(const Graph& g, VertexSet keep);
Subgraph delete_vertices(const Graph& g, VertexSet drop);

struct ClassFlags {
    bool connected = false;
    bool forest = false;
    bool tree = false;
    bool unicyclic = false;
    bool bicyclic = false;
    bool cycle_graph = false;
    bool complete = false;
    bool block_graph = false;
    bool quasi_tree = false;
    bool bipartite = false;
    VertexSet quasi_vertices;
};

ClassFlags classify(const Graph& g);

// Structural queries.

bool is_connected(const Graph& g);
/// Connected components of g restricted to `within`, ordered by lowest member.
std::vector<VertexSet> components(const Graph& g, VertexSet within);
std::vector<VertexSet> components(const Graph& g);
VertexSet component_of(const Graph& g, Vertex v, VertexSet within);

bool is_forest(const Graph& g);
bool is_tree(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_block_graph(const Graph& g);
/// True when G[s] is a path (a single vertex counts).
bool induces_path(const Graph& g, VertexSet s);
/// Endpoints of the path induced on s, or the lone vertex twice.
std::pair<Vertex, Vertex> path_endpoints(const Graph& g, VertexSet s);
/// Number of edges of G[s].
int edges_within(const Graph& g, VertexSet s);

VertexSet leaves(const Graph& g);
VertexSet simplicial_vertices(const Graph& g);

/// Vertices of the single cycle of a connected unicyclic graph in cyclic
/// order, starting from its lowest index and stepping to the smaller neighbour.
std::vector<Vertex> unique_cycle(const Graph& g);

/// Component containing cycle vertex v after removing its two cycle neighbours.
Subgraph root_tree(const Graph& g, Vertex v);

/// Cycle vertices of degree at least 3.
VertexSet branch_vertices(const Graph& g);

}  // namespace zfgp
