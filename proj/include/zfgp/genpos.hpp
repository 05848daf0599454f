#pragma once

#include <optional>
#include <vector>

#include "zfgp/forcing.hpp"
#include "zfgp/graph.hpp"
#include "zfgp/metric.hpp"

namespace zfgp {

/// Three distinct vertices with `middle` on a shortest path between `a` and `b`.
/// Stored with a < b.
struct ConflictTriple {
    Vertex a;
    Vertex b;
    Vertex middle;
    bool operator==(const ConflictTriple&) const = default;
};

/// Every unordered betweenness triple exactly once, ordered by (a, b, middle).
/// Throws GraphError on disconnected input.
std::vector<ConflictTriple> conflict_triples(const Graph& g);

/// First conflict triple inside r, if any. G must be connected.
std::optional<ConflictTriple> find_position_violation(const Graph& g, VertexSet r);
std::optional<ConflictTriple> find_position_violation(const Graph& g, VertexSet r, const DistanceMatrix& d);

bool is_general_position_set(const Graph& g, VertexSet r);

struct GeneralPositionResult {
    int number = 0;
    VertexSet witness;  // lexicographically smallest maximum general position set
};

/// Exact gp(G): maximum vertex set containing no conflict triple.
GeneralPositionResult gp_number(const Graph& g, int cap = kDefaultSolverCap);

/// Exact gp over any graph, disconnected included: vertices in different
/// components never lie on a common shortest path.
GeneralPositionResult gp_number_unrestricted(const Graph& g, int cap = kDefaultSolverCap);

/// gp of a tree with at least two vertices: its leaf count.
int gp_tree_fast(const Graph& t);

/// gp of a connected block graph: its simplicial vertex count.
int gp_block_fast(const Graph& g);

}  // namespace zfgp
