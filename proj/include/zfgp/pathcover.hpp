#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "zfgp/forcing.hpp"
#include "zfgp/graph.hpp"

namespace zfgp {

struct PathCoverResult {
    int number = 0;
    /// Each part in path order, starting from its lower-indexed endpoint.
    std::vector<std::vector<Vertex>> paths;
};

/// Exact P(G): fewest vertex-disjoint induced paths covering V(G).
PathCoverResult path_cover_number(const Graph& g, int cap = kDefaultSolverCap);

/// Parts disjoint, covering V(G), each inducing a path traversed in order.
bool is_valid_path_cover(const Graph& g, const std::vector<std::vector<Vertex>>& paths);

/// x such that G-x has at least two path components attached to x at
/// exactly one vertex, that vertex being an endpoint of the path.
VertexSet appropriate_vertices(const Graph& g);

/// Degree-1 vertices whose neighbour has degree at most 2.
VertexSet peripheral_leaves(const Graph& g);

enum class DeletionKind { appropriate_vertex, isolated_path, peripheral_leaf };

std::string to_string(DeletionKind kind);

struct TrimStep {
    DeletionKind kind;
    VertexSet deleted;  // labels of the input graph
};

struct TrimResult {
    Subgraph trimmed;  // trimmed form with its mapping back to the input
    int n1 = 0;        // appropriate-vertex deletions
    int n2 = 0;        // isolated-path deletions
    int n3 = 0;        // peripheral-leaf deletions
    std::vector<TrimStep> log;
};

/// Deterministic trimming: the lowest appropriate vertex first, then the
/// isolated path with the lowest vertex, then the lowest peripheral leaf,
/// until no deletion applies.
TrimResult trimmed_form(const Graph& g);

/// Trimming with a uniformly random legal deletion at every step.
TrimResult trimmed_form(const Graph& g, std::mt19937_64& rng);

/// Applies a deletion log to g, checking that each step was legal when taken.
/// Throws GraphError on an illegal step.
Subgraph replay_trim(const Graph& g, const std::vector<TrimStep>& log);

/// No appropriate vertex, isolated path or peripheral leaf remains.
bool is_trim_fixpoint(const Graph& g);

struct PartialSun {
    std::vector<Vertex> cycle;                  // cyclic order
    VertexSet leafed;                           // U
    std::vector<std::vector<Vertex>> segments;  // maximal runs of U along the cycle

    int cycle_length() const { return static_cast<int>(cycle.size()); }
};

/// A cycle with one pendant leaf on each vertex of some subset U (possibly
/// empty) of the cycle, or nullopt.
std::optional<PartialSun> recognize_partial_sun(const Graph& g);

/// max{2, sum over segments of ceil(|segment| / 2)}.
int partial_sun_path_cover(const PartialSun& ps);
int partial_sun_path_cover(const std::vector<int>& segment_sizes);

/// P(G) for connected unicyclic G from its trimmed form and deletion counts.
int path_cover_via_trim(const Graph& g);

}  // namespace zfgp
