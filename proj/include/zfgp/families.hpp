#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "zfgp/forcing.hpp"
#include "zfgp/graph.hpp"

namespace zfgp {

enum class FamilyKind {
    path,
    cycle,
    star,
    complete,
    spider,
    partial_sun,
    random_tree,
    random_unicyclic,
    random_connected,
    random_forest,
    random_block,
    random_quasi_tree,
    H1,
    H2,
    H3,
    H4,
};

enum class QuasiTreeMode { no_pendants, no_deg2_neighbors };

/// Parameters per kind:
///   path, cycle, complete: n               star: n leaves
///   spider: sizes = leg lengths            partial_sun: n = cycle length, sizes = leafed positions
///   random_tree, random_unicyclic, random_connected: n
///   random_forest: n = total order, sizes = {components, isolated vertices}
///   random_block: sizes = {blocks, max block size, max order}
///   random_quasi_tree: n, mode
///   H1, H4: s, t        H2, H3: none
struct FamilySpec {
    FamilyKind kind = FamilyKind::path;
    int n = 0;
    std::vector<int> sizes;
    int s = 0;
    int t = 0;
    QuasiTreeMode mode = QuasiTreeMode::no_pendants;
    std::uint64_t seed = 0;
};

std::string to_string(FamilyKind kind);
std::string to_string(QuasiTreeMode mode);
std::string describe(const FamilySpec& spec);

/// Parses "kind:arg:arg" forms, e.g. "cycle:7", "spider:2,2,3",
/// "partial_sun:6:0,1,3", "H1:2,2", "random_tree:10", "random_quasi_tree:10:no_pendants".
/// The seed is supplied separately.
FamilySpec parse_family(std::string_view text);

/// A generated graph with the names of its distinguished vertices.
struct LabeledGraph {
    Graph graph;
    std::map<std::string, Vertex> labels;
};

/// Same spec and seed always give the same graph. Invalid parameters throw
/// GraphError; a random generator that cannot meet its class predicate
/// within its retry budget throws std::runtime_error.
LabeledGraph generate(const FamilySpec& spec);

// Random generators used by generate(); exposed for the harness.
Graph random_tree(int n, std::mt19937_64& rng);
Graph random_unicyclic(int n, std::mt19937_64& rng);
Graph random_connected(int n, std::mt19937_64& rng);
Graph random_forest(int n, int nontrivial_components, int isolated, std::mt19937_64& rng);
Graph random_block_graph(int blocks, int max_block_size, int max_order, std::mt19937_64& rng);
Graph random_quasi_tree(int n, QuasiTreeMode mode, std::mt19937_64& rng);

/// Whether g satisfies the quasi-tree theorem condition selected by mode.
bool satisfies_quasi_tree_mode(const Graph& g, QuasiTreeMode mode);

enum class FigureFamily { H1, H2, H3, H4 };

std::string to_string(FigureFamily f);

struct FigureVerdict {
    bool confirmed = false;
    int zero_forcing = 0;
    int general_position = 0;
    int expected_zero_forcing = 0;
    int expected_general_position = 0;
    std::string detail;
};

/// Computes Z and gp exactly and compares them with the published values for
/// the family at (s, t): H1 gives Z = s+t+1 and gp = s+t for s+t >= 4, gp = 4
/// for 2 <= s+t <= 3; H2 gives Z = 3, gp = 4; H3 gives Z = 2, gp = 6; H4 gives
/// Z = s+t+3, gp = s+t.
FigureVerdict validate_figure_family(FigureFamily family, const Graph& candidate, int s = 0, int t = 0,
                                     int cap = kDefaultSolverCap);

// Exhaustive enumeration up to isomorphism. Each graph is returned in
// canonical labelling; the list is sorted by canonical key.

inline constexpr int kTreeEnumerationCap = 12;
inline constexpr int kUnicyclicEnumerationCap = 10;
inline constexpr int kConnectedEnumerationCap = 9;

std::vector<Graph> enumerate_trees(int n);
std::vector<Graph> enumerate_unicyclic(int n);
std::vector<Graph> enumerate_connected(int n, int m);
/// All connected graphs of order n, every size.
std::vector<Graph> enumerate_connected(int n);

}  // namespace zfgp
