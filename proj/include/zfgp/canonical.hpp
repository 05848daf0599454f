#pragma once

#include <string>
#include <vector>

#include "zfgp/graph.hpp"

namespace zfgp {

inline constexpr int kDefaultCanonicalCap = 12;

/// Byte string that is equal for two graphs iff they are isomorphic.
///
/// Colour refinement followed by individualisation of the first non-singleton
/// cell; every leaf of the search tree yields a relabelled adjacency string and
/// the lexicographic maximum is the key. Automorphisms discovered at equal
/// leaves prune sibling branches in the same orbit. Exact, but only offered up
/// to `cap` vertices; larger graphs throw CapExceeded.
std::string canonical_key(const Graph& g, int cap = kDefaultCanonicalCap);

/// The relabelling realising canonical_key: vertex v moves to position perm[v].
std::vector<Vertex> canonical_labeling(const Graph& g, int cap = kDefaultCanonicalCap);

struct CanonicalForm {
    std::string key;
    std::vector<Vertex> labeling;
};

CanonicalForm canonical_form(const Graph& g, int cap = kDefaultCanonicalCap);

/// g with vertex v renamed perm[v].
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

}  // namespace zfgp
