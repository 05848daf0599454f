#pragma once

#include <random>
#include <vector>

#include "zfgp/graph.hpp"

namespace zfgp {

/// Default order limit for the exact exponential solvers.
inline constexpr int kDefaultSolverCap = 16;

struct Force {
    Vertex forcer;
    Vertex forced;
    bool operator==(const Force&) const = default;
};

/// Record of one run of the colour-change rule.
struct ForcingChronicle {
    VertexSet initial;
    std::vector<Force> forces;
    VertexSet final_set;
};

/// Final black set reached from `initial`; the rule is applied until no
/// black vertex has exactly one white neighbour.
VertexSet closure_of(const Graph& g, VertexSet initial);

/// Same fixpoint as closure_of, with the individual forces recorded in
/// sweep order (lowest forcer first).
ForcingChronicle forcing_closure(const Graph& g, VertexSet initial);

/// Applies one legal force chosen uniformly at random at every step.
ForcingChronicle forcing_closure_random(const Graph& g, VertexSet initial, std::mt19937_64& rng);

/// True when every recorded force was legal at its time and the forced
/// vertices together with the initial set give the final set.
bool replay_is_valid(const Graph& g, const ForcingChronicle& c);

bool is_zero_forcing_set(const Graph& g, VertexSet s);

struct ZeroForcingResult {
    int number = 0;
    VertexSet witness;  // lexicographically smallest minimum zero forcing set
};

/// Exact Z(G) by increasing-cardinality search. Throws CapExceeded above `cap`.
ZeroForcingResult zero_forcing_number(const Graph& g, int cap = kDefaultSolverCap);

/// Z of a connected unicyclic graph through Z = P and the trimming formula.
int zero_forcing_unicyclic_fast(const Graph& g);

}  // namespace zfgp
