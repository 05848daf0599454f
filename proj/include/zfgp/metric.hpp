#pragma once

#include <vector>

#include "zfgp/graph.hpp"

namespace zfgp {

/// All-pairs hop distances. Disconnected pairs hold `unreachable()`, which is
/// n and therefore larger than any real distance.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(const Graph& g);

    int order() const { return n_; }
    int operator()(Vertex u, Vertex v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
    int unreachable() const { return n_; }
    bool reachable(Vertex u, Vertex v) const { return (*this)(u, v) < n_; }

private:
    int n_ = 0;
    std::vector<int> d_;
};

DistanceMatrix all_pairs_distances(const Graph& g);

/// Vertices on some shortest u,v-path: { x : d(u,x) + d(x,v) = d(u,v) }.
/// Throws GraphError when u and v lie in different components.
VertexSet interval(const Graph& g, Vertex u, Vertex v, const DistanceMatrix& d);

}  // namespace zfgp
