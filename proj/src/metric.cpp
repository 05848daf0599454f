#include "zfgp/metric.hpp"

namespace zfgp {

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.order()), d_(static_cast<std::size_t>(n_) * n_, n_) {
    for (Vertex s = 0; s < n_; ++s) {
        int* row = &d_[static_cast<std::size_t>(s) * n_];
        row[s] = 0;
        VertexSet seen{s}, frontier{s};
        for (int dist = 1; !frontier.empty(); ++dist) {
            VertexSet next;
            for (Vertex u : frontier) next |= g.neighbors(u);
            next -= seen;
            for (Vertex v : next) row[v] = dist;
            seen |= next;
            frontier = next;
        }
    }
}

DistanceMatrix all_pairs_distances(const Graph& g) { return DistanceMatrix(g); }

VertexSet interval(const Graph& g, Vertex u, Vertex v, const DistanceMatrix& d) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
        throw GraphError("interval: vertex out of range");
    if (!d.reachable(u, v))
        throw GraphError("interval: vertices " + std::to_string(u) + " and " + std::to_string(v) +
                         " are in different components");
    VertexSet out;
    const int duv = d(u, v);
    for (Vertex x = 0; x < g.order(); ++x)
        if (d(u, x) + d(x, v) == duv) out.insert(x);
    return out;
}

}  // namespace zfgp
