#pragma once

#include <random>
#include <vector>

#include "zfgp/families.hpp"
#include "zfgp/graph.hpp"

namespace testing_graphs {

using namespace zfgp;

inline Graph path(int n) { return generate({FamilyKind::path, n}).graph; }
inline Graph cycle(int n) { return generate({FamilyKind::cycle, n}).graph; }
inline Graph complete(int n) { return generate({FamilyKind::complete, n}).graph; }
inline Graph star(int leaves) { return generate({FamilyKind::star, leaves}).graph; }
inline Graph spider(std::vector<int> legs) { return generate({FamilyKind::spider, 0, std::move(legs)}).graph; }
inline Graph partial_sun(int l, std::vector<int> leafed) {
    return generate({FamilyKind::partial_sun, l, std::move(leafed)}).graph;
}
// Triangles 0-1-2 and 2-3-4 sharing vertex 2.
inline Graph bowtie() { return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}); }

// Random graph with edge probability p, not necessarily connected.
inline Graph gnp(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    EdgeList e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) e.emplace_back(u, v);
    return Graph(n, e);
}

inline VertexSet set_of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.insert(v);
    return s;
}

}  // namespace testing_graphs
