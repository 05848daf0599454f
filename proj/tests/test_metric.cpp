#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "zfgp/metric.hpp"

using namespace zfgp;
using namespace testing_graphs;

TEST_CASE("distances") {
    DistanceMatrix p4(path(4));
    CHECK(p4(0, 3) == 3);
    CHECK(p4(3, 0) == 3);
    CHECK(DistanceMatrix(cycle(6))(0, 3) == 3);

    Graph forest(4, {{0, 1}, {2, 3}});
    DistanceMatrix d(forest);
    CHECK_FALSE(d.reachable(0, 2));
    CHECK(d(0, 2) == d.unreachable());
    CHECK(d(0, 2) > 3);

    std::mt19937_64 rng(21);
    for (int i = 0; i < 200; ++i) {
        Graph g = gnp(1 + static_cast<int>(rng() % 10), 0.3, rng);
        DistanceMatrix got = all_pairs_distances(g);
        auto want = oracle::distances(g);
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v = 0; v < g.order(); ++v) {
                if (want[u][v] >= oracle::kInf) CHECK_FALSE(got.reachable(u, v));
                else CHECK(got(u, v) == want[u][v]);
            }
    }
}

TEST_CASE("intervals") {
    DistanceMatrix d3(path(3));
    CHECK(interval(path(3), 0, 2, d3) == set_of({0, 1, 2}));
    DistanceMatrix d4(cycle(4));
    CHECK(interval(cycle(4), 0, 2, d4) == set_of({0, 1, 2, 3}));
    DistanceMatrix d5(cycle(5));
    CHECK(interval(cycle(5), 0, 2, d5) == set_of({0, 1, 2}));
    CHECK(interval(cycle(5), 1, 1, d5) == set_of({1}));

    Graph forest(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(interval(forest, 0, 3, DistanceMatrix(forest)), GraphError);

    std::mt19937_64 rng(22);
    for (int i = 0; i < 60; ++i) {
        Graph g = random_connected(2 + static_cast<int>(rng() % 7), rng);
        DistanceMatrix d(g);
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v = u + 1; v < g.order(); ++v) {
                auto want = oracle::interval(g, u, v);
                VertexSet w;
                for (int x : want) w.insert(x);
                CHECK(interval(g, u, v, d) == w);
            }
    }
}
