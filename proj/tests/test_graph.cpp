#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "zfgp/graph.hpp"

using namespace zfgp;
using namespace testing_graphs;

TEST_CASE("construction") {
    Graph p3(3, {{0, 1}, {1, 2}});
    CHECK(p3.order() == 3);
    CHECK(p3.size() == 2);

    Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    for (Vertex v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);

    CHECK(complete(5).size() == 10);

    SUBCASE("duplicates collapse, orientation is irrelevant") {
        Graph g(3, {{0, 1}, {1, 0}, {0, 1}});
        CHECK(g.size() == 1);
        CHECK(g.adjacent(1, 0));
    }
    SUBCASE("bad input") {
        CHECK_THROWS_AS(Graph(3, {{0, 0}}), GraphError);
        CHECK_THROWS_AS(Graph(3, {{0, 3}}), GraphError);
        CHECK_THROWS_AS(Graph(3, {{-1, 2}}), GraphError);
        CHECK_THROWS_AS(Graph(65, {}), GraphError);
        CHECK_THROWS_AS(p3.neighbors(5), GraphError);
    }
    SUBCASE("degree sum") {
        std::mt19937_64 rng(1);
        for (int i = 0; i < 50; ++i) {
            Graph g = gnp(10, 0.3, rng);
            int sum = 0;
            for (Vertex v = 0; v < g.order(); ++v) sum += g.degree(v);
            CHECK(sum == 2 * g.size());
            for (auto [u, v] : g.edges()) CHECK(u < v);
        }
    }
}

TEST_CASE("classification") {
    ClassFlags p4 = classify(path(4));
    CHECK(p4.tree);
    CHECK(p4.connected);
    CHECK(p4.forest);
    CHECK(p4.quasi_tree);
    CHECK(p4.quasi_vertices.size() == 2);  // the two ends

    ClassFlags c5 = classify(cycle(5));
    CHECK(c5.unicyclic);
    CHECK(c5.cycle_graph);
    CHECK(c5.quasi_tree);
    CHECK(c5.quasi_vertices.size() == 5);
    CHECK_FALSE(c5.bipartite);

    ClassFlags k4e = classify(Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}));
    CHECK(k4e.bicyclic);
    CHECK_FALSE(k4e.block_graph);

    ClassFlags k4 = classify(complete(4));
    CHECK(k4.complete);
    CHECK(k4.block_graph);
    CHECK_FALSE(k4.quasi_tree);

    CHECK(classify(bowtie()).block_graph);

    ClassFlags two_edges = classify(Graph(4, {{0, 1}, {2, 3}}));
    CHECK(two_edges.forest);
    CHECK_FALSE(two_edges.tree);
    CHECK_FALSE(two_edges.quasi_tree);

    ClassFlags empty = classify(Graph(0, {}));
    CHECK_FALSE(empty.tree);
    CHECK(empty.forest);
}

TEST_CASE("implications between flags") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        Graph g = gnp(1 + static_cast<int>(rng() % 9), 0.35, rng);
        ClassFlags f = classify(g);
        if (f.tree) CHECK((f.connected && f.forest && g.size() == g.order() - 1));
        if (f.unicyclic) CHECK((f.connected && g.size() == g.order()));
        if (f.bicyclic) CHECK((f.connected && g.size() == g.order() + 1));
        for (Vertex x : f.quasi_vertices) CHECK(is_tree(delete_vertices(g, VertexSet{x}).graph));
    }
}

TEST_CASE("block graphs agree with the definition" * doctest::timeout(60)) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 400; ++i) {
        Graph g = gnp(2 + static_cast<int>(rng() % 6), 0.5, rng);
        if (!is_connected(g)) continue;
        CHECK_MESSAGE(is_block_graph(g) == oracle::is_block_graph(g), g.edges().size());
    }
}

TEST_CASE("leaves and simplicial vertices") {
    CHECK(leaves(star(4)) == set_of({1, 2, 3, 4}));
    CHECK(leaves(cycle(6)).empty());
    CHECK(leaves(spider({2, 2, 3})).size() == 3);

    CHECK(simplicial_vertices(complete(4)) == set_of({0, 1, 2, 3}));
    CHECK(simplicial_vertices(path(4)) == set_of({0, 3}));
    CHECK(simplicial_vertices(bowtie()) == set_of({0, 1, 3, 4}));
}

TEST_CASE("unicyclic structure") {
    // Triangle 0-1-2 with pendant path 2-3-4-5.
    Graph g(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}});
    auto cyc = unique_cycle(g);
    CHECK(VertexSet::from_range(cyc) == set_of({0, 1, 2}));
    CHECK(unique_cycle(cycle(5)).size() == 5);
    CHECK_THROWS_AS(unique_cycle(path(4)), GraphError);

    Graph pendant(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
    Subgraph rt = root_tree(pendant, 0);
    CHECK(rt.graph.order() == 2);
    CHECK(rt.graph.size() == 1);

    CHECK(root_tree(cycle(4), 1).graph.order() == 1);

    // C3 with a three-leaf star hanging at vertex 0.
    Graph claw(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {0, 4}, {0, 5}});
    Subgraph star_root = root_tree(claw, 0);
    CHECK(star_root.graph.order() == 4);
    CHECK(star_root.graph.degree(0) == 3);

    CHECK(branch_vertices(cycle(5)).empty());
    CHECK(branch_vertices(Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}})) == set_of({0}));
    CHECK(branch_vertices(partial_sun(6, {0, 2, 4})).size() == 3);
}

TEST_CASE("subgraphs") {
    Subgraph p3 = delete_vertices(path(4), set_of({3}));
    CHECK(p3.graph == path(3));

    Subgraph forest = delete_vertices(cycle(6), set_of({0}));
    CHECK(is_tree(forest.graph));

    Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
    Subgraph split = delete_vertices(g, set_of({0}));
    CHECK(split.graph.order() == 4);
    CHECK(components(split.graph).size() == 2);
    CHECK(split.to_original(0) == 1);

    Subgraph none = induced_subgraph(g, VertexSet{});
    CHECK(none.graph.order() == 0);

    CHECK(induces_path(g, set_of({1, 2, 3})));
    CHECK_FALSE(induces_path(g, set_of({0, 1, 2, 3})));
    CHECK(induces_path(g, set_of({4})));
    CHECK(edges_within(g, set_of({0, 1, 4})) == 2);
}

TEST_CASE("components") {
    Graph g(6, {{0, 1}, {2, 3}, {3, 4}});
    auto cs = components(g);
    REQUIRE(cs.size() == 3);
    CHECK(cs[0] == set_of({0, 1}));
    CHECK(cs[1] == set_of({2, 3, 4}));
    CHECK(cs[2] == set_of({5}));
    CHECK(component_of(g, 3, g.vertices()) == set_of({2, 3, 4}));
    CHECK(is_forest(g));
    CHECK_FALSE(is_connected(g));
}
