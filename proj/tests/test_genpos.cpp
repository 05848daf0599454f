#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "zfgp/genpos.hpp"

using namespace zfgp;
using namespace testing_graphs;

TEST_CASE("conflict triples") {
    CHECK(conflict_triples(complete(4)).empty());
    auto p3 = conflict_triples(path(3));
    REQUIRE(p3.size() == 1);
    CHECK(p3[0] == ConflictTriple{0, 2, 1});
    CHECK(conflict_triples(cycle(4)).size() == 4);
    CHECK_THROWS_AS(conflict_triples(Graph(3, {{0, 1}})), GraphError);

    std::mt19937_64 rng(41);
    for (int i = 0; i < 60; ++i) {
        Graph g = random_connected(3 + static_cast<int>(rng() % 7), rng);
        auto d = oracle::distances(g);
        std::vector<ConflictTriple> want;
        for (int a = 0; a < g.order(); ++a)
            for (int b = a + 1; b < g.order(); ++b)
                for (int m = 0; m < g.order(); ++m)
                    if (m != a && m != b && d[a][m] + d[m][b] == d[a][b]) want.push_back({a, b, m});
        CHECK(conflict_triples(g) == want);
    }
}

TEST_CASE("general position sets") {
    auto v = find_position_violation(path(5), set_of({0, 1, 2}));
    REQUIRE(v.has_value());
    CHECK(*v == ConflictTriple{0, 2, 1});
    CHECK_FALSE(is_general_position_set(path(5), set_of({0, 1, 2})));

    std::mt19937_64 rng(42);
    for (int i = 0; i < 50; ++i) {
        Graph t = random_tree(2 + static_cast<int>(rng() % 12), rng);
        CHECK(is_general_position_set(t, leaves(t)));
    }

    // Cycle 0..4 with a pendant path 0-5-6: the cycle neighbours of the
    // branch vertex together with the leaf.
    Graph g(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {5, 6}});
    CHECK(is_general_position_set(g, set_of({1, 4, 6})));
}

TEST_CASE("known values") {
    CHECK(gp_number(star(4)).number == 4);
    CHECK(gp_number(complete(6)).number == 6);
    CHECK(gp_number(cycle(4)).number == 2);
    CHECK(gp_number(cycle(5)).number == 3);
    CHECK(gp_number(Graph(1, {})).number == 1);
    CHECK(gp_number(Graph(0, {})).number == 0);
    CHECK_THROWS_AS(gp_number(Graph(3, {{0, 1}})), GraphError);
    CHECK_THROWS_AS(gp_number(path(17)), CapExceeded);
}

TEST_CASE("exact gp agrees with subset search") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 200; ++i) {
        Graph g = random_connected(1 + static_cast<int>(rng() % 10), rng);
        GeneralPositionResult r = gp_number(g);
        CHECK(r.number == oracle::gp(g));
        CHECK(r.witness.size() == r.number);
        CHECK(is_general_position_set(g, r.witness));
    }
}

TEST_CASE("witness is the lexicographically first maximum set") {
    std::mt19937_64 rng(44);
    for (int i = 0; i < 60; ++i) {
        Graph g = random_connected(2 + static_cast<int>(rng() % 7), rng);
        GeneralPositionResult r = gp_number(g);
        for (unsigned mask = 0; mask < (1u << g.order()); ++mask) {
            VertexSet s(mask);
            if (s.size() == r.number && is_general_position_set(g, s)) CHECK_FALSE(lex_less(s, r.witness));
        }
    }
}

TEST_CASE("subsets of general position sets stay in general position") {
    std::mt19937_64 rng(45);
    for (int i = 0; i < 40; ++i) {
        Graph g = random_connected(3 + static_cast<int>(rng() % 10), rng);
        VertexSet w = gp_number(g).witness;
        for (std::uint64_t sub = w.bits();; sub = (sub - 1) & w.bits()) {
            CHECK(is_general_position_set(g, VertexSet(sub)));
            if (sub == 0) break;
        }
    }
}

TEST_CASE("disconnected graphs") {
    std::mt19937_64 rng(46);
    for (int i = 0; i < 80; ++i) {
        Graph g = gnp(1 + static_cast<int>(rng() % 9), 0.25, rng);
        GeneralPositionResult r = gp_number_unrestricted(g);
        CHECK(r.number == oracle::gp(g));
        std::vector<int> w;
        for (Vertex v : r.witness) w.push_back(v);
        CHECK(static_cast<int>(w.size()) == r.number);
        CHECK(oracle::general_position(oracle::distances(g), w));
    }
}

TEST_CASE("tree shortcut") {
    CHECK(gp_tree_fast(path(9)) == 2);
    CHECK(gp_tree_fast(star(7)) == 7);
    // Double star: adjacent centres with 3 and 4 leaves.
    Graph ds(9, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}, {1, 7}, {1, 8}});
    CHECK(gp_tree_fast(ds) == 7);
    CHECK(gp_number(ds).number == 7);
}

TEST_CASE("block graph shortcut") {
    CHECK(gp_block_fast(complete(5)) == 5);
    CHECK(gp_block_fast(bowtie()) == 4);
    CHECK(gp_number(bowtie()).number == 4);
    // Three triangles in a chain: 0-1-2, 2-3-4, 4-5-6.
    Graph chain(7, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}, {4, 5}, {5, 6}, {4, 6}});
    CHECK(gp_block_fast(chain) == simplicial_vertices(chain).size());
    CHECK(gp_number(chain).number == gp_block_fast(chain));
}

TEST_CASE("gp is at least the leaf count") {
    std::mt19937_64 rng(47);
    for (int i = 0; i < 100; ++i) {
        Graph g = random_connected(2 + static_cast<int>(rng() % 13), rng);
        CHECK(gp_number(g).number >= leaves(g).size());
    }
}
