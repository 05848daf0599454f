#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "oracles.hpp"
#include "zfgp/canonical.hpp"

using namespace zfgp;
using namespace testing_graphs;

namespace {

std::vector<Vertex> random_perm(int n, std::mt19937_64& rng) {
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace

TEST_CASE("relabelled copies share a key") {
    CHECK(canonical_key(Graph(3, {{0, 1}, {1, 2}})) == canonical_key(Graph(3, {{1, 0}, {0, 2}})));
    CHECK(canonical_key(cycle(4)) != canonical_key(path(4)));

    std::mt19937_64 rng(3);
    for (int i = 0; i < 300; ++i) {
        Graph g = gnp(1 + static_cast<int>(rng() % 12), 0.4, rng);
        Graph h = relabel(g, random_perm(g.order(), rng));
        CHECK(canonical_key(g) == canonical_key(h));
    }
}

TEST_CASE("canonical labelling realises the key") {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 100; ++i) {
        Graph g = gnp(2 + static_cast<int>(rng() % 9), 0.5, rng);
        CanonicalForm f = canonical_form(g);
        Graph c = relabel(g, f.labeling);
        CHECK(canonical_key(c) == f.key);
        // The canonical representative of a relabelled copy is the same graph.
        Graph h = relabel(g, random_perm(g.order(), rng));
        CHECK(relabel(h, canonical_labeling(h)) == c);
    }
}

TEST_CASE("keys separate non-isomorphic graphs") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 400; ++i) {
        const int n = 2 + static_cast<int>(rng() % 6);
        Graph g = gnp(n, 0.5, rng), h = gnp(n, 0.5, rng);
        CHECK((canonical_key(g) == canonical_key(h)) == oracle::isomorphic(g, h));
    }
}

TEST_CASE("highly symmetric graphs") {
    // Regular graphs stress the individualisation search.
    std::vector<Graph> regular{cycle(12), complete(12), Graph(12, {})};
    EdgeList prism;  // C6 x K2
    for (int i = 0; i < 6; ++i) {
        prism.emplace_back(i, (i + 1) % 6);
        prism.emplace_back(6 + i, 6 + (i + 1) % 6);
        prism.emplace_back(i, 6 + i);
    }
    regular.emplace_back(12, prism);
    EdgeList two_c6;
    for (int i = 0; i < 6; ++i) {
        two_c6.emplace_back(i, (i + 1) % 6);
        two_c6.emplace_back(6 + i, 6 + (i + 1) % 6);
    }
    regular.emplace_back(12, two_c6);
    std::mt19937_64 rng(6);
    for (const auto& g : regular) CHECK(canonical_key(g) == canonical_key(relabel(g, random_perm(12, rng))));
    // C12 and two disjoint C6 are both 2-regular on 12 vertices.
    CHECK(canonical_key(cycle(12)) != canonical_key(Graph(12, two_c6)));
}

TEST_CASE("labelled trees on four vertices fall into two classes") {
    auto trees = oracle::pruefer_trees(4);
    REQUIRE(trees.size() == 16);
    std::set<std::string> keys;
    for (const auto& t : trees) keys.insert(canonical_key(t));
    CHECK(keys.size() == 2);
}

TEST_CASE("cap") {
    CHECK_THROWS_AS(canonical_key(path(13)), CapExceeded);
    CHECK_NOTHROW(canonical_key(path(13), 13));
    CHECK(canonical_key(Graph(0, {})).size() == 1);
}

TEST_CASE("relabel rejects a wrong-size permutation") { CHECK_THROWS_AS(relabel(path(3), {0, 1}), GraphError); }
