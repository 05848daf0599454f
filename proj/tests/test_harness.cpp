#include <doctest.h>

#include "helpers.hpp"
#include "zfgp/canonical.hpp"
#include "zfgp/graph6.hpp"
#include "zfgp/harness.hpp"

using namespace zfgp;
using namespace testing_graphs;

TEST_CASE("invariant records") {
    InvariantRecord k4 = invariant_record(complete(4));
    REQUIRE(k4.zero_forcing);
    REQUIRE(k4.general_position);
    REQUIRE(k4.path_cover);
    CHECK(k4.zero_forcing->number == 3);
    CHECK(k4.general_position->number == 4);
    CHECK(k4.path_cover->number == 2);
    CHECK_FALSE(k4.trim.has_value());

    InvariantRecord p6 = invariant_record(path(6));
    CHECK(p6.zero_forcing->number == 1);
    CHECK(p6.general_position->number == 2);
    CHECK(p6.path_cover->number == 1);

    InvariantRecord c5 = invariant_record(cycle(5));
    CHECK(c5.zero_forcing->number == 2);
    CHECK(c5.general_position->number == 3);
    CHECK(c5.path_cover->number == 2);
    REQUIRE(c5.trim.has_value());
    CHECK(c5.trim->partial_sun);
    CHECK(c5.trim->path_cover_via_trim == 2);

    for (const Graph& g : {complete(4), path(6), cycle(5), bowtie()})
        CHECK_FALSE(recheck_record(g, invariant_record(g)).has_value());

    InvariantRecord tampered = invariant_record(cycle(5));
    tampered.zero_forcing->witness = set_of({0, 2});
    CHECK(recheck_record(cycle(5), tampered).has_value());
}

TEST_CASE("refused fields") {
    InvariantRecord big = invariant_record(path(18));
    CHECK_FALSE(big.zero_forcing.has_value());
    CHECK_FALSE(big.general_position.has_value());
    CHECK(big.refused.size() == 3);

    InvariantRecord split = invariant_record(Graph(4, {{0, 1}, {2, 3}}));
    CHECK(split.zero_forcing.has_value());
    CHECK_FALSE(split.general_position.has_value());
    REQUIRE(split.refused.size() == 1);
    CHECK(split.refused[0].find("disconnected") != std::string::npos);
}

TEST_CASE("theorem checks on small sources") {
    CHECK(verify_theorem(TheoremId::T1, all_trees(2, 9)).pass());
    CHECK(verify_theorem(TheoremId::T7, all_trees(2, 8)).pass());
    CHECK(verify_theorem(TheoremId::T8, all_trees(2, 8)).pass());
    CHECK(verify_theorem(TheoremId::T2, all_unicyclic(3, 7)).pass());
    CHECK(verify_theorem(TheoremId::T6, all_unicyclic(3, 7)).pass());
    CHECK(verify_theorem(TheoremId::T10a, all_unicyclic(3, 7)).pass());
    CHECK(verify_theorem(TheoremId::T10b, all_unicyclic(3, 7)).pass());
    CHECK(verify_theorem(TheoremId::T3, all_block_graphs(2, 6)).pass());
    CHECK(verify_theorem(TheoremId::T9, all_block_graphs(1, 6)).pass());
    CHECK(verify_theorem(TheoremId::T4, random_quasi_trees(60, 12, QuasiTreeMode::no_pendants, 1)).pass());
    CHECK(verify_theorem(TheoremId::T5, random_forests(60, 4, 12, 2)).pass());

    TheoremReport bowtie_only = verify_theorem(TheoremId::T3, {"bowtie", {bowtie()}});
    CHECK(bowtie_only.pass());
    CHECK(bowtie_only.graphs_checked == 1);

    // Statements outside their class are counted, not checked.
    TheoremReport na = verify_theorem(TheoremId::T1, {"cycles", {cycle(5), cycle(6)}});
    CHECK(na.graphs_checked == 0);
    CHECK(na.not_applicable == 2);
}

TEST_CASE("cap-refused graphs are unchecked, never passed") {
    HarnessOptions small;
    small.cap = 6;
    TheoremReport r = verify_theorem(TheoremId::T1, all_trees(5, 7), small);
    CHECK_FALSE(r.unchecked.empty());
    CHECK_FALSE(r.pass());
    CHECK(r.violations.empty());
}

TEST_CASE("fast paths give the same verdicts") {
    CHECK(fast_path_self_check());
    HarnessOptions fast;
    fast.fast_paths = true;
    TheoremReport r = verify_theorem(TheoremId::T2, all_unicyclic(3, 7), fast);
    CHECK(r.fast_paths_used);
    CHECK(r.pass());
    CHECK(r.graphs_checked == verify_theorem(TheoremId::T2, all_unicyclic(3, 7)).graphs_checked);
}

TEST_CASE("parsing") {
    CHECK(parse_theorem("T10a") == TheoremId::T10a);
    CHECK_FALSE(parse_theorem("T11").has_value());
    CHECK(parse_relation("Z > gp") == Relation::z_gt_gp);
    CHECK(parse_relation("gp>=Z") == Relation::gp_ge_z);
    CHECK(parse_relation("Z<gp") == Relation::gp_gt_z);
    CHECK_FALSE(parse_relation("Z~gp").has_value());
    CHECK(parse_hunt_class("quasi_tree") == HuntClass::quasi_tree);
    CHECK_FALSE(parse_hunt_class("planar").has_value());
    for (auto id : {TheoremId::T1, TheoremId::T5, TheoremId::T10b}) CHECK(parse_theorem(to_string(id)) == id);
}

TEST_CASE("hunts") {
    HuntConfig trees;
    trees.cls = HuntClass::tree;
    trees.relation = Relation::z_ge_gp;
    trees.n_min = 2;
    trees.n_max = 10;
    CHECK(hunt(trees).hits.empty());

    HuntConfig h2;
    h2.cls = HuntClass::bicyclic;
    h2.relation = Relation::gp_gt_z;
    h2.n_min = 4;
    h2.n_max = 6;
    HuntReport r = hunt(h2);
    CHECK_FALSE(r.hits.empty());
    for (const auto& hit : r.hits) {
        Graph g = decode_graph6(hit.graph6);
        CHECK(classify(g).bicyclic);
        CHECK(hit.general_position.number > hit.zero_forcing.number);
        CHECK(is_zero_forcing_set(g, hit.zero_forcing.witness));
        CHECK(is_general_position_set(g, hit.general_position.witness));
    }
    // The bowtie is among them.
    bool bowtie_found = false;
    for (const auto& hit : r.hits) bowtie_found = bowtie_found || hit.graph6 == encode_graph6(relabel(bowtie(), canonical_labeling(bowtie())));
    CHECK(bowtie_found);
}

TEST_CASE("hunt results do not depend on the worker count") {
    HuntConfig c;
    c.cls = HuntClass::any;
    c.relation = Relation::z_eq_gp;
    c.n_min = 3;
    c.n_max = 7;
    HuntReport one = hunt(c);
    c.options.workers = 4;
    HuntReport four = hunt(c);
    REQUIRE(one.hits.size() == four.hits.size());
    for (std::size_t i = 0; i < one.hits.size(); ++i) CHECK(one.hits[i].graph6 == four.hits[i].graph6);

    HuntConfig rnd;
    rnd.cls = HuntClass::quasi_tree;
    rnd.relation = Relation::gp_ge_z;
    rnd.exhaustive = false;
    rnd.seed = 5;
    rnd.budget = 50;
    rnd.n_min = 6;
    rnd.n_max = 10;
    HuntReport a = hunt(rnd);
    rnd.options.workers = 3;
    HuntReport b = hunt(rnd);
    CHECK(a.examined == 250);
    REQUIRE(a.hits.size() == b.hits.size());
    for (std::size_t i = 0; i < a.hits.size(); ++i) CHECK(a.hits[i].key == b.hits[i].key);
}

TEST_CASE("trim order measurement") {
    std::mt19937_64 rng(71);
    std::vector<Graph> graphs;
    for (int i = 0; i < 30; ++i) graphs.push_back(random_unicyclic(4 + static_cast<int>(rng() % 9), rng));
    TrimOrderReport r = measure_trim_orders(graphs, 5, 1);
    CHECK(r.graphs == 30);
    CHECK(r.form_differs.empty());
    CHECK(r.replay_failed.empty());
}

TEST_CASE("parallel_for propagates exceptions") {
    CHECK_THROWS_AS(parallel_for(100, 4,
                                 [](std::size_t i) {
                                     if (i == 37) throw std::runtime_error("boom");
                                 }),
                    std::runtime_error);
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), 8, [&](std::size_t i) { hits[i] += 1; });
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
}
