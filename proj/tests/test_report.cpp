#include <doctest.h>

#include "helpers.hpp"
#include "zfgp/report.hpp"

using namespace zfgp;
using namespace testing_graphs;
using nlohmann::json;

TEST_CASE("record serialisation") {
    json j = json::parse(to_json(invariant_record(cycle(5))).dump());
    CHECK(j["type"] == "record");
    CHECK(j["graph6"] == "Dhc");
    CHECK(j["Z"]["value"] == 2);
    CHECK(j["Z"]["witness"] == json::array({0, 1}));
    CHECK(j["gp"]["value"] == 3);
    CHECK(j["P"]["value"] == 2);
    CHECK(j["flags"]["unicyclic"] == true);
    CHECK(j["trim"]["partial_sun"] == true);
    CHECK(j.contains("timing_ms"));

    json refused = json::parse(to_json(invariant_record(Graph(2, {}))).dump());
    CHECK(refused["gp"].is_null());
    CHECK(refused["refused"].size() == 1);
}

TEST_CASE("header carries the configuration and version") {
    RunConfig c;
    c.command = "verify";
    c.theorem = "T1";
    c.n_min = 2;
    c.n_max = 10;
    json h = json::parse(header_line(c));
    CHECK(h["type"] == "run");
    CHECK(h["version"] == kToolVersion);
    CHECK(h["config"]["theorem"] == "T1");
    CHECK(h["config"]["n_max"] == 10);
    CHECK(h["timestamp"].get<std::string>().size() == 20);
    // Only the timestamp differs between two headers of the same run.
    json h2 = json::parse(header_line(c));
    h.erase("timestamp");
    h2.erase("timestamp");
    CHECK(h == h2);
}

TEST_CASE("reports") {
    TheoremReport r = verify_theorem(TheoremId::T1, all_trees(2, 6));
    json j = json::parse(to_json(r).dump());
    CHECK(j["verdict"] == "pass");
    CHECK(j["theorem"] == "T1");
    CHECK(j["violations"].empty());
    CHECK(table(r).find("verdict: pass") != std::string::npos);

    HuntConfig hc;
    hc.cls = HuntClass::bicyclic;
    hc.relation = Relation::gp_gt_z;
    hc.n_min = 4;
    hc.n_max = 5;
    HuntReport hr = hunt(hc);
    json hj = json::parse(to_json(hr).dump());
    CHECK(hj["hits"].size() == hr.hits.size());
    CHECK(hj["mode"] == "exhaustive");
    CHECK(table(hr).find("hits " + std::to_string(hr.hits.size())) != std::string::npos);

    TrimResult t = trimmed_form(star(3));
    json tj = json::parse(to_json(t, star(3)).dump());
    CHECK(tj["n1"] == 1);
    CHECK(tj["n2"] == 3);
    CHECK(tj["shape"] == "empty");
    CHECK(tj["log"].size() == 4);

    std::string text = table(std::vector<InvariantRecord>{invariant_record(complete(4))});
    CHECK(text.find("C~") != std::string::npos);
}
