#include "zfgp/report.hpp"

#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>

#include "zfgp/graph6.hpp"

namespace zfgp {

using nlohmann::ordered_json;

std::string to_string(OutputFormat f) { return f == OutputFormat::json ? "json" : "table"; }

ordered_json vertex_list(VertexSet s) {
    ordered_json out = ordered_json::array();
    for (Vertex v : s) out.push_back(v);
    return out;
}

ordered_json to_json(const RunConfig& c) {
    ordered_json j;
    j["command"] = c.command;
    j["inputs"] = c.inputs;
    j["output"] = c.output;
    j["n_min"] = c.n_min;
    j["n_max"] = c.n_max;
    j["family"] = c.family;
    j["source"] = c.source;
    j["seed"] = c.seed;
    j["count"] = c.count;
    j["cap"] = c.cap;
    j["workers"] = c.workers;
    j["format"] = to_string(c.format);
    j["theorem"] = c.theorem;
    j["class"] = c.hunt_class;
    j["relation"] = c.relation;
    j["exhaustive"] = c.exhaustive;
    j["budget"] = c.budget;
    j["fast_paths"] = c.fast_paths;
    return j;
}

ordered_json to_json(const ClassFlags& f) {
    ordered_json j;
    j["connected"] = f.connected;
    j["forest"] = f.forest;
    j["tree"] = f.tree;
    j["unicyclic"] = f.unicyclic;
    j["bicyclic"] = f.bicyclic;
    j["cycle"] = f.cycle_graph;
    j["complete"] = f.complete;
    j["block_graph"] = f.block_graph;
    j["quasi_tree"] = f.quasi_tree;
    j["bipartite"] = f.bipartite;
    j["quasi_vertices"] = vertex_list(f.quasi_vertices);
    return j;
}

ordered_json to_json(const InvariantRecord& r) {
    ordered_json j;
    j["type"] = "record";
    j["id"] = r.id;
    j["graph6"] = r.graph6;
    j["n"] = r.n;
    j["m"] = r.m;
    j["leaves"] = r.leaves;
    j["flags"] = to_json(r.flags);
    if (r.zero_forcing) j["Z"] = {{"value", r.zero_forcing->number}, {"witness", vertex_list(r.zero_forcing->witness)}};
    else j["Z"] = nullptr;
    if (r.general_position)
        j["gp"] = {{"value", r.general_position->number}, {"witness", vertex_list(r.general_position->witness)}};
    else j["gp"] = nullptr;
    if (r.path_cover) j["P"] = {{"value", r.path_cover->number}, {"paths", r.path_cover->paths}};
    else j["P"] = nullptr;
    if (r.trim) {
        const auto& t = *r.trim;
        j["trim"] = {{"n1", t.n1},
                     {"n2", t.n2},
                     {"n3", t.n3},
                     {"trimmed_order", t.trimmed_order},
                     {"partial_sun", t.partial_sun},
                     {"U", t.leafed},
                     {"segments", t.segment_sizes},
                     {"P_via_trim", t.path_cover_via_trim}};
    }
    j["refused"] = r.refused;
    j["timing_ms"] = {{"Z", r.times.zero_forcing_ms},
                      {"gp", r.times.general_position_ms},
                      {"P", r.times.path_cover_ms}};
    return j;
}

ordered_json to_json(const TrimResult& r, const Graph& g) {
    ordered_json j;
    j["type"] = "trim";
    j["graph6"] = encode_graph6(g);
    j["n1"] = r.n1;
    j["n2"] = r.n2;
    j["n3"] = r.n3;
    j["trimmed_vertices"] = r.trimmed.original;
    j["trimmed_graph6"] = encode_graph6(r.trimmed.graph);
    if (auto ps = recognize_partial_sun(r.trimmed.graph)) {
        ordered_json segs = ordered_json::array();
        for (auto& s : ps->segments) {
            ordered_json seg = ordered_json::array();
            for (Vertex v : s) seg.push_back(r.trimmed.to_original(v));
            segs.push_back(seg);
        }
        j["shape"] = "partial_sun";
        j["U"] = vertex_list(r.trimmed.to_original(ps->leafed));
        j["segments"] = segs;
    } else {
        j["shape"] = r.trimmed.graph.order() == 0 ? "empty" : "other";
    }
    ordered_json log = ordered_json::array();
    for (const auto& step : r.log) log.push_back({{"kind", to_string(step.kind)}, {"deleted", vertex_list(step.deleted)}});
    j["log"] = log;
    return j;
}

ordered_json to_json(const TheoremReport& r) {
    ordered_json j;
    j["type"] = "theorem_report";
    j["theorem"] = to_string(r.id);
    j["statement"] = statement(r.id);
    j["source"] = r.source;
    j["checked"] = r.graphs_checked;
    j["not_applicable"] = r.not_applicable;
    j["unchecked"] = r.unchecked;
    ordered_json v = ordered_json::array();
    for (const auto& x : r.violations) v.push_back({{"graph6", x.graph6}, {"detail", x.detail}, {"record", to_json(x.record)}});
    j["violations"] = v;
    j["fast_paths"] = r.fast_paths_used;
    j["verdict"] = r.violations.empty() ? (r.unchecked.empty() ? "pass" : "incomplete") : "fail";
    return j;
}

ordered_json to_json(const HuntReport& r) {
    ordered_json j;
    j["type"] = "hunt_report";
    j["class"] = to_string(r.config.cls);
    j["relation"] = to_string(r.config.relation);
    j["n_min"] = r.config.n_min;
    j["n_max"] = r.config.n_max;
    j["mode"] = r.config.exhaustive ? "exhaustive" : "random";
    if (!r.config.exhaustive) {
        j["seed"] = r.config.seed;
        j["budget"] = r.config.budget;
    }
    j["examined"] = r.examined;
    j["in_class"] = r.in_class;
    ordered_json hits = ordered_json::array();
    for (const auto& h : r.hits)
        hits.push_back({{"graph6", h.graph6},
                        {"n", h.n},
                        {"m", h.m},
                        {"Z", {{"value", h.zero_forcing.number}, {"witness", vertex_list(h.zero_forcing.witness)}}},
                        {"gp",
                         {{"value", h.general_position.number}, {"witness", vertex_list(h.general_position.witness)}}}});
    j["hits"] = hits;
    j["unchecked"] = r.unchecked;
    return j;
}

ordered_json to_json(const TrimOrderReport& r) {
    ordered_json j;
    j["type"] = "trim_order_report";
    j["graphs"] = r.graphs;
    j["orders"] = r.orders;
    j["form_differs"] = r.form_differs;
    j["counters_differ"] = r.counters_differ;
    j["difference_differs"] = r.difference_differs;
    j["replay_failed"] = r.replay_failed;
    return j;
}

std::string header_line(const RunConfig& c) {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream ts;
    ts << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    ordered_json j;
    j["type"] = "run";
    j["version"] = kToolVersion;
    j["config"] = to_json(c);
    j["timestamp"] = ts.str();
    return j.dump();
}

namespace {

std::string list_text(VertexSet s) {
    std::string out;
    for (Vertex v : s) out += (out.empty() ? "" : ",") + std::to_string(v);
    return "{" + out + "}";
}

}  // namespace

std::string table(const std::vector<InvariantRecord>& records) {
    std::ostringstream out;
    out << std::left << std::setw(20) << "graph6" << std::setw(4) << "n" << std::setw(4) << "m" << std::setw(4) << "l"
        << std::setw(5) << "Z" << std::setw(5) << "gp" << std::setw(5) << "P" << "witnesses\n";
    auto num = [](const auto& opt) { return opt ? std::to_string(opt->number) : std::string("-"); };
    for (const auto& r : records) {
        out << std::left << std::setw(20) << r.graph6 << std::setw(4) << r.n << std::setw(4) << r.m << std::setw(4)
            << r.leaves << std::setw(5) << num(r.zero_forcing) << std::setw(5) << num(r.general_position)
            << std::setw(5) << num(r.path_cover);
        if (r.zero_forcing) out << "Z" << list_text(r.zero_forcing->witness) << " ";
        if (r.general_position) out << "gp" << list_text(r.general_position->witness);
        for (const auto& why : r.refused) out << " [refused " << why << "]";
        out << "\n";
    }
    return out.str();
}

std::string table(const TheoremReport& r) {
    std::ostringstream out;
    out << to_string(r.id) << "  " << statement(r.id) << "\n"
        << "source: " << r.source << "\n"
        << "checked " << r.graphs_checked << ", not applicable " << r.not_applicable << ", unchecked "
        << r.unchecked.size() << ", violations " << r.violations.size() << "\n";
    for (const auto& v : r.violations) out << "  " << v.graph6 << "  " << v.detail << "\n";
    out << "verdict: " << (r.pass() ? "pass" : r.violations.empty() ? "incomplete" : "fail") << "\n";
    return out.str();
}

std::string table(const HuntReport& r) {
    std::ostringstream out;
    out << "hunt " << to_string(r.config.cls) << " " << to_string(r.config.relation) << " n=" << r.config.n_min
        << ".." << r.config.n_max << (r.config.exhaustive ? " exhaustive" : " random") << "\n"
        << "examined " << r.examined << ", in class " << r.in_class << ", hits " << r.hits.size() << "\n";
    for (const auto& h : r.hits)
        out << "  " << std::left << std::setw(16) << h.graph6 << " n=" << h.n << " m=" << h.m
            << " Z=" << h.zero_forcing.number << list_text(h.zero_forcing.witness) << " gp=" << h.general_position.number
            << list_text(h.general_position.witness) << "\n";
    if (!r.unchecked.empty()) out << "unchecked " << r.unchecked.size() << "\n";
    return out.str();
}

}  // namespace zfgp
