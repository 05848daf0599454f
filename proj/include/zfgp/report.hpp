#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "zfgp/harness.hpp"

namespace zfgp {

inline constexpr const char* kToolVersion = "0.3.0";

enum class OutputFormat { json, table };

/// Everything needed to rerun a command. Written as the first line of every
/// report; the wall-clock timestamp lives beside it, not inside it.
struct RunConfig {
    std::string command;
    std::vector<std::string> inputs;  // graph6 lines or file paths
    std::string output;               // empty: standard output
    int n_min = 0;
    int n_max = 0;
    std::string family;
    std::string source;               // graph class or generator for verify / gen
    std::uint64_t seed = 0;
    int count = 0;
    int cap = kDefaultSolverCap;
    int workers = 1;
    OutputFormat format = OutputFormat::json;
    std::string theorem;
    std::string hunt_class;
    std::string relation;
    bool exhaustive = false;
    int budget = 0;
    bool fast_paths = false;
};

std::string to_string(OutputFormat f);

nlohmann::ordered_json to_json(const RunConfig& c);
nlohmann::ordered_json to_json(const ClassFlags& f);
nlohmann::ordered_json to_json(const InvariantRecord& r);
nlohmann::ordered_json to_json(const TrimResult& r, const Graph& g);
nlohmann::ordered_json to_json(const TheoremReport& r);
nlohmann::ordered_json to_json(const HuntReport& r);
nlohmann::ordered_json to_json(const TrimOrderReport& r);

/// Sorted vertex list.
nlohmann::ordered_json vertex_list(VertexSet s);

/// {"type":"run", "version", "config", "timestamp"} as one line.
std::string header_line(const RunConfig& c);

/// Human-readable renderings.
std::string table(const std::vector<InvariantRecord>& records);
std::string table(const TheoremReport& r);
std::string table(const HuntReport& r);

}  // namespace zfgp
