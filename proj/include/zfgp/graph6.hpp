#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "zfgp/graph.hpp"

namespace zfgp {

/// Malformed graph6 input; `offset` is the byte position of the problem.
class Graph6Error : public GraphError {
public:
    Graph6Error(const std::string& what, std::size_t offset)
        : GraphError(what + " at byte " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Short-form graph6 (n <= 62). An optional ">>graph6<<" header and a
/// trailing newline are accepted; the long form ('~') is rejected.
Graph decode_graph6(std::string_view line);

/// Short-form graph6 line without newline. Throws GraphError for n > 62.
std::string encode_graph6(const Graph& g);

}  // namespace zfgp
