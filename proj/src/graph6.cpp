#include "zfgp/graph6.hpp"

namespace zfgp {

namespace {

constexpr int kBias = 63;
constexpr int kMaxShortOrder = 62;
constexpr std::string_view kHeader = ">>graph6<<";

}  // namespace

Graph decode_graph6(std::string_view line) {
    std::size_t base = 0;
    if (line.substr(0, kHeader.size()) == kHeader) base = kHeader.size();
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.size() <= base) throw Graph6Error("empty graph6 line", base);

    const int head = static_cast<unsigned char>(line[base]);
    if (head == '~') throw Graph6Error("unsupported form: long-form graph6 (n > 62)", base);
    if (head < kBias || head > kBias + kMaxShortOrder) throw Graph6Error("malformed graph6 header byte", base);
    const int n = head - kBias;

    const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t need = (pairs + 5) / 6;
    const std::size_t have = line.size() - base - 1;
    if (have < need) throw Graph6Error("truncated graph6 bit payload", line.size());
    if (have > need) throw Graph6Error("trailing bytes after graph6 payload", base + 1 + need);

    EdgeList edges;
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const std::size_t pos = base + 1 + bit / 6;
            const int byte = static_cast<unsigned char>(line[pos]) - kBias;
            if (byte < 0 || byte > 63) throw Graph6Error("graph6 payload byte out of range", pos);
            if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    for (std::size_t pos = base + 1; pos < line.size(); ++pos) {
        const int byte = static_cast<unsigned char>(line[pos]) - kBias;
        if (byte < 0 || byte > 63) throw Graph6Error("graph6 payload byte out of range", pos);
    }
    return Graph(n, edges);
}

std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kMaxShortOrder) throw GraphError("graph6 short form supports at most 62 vertices");
    std::string out(1, static_cast<char>(n + kBias));
    int acc = 0, bits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = bits = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + kBias));
    return out;
}

}  // namespace zfgp
