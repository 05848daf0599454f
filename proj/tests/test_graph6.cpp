#include <doctest.h>

#include "helpers.hpp"
#include "zfgp/graph6.hpp"

using namespace zfgp;
using namespace testing_graphs;

TEST_CASE("hand-checked encodings") {
    // K3: n=3 -> chr(63+3)='B'; bits x(0,1) x(0,2) x(1,2) = 111 padded to
    // 111000 = 56 -> chr(63+56)='w'.
    CHECK(encode_graph6(complete(3)) == "Bw");
    // P3 0-1-2: bits 1 0 1 -> 101000 = 40 -> 'g'.
    CHECK(encode_graph6(path(3)) == "Bg");
    CHECK(encode_graph6(Graph(0, {})) == "?");
    CHECK(encode_graph6(Graph(1, {})) == "@");
    Graph k3 = decode_graph6("Bw");
    CHECK(k3 == complete(3));
}

TEST_CASE("round trip") {
    CHECK(decode_graph6(encode_graph6(path(5))) == path(5));
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : enumerate_connected(n)) CHECK(decode_graph6(encode_graph6(g)) == g);
    std::mt19937_64 rng(61);
    for (int i = 0; i < 100; ++i) {
        Graph g = gnp(static_cast<int>(rng() % 63), 0.2, rng);
        CHECK(decode_graph6(encode_graph6(g)) == g);
    }
}

TEST_CASE("header and newline") {
    CHECK(decode_graph6(">>graph6<<Bw") == complete(3));
    CHECK(decode_graph6("Bw\n") == complete(3));
    CHECK(decode_graph6("Bw\r\n") == complete(3));
}

TEST_CASE("malformed input") {
    auto offset_of = [](std::string_view s) -> std::size_t {
        try {
            decode_graph6(s);
        } catch (const Graph6Error& e) {
            return e.offset();
        }
        return std::string::npos;
    };
    CHECK_THROWS_WITH_AS(decode_graph6("~??~"), doctest::Contains("unsupported form"), Graph6Error);
    CHECK_THROWS_AS(decode_graph6(""), Graph6Error);
    CHECK(offset_of("B") == 1);     // truncated payload
    CHECK(offset_of("Bww") == 2);   // trailing payload
    CHECK(offset_of("B\x20") == 1); // byte below 63
    CHECK(offset_of("\x20") == 0);  // bad header byte
}
