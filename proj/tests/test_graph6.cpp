#include <doctest.h>

#include <random>
#include <sstream>

#include "apexg/graph6.hpp"
#include "apexg/small_graph.hpp"
#include "test_util.hpp"

using namespace apexg;

TEST_CASE("encode known graphs") {
    CHECK(g6::encode_graph6(empty_graph(1)) == "@");
    CHECK(g6::encode_graph6(path_graph(3)) == "Bg");
    CHECK(g6::encode_graph6(path_graph(4)) == "Ch");
    CHECK(g6::encode_graph6(cycle_graph(5)) == "Dhc");
    CHECK(g6::encode_graph6(complete_graph(4)) == "C~");
    CHECK(g6::encode_graph6(empty_graph(2)) == "A?");
}

TEST_CASE("decode known strings") {
    CHECK(g6::decode_graph6("@") == empty_graph(1));
    CHECK(g6::decode_graph6("Ch") == path_graph(4));
    CHECK(g6::decode_graph6("Dhc") == cycle_graph(5));
    CHECK(g6::decode_graph6(">>graph6<<Ch") == path_graph(4));
}

TEST_CASE("round trips are exact") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + trial % 9;
        const SmallGraph g = testutil::random_graph(n, 0.5, rng);
        const std::string s = g6::encode_graph6(g);
        CHECK(g6::decode_graph6(s) == g);
        CHECK(g6::encode_graph6(g6::decode_graph6(s)) == s);
        CHECK(s.size() == 1 + (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6);
    }
}

TEST_CASE("decode error kinds") {
    auto kind_of = [](const std::string& s) {
        try {
            g6::decode_graph6(s);
        } catch (const g6::DecodeError& e) {
            return e.kind();
        }
        FAIL("expected DecodeError for ", s);
        return g6::ErrorKind::Io;
    };

    CHECK(kind_of("") == g6::ErrorKind::Truncated);
    CHECK(kind_of("C") == g6::ErrorKind::Truncated);
    CHECK(kind_of("Dhc?") == g6::ErrorKind::TrailingData);
    CHECK(kind_of("ChW") == g6::ErrorKind::TrailingData);
    CHECK(kind_of("AC") == g6::ErrorKind::NonzeroPadding);
    CHECK(kind_of("?") == g6::ErrorKind::UnsupportedOrder);   // order 0
    CHECK(kind_of("_??????") == g6::ErrorKind::UnsupportedOrder);  // order 32
    CHECK(kind_of("~??") == g6::ErrorKind::UnsupportedOrder);  // multi-byte order
    CHECK(kind_of(":Fa@x") == g6::ErrorKind::UnsupportedFormat);
    CHECK(kind_of(";Fa@x") == g6::ErrorKind::UnsupportedFormat);
    CHECK(kind_of("&C??") == g6::ErrorKind::UnsupportedFormat);
    CHECK(kind_of("C\x1f") == g6::ErrorKind::MalformedCharacter);
    CHECK(kind_of("C\x7f") == g6::ErrorKind::MalformedCharacter);
}

TEST_CASE("stream reading") {
    std::istringstream in("@\nCh\n");
    const auto graphs = g6::read_g6_stream(in);
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0] == empty_graph(1));
    CHECK(graphs[1] == path_graph(4));
}

TEST_CASE("stream tolerates header, blank lines, and CRLF") {
    std::istringstream in(">>graph6<<@\r\n\nCh\r\n");
    const auto graphs = g6::read_g6_stream(in);
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0] == empty_graph(1));
    CHECK(graphs[1] == path_graph(4));
}

TEST_CASE("stream errors carry line numbers") {
    std::istringstream in("@\nCh\nC\n");
    try {
        g6::read_g6_stream(in);
        FAIL("expected DecodeError");
    } catch (const g6::DecodeError& e) {
        CHECK(e.kind() == g6::ErrorKind::Truncated);
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).rfind("line 3:", 0) == 0);
    }
}

TEST_CASE("lenient stream reading collects issues") {
    std::istringstream in("@\nC\nCh\nA@\n");
    const auto res = g6::read_g6_stream_lenient(in);
    REQUIRE(res.graphs.size() == 2);
    CHECK(res.graphs[0] == empty_graph(1));
    CHECK(res.graphs[1] == path_graph(4));
    REQUIRE(res.issues.size() == 2);
    CHECK(res.issues[0].line == 2);
    CHECK(res.issues[0].kind == g6::ErrorKind::Truncated);
    CHECK(res.issues[1].line == 4);
    CHECK(res.issues[1].kind == g6::ErrorKind::NonzeroPadding);
}

TEST_CASE("stream writing") {
    std::ostringstream out;
    g6::write_g6_stream({empty_graph(1), path_graph(4)}, out);
    CHECK(out.str() == "@\nCh\n");
}
