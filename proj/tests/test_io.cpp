#include "doctest.h"

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "poc/io.hpp"

using namespace poc;

// Reference strings produced by an independent graph6 encoder.
TEST_CASE("graph6 known encodings")
{
    CHECK(emit_graph6(path_graph(2)) == "A_");
    CHECK(emit_graph6(path_graph(5)) == "DhC");
    CHECK(emit_graph6(cycle_graph(5)) == "Dhc");
    CHECK(emit_graph6(complete_graph(4)) == "C~");
    CHECK(emit_graph6(Graph::edgeless(3)) == "B?");
    CHECK(emit_graph6(Graph::from_edges(7, {{0, 1}, {1, 3}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 3}})) ==
          "FrCGg");
    auto p63 = emit_graph6(path_graph(63));
    CHECK(p63.substr(0, 8) == "~??~hCGG");
    CHECK(emit_graph6(complete_graph(63)).substr(0, 8) == "~??~~~~~");
}

TEST_CASE("graph6 decoding")
{
    CHECK(parse_graph6("DhC") == path_graph(5));
    CHECK(parse_graph6(">>graph6<<Dhc\r\n") == cycle_graph(5));
    CHECK(parse_graph6("@").vertex_count() == 1);
    auto big = parse_graph6(emit_graph6(path_graph(63)));
    CHECK(big == path_graph(63));
}

TEST_CASE("graph6 errors carry a reason")
{
    CHECK_THROWS_WITH_AS(parse_graph6("D!c"), doctest::Contains("character"), ParseError);
    CHECK_THROWS_AS(parse_graph6("Dh"), ParseError);
    CHECK_THROWS_AS(parse_graph6("DhCC"), ParseError);
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6(emit_graph6(path_graph(40)), 30), ParseError);
}

TEST_CASE("graph6 streams report line numbers")
{
    std::istringstream in("DhC\n\nA_\nB!\n");
    std::vector<std::size_t> lines;
    try {
        for_each_graph6(in, [&](Graph, std::size_t line) { lines.push_back(line); });
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
        CHECK(std::string(e.what()).starts_with("line 4: "));
    }
    CHECK(lines == std::vector<std::size_t>{1, 3});

    std::istringstream doc("DhC\nDhc\n");
    auto parsed = parse_graph6_document(doc);
    REQUIRE(parsed.entries.size() == 2);
    CHECK(parsed.entries[1].line == 2);
    CHECK(parsed.entries[1].graph == cycle_graph(5));
}

TEST_CASE("graph6 round trip on random graphs")
{
    std::mt19937_64 rng(3);
    for (std::size_t n : {1, 2, 5, 8, 13, 62, 63, 64, 100, 300}) {
        for (int trial = 0; trial < 5; ++trial) {
            auto g = oracle::random_graph(n, 0.3, rng);
            auto line = emit_graph6(g);
            CHECK(parse_graph6(line, 1000) == g);
            CHECK(emit_graph6(parse_graph6(line, 1000)) == line);
        }
    }
}

TEST_CASE("edge list parsing")
{
    auto g = parse_edge_list("# a path\n\n5 4\n0 1\n1 2 # middle\n2 3\n3 4\n");
    CHECK(g == path_graph(5));
    CHECK(emit_edge_list(g) == "5 4\n0 1\n1 2\n2 3\n3 4\n");
    CHECK(parse_edge_list(emit_edge_list(cycle_graph(7))) == cycle_graph(7));

    CHECK_THROWS_WITH_AS(parse_edge_list("3 2\n0 1\n"), doctest::Contains("2"), ParseError);
    try {
        parse_edge_list("3 2\n0 1\n0 x\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 3\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
}

TEST_CASE("dot output")
{
    CHECK(emit_dot(path_graph(3), "P3") == "graph P3 {\n  0;\n  1;\n  2;\n  0 -- 1;\n  1 -- 2;\n}\n");
}
