#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hamdirac/formats.hpp"
#include "hamdirac/generators.hpp"
#include "test_graphs.hpp"

using namespace hamdirac;
using namespace hamdirac::formats;
using namespace hamdirac::testing;

namespace {

ParseErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const ParseError& e) {
        return e.kind();
    }
    FAIL("expected a parse error");
    return ParseErrorKind::malformed_line;
}

}  // namespace

TEST_CASE("graph6 fixed vectors") {
    CHECK(decode_graph6("Bw") == complete(3));
    CHECK(decode_graph6("Bw\n") == complete(3));
    CHECK(decode_graph6("A?") == Graph(2, std::vector<Edge>{}));
    CHECK(encode_graph6(complete(3)) == "Bw");
    CHECK(encode_graph6(Graph(2, std::vector<Edge>{})) == "A?");
    CHECK(encode_graph6(bowtie()) == "DxK");
    CHECK(encode_graph6(Graph(0, std::vector<Edge>{})) == "?");
    CHECK(decode_graph6(">>graph6<<Bw") == complete(3));
}

TEST_CASE("graph6 errors") {
    CHECK(kind_of([] { decode_graph6("B"); }) == ParseErrorKind::truncated_payload);
    CHECK(kind_of([] { decode_graph6(""); }) == ParseErrorKind::truncated_payload);
    CHECK(kind_of([] { decode_graph6("Bw?"); }) == ParseErrorKind::trailing_garbage);
    // n = 3 uses 3 of 6 bits; 'x' = 63 + 0b111001 sets a padding bit.
    CHECK(kind_of([] { decode_graph6("Bx"); }) == ParseErrorKind::trailing_garbage);
    CHECK(kind_of([] { decode_graph6("B "); }) == ParseErrorKind::invalid_character);
    CHECK(kind_of([] { decode_graph6("~~??????"); }) == ParseErrorKind::oversize);
    CHECK(kind_of([] { decode_graph6("~?"); }) == ParseErrorKind::truncated_payload);

    try {
        decode_graph6("Bw", 1);
        decode_graph6("C ", 4);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
        CHECK(e.column() == 1);
        CHECK(e.kind() == ParseErrorKind::invalid_character);
    }
}

TEST_CASE("graph6 4-byte header tier") {
    gen::Rng rng(5);
    const Graph g = gen::random_graph(70, 0.3, rng);
    const std::string line = encode_graph6(g);
    CHECK(line[0] == '~');
    CHECK(line.size() == 4 + (70 * 69 / 2 + 5) / 6);
    CHECK(decode_graph6(line) == g);
}

TEST_CASE("graph6 batch skips blank lines and reports the file line") {
    auto graphs = decode_graph6_batch("Bw\n\nA?\n  \nDxK\n");
    REQUIRE(graphs.size() == 3);
    CHECK(graphs[2] == bowtie());
    try {
        decode_graph6_batch("Bw\n\nB\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("dimacs decode") {
    CHECK(decode_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n") == complete(3));
    CHECK(decode_dimacs("c hi\np edge 2 0\n") == Graph(2, std::vector<Edge>{}));
    CHECK(kind_of([] { decode_dimacs("e 1 2\n"); }) == ParseErrorKind::missing_problem_line);
    CHECK(kind_of([] { decode_dimacs("c nothing\n"); }) == ParseErrorKind::missing_problem_line);
    CHECK(kind_of([] { decode_dimacs("p edge 3 1\ne 1 4\n"); }) == ParseErrorKind::vertex_out_of_range);
    CHECK(kind_of([] { decode_dimacs("p edge 3 1\ne 0 1\n"); }) == ParseErrorKind::vertex_out_of_range);
    CHECK(kind_of([] { decode_dimacs("p edge 3 1\ne 1 x\n"); }) == ParseErrorKind::malformed_line);
    CHECK(kind_of([] { decode_dimacs("p edge 3 1\ne 1 1\n"); }) == ParseErrorKind::malformed_line);
    CHECK(kind_of([] { decode_dimacs("p edge 3\n"); }) == ParseErrorKind::malformed_line);

    SUBCASE("error position") {
        try {
            decode_dimacs("c x\np edge 3 1\n\ne 1 9\n");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() == 4);
            CHECK(e.column() == 4);
        }
    }
    SUBCASE("edge count mismatch is a warning") {
        std::vector<std::string> warnings;
        const Graph g = decode_dimacs("p edge 3 5\ne 1 2\ne 2 1\n", &warnings);
        CHECK(g.edge_count() == 1);
        CHECK(warnings.size() == 1);
    }
}

TEST_CASE("dimacs encode") {
    CHECK(encode_dimacs(complete(3)) == "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
    CHECK(encode_dimacs(Graph(1, std::vector<Edge>{})) == "p edge 1 0\n");
}

TEST_CASE("edge list") {
    CHECK(decode_edgelist("n 3\n0 1\n1 2\n# chord\n0 2\n") == complete(3));
    CHECK(encode_edgelist(bowtie()) == "n 5\n0 1\n0 2\n1 2\n2 3\n2 4\n3 4\n");
    CHECK(kind_of([] { decode_edgelist("0 1\n"); }) == ParseErrorKind::missing_problem_line);
    CHECK(kind_of([] { decode_edgelist("n 2\n0 2\n"); }) == ParseErrorKind::vertex_out_of_range);
    CHECK(kind_of([] { decode_edgelist("n 2\n0\n"); }) == ParseErrorKind::malformed_line);
}

TEST_CASE("format selection") {
    CHECK(format_from_path("x/bowtie.g6") == Format::graph6);
    CHECK(format_from_path("a.col") == Format::dimacs);
    CHECK(format_from_path("a.dimacs") == Format::dimacs);
    CHECK(format_from_path("a.el") == Format::edgelist);
    CHECK_FALSE(format_from_path("a.txt"));
    CHECK(parse_format_name("g6") == Format::graph6);
    CHECK_FALSE(parse_format_name("sparse6"));
}

TEST_CASE("round trips and canonical re-encoding") {
    gen::Rng rng(2024);
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = 1 + rng.below(80);
        const Graph g = gen::random_graph(n, rng.unit(), rng);
        for (Format f : {Format::graph6, Format::dimacs, Format::edgelist}) {
            const std::string text = encode(f, g);
            const Graph back = decode(f, text);
            REQUIRE(back == g);
            CHECK(encode(f, back) == text);
        }
    }
}
