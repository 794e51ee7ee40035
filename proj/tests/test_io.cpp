#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "flowgraph/io.hpp"

using namespace flowgraph;
using namespace flowgraph::testing;

TEST_CASE("fixtures file parses into five named graphs") {
    const ParsedFile& file = fixtures();
    CHECK(file.block_count() == 5);
    CHECK(file.four_colour.size() == 1);
    CHECK(file.equipped.size() == 4);
    CHECK(fixture_fcg("SPHERE4").vertex_count() == 4);
    CHECK(fixture_eqg("SPHERE_MLA").vertex_count() == 3);
}

TEST_CASE("serialize-then-parse is the identity on fixtures") {
    for (const FourColourGraph& g : fixtures().four_colour) {
        const ParsedFile round = parse_string(serialize(g));
        REQUIRE(round.four_colour.size() == 1);
        CHECK(round.four_colour[0] == g);
    }
    for (const EquippedGraph& u : fixtures().equipped) {
        const ParsedFile round = parse_string(serialize(u));
        REQUIRE(round.equipped.size() == 1);
        CHECK(round.equipped[0] == u);
    }
}

TEST_CASE("parse errors carry line numbers") {
    try {
        parse_string("fcg a\nv 1\ne x s 1 2\nend\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3); // vertex 2 is unknown
    }
}

TEST_CASE("unknown fcg reference is rejected") {
    CHECK_THROWS_AS(parse_string("eqg u\nvx m1 M:missing\nend\n"), ParseError);
}

TEST_CASE("duplicate names are rejected") {
    CHECK_THROWS_AS(parse_string("fcg a\nv 1\nv 1\nend\n"), ParseError);
    CHECK_THROWS_AS(parse_string("fcg a\nv 1\nend\nfcg a\nv 2\nend\n"), ParseError);
}

TEST_CASE("tags require exactly one M endpoint") {
    const char* text =
        "eqg u\n"
        "vx a1 A\n"
        "vx l1 L\n"
        "ed e1 a1 l1 cycle 1 t12\n"
        "end\n";
    CHECK_THROWS_AS(parse_string(text), ParseError);
}

TEST_CASE("comments and block structure") {
    const char* text =
        "# a comment\n"
        "fcg g # trailing comment\n"
        "v 1\n"
        "v 2\n"
        "e a t 1 2\n"
        "e b u 1 2\n"
        "e c s 1 2\n"
        "end\n";
    const ParsedFile file = parse_string(text);
    REQUIRE(file.four_colour.size() == 1);
    CHECK(file.four_colour[0].vertex_count() == 2);
    CHECK(file.four_colour[0].edge_count() == 3);
}

TEST_CASE("missing end is rejected") {
    CHECK_THROWS_AS(parse_string("fcg a\nv 1\n"), ParseError);
}

TEST_CASE("simple graph round trip") {
    SimpleGraph sg;
    const int a = sg.add_vertex("a");
    const int b = sg.add_vertex("b");
    const int c = sg.add_vertex("c");
    sg.add_vertex("lone");
    sg.add_edge(a, b);
    sg.add_edge(b, c);
    sg.normalize();

    const SimpleGraph round = parse_simple_graph(serialize(sg));
    CHECK(round.vertex_count() == 4);
    CHECK(round.edge_count() == 2);
    CHECK(serialize(round) == serialize(sg));
}

TEST_CASE("cycle tag encodings are rotation-invariant") {
    const std::string text = serialize(fixture_eqg("SPHERE_MLA"));
    // Rotate the dart list of the tagged edge by one pair.
    std::string rotated = text;
    const std::string needle = "cycle 3 t34 4 u34";
    const auto at = rotated.find(needle);
    REQUIRE(at != std::string::npos);
    rotated.replace(at, needle.size(), "cycle 4 u34 3 t34");
    const ParsedFile a = parse_string(text);
    const ParsedFile b = parse_string(rotated);
    CHECK(a.equipped[0] == b.equipped[0]);
}
