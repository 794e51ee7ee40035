#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "flowgraph/cycles.hpp"
#include "flowgraph/realize.hpp"

using namespace flowgraph;
using namespace flowgraph::testing;

TEST_CASE("triangle polygon for a c-free vertex") {
    const FourColourGraph& g = fixture_fcg("SPHERE4");
    const LabelledPolygon poly = build_polygon(g, *g.find_vertex("1"));
    REQUIRE(poly.side_count() == 3);
    CHECK(g.edges[poly.sides[0].edge].name == "s13");
    CHECK(poly.sides[0].nominal == 1);
    CHECK(g.edges[poly.sides[1].edge].name == "u12");
    CHECK(poly.sides[1].nominal == 0);
    CHECK(g.edges[poly.sides[2].edge].name == "t12");
    CHECK(poly.sides[2].nominal == -1);
    CHECK_THROWS_AS(build_polygon(g, 99), NoSuchVertex);
}

TEST_CASE("polygon side order includes c-sides by index") {
    // A vertex with two c-edges yields a pentagon reading t, u, c1, c2, s
    // around the boundary.
    FourColourGraph g;
    g.name = "pent";
    for (const char* v : {"1", "2", "3", "4", "5", "6"}) g.vertex_names.push_back(v);
    auto add = [&](const char* name, Colour colour, const char* a, const char* b, int pa,
                   int pb) {
        FcEdge e;
        e.name = name;
        e.colour = colour;
        e.a = *g.find_vertex(a);
        e.b = *g.find_vertex(b);
        e.pos_a = pa;
        e.pos_b = pb;
        g.edges.push_back(e);
    };
    add("t1", Colour::T, "1", "2", 0, 0);
    add("u1", Colour::U, "1", "2", 0, 0);
    add("t2", Colour::T, "3", "4", 0, 0);
    add("u2", Colour::U, "3", "4", 0, 0);
    add("t3", Colour::T, "5", "6", 0, 0);
    add("u3", Colour::U, "5", "6", 0, 0);
    add("s1", Colour::S, "1", "3", 0, 0);
    add("s2", Colour::S, "2", "6", 0, 0);
    add("s3", Colour::S, "4", "5", 0, 0);
    add("c1", Colour::C, "1", "4", 1, 1);
    add("c2", Colour::C, "1", "5", 2, 1);
    REQUIRE(build_structure(g).well_formed);

    const LabelledPolygon poly = build_polygon(g, *g.find_vertex("1"));
    REQUIRE(poly.side_count() == 5);
    std::vector<std::string> names;
    for (const auto& side : poly.sides) names.push_back(g.edges[side.edge].name);
    CHECK(names == std::vector<std::string>{"s1", "c2", "c1", "u1", "t1"});
    CHECK(poly.sides[0].nominal == 3);
    CHECK(poly.sides[1].nominal == 2);
    CHECK(poly.sides[2].nominal == 1);
    CHECK(poly.sides[3].nominal == 0);
    CHECK(poly.sides[4].nominal == -1);
}

TEST_CASE("gluing SPHERE4") {
    const FourColourGraph& g = fixture_fcg("SPHERE4");
    const CellComplex cc = glue(g);
    CHECK(cc.face_count() == 4);
    CHECK(cc.edge_class_count() == 6);
    CHECK(cc.vertex_class_count() == 4);
    CHECK(complex_euler(cc) == 2);
    CHECK(complex_orientable(cc) == true);

    // Vertex classes: two sinks (size 2), one source and one saddle
    // (size 4 each).
    std::multiset<std::size_t> sizes;
    for (const auto& cls : cc.vertex_classes) sizes.insert(cls.size());
    CHECK(sizes == std::multiset<std::size_t>{2, 2, 4, 4});
}

TEST_CASE("face and edge counts mirror the graph") {
    const FourColourGraph& g = fixture_fcg("SPHERE4");
    const CellComplex cc = glue(g);
    CHECK(cc.face_count() == g.vertex_count());
    CHECK(cc.edge_class_count() == g.edge_count());
    const CycleCensus census = cycle_census(g);
    CHECK(cc.vertex_class_count() == census.nu0() + census.nu1() + census.nu2());
}

TEST_CASE("oracle equivalences on SPHERE4") {
    const FourColourGraph& g = fixture_fcg("SPHERE4");
    CHECK(complex_euler(glue(g)) == euler_four_colour(g));
    CHECK(complex_orientable(glue(g)) == orientable_four_colour(g));
}

TEST_CASE("glue rejects non-admissible input") {
    FourColourGraph g = fixture_fcg("SPHERE4");
    for (FcEdge& e : g.edges) {
        if (e.name == "s13") e.b = *g.find_vertex("2");
        if (e.name == "s24") e.a = *g.find_vertex("3");
    }
    CHECK_THROWS_AS(glue(g), NotAdmissible);
}

TEST_CASE("gluing is label-equivariant") {
    const FourColourGraph& g = fixture_fcg("SPHERE4");
    const CellComplex original = glue(g);
    const CellComplex moved = glue(relabel(g, 5));
    CHECK(original.face_count() == moved.face_count());
    CHECK(original.edge_class_count() == moved.edge_class_count());
    CHECK(original.vertex_class_count() == moved.vertex_class_count());
    CHECK(complex_orientable(original) == complex_orientable(moved));
}

TEST_CASE("equipped Euler oracle on the fixtures") {
    CHECK(equipped_euler_oracle(fixture_eqg("PROJ_AL")) == 1);
    CHECK(equipped_euler_oracle(fixture_eqg("SPHERE_CYC")) == 2);
    CHECK(equipped_euler_oracle(fixture_eqg("TORUS_LL")) == 0);
    CHECK(equipped_euler_oracle(fixture_eqg("SPHERE_MLA")) == 2);
}
