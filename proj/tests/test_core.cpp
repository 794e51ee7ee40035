#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "flowgraph/cycles.hpp"

using namespace flowgraph;
using namespace flowgraph::testing;

namespace {

bool has_violation(const ValidationReport& report, ViolationCode code) {
    for (const Violation& v : report)
        if (v.code == code) return true;
    return false;
}

int count_violations(const ValidationReport& report, ViolationCode code) {
    int n = 0;
    for (const Violation& v : report)
        if (v.code == code) ++n;
    return n;
}

} // namespace

TEST_CASE("nominal indices on SPHERE4") {
    const FourColourGraph& g = fixture_fcg("SPHERE4");
    const int v1 = *g.find_vertex("1");
    CHECK(nominal_index(g, v1, *g.find_edge("u12")) == 0);
    CHECK(nominal_index(g, v1, *g.find_edge("s13")) == 1);
    CHECK_THROWS_AS(nominal_index(g, v1, *g.find_edge("t12")), TEdgeHasNoIndex);
    CHECK_THROWS_AS(nominal_index(g, v1, *g.find_edge("s24")), NotIncident);
}

TEST_CASE("nominal_index is a bijection onto 0..n_v+1") {
    const FourColourGraph& g = fixture_fcg("SPHERE4");
    FcStructure st = build_structure(g);
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::set<int> indices;
        for (int e = 0; e < g.edge_count(); ++e) {
            const FcEdge& ed = g.edges[e];
            if ((ed.a != v && ed.b != v) || ed.colour == Colour::T) continue;
            indices.insert(nominal_index(g, v, e));
        }
        CHECK(static_cast<int>(indices.size()) == st.n_b(v) + 2);
        CHECK(*indices.begin() == 0);
        CHECK(*indices.rbegin() == st.n_b(v) + 1);
    }
}

TEST_CASE("SPHERE4 is admissible") {
    CHECK(validate_four_colour(fixture_fcg("SPHERE4")).empty());
}

TEST_CASE("rewired s-edges break connectivity and corner orbits") {
    FourColourGraph g = fixture_fcg("SPHERE4");
    // s(1,3), s(2,4) -> s(1,2), s(3,4)
    for (FcEdge& e : g.edges) {
        if (e.name == "s13") e.b = *g.find_vertex("2");
        if (e.name == "s24") e.a = *g.find_vertex("3");
    }
    const ValidationReport report = validate_four_colour(g);
    CHECK(has_violation(report, ViolationCode::Disconnected));
    CHECK(has_violation(report, ViolationCode::BadCStarOrbit));
}

TEST_CASE("degenerate graphs") {
    FourColourGraph empty;
    CHECK(has_violation(validate_four_colour(empty), ViolationCode::Empty));

    FourColourGraph lone;
    lone.vertex_names.push_back("1");
    const ValidationReport report = validate_four_colour(lone);
    CHECK(count_violations(report, ViolationCode::MissingColourEdge) == 3);
}

TEST_CASE("loops and duplicate colours are reported") {
    FourColourGraph g = fixture_fcg("SPHERE4");
    FcEdge loop;
    loop.name = "bad";
    loop.colour = Colour::C;
    loop.a = loop.b = 0;
    loop.pos_a = loop.pos_b = 1;
    g.edges.push_back(loop);
    CHECK(has_violation(validate_four_colour(g), ViolationCode::LoopEdge));

    FourColourGraph h = fixture_fcg("SPHERE4");
    FcEdge extra = h.edges[*h.find_edge("s13")];
    extra.name = "s13b";
    h.edges.push_back(extra);
    CHECK(has_violation(validate_four_colour(h), ViolationCode::DuplicateColourEdge));
}

TEST_CASE("bad c-order positions are reported") {
    FourColourGraph g = fixture_fcg("SPHERE4");
    FcEdge c1, c2;
    c1.name = "c1";
    c1.colour = Colour::C;
    c1.a = 0;
    c1.b = 2;
    c1.pos_a = 1;
    c1.pos_b = 1;
    c2 = c1;
    c2.name = "c2";
    c2.a = 1;
    c2.b = 3;
    g.edges.push_back(c1);
    g.edges.push_back(c2);
    // Positions fine so far: every vertex has a single c-edge at position 1.
    ValidationReport report = validate_four_colour(g);
    CHECK(!has_violation(report, ViolationCode::BadCOrder));

    g.edges[g.edge_count() - 1].pos_a = 2; // gap: vertex 2 has one c-edge at 2
    report = validate_four_colour(g);
    CHECK(has_violation(report, ViolationCode::BadCOrder));
}

TEST_CASE("validation is pure and deterministic") {
    const FourColourGraph& g = fixture_fcg("SPHERE4");
    const FourColourGraph copy = g;
    const ValidationReport first = validate_four_colour(g);
    const ValidationReport second = validate_four_colour(g);
    CHECK(first == second);
    CHECK(g == copy);
}

TEST_CASE("admissible counting invariants") {
    const FourColourGraph& g = fixture_fcg("SPHERE4");
    CHECK(g.vertex_count() % 2 == 0);
    FcStructure st = build_structure(g);
    int corner_sum = 0;
    for (int v = 0; v < g.vertex_count(); ++v) corner_sum += st.n_b(v) + 1;
    CHECK(corner_sum % 4 == 0);
}

TEST_CASE("equipped fixtures validate") {
    CHECK(validate_equipped(fixture_eqg("PROJ_AL")).empty());
    CHECK(validate_equipped(fixture_eqg("SPHERE_CYC")).empty());
    CHECK(validate_equipped(fixture_eqg("TORUS_LL")).empty());
    CHECK(validate_equipped(fixture_eqg("SPHERE_MLA")).empty());
}

TEST_CASE("E-vertex orientation rule") {
    EquippedGraph u = fixture_eqg("TORUS_LL");
    // Redirect e1's exit edge to enter it instead: d2 becomes l2 -> e1.
    for (EqEdge& e : u.edges) {
        if (e.name != "d2") continue;
        std::swap(e.tail, e.head);
    }
    CHECK(has_violation(validate_equipped(u), ViolationCode::EBadOrientation));
}

TEST_CASE("A-vertex degree rule") {
    EquippedGraph u = fixture_eqg("PROJ_AL");
    EqEdge extra = u.edges[0];
    extra.name = "e2";
    u.edges.push_back(extra);
    CHECK(has_violation(validate_equipped(u), ViolationCode::ABadDegree));
}

TEST_CASE("L-vertex rules") {
    EquippedGraph u = fixture_eqg("SPHERE_CYC");
    // A third pool around the same circle.
    EqVertex a3;
    a3.name = "a3";
    a3.kind = VertexKind::A;
    u.vertices.push_back(a3);
    EqEdge extra = u.edges[0];
    extra.name = "e3";
    extra.tail = u.vertex_count() - 1;
    u.edges.push_back(extra);
    CHECK(has_violation(validate_equipped(u), ViolationCode::LBadDegree));

    EquippedGraph w = fixture_eqg("SPHERE_CYC");
    std::swap(w.edges[1].tail, w.edges[1].head); // one in, one out
    ValidationReport report = validate_equipped(w);
    CHECK(has_violation(report, ViolationCode::LBadOrientation));
}

TEST_CASE("M-vertex neighbour rules") {
    EquippedGraph u = fixture_eqg("SPHERE_MLA");
    // Bypass the annulus: connect m1 straight to a1.
    for (EqEdge& e : u.edges)
        if (e.name == "e2") e.head = *u.find_vertex("a1");
    CHECK(has_violation(validate_equipped(u), ViolationCode::MBadNeighbor));
}

TEST_CASE("cycle tag rules") {
    const EquippedGraph& base = fixture_eqg("SPHERE_MLA");

    EquippedGraph no_tag = base;
    for (EqEdge& e : no_tag.edges)
        if (e.name == "e2") e.tag.reset();
    CHECK(has_violation(validate_equipped(no_tag), ViolationCode::MissingCycleTag));

    EquippedGraph wrong_kind = base;
    for (EqEdge& e : wrong_kind.edges)
        if (e.name == "e2") e.tag->kind = CycleKind::st;
    CHECK(has_violation(validate_equipped(wrong_kind), ViolationCode::BadCycleTag));

    EquippedGraph not_a_cycle = base;
    for (EqEdge& e : not_a_cycle.edges) {
        if (e.name != "e2") continue;
        // Darts of the st-cycle, labelled tu: not a tu-cycle of SPHERE4.
        const FourColourGraph& g = *not_a_cycle.vertices[e.tail].graph;
        e.tag = OrientedCycle::make(
            CycleKind::tu, {{*g.find_vertex("1"), *g.find_edge("t12")},
                            {*g.find_vertex("2"), *g.find_edge("s24")},
                            {*g.find_vertex("4"), *g.find_edge("t34")},
                            {*g.find_vertex("3"), *g.find_edge("s13")}});
    }
    CHECK(has_violation(validate_equipped(not_a_cycle), ViolationCode::BadCycleTag));
}

TEST_CASE("duplicate cycle tags are rejected") {
    EquippedGraph u = fixture_eqg("SPHERE_MLA");
    const int m1 = *u.find_vertex("m1");
    const int l2 = u.vertex_count();
    EqVertex l;
    l.name = "l2";
    l.kind = VertexKind::L;
    u.vertices.push_back(l);
    EqEdge e;
    e.name = "e3";
    e.tail = m1;
    e.head = l2;
    for (const EqEdge& other : u.edges)
        if (other.name == "e2") e.tag = other.tag;
    u.edges.push_back(e);
    CHECK(has_violation(validate_equipped(u), ViolationCode::DuplicateCycleTag));

    // Reversing the duplicate still references the same cycle.
    u.edges.back().tag = u.edges.back().tag->reversed();
    CHECK(has_violation(validate_equipped(u), ViolationCode::DuplicateCycleTag));
}

TEST_CASE("disconnected equipped graphs are rejected") {
    EquippedGraph u = fixture_eqg("PROJ_AL");
    const EquippedGraph& other = fixture_eqg("SPHERE_CYC");
    const int offset = u.vertex_count();
    for (const EqVertex& v : other.vertices) {
        EqVertex copy = v;
        copy.name = "x_" + copy.name;
        u.vertices.push_back(copy);
    }
    for (const EqEdge& e : other.edges) {
        EqEdge copy = e;
        copy.name = "x_" + copy.name;
        copy.tail += offset;
        copy.head += offset;
        u.edges.push_back(copy);
    }
    CHECK(has_violation(validate_equipped(u), ViolationCode::Disconnected));
}
