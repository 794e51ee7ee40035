#pragma once

#include <string>
#include <vector>

#include "flowgraph/four_colour.hpp"

namespace flowgraph {

enum class CycleKind : std::uint8_t { tu, st, cstar };

std::string_view cycle_kind_name(CycleKind k);

struct Dart {
    int vertex = -1;
    int edge = -1;

    bool operator==(const Dart&) const = default;
    auto operator<=>(const Dart&) const = default;
};

// A cyclic sequence of darts (vertex, edge leaving it) with a traversal
// direction. Stored in canonical rotation so equality is plain comparison;
// reversal yields a different cycle.
struct OrientedCycle {
    CycleKind kind = CycleKind::tu;
    std::vector<Dart> darts;

    static OrientedCycle make(CycleKind kind, std::vector<Dart> darts);

    OrientedCycle reversed() const;
    std::size_t length() const { return darts.size(); }
    std::vector<int> vertex_list() const;
    std::vector<int> edge_list() const;

    bool operator==(const OrientedCycle&) const = default;
};

// True when the two cycles coincide after forgetting direction.
bool same_unoriented_cycle(const OrientedCycle& lhs, const OrientedCycle& rhs);

struct CycleCensus {
    std::vector<OrientedCycle> tu;
    std::vector<OrientedCycle> cstar;
    std::vector<OrientedCycle> st;

    int nu0() const { return static_cast<int>(tu.size()); }
    int nu1() const { return static_cast<int>(cstar.size()); }
    int nu2() const { return static_cast<int>(st.size()); }
};

std::vector<OrientedCycle> enumerate_tu_cycles(const FourColourGraph& g);
std::vector<OrientedCycle> enumerate_st_cycles(const FourColourGraph& g);
std::vector<OrientedCycle> enumerate_cstar_cycles(const FourColourGraph& g);
CycleCensus cycle_census(const FourColourGraph& g);

// Next corner along the c*-cycle through c. Orbits are traversed with the
// canonical direction: the smallest corner of the orbit exits through its
// high (low_index+1) edge first, and steps alternate high/low thereafter.
Corner corner_successor(const FourColourGraph& g, const Corner& c);

// All corners of g grouped into c*-orbits, each in traversal order starting
// from its smallest corner. Requires well-formed input only.
std::vector<std::vector<Corner>> corner_orbits(const FourColourGraph& g);

// Independent route to the c*-census following the per-edge search with
// deletion; quadratic in the edge count. Returns edge-index sets of the
// found cycles. Used as a cross-check against corner-orbit tracing.
std::vector<std::vector<int>> cstar_cycles_by_edge_deletion(const FourColourGraph& g);

int euler_four_colour(const FourColourGraph& g);

// True iff the colour-stripped multigraph has no odd cycle: every edge is
// 2-subdivided (parity is preserved, 3k = k mod 2) and the resulting simple
// graph is 2-coloured breadth-first.
bool orientable_four_colour(const FourColourGraph& g);

struct SurfaceType {
    int chi = 0;
    bool orientable = false;
    int genus = 0; // orientable genus, or cross-cap count when non-orientable

    bool operator==(const SurfaceType&) const = default;
};

SurfaceType surface_type(int chi, bool orientable);

} // namespace flowgraph
