#pragma once

// Internal helpers shared by the four-colour, cycles and realization
// translation units. Callers guarantee the structure is usable (slots
// filled) unless noted.

#include <vector>

#include "flowgraph/four_colour.hpp"

namespace flowgraph::detail {

struct CornerIndex {
    std::vector<int> offset; // id of corner (v, 0)
    int total = 0;

    int id(int v, int low) const { return offset[v] + low; }
};

inline CornerIndex corner_index(const FcStructure& st) {
    CornerIndex ci;
    ci.offset.resize(st.at.size());
    for (std::size_t v = 0; v < st.at.size(); ++v) {
        ci.offset[v] = ci.total;
        ci.total += st.at[v].c_count + 1;
    }
    return ci;
}

inline int nominal_edge_at(const FcStructure& st, int v, int idx) {
    const auto& slots = st.at[v];
    if (idx == 0) return slots.u;
    if (idx == slots.c_count + 1) return slots.s;
    return slots.c_by_pos[idx - 1];
}

inline int nominal_index_at(const FcStructure& st, const FourColourGraph& g, int v, int e) {
    const auto& slots = st.at[v];
    if (slots.u == e) return 0;
    if (slots.s == e) return slots.c_count + 1;
    for (int i = 0; i < slots.c_count; ++i)
        if (slots.c_by_pos[i] == e) return i + 1;
    if (g.edges[e].a != v && g.edges[e].b != v)
        throw NotIncident("edge " + g.edges[e].name + " is not incident to vertex " +
                          g.vertex_names[v]);
    throw TEdgeHasNoIndex("edge " + g.edges[e].name + " carries no nominal index at vertex " +
                          g.vertex_names[v]);
}

// True when every vertex has usable u/s slots and a complete c-order, so
// corners and their hops are defined (the graph may still be invalid).
inline bool corners_defined(const FcStructure& st, int vertex_count) {
    if (vertex_count == 0) return false;
    for (const auto& v : st.at) {
        if (v.s < 0 || v.u < 0) return false;
        for (int e : v.c_by_pos)
            if (e < 0) return false;
    }
    return true;
}

bool fc_connected(const FourColourGraph& g);

} // namespace flowgraph::detail
