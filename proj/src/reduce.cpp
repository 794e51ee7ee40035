#include "flowgraph/reduce.hpp"

#include <algorithm>
#include <map>

#include "fc_internal.hpp"

namespace flowgraph {

namespace {

// Appends a path of `k` fresh vertices between `from` and `to`.
void emit_path(SimpleGraph& sg, int from, int to, int k, const std::string& stem) {
    int prev = from;
    for (int i = 1; i <= k; ++i) {
        const int c = sg.add_vertex(stem + "#c" + std::to_string(i));
        sg.add_edge(prev, c);
        prev = c;
    }
    sg.add_edge(prev, to);
}

// Appends the (k1,k2) path-with-triangle gadget; the k1 side starts at
// `from`.
void emit_triangle_gadget(SimpleGraph& sg, int from, int to, int k1, int k2,
                          const std::string& stem) {
    int prev = from;
    for (int i = 1; i <= k1; ++i) {
        const int c = sg.add_vertex(stem + "#c" + std::to_string(i));
        sg.add_edge(prev, c);
        prev = c;
    }
    const int v = sg.add_vertex(stem + "#v");
    const int tu = sg.add_vertex(stem + "#u");
    const int tw = sg.add_vertex(stem + "#w");
    sg.add_edge(prev, v);
    sg.add_edge(v, tu);
    sg.add_edge(tu, tw);
    sg.add_edge(v, tw);
    prev = v;
    for (int i = 1; i <= k2; ++i) {
        const int d = sg.add_vertex(stem + "#d" + std::to_string(i));
        sg.add_edge(prev, d);
        prev = d;
    }
    sg.add_edge(prev, to);
}

int plain_subdivision_length(Colour colour) {
    switch (colour) {
    case Colour::S: return 1;
    case Colour::T: return 2;
    case Colour::U: return 3;
    case Colour::C: break;
    }
    return -1;
}

int oriented_gadget_length(Colour colour) {
    switch (colour) {
    case Colour::S: return 3;
    case Colour::T: return 4;
    case Colour::U: return 5;
    case Colour::C: break;
    }
    return -1;
}

// Inlines the colour edges of one four-colour graph. `vertex_ids` maps the
// graph's vertices to simple-graph ids; `oriented[e]` holds the tag-induced
// direction of edge e as (tail vertex) or -1 when untagged.
void emit_colour_edges(SimpleGraph& sg, const FourColourGraph& g,
                       const std::vector<int>& vertex_ids, const std::vector<int>& oriented,
                       const std::string& prefix) {
    for (int e = 0; e < g.edge_count(); ++e) {
        const FcEdge& ed = g.edges[e];
        const std::string stem = prefix + ed.name;
        if (ed.colour == Colour::C) {
            emit_triangle_gadget(sg, vertex_ids[ed.a], vertex_ids[ed.b], ed.pos_a + 5,
                                 ed.pos_b + 5, stem);
        } else if (oriented[e] >= 0) {
            const int tail = oriented[e];
            const int head = opposite_end(ed, tail);
            emit_triangle_gadget(sg, vertex_ids[tail], vertex_ids[head],
                                 oriented_gadget_length(ed.colour), 1, stem);
        } else {
            emit_path(sg, vertex_ids[ed.a], vertex_ids[ed.b],
                      plain_subdivision_length(ed.colour), stem);
        }
    }
}

} // namespace

FourColourReduction to_simple_four_colour(const FourColourGraph& g) {
    FcStructure st = build_structure(g);
    require_well_formed(st, g);

    FourColourReduction out;
    std::vector<int> vertex_ids(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        vertex_ids[v] = out.graph.add_vertex(g.vertex_names[v]);
    out.original_count = g.vertex_count();

    std::vector<int> oriented(g.edge_count(), -1);
    emit_colour_edges(out.graph, g, vertex_ids, oriented, "");
    out.graph.normalize();

    const long long bound =
        static_cast<long long>(2 * g.vertex_count() + 18) * g.edge_count();
    if (out.graph.vertex_count() > bound)
        throw Error("reduction exceeded its vertex bound"); // cannot happen
    return out;
}

EquippedReduction to_simple_equipped(const EquippedGraph& u) {
    require_admissible(u);

    EquippedReduction out;
    const int n = u.vertex_count();
    out.vertex_of.assign(n, -1);
    out.m_vertices_of.resize(n);

    for (int v = 0; v < n; ++v) {
        const EqVertex& vx = u.vertices[v];
        if (vx.kind == VertexKind::M) {
            out.m_vertices_of[v].reserve(vx.graph->vertex_count());
            for (const std::string& gv : vx.graph->vertex_names)
                out.m_vertices_of[v].push_back(out.graph.add_vertex(vx.name + "." + gv));
        } else {
            out.vertex_of[v] = out.graph.add_vertex(vx.name);
        }
    }
    out.anchor_count = out.graph.vertex_count();

    // Tag-induced orientations of colour edges. A t-edge lying on both a
    // tagged tu-cycle and a tagged st-cycle takes the tu direction.
    std::vector<std::vector<int>> oriented(n);
    for (int v = 0; v < n; ++v)
        if (u.vertices[v].kind == VertexKind::M)
            oriented[v].assign(u.vertices[v].graph->edge_count(), -1);

    auto apply_tag = [&](int m, const OrientedCycle& tag, bool is_tu) {
        const auto& darts = tag.darts;
        for (std::size_t i = 0; i < darts.size(); ++i) {
            const int e = darts[i].edge;
            const Colour colour = u.vertices[m].graph->edges[e].colour;
            if (!is_tu && colour == Colour::T && oriented[m][e] >= 0)
                continue; // already fixed by a tu-tag
            oriented[m][e] = darts[i].vertex;
        }
    };
    for (const EqEdge& e : u.edges) {
        if (!e.tag) continue;
        if (e.tag->kind == CycleKind::tu) apply_tag(e.tail, *e.tag, true);
    }
    for (const EqEdge& e : u.edges) {
        if (!e.tag) continue;
        if (e.tag->kind == CycleKind::st) apply_tag(e.head, *e.tag, false);
    }

    // Equipped edges: M-adjacent ones become oriented connections between
    // the L-vertex and every vertex of the tagged cycle; all others stay as
    // single oriented non-coloured edges. Each oriented non-coloured edge
    // becomes a (2,1) gadget with the tail on the long side.
    for (int e = 0; e < u.edge_count(); ++e) {
        const EqEdge& ed = u.edges[e];
        const bool tail_m = u.vertices[ed.tail].kind == VertexKind::M;
        const bool head_m = u.vertices[ed.head].kind == VertexKind::M;
        const std::string stem = "ed." + ed.name;
        if (tail_m) {
            const int l = out.vertex_of[ed.head];
            int i = 0;
            for (int cv : ed.tag->vertex_list())
                emit_triangle_gadget(out.graph, out.m_vertices_of[ed.tail][cv], l, 2, 1,
                                     stem + "." + std::to_string(i++));
        } else if (head_m) {
            const int l = out.vertex_of[ed.tail];
            int i = 0;
            for (int cv : ed.tag->vertex_list())
                emit_triangle_gadget(out.graph, l, out.m_vertices_of[ed.head][cv], 2, 1,
                                     stem + "." + std::to_string(i++));
        } else {
            emit_triangle_gadget(out.graph, out.vertex_of[ed.tail], out.vertex_of[ed.head],
                                 2, 1, stem);
        }
    }

    // Pendants encode the vertex kind.
    for (int v = 0; v < n; ++v) {
        const EqVertex& vx = u.vertices[v];
        int count = 0;
        switch (vx.kind) {
        case VertexKind::A: count = 2; break;
        case VertexKind::L: count = 3; break;
        case VertexKind::E: count = vx.weight == Weight::minus ? 4 : 5; break;
        case VertexKind::M: count = 0; break;
        }
        for (int i = 1; i <= count; ++i) {
            const int p = out.graph.add_vertex(vx.name + "!p" + std::to_string(i));
            out.graph.add_edge(out.vertex_of[v], p);
        }
    }

    // Inline every four-colour graph with its subdivision gadgets.
    for (int v = 0; v < n; ++v)
        if (u.vertices[v].kind == VertexKind::M)
            emit_colour_edges(out.graph, *u.vertices[v].graph, out.m_vertices_of[v],
                              oriented[v], u.vertices[v].name + ".");

    out.graph.normalize();
    return out;
}

} // namespace flowgraph
