#pragma once

// Test helpers: fixture loading plus relabelling utilities shared by the
// suites.

#include <algorithm>
#include <map>
#include <random>
#include <string>

#include "flowgraph/io.hpp"

namespace flowgraph::testing {

inline const ParsedFile& fixtures() {
    static const ParsedFile file = parse_file(FIXTURES_FILE);
    return file;
}

inline const FourColourGraph& fixture_fcg(const std::string& name) {
    for (const FourColourGraph& g : fixtures().four_colour)
        if (g.name == name) return g;
    throw Error("missing fixture " + name);
}

inline const EquippedGraph& fixture_eqg(const std::string& name) {
    for (const EquippedGraph& u : fixtures().equipped)
        if (u.name == name) return u;
    throw Error("missing fixture " + name);
}

struct RelabelledFcg {
    FourColourGraph graph;
    std::vector<int> vperm; // old vertex index -> new vertex index
    std::vector<int> emap;  // old edge index -> new edge index
};

// Relabels vertices by a seeded random permutation and scrambles the edge
// list, transporting endpoints and c-order positions.
inline RelabelledFcg relabel_with_maps(const FourColourGraph& g, std::uint64_t seed,
                                       const std::string& prefix = "r") {
    std::mt19937_64 rng(seed);
    RelabelledFcg out;
    out.vperm.resize(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) out.vperm[i] = i;
    std::shuffle(out.vperm.begin(), out.vperm.end(), rng);

    out.graph.name = g.name + "_relabel";
    out.graph.vertex_names.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        out.graph.vertex_names[out.vperm[v]] = prefix + std::to_string(out.vperm[v] + 1);

    std::vector<int> edge_order(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) edge_order[i] = i;
    std::shuffle(edge_order.begin(), edge_order.end(), rng);

    out.emap.assign(g.edge_count(), -1);
    for (int pos = 0; pos < g.edge_count(); ++pos) {
        FcEdge e = g.edges[edge_order[pos]];
        e.a = out.vperm[e.a];
        e.b = out.vperm[e.b];
        out.emap[edge_order[pos]] = pos;
        out.graph.edges.push_back(std::move(e));
    }
    return out;
}

inline FourColourGraph relabel(const FourColourGraph& g, std::uint64_t seed,
                               const std::string& prefix = "r") {
    return relabel_with_maps(g, seed, prefix).graph;
}

// Relabels an equipped graph, including every embedded graph and the
// cycle tags riding on M-adjacent edges.
inline EquippedGraph relabel(const EquippedGraph& u, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int n = u.vertex_count();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);

    EquippedGraph out;
    out.name = u.name + "_relabel";
    out.vertices.resize(n);
    std::map<int, RelabelledFcg> mmaps; // old vertex index -> relabel maps
    for (int v = 0; v < n; ++v) {
        EqVertex vx = u.vertices[v];
        vx.name = "w" + std::to_string(perm[v] + 1);
        if (vx.kind == VertexKind::M && vx.graph) {
            RelabelledFcg sub = relabel_with_maps(*vx.graph, rng(), "q" + vx.name);
            vx.graph = sub.graph;
            vx.graph_name = sub.graph.name + "_" + vx.name;
            vx.graph->name = vx.graph_name;
            mmaps.emplace(v, std::move(sub));
        }
        out.vertices[perm[v]] = std::move(vx);
    }

    std::vector<int> edge_order(u.edge_count());
    for (int i = 0; i < u.edge_count(); ++i) edge_order[i] = i;
    std::shuffle(edge_order.begin(), edge_order.end(), rng);
    for (int pos = 0; pos < u.edge_count(); ++pos) {
        EqEdge e = u.edges[edge_order[pos]];
        const int old_m = u.vertices[e.tail].kind == VertexKind::M   ? e.tail
                          : u.vertices[e.head].kind == VertexKind::M ? e.head
                                                                     : -1;
        e.tail = perm[e.tail];
        e.head = perm[e.head];
        if (e.tag && old_m != -1) {
            const RelabelledFcg& maps = mmaps.at(old_m);
            std::vector<Dart> darts = e.tag->darts;
            for (Dart& d : darts) {
                d.vertex = maps.vperm[d.vertex];
                d.edge = maps.emap[d.edge];
            }
            e.tag = OrientedCycle::make(e.tag->kind, std::move(darts));
        }
        out.edges.push_back(std::move(e));
    }
    return out;
}

} // namespace flowgraph::testing
