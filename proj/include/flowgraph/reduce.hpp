#pragma once

#include <vector>

#include "flowgraph/equipped.hpp"
#include "flowgraph/four_colour.hpp"
#include "flowgraph/simple_graph.hpp"

namespace flowgraph {

// Reduction of a four-colour graph to a simple graph: every s-edge is
// 1-subdivided, t-edge 2-subdivided, u-edge 3-subdivided, and a c-edge at
// positions (p,q) becomes a (p+5,q+5) path-with-triangle gadget. Original
// vertices occupy simple-graph indices 0..n-1 in input order.
struct FourColourReduction {
    SimpleGraph graph;
    int original_count = 0; // originals are graph vertices 0..original_count-1
};

FourColourReduction to_simple_four_colour(const FourColourGraph& g);

// Reduction of an equipped graph: M-vertices are inlined as their graphs,
// dropped M-adjacent edges become oriented L-to-cycle connections, tagged
// cycle edges are oriented along their tags, pendants encode vertex kind
// (A:2, L:3, E-:4, E+:5), oriented edges get (2,1)/(3,1)/(4,1)/(5,1)
// gadgets with the tail on the long side, and the remaining colour edges
// get the four-colour subdivisions.
struct EquippedReduction {
    SimpleGraph graph;
    // For every equipped vertex: its simple-graph vertex (A/L/E) or the
    // simple-graph vertices of its inlined four-colour graph (M).
    std::vector<int> vertex_of;                 // -1 for M-vertices
    std::vector<std::vector<int>> m_vertices_of; // empty for non-M
    int anchor_count = 0; // originals + inlined graph vertices
};

EquippedReduction to_simple_equipped(const EquippedGraph& u);

} // namespace flowgraph
