#pragma once

#include <string>
#include <utility>
#include <vector>

#include "flowgraph/errors.hpp"

namespace flowgraph {

// Unlabeled undirected graph without loops or parallel edges. Edges are
// stored with a < b; the edge list is kept sorted and unique.
struct SimpleGraph {
    std::vector<std::string> vertex_names;
    std::vector<std::pair<int, int>> edges;

    int vertex_count() const { return static_cast<int>(vertex_names.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }

    int add_vertex(std::string name);
    // Normalizes order; rejects loops and duplicates.
    void add_edge(int a, int b);
    bool has_edge(int a, int b) const;
    void normalize(); // sort + dedupe the edge list

    std::vector<std::vector<int>> adjacency() const;

    bool operator==(const SimpleGraph&) const = default;
};

// Replaces edge (a,b) by a path a - c1 - ... - ck - b of k fresh vertices.
SimpleGraph k_subdivide(const SimpleGraph& g, int a, int b, int k);

// Replaces edge (a,b) by a path of k1 fresh vertices to a triangle apex v,
// a pendant triangle v-u-w-v, and a path of k2 fresh vertices on to b.
SimpleGraph k1k2_subdivide(const SimpleGraph& g, int a, int b, int k1, int k2);

} // namespace flowgraph
