#pragma once

#include <array>
#include <utility>
#include <vector>

#include "flowgraph/equipped.hpp"
#include "flowgraph/four_colour.hpp"

namespace flowgraph {

// Combinatorial polygon of a graph vertex b: 3+n_b sides listed in the
// boundary order s(=c_{n_b+1}), c_{n_b}, ..., c_1, u(=c_0), t. Side i joins
// polygon corners i and i+1 (mod side count); corner 0 sits between the
// t- and s-sides.
struct LabelledPolygon {
    struct Side {
        int edge = -1;
        int nominal = -1; // 0..n_b+1 for u/c/s sides, -1 for the t-side
    };

    int owner = -1;
    std::vector<Side> sides;

    int side_count() const { return static_cast<int>(sides.size()); }
};

LabelledPolygon build_polygon(const FourColourGraph& g, int b);

// Quotient of the disjoint polygons under the side identifications induced
// by shared edges. Vertex classes are the union-find closure of corner
// identifications; no coordinates are kept.
struct CellComplex {
    std::vector<LabelledPolygon> faces;            // one per graph vertex
    std::vector<std::array<std::pair<int, int>, 2>> edge_classes; // (face, side) pairs
    std::vector<std::vector<std::pair<int, int>>> vertex_classes; // (face, corner) pairs

    int face_count() const { return static_cast<int>(faces.size()); }
    int edge_class_count() const { return static_cast<int>(edge_classes.size()); }
    int vertex_class_count() const { return static_cast<int>(vertex_classes.size()); }
};

CellComplex glue(const FourColourGraph& g);

int complex_euler(const CellComplex& cc);

// True iff the faces admit a sign assignment with side-sharing faces
// receiving opposite signs (2-colouring of the face adjacency multigraph).
bool complex_orientable(const CellComplex& cc);

// Additive Euler characteristic through the glued complexes: each M
// contributes complex_euler(glue(Gamma_M)) minus its edge count, each A
// contributes 1, L/E pieces and connecting annuli contribute 0.
int equipped_euler_oracle(const EquippedGraph& u);

} // namespace flowgraph
