#pragma once

#include "flowgraph/equipped.hpp"
#include "flowgraph/four_colour.hpp"
#include "flowgraph/simple_graph.hpp"

namespace flowgraph {

// Inverse of to_simple_four_colour, up to vertex renaming. Originals are
// the vertices with at least three neighbours outside any triangle;
// deleting them leaves paths (length = colour) and paths-with-triangle
// (c-edges, stub lengths = positions + 5). Throws NotInImage when the
// structure is inconsistent with any reduction output.
FourColourGraph restore_four_colour(const SimpleGraph& sg);

// Inverse of to_simple_equipped, up to renaming. Kinds are read off the
// pendant counts, edge directions off the gadget asymmetry, tags off the
// cycle-connection edges and the orientations of their private (u/s)
// edges. An input without pendants restores as a single-M graph.
EquippedGraph restore_equipped(const SimpleGraph& sg);

} // namespace flowgraph
