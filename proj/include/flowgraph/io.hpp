#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "flowgraph/equipped.hpp"
#include "flowgraph/four_colour.hpp"
#include "flowgraph/simple_graph.hpp"

namespace flowgraph {

// Parsed contents of one graph file, in block order.
struct ParsedFile {
    std::vector<FourColourGraph> four_colour;
    std::vector<EquippedGraph> equipped;
    // Block order as (is_equipped, index into the matching vector).
    std::vector<std::pair<bool, int>> order;

    int block_count() const { return static_cast<int>(order.size()); }
};

ParsedFile parse_string(const std::string& text);
ParsedFile parse_file(const std::string& path);

std::string serialize(const FourColourGraph& g);
// Emits the fcg blocks referenced by M-vertices first, then the eqg block.
std::string serialize(const EquippedGraph& u);

// Simple graphs travel as sorted "u v" edge lines (one per line, '#'
// comments allowed); isolated vertices as single-token lines.
std::string serialize(const SimpleGraph& sg);
SimpleGraph parse_simple_graph(const std::string& text);

} // namespace flowgraph
