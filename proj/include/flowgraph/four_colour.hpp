#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flowgraph/errors.hpp"

namespace flowgraph {

// The four curve colours of a flow region graph. Every vertex of a
// well-formed graph carries exactly one s-, one t- and one u-edge; c-edges
// are optional and ordered per vertex.
enum class Colour : std::uint8_t { S, T, U, C };

char colour_letter(Colour c);
std::optional<Colour> colour_from_letter(char ch);

struct FcEdge {
    std::string name;
    Colour colour = Colour::S;
    int a = -1; // endpoint vertex indices into FourColourGraph::vertex_names
    int b = -1;
    int pos_a = 0; // 1-based position in a's c-order (c-edges only, else 0)
    int pos_b = 0;

    bool operator==(const FcEdge&) const = default;
};

// Multigraph with coloured edges and per-vertex c-edge orderings. Parallel
// edges are allowed, loops are not (validation reports them). Immutable
// after construction by convention: no member mutates state.
struct FourColourGraph {
    std::string name;
    std::vector<std::string> vertex_names;
    std::vector<FcEdge> edges;

    int vertex_count() const { return static_cast<int>(vertex_names.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }

    std::optional<int> find_vertex(std::string_view vname) const;
    std::optional<int> find_edge(std::string_view ename) const;

    bool operator==(const FourColourGraph&) const = default;
};

// A corner at `vertex` is the pair of consecutive nominal indices
// (low_index, low_index+1); index 0 is the u-edge, n_b+1 the s-edge,
// 1..n_b the c-edges in c-order.
struct Corner {
    int vertex = -1;
    int low_index = -1;

    bool operator==(const Corner&) const = default;
};

enum class ViolationCode {
    // four-colour graph
    MissingColourEdge,
    DuplicateColourEdge,
    LoopEdge,
    BadCOrder,
    Disconnected,
    BadCStarOrbit,
    Empty,
    // equipped graph
    MBadNeighbor,
    MMultiEdge,
    EBadDegree,
    EBadNeighbor,
    ESameNeighbor,
    EBadOrientation,
    ABadDegree,
    ABadNeighbor,
    LBadDegree,
    LBadOrientation,
    MGraphNotAdmissible,
    MissingCycleTag,
    BadCycleTag,
    DuplicateCycleTag,
    SpuriousCycleTag,
};

std::string_view violation_name(ViolationCode code);

struct Violation {
    ViolationCode code;
    std::string detail;

    bool operator==(const Violation&) const = default;
};

using ValidationReport = std::vector<Violation>;

// Derived per-vertex incidence structure. Slots are -1 when the colour edge
// is missing and -2 when duplicated; c_by_pos[i] is the edge at position
// i+1 (or -1 on a position gap).
struct FcStructure {
    struct VertexSlots {
        int s = -1;
        int t = -1;
        int u = -1;
        std::vector<int> c_by_pos;
        int c_count = 0;
    };

    std::vector<VertexSlots> at;
    ValidationReport structural; // colour/loop/c-order findings, no connectivity
    bool well_formed = false;

    int n_b(int v) const { return at[v].c_count; }
};

FcStructure build_structure(const FourColourGraph& g);

// Full validation: structural findings plus connectivity, non-emptiness and
// corner-orbit lengths. The graph is admissible iff the report is empty.
ValidationReport validate_four_colour(const FourColourGraph& g);

bool is_admissible(const FourColourGraph& g);

// Throws NotAdmissible with a summary of the first finding.
void require_admissible(const FourColourGraph& g);
void require_well_formed(const FcStructure& st, const FourColourGraph& g);

// Nominal index of a non-t edge at an incident vertex: 0 for the u-edge,
// n_v+1 for the s-edge, the c-order position for a c-edge.
int nominal_index(const FourColourGraph& g, int v, int e);

// Vertex order used wherever "smallest vertex" matters: shortlex on names,
// which coincides with numeric order for plain digit names.
bool shortlex_less(std::string_view lhs, std::string_view rhs);
std::vector<int> canonical_vertex_order(const FourColourGraph& g);

// Other endpoint of edge e seen from v; throws NotIncident.
int opposite_end(const FcEdge& e, int v);

} // namespace flowgraph
