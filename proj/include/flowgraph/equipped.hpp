#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flowgraph/cycles.hpp"
#include "flowgraph/four_colour.hpp"

namespace flowgraph {

enum class VertexKind : std::uint8_t { A, E, L, M };

char vertex_kind_letter(VertexKind k);

enum class Weight : std::uint8_t { plus, minus };

struct EqVertex {
    std::string name;
    VertexKind kind = VertexKind::A;
    Weight weight = Weight::plus;          // meaningful for E-vertices only
    std::optional<FourColourGraph> graph;  // present for M-vertices
    std::string graph_name;                // fcg block the graph came from

    bool operator==(const EqVertex&) const = default;
};

struct EqEdge {
    std::string name;
    int tail = -1;
    int head = -1;
    // Cycle of the M-endpoint's graph: tu-kind when the edge leaves the M,
    // st-kind when it enters it. Dart indices refer to that graph.
    std::optional<OrientedCycle> tag;

    bool operator==(const EqEdge&) const = default;
};

// Directed multigraph over A/E/L/M vertices with E-weights, per-M
// four-colour graphs and oriented cycle tags on M-adjacent edges.
struct EquippedGraph {
    std::string name;
    std::vector<EqVertex> vertices;
    std::vector<EqEdge> edges;

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }

    std::optional<int> find_vertex(std::string_view vname) const;
    int degree(int v) const;

    bool operator==(const EquippedGraph&) const = default;
};

// Empty report iff the graph is admissible: the vertex rules hold, every
// embedded four-colour graph is admissible, every M-adjacent edge carries a
// correctly-typed cycle of the right graph (injectively per M) and the
// graph is connected.
ValidationReport validate_equipped(const EquippedGraph& u);

bool is_admissible(const EquippedGraph& u);
void require_admissible(const EquippedGraph& u);

// chi = sum over M of (chi(Gamma_M) - deg(M)) + #A.
int euler_equipped(const EquippedGraph& u);

// True iff every embedded graph is orientable and every L-vertex has
// degree exactly two.
bool orientable_equipped(const EquippedGraph& u);

} // namespace flowgraph
