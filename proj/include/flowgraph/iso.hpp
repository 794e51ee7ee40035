#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "flowgraph/equipped.hpp"
#include "flowgraph/four_colour.hpp"
#include "flowgraph/simple_graph.hpp"

namespace flowgraph {

// Vertex bijection g1 -> g2 with the induced edge bijection implied.
struct IsoCertificate {
    std::vector<int> mapping;
};

bool verify_simple_iso(const SimpleGraph& g1, const SimpleGraph& g2,
                       const IsoCertificate& cert);

// Exact isomorphism via colour refinement with individualization
// backtracking. Deterministic given input order; the returned certificate
// verifies edge-by-edge.
std::optional<IsoCertificate> simple_iso(const SimpleGraph& g1, const SimpleGraph& g2);

using SimpleIsoBackend =
    std::function<std::optional<IsoCertificate>(const SimpleGraph&, const SimpleGraph&)>;

// Gadget pipeline: reduce both graphs and decide on the simple graphs.
bool four_colour_iso(const FourColourGraph& g1, const FourColourGraph& g2);
bool equipped_iso(const EquippedGraph& u1, const EquippedGraph& u2);

// Same pipeline, also recovering the original-vertex mapping when
// isomorphic (for --emit-mapping and certificate checks).
std::optional<IsoCertificate> four_colour_iso_mapping(
    const FourColourGraph& g1, const FourColourGraph& g2,
    const SimpleIsoBackend& backend = {});
std::optional<IsoCertificate> equipped_iso_mapping(
    const EquippedGraph& u1, const EquippedGraph& u2,
    const SimpleIsoBackend& backend = {});

// Colour-aware certificate checks at the original level.
bool verify_four_colour_iso(const FourColourGraph& g1, const FourColourGraph& g2,
                            const std::vector<int>& mapping);
bool verify_equipped_iso(const EquippedGraph& u1, const EquippedGraph& u2,
                         const std::vector<int>& mapping);

// Exhaustive backtracking over constrained vertex bijections; exact on
// desk-scale inputs. Throws TooLarge past the node budget.
struct OracleOptions {
    std::uint64_t max_nodes = 4'000'000;
};

bool direct_iso_oracle(const FourColourGraph& g1, const FourColourGraph& g2,
                       const OracleOptions& opts = {});
bool direct_iso_oracle(const EquippedGraph& u1, const EquippedGraph& u2,
                       const OracleOptions& opts = {});

} // namespace flowgraph
