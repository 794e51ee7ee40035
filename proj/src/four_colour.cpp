#include "flowgraph/four_colour.hpp"

#include <algorithm>
#include <numeric>

#include "fc_internal.hpp"

namespace flowgraph {

char colour_letter(Colour c) {
    switch (c) {
    case Colour::S: return 's';
    case Colour::T: return 't';
    case Colour::U: return 'u';
    case Colour::C: return 'c';
    }
    return '?';
}

std::optional<Colour> colour_from_letter(char ch) {
    switch (ch) {
    case 's': return Colour::S;
    case 't': return Colour::T;
    case 'u': return Colour::U;
    case 'c': return Colour::C;
    default: return std::nullopt;
    }
}

std::string_view violation_name(ViolationCode code) {
    switch (code) {
    case ViolationCode::MissingColourEdge: return "MissingColourEdge";
    case ViolationCode::DuplicateColourEdge: return "DuplicateColourEdge";
    case ViolationCode::LoopEdge: return "LoopEdge";
    case ViolationCode::BadCOrder: return "BadCOrder";
    case ViolationCode::Disconnected: return "Disconnected";
    case ViolationCode::BadCStarOrbit: return "BadCStarOrbit";
    case ViolationCode::Empty: return "Empty";
    case ViolationCode::MBadNeighbor: return "MBadNeighbor";
    case ViolationCode::MMultiEdge: return "MMultiEdge";
    case ViolationCode::EBadDegree: return "EBadDegree";
    case ViolationCode::EBadNeighbor: return "EBadNeighbor";
    case ViolationCode::ESameNeighbor: return "ESameNeighbor";
    case ViolationCode::EBadOrientation: return "EBadOrientation";
    case ViolationCode::ABadDegree: return "ABadDegree";
    case ViolationCode::ABadNeighbor: return "ABadNeighbor";
    case ViolationCode::LBadDegree: return "LBadDegree";
    case ViolationCode::LBadOrientation: return "LBadOrientation";
    case ViolationCode::MGraphNotAdmissible: return "MGraphNotAdmissible";
    case ViolationCode::MissingCycleTag: return "MissingCycleTag";
    case ViolationCode::BadCycleTag: return "BadCycleTag";
    case ViolationCode::DuplicateCycleTag: return "DuplicateCycleTag";
    case ViolationCode::SpuriousCycleTag: return "SpuriousCycleTag";
    }
    return "Unknown";
}

std::optional<int> FourColourGraph::find_vertex(std::string_view vname) const {
    for (int i = 0; i < vertex_count(); ++i)
        if (vertex_names[i] == vname) return i;
    return std::nullopt;
}

std::optional<int> FourColourGraph::find_edge(std::string_view ename) const {
    for (int i = 0; i < edge_count(); ++i)
        if (edges[i].name == ename) return i;
    return std::nullopt;
}

bool shortlex_less(std::string_view lhs, std::string_view rhs) {
    if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
    return lhs < rhs;
}

std::vector<int> canonical_vertex_order(const FourColourGraph& g) {
    std::vector<int> order(g.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return shortlex_less(g.vertex_names[a], g.vertex_names[b]);
    });
    return order;
}

int opposite_end(const FcEdge& e, int v) {
    if (e.a == v) return e.b;
    if (e.b == v) return e.a;
    throw NotIncident("edge " + e.name + " is not incident to the vertex");
}

namespace detail {

bool fc_connected(const FourColourGraph& g) {
    const int n = g.vertex_count();
    if (n == 0) return true;
    std::vector<std::vector<int>> adj(n);
    for (const FcEdge& e : g.edges) {
        if (e.a == e.b) continue;
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == n;
}

} // namespace detail

FcStructure build_structure(const FourColourGraph& g) {
    FcStructure st;
    const int n = g.vertex_count();
    st.at.resize(n);

    if (n == 0)
        st.structural.push_back({ViolationCode::Empty, "graph has no vertices"});

    struct CAt {
        int edge;
        int pos;
    };
    std::vector<std::vector<CAt>> c_at(n);

    auto set_slot = [&](int& slot, int e, int v, Colour colour) {
        if (slot == -1) {
            slot = e;
        } else {
            slot = -2;
            st.structural.push_back(
                {ViolationCode::DuplicateColourEdge,
                 std::string("vertex ") + g.vertex_names[v] + " has more than one " +
                     colour_letter(colour) + "-edge"});
        }
    };

    for (int e = 0; e < g.edge_count(); ++e) {
        const FcEdge& ed = g.edges[e];
        if (ed.a < 0 || ed.a >= n || ed.b < 0 || ed.b >= n)
            throw Error("edge " + ed.name + " references an unknown vertex index");
        if (ed.a == ed.b) {
            st.structural.push_back(
                {ViolationCode::LoopEdge, "edge " + ed.name + " is a loop"});
            continue;
        }
        switch (ed.colour) {
        case Colour::S:
            set_slot(st.at[ed.a].s, e, ed.a, Colour::S);
            set_slot(st.at[ed.b].s, e, ed.b, Colour::S);
            break;
        case Colour::T:
            set_slot(st.at[ed.a].t, e, ed.a, Colour::T);
            set_slot(st.at[ed.b].t, e, ed.b, Colour::T);
            break;
        case Colour::U:
            set_slot(st.at[ed.a].u, e, ed.a, Colour::U);
            set_slot(st.at[ed.b].u, e, ed.b, Colour::U);
            break;
        case Colour::C:
            c_at[ed.a].push_back({e, ed.pos_a});
            c_at[ed.b].push_back({e, ed.pos_b});
            break;
        }
    }

    for (int v = 0; v < n; ++v) {
        auto& slots = st.at[v];
        if (slots.s == -1)
            st.structural.push_back({ViolationCode::MissingColourEdge,
                                     "vertex " + g.vertex_names[v] + " has no s-edge"});
        if (slots.t == -1)
            st.structural.push_back({ViolationCode::MissingColourEdge,
                                     "vertex " + g.vertex_names[v] + " has no t-edge"});
        if (slots.u == -1)
            st.structural.push_back({ViolationCode::MissingColourEdge,
                                     "vertex " + g.vertex_names[v] + " has no u-edge"});

        slots.c_count = static_cast<int>(c_at[v].size());
        slots.c_by_pos.assign(slots.c_count, -1);
        bool order_ok = true;
        for (const CAt& entry : c_at[v]) {
            if (entry.pos < 1 || entry.pos > slots.c_count ||
                slots.c_by_pos[entry.pos - 1] != -1) {
                order_ok = false;
                continue;
            }
            slots.c_by_pos[entry.pos - 1] = entry.edge;
        }
        if (!order_ok || std::count(slots.c_by_pos.begin(), slots.c_by_pos.end(), -1) > 0)
            st.structural.push_back(
                {ViolationCode::BadCOrder,
                 "c-order at vertex " + g.vertex_names[v] + " is not a bijection onto 1.." +
                     std::to_string(slots.c_count)});
    }

    st.well_formed = st.structural.empty() && n > 0;
    return st;
}

ValidationReport validate_four_colour(const FourColourGraph& g) {
    FcStructure st = build_structure(g);
    ValidationReport report = st.structural;

    if (g.vertex_count() > 0 && !detail::fc_connected(g))
        report.push_back({ViolationCode::Disconnected, "graph is not connected"});

    if (detail::corners_defined(st, g.vertex_count())) {
        detail::CornerIndex ci = detail::corner_index(st);
        std::vector<char> seen(ci.total, 0);
        for (int v = 0; v < g.vertex_count(); ++v) {
            for (int low = 0; low <= st.at[v].c_count; ++low) {
                const int start = ci.id(v, low);
                if (seen[start]) continue;
                int cur_v = v, cur_low = low;
                int steps = 0;
                do {
                    seen[ci.id(cur_v, cur_low)] = 1;
                    const bool high_hop = (steps % 2 == 0);
                    const int idx = high_hop ? cur_low + 1 : cur_low;
                    const int e = detail::nominal_edge_at(st, cur_v, idx);
                    const int nv = opposite_end(g.edges[e], cur_v);
                    const int l = detail::nominal_index_at(st, g, nv, e);
                    cur_v = nv;
                    cur_low = high_hop ? l - 1 : l;
                    ++steps;
                } while (ci.id(cur_v, cur_low) != start);
                if (steps != 4)
                    report.push_back(
                        {ViolationCode::BadCStarOrbit,
                         "corner orbit through (" + std::to_string(low) + "," +
                             std::to_string(low + 1) + ") at vertex " + g.vertex_names[v] +
                             " has length " + std::to_string(steps)});
            }
        }
    }

    return report;
}

bool is_admissible(const FourColourGraph& g) { return validate_four_colour(g).empty(); }

void require_admissible(const FourColourGraph& g) {
    ValidationReport report = validate_four_colour(g);
    if (!report.empty())
        throw NotAdmissible("four-colour graph '" + g.name + "' is not admissible: " +
                            std::string(violation_name(report.front().code)) + ": " +
                            report.front().detail);
}

void require_well_formed(const FcStructure& st, const FourColourGraph& g) {
    if (!st.well_formed)
        throw NotWellFormed(
            "four-colour graph '" + g.name + "' is not well-formed" +
            (st.structural.empty()
                 ? std::string(" (empty)")
                 : ": " + std::string(violation_name(st.structural.front().code)) + ": " +
                       st.structural.front().detail));
}

int nominal_index(const FourColourGraph& g, int v, int e) {
    if (v < 0 || v >= g.vertex_count()) throw NoSuchVertex("vertex index out of range");
    if (e < 0 || e >= g.edge_count()) throw NoSuchEdge("edge index out of range");
    const FcEdge& ed = g.edges[e];
    if (ed.a != v && ed.b != v)
        throw NotIncident("edge " + ed.name + " is not incident to vertex " +
                          g.vertex_names[v]);
    if (ed.colour == Colour::T)
        throw TEdgeHasNoIndex("t-edge " + ed.name + " carries no nominal index");
    FcStructure st = build_structure(g);
    require_well_formed(st, g);
    return detail::nominal_index_at(st, g, v, e);
}

} // namespace flowgraph
