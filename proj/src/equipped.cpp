#include "flowgraph/equipped.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace flowgraph {

char vertex_kind_letter(VertexKind k) {
    switch (k) {
    case VertexKind::A: return 'A';
    case VertexKind::E: return 'E';
    case VertexKind::L: return 'L';
    case VertexKind::M: return 'M';
    }
    return '?';
}

std::optional<int> EquippedGraph::find_vertex(std::string_view vname) const {
    for (int i = 0; i < vertex_count(); ++i)
        if (vertices[i].name == vname) return i;
    return std::nullopt;
}

int EquippedGraph::degree(int v) const {
    int d = 0;
    for (const EqEdge& e : edges) {
        if (e.tail == v) ++d;
        if (e.head == v) ++d;
    }
    return d;
}

namespace {

bool eq_connected(const EquippedGraph& u) {
    const int n = u.vertex_count();
    if (n == 0) return true;
    std::vector<std::vector<int>> adj(n);
    for (const EqEdge& e : u.edges) {
        if (e.tail == e.head) continue;
        adj[e.tail].push_back(e.head);
        adj[e.head].push_back(e.tail);
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

} // namespace

ValidationReport validate_equipped(const EquippedGraph& u) {
    ValidationReport report;
    const int n = u.vertex_count();
    if (n == 0) {
        report.push_back({ViolationCode::Empty, "graph has no vertices"});
        return report;
    }

    auto kind = [&](int v) { return u.vertices[v].kind; };
    auto vname = [&](int v) { return u.vertices[v].name; };

    std::vector<std::vector<int>> in_edges(n), out_edges(n);
    for (int e = 0; e < u.edge_count(); ++e) {
        if (u.edges[e].tail < 0 || u.edges[e].tail >= n || u.edges[e].head < 0 ||
            u.edges[e].head >= n)
            throw Error("edge " + u.edges[e].name + " references an unknown vertex index");
        out_edges[u.edges[e].tail].push_back(e);
        in_edges[u.edges[e].head].push_back(e);
    }
    auto other = [&](int e, int v) {
        return u.edges[e].tail == v ? u.edges[e].head : u.edges[e].tail;
    };

    // Per-kind vertex rules.
    for (int v = 0; v < n; ++v) {
        std::vector<int> incident = out_edges[v];
        incident.insert(incident.end(), in_edges[v].begin(), in_edges[v].end());
        const int deg = static_cast<int>(incident.size());

        switch (kind(v)) {
        case VertexKind::M: {
            std::set<int> l_neighbors;
            for (int e : incident) {
                const int w = other(e, v);
                if (w == v || kind(w) != VertexKind::L)
                    report.push_back({ViolationCode::MBadNeighbor,
                                      "M-vertex " + vname(v) + " connects to non-L vertex " +
                                          (w == v ? vname(v) : vname(w))});
                else if (!l_neighbors.insert(w).second)
                    report.push_back({ViolationCode::MMultiEdge,
                                      "M-vertex " + vname(v) + " has multiple edges to " +
                                          vname(w)});
            }
            break;
        }
        case VertexKind::E: {
            if (deg != 2) {
                report.push_back({ViolationCode::EBadDegree,
                                  "E-vertex " + vname(v) + " has degree " +
                                      std::to_string(deg)});
                break;
            }
            const bool one_in_one_out = in_edges[v].size() == 1 && out_edges[v].size() == 1;
            if (!one_in_one_out)
                report.push_back({ViolationCode::EBadOrientation,
                                  "E-vertex " + vname(v) +
                                      " needs one entering and one exiting edge"});
            std::vector<int> ws;
            for (int e : incident) ws.push_back(other(e, v));
            for (int w : ws)
                if (w == v || kind(w) != VertexKind::L)
                    report.push_back({ViolationCode::EBadNeighbor,
                                      "E-vertex " + vname(v) + " connects to non-L vertex " +
                                          (w == v ? vname(v) : vname(w))});
            if (ws.size() == 2 && ws[0] == ws[1] && ws[0] != v)
                report.push_back({ViolationCode::ESameNeighbor,
                                  "E-vertex " + vname(v) + " connects twice to " +
                                      vname(ws[0])});
            break;
        }
        case VertexKind::A: {
            if (deg != 1) {
                report.push_back({ViolationCode::ABadDegree,
                                  "A-vertex " + vname(v) + " has degree " +
                                      std::to_string(deg)});
                break;
            }
            const int e = incident.front();
            const int w = other(e, v);
            if (w == v || kind(w) != VertexKind::L)
                report.push_back({ViolationCode::ABadNeighbor,
                                  "A-vertex " + vname(v) + " connects to non-L vertex " +
                                      (w == v ? vname(v) : vname(w))});
            break;
        }
        case VertexKind::L: {
            if (deg != 1 && deg != 2) {
                report.push_back({ViolationCode::LBadDegree,
                                  "L-vertex " + vname(v) + " has degree " +
                                      std::to_string(deg)});
                break;
            }
            if (deg == 2 && !(in_edges[v].size() == 2 || out_edges[v].size() == 2))
                report.push_back({ViolationCode::LBadOrientation,
                                  "L-vertex " + vname(v) +
                                      " has one entering and one exiting edge"});
            break;
        }
        }
    }

    // Embedded graphs and cycle tags.
    std::vector<CycleCensus> census_of(n);
    std::vector<char> census_ok(n, 0);
    for (int v = 0; v < n; ++v) {
        if (kind(v) != VertexKind::M) continue;
        if (!u.vertices[v].graph) {
            report.push_back({ViolationCode::MGraphNotAdmissible,
                              "M-vertex " + vname(v) + " carries no four-colour graph"});
            continue;
        }
        if (!validate_four_colour(*u.vertices[v].graph).empty()) {
            report.push_back({ViolationCode::MGraphNotAdmissible,
                              "four-colour graph of M-vertex " + vname(v) +
                                  " is not admissible"});
            continue;
        }
        census_of[v] = cycle_census(*u.vertices[v].graph);
        census_ok[v] = 1;
    }

    std::map<int, std::vector<const OrientedCycle*>> tags_at_m;
    for (int e = 0; e < u.edge_count(); ++e) {
        const EqEdge& ed = u.edges[e];
        const bool tail_m = kind(ed.tail) == VertexKind::M;
        const bool head_m = ed.head >= 0 && kind(ed.head) == VertexKind::M;
        const bool tail_l = kind(ed.tail) == VertexKind::L;
        const bool head_l = kind(ed.head) == VertexKind::L;
        const bool ml = tail_m && head_l;  // wants a tu-tag
        const bool lm = tail_l && head_m;  // wants an st-tag

        if (!ml && !lm) {
            if (ed.tag)
                report.push_back({ViolationCode::SpuriousCycleTag,
                                  "edge " + ed.name + " is not M-adjacent but carries a tag"});
            continue;
        }
        const int m = ml ? ed.tail : ed.head;
        if (!ed.tag) {
            report.push_back({ViolationCode::MissingCycleTag,
                              "edge " + ed.name + " carries no oriented cycle"});
            continue;
        }
        if (!census_ok[m]) continue; // graph problems already reported
        const CycleKind want = ml ? CycleKind::tu : CycleKind::st;
        if (ed.tag->kind != want) {
            report.push_back({ViolationCode::BadCycleTag,
                              "edge " + ed.name + " needs a " +
                                  std::string(cycle_kind_name(want)) + "-cycle tag"});
            continue;
        }
        const auto& family = ml ? census_of[m].tu : census_of[m].st;
        bool matches = false;
        for (const OrientedCycle& c : family)
            if (same_unoriented_cycle(*ed.tag, c)) matches = true;
        if (!matches) {
            report.push_back({ViolationCode::BadCycleTag,
                              "tag of edge " + ed.name + " is not a " +
                                  std::string(cycle_kind_name(want)) + "-cycle of M-vertex " +
                                  vname(m)});
            continue;
        }
        for (const OrientedCycle* prev : tags_at_m[m])
            if (same_unoriented_cycle(*prev, *ed.tag))
                report.push_back({ViolationCode::DuplicateCycleTag,
                                  "M-vertex " + vname(m) +
                                      " has two edges tagged with the same cycle"});
        tags_at_m[m].push_back(&*ed.tag);
    }

    if (!eq_connected(u))
        report.push_back({ViolationCode::Disconnected, "graph is not connected"});

    return report;
}

bool is_admissible(const EquippedGraph& u) { return validate_equipped(u).empty(); }

void require_admissible(const EquippedGraph& u) {
    ValidationReport report = validate_equipped(u);
    if (!report.empty())
        throw NotAdmissible("equipped graph '" + u.name + "' is not admissible: " +
                            std::string(violation_name(report.front().code)) + ": " +
                            report.front().detail);
}

int euler_equipped(const EquippedGraph& u) {
    require_admissible(u);
    int chi = 0;
    for (int v = 0; v < u.vertex_count(); ++v) {
        switch (u.vertices[v].kind) {
        case VertexKind::A:
            chi += 1;
            break;
        case VertexKind::M:
            chi += euler_four_colour(*u.vertices[v].graph) - u.degree(v);
            break;
        case VertexKind::L:
        case VertexKind::E:
            break;
        }
    }
    return chi;
}

bool orientable_equipped(const EquippedGraph& u) {
    require_admissible(u);
    for (int v = 0; v < u.vertex_count(); ++v) {
        if (u.vertices[v].kind == VertexKind::L && u.degree(v) != 2) return false;
        if (u.vertices[v].kind == VertexKind::M &&
            !orientable_four_colour(*u.vertices[v].graph))
            return false;
    }
    return true;
}

} // namespace flowgraph
