#include "flowgraph/realize.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "fc_internal.hpp"

namespace flowgraph {

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

LabelledPolygon build_polygon(const FourColourGraph& g, int b) {
    if (b < 0 || b >= g.vertex_count()) throw NoSuchVertex("no such vertex");
    FcStructure st = build_structure(g);
    require_well_formed(st, g);

    // Boundary order A1 -> An -> A1: the s-side first, c-sides in
    // descending index order, then the u-side and the closing t-side.
    const int nb = st.at[b].c_count;
    LabelledPolygon poly;
    poly.owner = b;
    poly.sides.push_back({st.at[b].s, nb + 1});
    for (int idx = nb; idx >= 1; --idx)
        poly.sides.push_back({st.at[b].c_by_pos[idx - 1], idx});
    poly.sides.push_back({st.at[b].u, 0});
    poly.sides.push_back({st.at[b].t, -1});
    return poly;
}

CellComplex glue(const FourColourGraph& g) {
    require_admissible(g);

    CellComplex cc;
    const int n = g.vertex_count();
    cc.faces.reserve(n);
    for (int v = 0; v < n; ++v) cc.faces.push_back(build_polygon(g, v));

    // Slots (face, side) per edge; every edge gets exactly two.
    std::vector<std::vector<std::pair<int, int>>> slots(g.edge_count());
    for (int f = 0; f < n; ++f)
        for (int s = 0; s < cc.faces[f].side_count(); ++s)
            slots[cc.faces[f].sides[s].edge].emplace_back(f, s);

    std::vector<int> corner_offset(n);
    int corner_total = 0;
    for (int f = 0; f < n; ++f) {
        corner_offset[f] = corner_total;
        corner_total += cc.faces[f].side_count();
    }
    UnionFind uf(corner_total);

    // Side i joins polygon corners i and i+1 (mod count); corners are
    // identified endpoint-to-endpoint in the polygon numbering, with the
    // closing t-side matching corner 0 to corner 0 and last to last.
    auto side_ends = [&](int f, int s) -> std::pair<int, int> {
        const int count = cc.faces[f].side_count();
        if (s == count - 1) return {corner_offset[f] + 0, corner_offset[f] + count - 1};
        return {corner_offset[f] + s, corner_offset[f] + s + 1};
    };

    for (int e = 0; e < g.edge_count(); ++e) {
        if (slots[e].size() != 2)
            throw Error("edge " + g.edges[e].name + " does not border exactly two polygons");
        cc.edge_classes.push_back({slots[e][0], slots[e][1]});
        auto [p1, q1] = side_ends(slots[e][0].first, slots[e][0].second);
        auto [p2, q2] = side_ends(slots[e][1].first, slots[e][1].second);
        uf.unite(p1, p2);
        uf.unite(q1, q2);
    }

    std::vector<int> class_of(corner_total, -1);
    for (int f = 0; f < n; ++f) {
        for (int c = 0; c < cc.faces[f].side_count(); ++c) {
            const int root = uf.find(corner_offset[f] + c);
            if (class_of[root] == -1) {
                class_of[root] = static_cast<int>(cc.vertex_classes.size());
                cc.vertex_classes.emplace_back();
            }
            cc.vertex_classes[class_of[root]].emplace_back(f, c);
        }
    }
    return cc;
}

int complex_euler(const CellComplex& cc) {
    return cc.vertex_class_count() - cc.edge_class_count() + cc.face_count();
}

bool complex_orientable(const CellComplex& cc) {
    std::vector<std::vector<int>> adj(cc.face_count());
    for (const auto& ec : cc.edge_classes) {
        adj[ec[0].first].push_back(ec[1].first);
        adj[ec[1].first].push_back(ec[0].first);
    }
    std::vector<signed char> sign(cc.face_count(), -1);
    std::deque<int> queue;
    for (int s = 0; s < cc.face_count(); ++s) {
        if (sign[s] != -1) continue;
        sign[s] = 0;
        queue.push_back(s);
        while (!queue.empty()) {
            const int f = queue.front();
            queue.pop_front();
            for (int other : adj[f]) {
                if (sign[other] == -1) {
                    sign[other] = static_cast<signed char>(1 - sign[f]);
                    queue.push_back(other);
                } else if (sign[other] == sign[f]) {
                    return false;
                }
            }
        }
    }
    return true;
}

int equipped_euler_oracle(const EquippedGraph& u) {
    require_admissible(u);
    int chi = 0;
    for (int v = 0; v < u.vertex_count(); ++v) {
        switch (u.vertices[v].kind) {
        case VertexKind::A:
            chi += 1;
            break;
        case VertexKind::M:
            chi += complex_euler(glue(*u.vertices[v].graph)) - u.degree(v);
            break;
        case VertexKind::L:
        case VertexKind::E:
            break; // annulus / Moebius pieces contribute 0
        }
    }
    return chi;
}

} // namespace flowgraph
