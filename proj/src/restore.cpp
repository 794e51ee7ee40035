#include "flowgraph/restore.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace flowgraph {

namespace {

[[noreturn]] void reject(const std::string& why) { throw NotInImage(why); }

struct GadgetRecord {
    int a = -1; // anchor on the k1 side (walk start for plain paths)
    int b = -1;
    int k1 = 0; // internal path length / k1 stub
    int k2 = 0; // k2 stub, 0 for plain paths
    bool triangle = false;
};

// Decomposes the non-anchor part of sg into gadget components. Every
// non-anchor vertex must sit on a plain path or a path-with-triangle
// strung between two anchors; anything else is off-image.
std::vector<GadgetRecord> decompose(const SimpleGraph& sg,
                                    const std::vector<std::vector<int>>& adj,
                                    const std::vector<char>& is_anchor) {
    const int n = sg.vertex_count();
    for (auto [a, b] : sg.edges)
        if (is_anchor[a] && is_anchor[b]) reject("anchors are directly adjacent");

    std::vector<GadgetRecord> records;
    std::vector<char> seen(n, 0);

    for (int start = 0; start < n; ++start) {
        if (is_anchor[start] || seen[start]) continue;

        // Component of non-anchor vertices.
        std::vector<int> comp;
        std::vector<int> stack = {start};
        seen[start] = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : adj[v])
                if (!is_anchor[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());

        std::map<int, std::vector<int>> internal, attach;
        for (int v : comp) {
            for (int w : adj[v]) {
                if (is_anchor[w])
                    attach[v].push_back(w);
                else
                    internal[v].push_back(w);
            }
        }
        int total_attach = 0;
        for (int v : comp) total_attach += static_cast<int>(attach[v].size());
        if (total_attach != 2) reject("gadget component attaches to the wrong slot count");

        // Locate the triangle apex, if any.
        int apex = -1;
        for (int v : comp) {
            const auto deg = internal[v].size();
            if (deg > 4) reject("vertex of degree > 4 inside a gadget");
            if (deg == 3) reject("vertex of degree 3 inside a gadget");
            if (deg == 4) {
                if (apex != -1) reject("two triangle apexes in one gadget");
                apex = v;
            }
        }

        GadgetRecord rec;
        std::set<int> removed;
        if (apex != -1) {
            rec.triangle = true;
            if (!attach[apex].empty()) reject("triangle apex attaches to an anchor");
            // The apex's triangle companions: an adjacent pair of its
            // neighbours, both of plain degree 2 and unattached.
            std::vector<std::pair<int, int>> pairs;
            const auto& nb = internal[apex];
            for (std::size_t i = 0; i < nb.size(); ++i)
                for (std::size_t j = i + 1; j < nb.size(); ++j) {
                    const int x = nb[i], y = nb[j];
                    const bool adjacent =
                        std::find(internal[x].begin(), internal[x].end(), y) !=
                        internal[x].end();
                    if (adjacent && internal[x].size() == 2 && internal[y].size() == 2 &&
                        attach[x].empty() && attach[y].empty())
                        pairs.emplace_back(x, y);
                }
            if (pairs.size() != 1) reject("triangle companions are ambiguous or missing");
            removed.insert(pairs[0].first);
            removed.insert(pairs[0].second);
        }

        // The remainder must be a clean path between two attachment slots.
        std::vector<int> path_vertices;
        for (int v : comp)
            if (!removed.count(v)) path_vertices.push_back(v);

        auto path_degree = [&](int v) {
            int d = 0;
            for (int w : internal[v])
                if (!removed.count(w)) ++d;
            return d;
        };

        int walk_start = -1;
        if (path_vertices.size() == 1) {
            walk_start = path_vertices[0];
            if (attach[walk_start].size() != 2) reject("lone gadget vertex needs two anchors");
        } else {
            for (int v : path_vertices)
                if (path_degree(v) == 1 && attach[v].size() == 1 &&
                    (walk_start == -1 || v < walk_start))
                    walk_start = v;
            if (walk_start == -1) reject("gadget path has no attached end");
        }

        std::vector<int> order;
        int prev = -1, cur = walk_start;
        while (true) {
            order.push_back(cur);
            int next = -1;
            for (int w : internal[cur]) {
                if (removed.count(w) || w == prev) continue;
                if (next != -1) reject("gadget path branches");
                next = w;
            }
            if (next == -1) break;
            prev = cur;
            cur = next;
        }
        if (order.size() != path_vertices.size()) reject("gadget component is not a path");
        for (std::size_t i = 0; i + 1 < order.size(); ++i)
            if (!attach[order[i]].empty() && i != 0)
                reject("anchor attachment in the middle of a gadget path");

        const int first = order.front(), last = order.back();
        if (order.size() == 1) {
            rec.a = attach[first][0];
            rec.b = attach[first][1];
        } else {
            if (attach[first].size() != 1 || attach[last].size() != 1)
                reject("gadget path ends attach to the wrong slot count");
            rec.a = attach[first][0];
            rec.b = attach[last][0];
        }
        if (rec.a == rec.b) reject("gadget realizes a loop");

        if (rec.triangle) {
            const auto apex_at = std::find(order.begin(), order.end(), apex);
            if (apex_at == order.begin() || apex_at == order.end() - 1 ||
                apex_at == order.end())
                reject("triangle apex sits at a gadget end");
            rec.k1 = static_cast<int>(apex_at - order.begin());
            rec.k2 = static_cast<int>(order.end() - apex_at) - 1;
        } else {
            rec.k1 = static_cast<int>(order.size());
        }
        records.push_back(rec);
    }
    return records;
}

std::vector<char> triangle_members(const SimpleGraph& sg,
                                   const std::vector<std::vector<int>>& adj) {
    std::vector<char> in_triangle(sg.vertex_count(), 0);
    std::vector<std::set<int>> nb(sg.vertex_count());
    for (int v = 0; v < sg.vertex_count(); ++v) nb[v].insert(adj[v].begin(), adj[v].end());
    for (auto [a, b] : sg.edges)
        for (int c : adj[a])
            if (c != b && nb[b].count(c)) in_triangle[a] = in_triangle[b] = in_triangle[c] = 1;
    return in_triangle;
}

Colour colour_of_plain_path(int k) {
    switch (k) {
    case 1: return Colour::S;
    case 2: return Colour::T;
    case 3: return Colour::U;
    default: reject("plain path of length " + std::to_string(k) + " is off-image");
    }
}

Colour colour_of_oriented_gadget(int k_long) {
    switch (k_long) {
    case 3: return Colour::S;
    case 4: return Colour::T;
    case 5: return Colour::U;
    default: reject("oriented gadget with long stub " + std::to_string(k_long));
    }
}

} // namespace

FourColourGraph restore_four_colour(const SimpleGraph& sg) {
    const auto adj = sg.adjacency();
    const auto in_triangle = triangle_members(sg, adj);

    std::vector<char> is_anchor(sg.vertex_count(), 0);
    std::vector<int> anchor_index(sg.vertex_count(), -1);
    FourColourGraph g;
    g.name = "restored";
    for (int v = 0; v < sg.vertex_count(); ++v) {
        if (adj[v].size() >= 3 && !in_triangle[v]) {
            is_anchor[v] = 1;
            anchor_index[v] = g.vertex_count();
            g.vertex_names.push_back(sg.vertex_names[v]);
        }
    }
    if (g.vertex_count() == 0) reject("no original vertices found");

    int counter = 0;
    for (const GadgetRecord& rec : decompose(sg, adj, is_anchor)) {
        FcEdge e;
        e.name = "e" + std::to_string(++counter);
        e.a = anchor_index[rec.a];
        e.b = anchor_index[rec.b];
        if (rec.triangle) {
            if (rec.k1 < 6 || rec.k2 < 6)
                reject("triangle gadget with stubs (" + std::to_string(rec.k1) + "," +
                       std::to_string(rec.k2) + ") is not a c-edge");
            e.colour = Colour::C;
            e.pos_a = rec.k1 - 5;
            e.pos_b = rec.k2 - 5;
        } else {
            e.colour = colour_of_plain_path(rec.k1);
        }
        g.edges.push_back(std::move(e));
    }

    FcStructure st = build_structure(g);
    if (!st.well_formed) reject("restored graph is not a well-formed four-colour graph");
    return g;
}

namespace {

struct RecoveredTag {
    int m = -1;       // component id
    int l = -1;       // owner vertex in sg
    bool to_l = false; // true: (M,L) edge, tu-cycle; false: (L,M), st-cycle
    OrientedCycle cycle;
};

} // namespace

EquippedGraph restore_equipped(const SimpleGraph& sg) {
    const auto adj = sg.adjacency();
    const int n = sg.vertex_count();

    // Pendants identify the A/L/E originals.
    std::vector<int> pendant_count(n, 0);
    std::vector<char> is_pendant(n, 0);
    for (int v = 0; v < n; ++v) {
        if (adj[v].size() == 1) {
            is_pendant[v] = 1;
            ++pendant_count[adj[v][0]];
        }
    }

    bool any_pendant = std::any_of(is_pendant.begin(), is_pendant.end(),
                                   [](char c) { return c != 0; });
    if (!any_pendant) {
        // An equipped graph without A/L/E vertices is a lone M-vertex.
        EquippedGraph u;
        u.name = "restored";
        EqVertex m;
        m.name = "m1";
        m.kind = VertexKind::M;
        m.graph = restore_four_colour(sg);
        m.graph_name = m.graph->name;
        u.vertices.push_back(std::move(m));
        if (!validate_equipped(u).empty()) reject("restored single-M graph is inadmissible");
        return u;
    }

    // Strip pendants.
    SimpleGraph core;
    std::vector<int> core_id(n, -1);
    std::vector<int> sg_id; // core -> sg
    for (int v = 0; v < n; ++v) {
        if (is_pendant[v]) continue;
        core_id[v] = core.add_vertex(sg.vertex_names[v]);
        sg_id.push_back(v);
    }
    for (auto [a, b] : sg.edges)
        if (core_id[a] != -1 && core_id[b] != -1) core.add_edge(core_id[a], core_id[b]);
    core.normalize();
    const auto core_adj = core.adjacency();

    std::vector<char> is_owner(core.vertex_count(), 0);
    std::vector<VertexKind> owner_kind(core.vertex_count(), VertexKind::A);
    std::vector<Weight> owner_weight(core.vertex_count(), Weight::plus);
    for (int v = 0; v < n; ++v) {
        if (pendant_count[v] == 0) continue;
        if (is_pendant[v]) reject("pendant vertex owns a pendant");
        const int c = core_id[v];
        is_owner[c] = 1;
        switch (pendant_count[v]) {
        case 2: owner_kind[c] = VertexKind::A; break;
        case 3: owner_kind[c] = VertexKind::L; break;
        case 4: owner_kind[c] = VertexKind::E; owner_weight[c] = Weight::minus; break;
        case 5: owner_kind[c] = VertexKind::E; owner_weight[c] = Weight::plus; break;
        default: reject("vertex owns " + std::to_string(pendant_count[v]) + " pendants");
        }
    }

    const auto in_triangle = triangle_members(core, core_adj);
    std::vector<char> is_anchor = is_owner;
    for (int v = 0; v < core.vertex_count(); ++v)
        if (!is_anchor[v] && core_adj[v].size() >= 3 && !in_triangle[v]) is_anchor[v] = 1;

    const auto records = decompose(core, core_adj, is_anchor);

    // Sort records into colour edges, plain oriented edges and the rest.
    struct ColourRec {
        int a, b;       // core anchors
        Colour colour;
        int pos_a = 0, pos_b = 0;
        int tail = -1;  // core anchor, -1 when unoriented
    };
    struct PlainRec {
        int tail, head; // core anchors
    };
    std::vector<ColourRec> colour_recs;
    std::vector<PlainRec> plain_recs;

    for (const GadgetRecord& rec : records) {
        if (!rec.triangle) {
            ColourRec cr{rec.a, rec.b, colour_of_plain_path(rec.k1), 0, 0, -1};
            colour_recs.push_back(cr);
            continue;
        }
        const int k_long = std::max(rec.k1, rec.k2);
        const int k_short = std::min(rec.k1, rec.k2);
        if (k_short >= 6) {
            colour_recs.push_back({rec.a, rec.b, Colour::C, rec.k1 - 5, rec.k2 - 5, -1});
        } else if (k_short == 1 && k_long == 2) {
            const int tail = rec.k1 == 2 ? rec.a : rec.b;
            const int head = rec.k1 == 2 ? rec.b : rec.a;
            plain_recs.push_back({tail, head});
        } else if (k_short == 1) {
            const int tail = rec.k1 == k_long ? rec.a : rec.b;
            const int head = rec.k1 == k_long ? rec.b : rec.a;
            colour_recs.push_back({tail, head, colour_of_oriented_gadget(k_long), 0, 0, tail});
        } else {
            reject("triangle gadget with stubs (" + std::to_string(rec.k1) + "," +
                   std::to_string(rec.k2) + ") is off-image");
        }
    }

    // Partition the structural anchors into M components via colour edges.
    std::vector<int> comp_of(core.vertex_count(), -1);
    {
        std::vector<int> parent(core.vertex_count());
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const ColourRec& cr : colour_recs) {
            if (is_owner[cr.a] || is_owner[cr.b])
                reject("colour edge touches an A/L/E vertex");
            parent[find(cr.a)] = find(cr.b);
        }
        int next = 0;
        std::map<int, int> roots;
        for (int v = 0; v < core.vertex_count(); ++v) {
            if (is_owner[v] || !is_anchor[v]) continue;
            const int r = find(v);
            if (!roots.count(r)) roots[r] = next++;
            comp_of[v] = roots[r];
        }
    }
    int m_count = 0;
    for (int v = 0; v < core.vertex_count(); ++v) m_count = std::max(m_count, comp_of[v] + 1);

    // Rebuild each four-colour graph.
    std::vector<FourColourGraph> m_graphs(m_count);
    std::vector<std::vector<int>> fc_id_of(m_count); // core anchor -> fcg vertex
    std::vector<int> fc_of_core(core.vertex_count(), -1);
    for (int c = 0; c < m_count; ++c) m_graphs[c].name = "restored_m" + std::to_string(c + 1);
    for (int v = 0; v < core.vertex_count(); ++v) {
        if (comp_of[v] < 0) continue;
        fc_of_core[v] = m_graphs[comp_of[v]].vertex_count();
        m_graphs[comp_of[v]].vertex_names.push_back(core.vertex_names[v]);
    }
    std::vector<std::map<int, int>> oriented_dir(m_count); // fcg edge -> tail fcg vertex
    std::vector<int> edge_counter(m_count, 0);
    for (const ColourRec& cr : colour_recs) {
        const int c = comp_of[cr.a];
        if (c < 0 || comp_of[cr.b] != c) reject("colour edge spans M components");
        FcEdge e;
        e.name = "e" + std::to_string(++edge_counter[c]);
        e.colour = cr.colour;
        e.a = fc_of_core[cr.a];
        e.b = fc_of_core[cr.b];
        e.pos_a = cr.pos_a;
        e.pos_b = cr.pos_b;
        const int id = m_graphs[c].edge_count();
        m_graphs[c].edges.push_back(std::move(e));
        if (cr.tail != -1) oriented_dir[c][id] = fc_of_core[cr.tail];
    }
    std::vector<CycleCensus> censuses(m_count);
    for (int c = 0; c < m_count; ++c) {
        if (!validate_four_colour(m_graphs[c]).empty())
            reject("restored four-colour graph is inadmissible");
        censuses[c] = cycle_census(m_graphs[c]);
    }

    // Group the plain oriented records into equipped edges and
    // L-to-cycle connection bundles.
    struct Bundle {
        bool to_l = false;
        std::set<int> members; // fcg vertex ids
        int count = 0;
    };
    std::map<std::pair<int, int>, Bundle> bundles; // (owner core id, component)
    struct OwnerEdge {
        int tail, head; // core owner ids
    };
    std::vector<OwnerEdge> owner_edges;

    for (const PlainRec& pr : plain_recs) {
        const bool tail_owner = is_owner[pr.tail];
        const bool head_owner = is_owner[pr.head];
        if (tail_owner && head_owner) {
            owner_edges.push_back({pr.tail, pr.head});
            continue;
        }
        const int owner = tail_owner ? pr.tail : pr.head;
        const int member = tail_owner ? pr.head : pr.tail;
        if (!is_owner[owner] || comp_of[member] < 0)
            reject("oriented connection with no L endpoint");
        if (owner_kind[owner] != VertexKind::L)
            reject("cycle connection attaches to a non-L vertex");
        Bundle& bundle = bundles[{owner, comp_of[member]}];
        const bool to_l = head_owner; // cycle vertex -> L means an (M,L) edge
        if (bundle.count > 0 && bundle.to_l != to_l)
            reject("cycle connections of mixed direction");
        bundle.to_l = to_l;
        bundle.members.insert(fc_of_core[member]);
        ++bundle.count;
    }

    // Match every bundle against a census cycle and read its orientation
    // from the recovered directions of the cycle's private colour edges
    // (u-edges for tu-cycles, s-edges for st-cycles).
    std::vector<RecoveredTag> tags;
    for (const auto& [key, bundle] : bundles) {
        const auto& [owner, comp] = key;
        const auto& family = bundle.to_l ? censuses[comp].tu : censuses[comp].st;
        const Colour private_colour = bundle.to_l ? Colour::U : Colour::S;
        const OrientedCycle* match = nullptr;
        for (const OrientedCycle& c : family) {
            auto vs = c.vertex_list();
            std::set<int> vset(vs.begin(), vs.end());
            if (vset == bundle.members) {
                match = &c;
                break;
            }
        }
        if (!match || bundle.count != static_cast<int>(match->length()))
            reject("cycle connections do not trace a tagged cycle");

        int forward = 0, backward = 0;
        const auto& darts = match->darts;
        for (std::size_t i = 0; i < darts.size(); ++i) {
            const FcEdge& fe = m_graphs[comp].edges[darts[i].edge];
            if (fe.colour != private_colour) continue;
            auto it = oriented_dir[comp].find(darts[i].edge);
            if (it == oriented_dir[comp].end()) reject("tagged cycle edge is unoriented");
            if (it->second == darts[i].vertex)
                ++forward;
            else if (it->second == opposite_end(fe, darts[i].vertex))
                ++backward;
            else
                reject("tagged cycle orientation is inconsistent");
        }
        if ((forward == 0) == (backward == 0))
            reject("tagged cycle orientation is inconsistent");
        RecoveredTag tag;
        tag.m = comp;
        tag.l = owner;
        tag.to_l = bundle.to_l;
        tag.cycle = forward > 0 ? *match : match->reversed();
        tags.push_back(std::move(tag));
    }

    // Recompute the forward orientation map from the recovered tags and
    // demand an exact match (tu-tags take precedence on shared t-edges).
    {
        std::vector<std::map<int, int>> expected(m_count);
        for (const RecoveredTag& tag : tags) {
            if (!tag.to_l) continue;
            for (const Dart& d : tag.cycle.darts) expected[tag.m][d.edge] = d.vertex;
        }
        for (const RecoveredTag& tag : tags) {
            if (tag.to_l) continue;
            for (const Dart& d : tag.cycle.darts) {
                const Colour colour = m_graphs[tag.m].edges[d.edge].colour;
                if (colour == Colour::T && expected[tag.m].count(d.edge)) continue;
                expected[tag.m][d.edge] = d.vertex;
            }
        }
        for (int c = 0; c < m_count; ++c)
            if (expected[c] != oriented_dir[c])
                reject("oriented edges do not match the recovered tags");
    }

    // Assemble the equipped graph: owners keep their names, components
    // become m1, m2, ... in order.
    EquippedGraph u;
    u.name = "restored";
    std::vector<int> eq_of_core(core.vertex_count(), -1);
    for (int v = 0; v < core.vertex_count(); ++v) {
        if (!is_owner[v]) continue;
        EqVertex vx;
        vx.name = core.vertex_names[v];
        vx.kind = owner_kind[v];
        vx.weight = owner_weight[v];
        eq_of_core[v] = u.vertex_count();
        u.vertices.push_back(std::move(vx));
    }
    std::vector<int> eq_of_comp(m_count, -1);
    for (int c = 0; c < m_count; ++c) {
        EqVertex vx;
        vx.name = "m" + std::to_string(c + 1);
        vx.kind = VertexKind::M;
        vx.graph = m_graphs[c];
        vx.graph_name = m_graphs[c].name;
        eq_of_comp[c] = u.vertex_count();
        u.vertices.push_back(std::move(vx));
    }

    int edge_id = 0;
    for (const OwnerEdge& oe : owner_edges) {
        EqEdge e;
        e.name = "d" + std::to_string(++edge_id);
        e.tail = eq_of_core[oe.tail];
        e.head = eq_of_core[oe.head];
        u.edges.push_back(std::move(e));
    }
    for (const RecoveredTag& tag : tags) {
        EqEdge e;
        e.name = "d" + std::to_string(++edge_id);
        if (tag.to_l) {
            e.tail = eq_of_comp[tag.m];
            e.head = eq_of_core[tag.l];
        } else {
            e.tail = eq_of_core[tag.l];
            e.head = eq_of_comp[tag.m];
        }
        e.tag = tag.cycle;
        u.edges.push_back(std::move(e));
    }

    if (!validate_equipped(u).empty()) reject("restored equipped graph is inadmissible");
    return u;
}

} // namespace flowgraph
