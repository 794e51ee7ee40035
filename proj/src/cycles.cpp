#include "flowgraph/cycles.hpp"

#include <algorithm>
#include <deque>

#include "fc_internal.hpp"

namespace flowgraph {

std::string_view cycle_kind_name(CycleKind k) {
    switch (k) {
    case CycleKind::tu: return "tu";
    case CycleKind::st: return "st";
    case CycleKind::cstar: return "cstar";
    }
    return "?";
}

namespace {

std::vector<Dart> min_rotation(std::vector<Dart> darts) {
    if (darts.empty()) return darts;
    const std::size_t k = darts.size();
    std::size_t best = 0;
    for (std::size_t cand = 1; cand < k; ++cand) {
        for (std::size_t i = 0; i < k; ++i) {
            const Dart& c = darts[(cand + i) % k];
            const Dart& b = darts[(best + i) % k];
            if (c < b) {
                best = cand;
                break;
            }
            if (b < c) break;
        }
    }
    std::rotate(darts.begin(), darts.begin() + static_cast<std::ptrdiff_t>(best), darts.end());
    return darts;
}

} // namespace

OrientedCycle OrientedCycle::make(CycleKind kind, std::vector<Dart> darts) {
    OrientedCycle c;
    c.kind = kind;
    c.darts = min_rotation(std::move(darts));
    return c;
}

OrientedCycle OrientedCycle::reversed() const {
    // Traversing backwards: from darts (v0,e0)(v1,e1)...(vk,ek) closing at
    // v0, the reverse path leaves v0 along ek, then vk along e_{k-1}, ...
    const std::size_t k = darts.size();
    std::vector<Dart> rev(k);
    for (std::size_t i = 0; i < k; ++i)
        rev[i] = {darts[(k - i) % k].vertex, darts[k - 1 - i].edge};
    return make(kind, std::move(rev));
}

std::vector<int> OrientedCycle::vertex_list() const {
    std::vector<int> out;
    out.reserve(darts.size());
    for (const Dart& d : darts) out.push_back(d.vertex);
    return out;
}

std::vector<int> OrientedCycle::edge_list() const {
    std::vector<int> out;
    out.reserve(darts.size());
    for (const Dart& d : darts) out.push_back(d.edge);
    return out;
}

bool same_unoriented_cycle(const OrientedCycle& lhs, const OrientedCycle& rhs) {
    return lhs == rhs || lhs.reversed() == rhs;
}

namespace {

// Walk the 2-regular subgraph of two alternating colour slots, starting at
// each unvisited vertex in canonical order with its t-edge.
std::vector<OrientedCycle> enumerate_two_colour(const FourColourGraph& g, CycleKind kind) {
    require_admissible(g);
    const FcStructure st = build_structure(g);

    auto first_edge = [&](int v) { return st.at[v].t; };
    auto other_edge = [&](int v, Colour arrived) {
        if (kind == CycleKind::tu)
            return arrived == Colour::T ? st.at[v].u : st.at[v].t;
        return arrived == Colour::T ? st.at[v].s : st.at[v].t;
    };

    std::vector<OrientedCycle> cycles;
    std::vector<char> seen(g.vertex_count(), 0);
    for (int v : canonical_vertex_order(g)) {
        if (seen[v]) continue;
        std::vector<Dart> darts;
        int cur = v;
        int e = first_edge(cur);
        do {
            seen[cur] = 1;
            darts.push_back({cur, e});
            cur = opposite_end(g.edges[e], cur);
            e = other_edge(cur, g.edges[e].colour);
        } while (cur != v);
        cycles.push_back(OrientedCycle::make(kind, std::move(darts)));
    }
    return cycles;
}

struct OrbitData {
    // Corners of each orbit in traversal order (smallest corner first,
    // leaving through its high edge), plus the edge leaving each corner.
    std::vector<std::vector<Corner>> orbits;
    std::vector<std::vector<int>> exit_edges;
};

bool corner_less(const FourColourGraph& g, const Corner& a, const Corner& b) {
    if (a.vertex != b.vertex)
        return shortlex_less(g.vertex_names[a.vertex], g.vertex_names[b.vertex]);
    return a.low_index < b.low_index;
}

OrbitData trace_orbits(const FourColourGraph& g, const FcStructure& st) {
    detail::CornerIndex ci = detail::corner_index(st);
    OrbitData out;
    std::vector<char> seen(ci.total, 0);

    std::vector<Corner> all;
    all.reserve(ci.total);
    for (int v : canonical_vertex_order(g))
        for (int low = 0; low <= st.at[v].c_count; ++low) all.push_back({v, low});

    for (const Corner& start : all) {
        if (seen[ci.id(start.vertex, start.low_index)]) continue;
        std::vector<Corner> orbit;
        std::vector<int> exits;
        Corner cur = start;
        int steps = 0;
        do {
            seen[ci.id(cur.vertex, cur.low_index)] = 1;
            const bool high_hop = (steps % 2 == 0);
            const int idx = high_hop ? cur.low_index + 1 : cur.low_index;
            const int e = detail::nominal_edge_at(st, cur.vertex, idx);
            orbit.push_back(cur);
            exits.push_back(e);
            const int nv = opposite_end(g.edges[e], cur.vertex);
            const int l = detail::nominal_index_at(st, g, nv, e);
            cur = {nv, high_hop ? l - 1 : l};
            ++steps;
        } while (!(cur == start));
        out.orbits.push_back(std::move(orbit));
        out.exit_edges.push_back(std::move(exits));
    }
    return out;
}

} // namespace

std::vector<OrientedCycle> enumerate_tu_cycles(const FourColourGraph& g) {
    return enumerate_two_colour(g, CycleKind::tu);
}

std::vector<OrientedCycle> enumerate_st_cycles(const FourColourGraph& g) {
    return enumerate_two_colour(g, CycleKind::st);
}

std::vector<std::vector<Corner>> corner_orbits(const FourColourGraph& g) {
    FcStructure st = build_structure(g);
    require_well_formed(st, g);
    return trace_orbits(g, st).orbits;
}

Corner corner_successor(const FourColourGraph& g, const Corner& c) {
    FcStructure st = build_structure(g);
    require_well_formed(st, g);
    if (c.vertex < 0 || c.vertex >= g.vertex_count() || c.low_index < 0 ||
        c.low_index > st.at[c.vertex].c_count)
        throw InvalidCorner("no corner (" + std::to_string(c.low_index) + "," +
                            std::to_string(c.low_index + 1) + ") at that vertex");
    OrbitData data = trace_orbits(g, st);
    for (const auto& orbit : data.orbits) {
        for (std::size_t i = 0; i < orbit.size(); ++i)
            if (orbit[i] == c) return orbit[(i + 1) % orbit.size()];
    }
    throw InvalidCorner("corner not found in any orbit"); // unreachable
}

std::vector<OrientedCycle> enumerate_cstar_cycles(const FourColourGraph& g) {
    require_admissible(g);
    FcStructure st = build_structure(g);
    OrbitData data = trace_orbits(g, st);
    std::vector<OrientedCycle> cycles;
    cycles.reserve(data.orbits.size());
    for (std::size_t i = 0; i < data.orbits.size(); ++i) {
        std::vector<Dart> darts;
        darts.reserve(data.orbits[i].size());
        for (std::size_t j = 0; j < data.orbits[i].size(); ++j)
            darts.push_back({data.orbits[i][j].vertex, data.exit_edges[i][j]});
        cycles.push_back(OrientedCycle::make(CycleKind::cstar, std::move(darts)));
    }
    return cycles;
}

CycleCensus cycle_census(const FourColourGraph& g) {
    CycleCensus census;
    census.tu = enumerate_tu_cycles(g);
    census.cstar = enumerate_cstar_cycles(g);
    census.st = enumerate_st_cycles(g);
    return census;
}

std::vector<std::vector<int>> cstar_cycles_by_edge_deletion(const FourColourGraph& g) {
    require_admissible(g);
    const FcStructure st = build_structure(g);
    const int m = g.edge_count();

    std::vector<char> deleted(m, 0);
    std::vector<std::vector<int>> found;

    // Nominal indices are frozen from the intact graph; deletion only
    // marks edges unusable for later traces.
    auto trace_from = [&](int e0, bool leave_high) -> std::optional<std::vector<int>> {
        std::vector<int> cycle_edges;
        int e = e0;
        // Arrive at edge end b; by assumption the entry index parity tells
        // whether the next edge is index+1 or index-1.
        int v = g.edges[e0].b;
        bool high = leave_high;
        const int cap = 2 * m + 4;
        for (int step = 0; step < cap; ++step) {
            const int idx_in = detail::nominal_index_at(st, g, v, e);
            const int idx_out = high ? idx_in + 1 : idx_in - 1;
            if (idx_out < 0 || idx_out > st.at[v].c_count + 1) return std::nullopt;
            const int next = detail::nominal_edge_at(st, v, idx_out);
            if (deleted[next]) return std::nullopt;
            cycle_edges.push_back(next);
            if (next == e0) return cycle_edges;
            v = opposite_end(g.edges[next], v);
            e = next;
            high = !high;
        }
        return std::nullopt;
    };

    // Cycle identity: edge sequence up to rotation and reversal.
    auto canonical = [](const std::vector<int>& seq) {
        auto best_rotation = [](const std::vector<int>& s) {
            const std::size_t k = s.size();
            std::vector<int> best(s);
            for (std::size_t r = 1; r < k; ++r) {
                std::vector<int> cand(k);
                for (std::size_t i = 0; i < k; ++i) cand[i] = s[(r + i) % k];
                if (cand < best) best = cand;
            }
            return best;
        };
        std::vector<int> fwd = best_rotation(seq);
        std::vector<int> rev(seq.rbegin(), seq.rend());
        rev = best_rotation(rev);
        return std::min(fwd, rev);
    };

    for (int e = 0; e < m; ++e) {
        if (deleted[e] || g.edges[e].colour == Colour::T) continue;
        for (bool leave_high : {true, false}) {
            auto traced = trace_from(e, leave_high);
            if (!traced) continue;
            auto key = canonical(*traced);
            bool known = false;
            for (const auto& k : found)
                if (k == key) known = true;
            if (!known) found.push_back(std::move(key));
        }
        deleted[e] = 1;
    }
    return found;
}

int euler_four_colour(const FourColourGraph& g) {
    CycleCensus census = cycle_census(g);
    return census.nu0() - census.nu1() + census.nu2();
}

bool orientable_four_colour(const FourColourGraph& g) {
    require_admissible(g);
    // 2-subdivide every edge of the colour-stripped multigraph, then try a
    // breadth-first 2-colouring of the resulting simple graph.
    const int n = g.vertex_count();
    const int m = g.edge_count();
    const int total = n + 2 * m;
    std::vector<std::vector<int>> adj(total);
    for (int e = 0; e < m; ++e) {
        const int c1 = n + 2 * e;
        const int c2 = n + 2 * e + 1;
        adj[g.edges[e].a].push_back(c1);
        adj[c1].push_back(g.edges[e].a);
        adj[c1].push_back(c2);
        adj[c2].push_back(c1);
        adj[c2].push_back(g.edges[e].b);
        adj[g.edges[e].b].push_back(c2);
    }
    std::vector<signed char> side(total, -1);
    std::deque<int> queue;
    for (int s = 0; s < total; ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        queue.push_back(s);
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (int w : adj[v]) {
                if (side[w] == -1) {
                    side[w] = static_cast<signed char>(1 - side[v]);
                    queue.push_back(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

SurfaceType surface_type(int chi, bool orientable) {
    if (orientable) {
        if (chi > 2 || chi % 2 != 0)
            throw InconsistentPair("orientable surfaces have even chi <= 2, got " +
                                   std::to_string(chi));
        return {chi, true, (2 - chi) / 2};
    }
    if (chi > 1)
        throw InconsistentPair("non-orientable surfaces have chi <= 1, got " +
                               std::to_string(chi));
    return {chi, false, 2 - chi};
}

} // namespace flowgraph
