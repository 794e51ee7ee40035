#include "flowgraph/iso.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "flowgraph/reduce.hpp"

namespace flowgraph {

bool verify_simple_iso(const SimpleGraph& g1, const SimpleGraph& g2,
                       const IsoCertificate& cert) {
    const int n = g1.vertex_count();
    if (n != g2.vertex_count() || static_cast<int>(cert.mapping.size()) != n) return false;
    if (g1.edge_count() != g2.edge_count()) return false;
    std::vector<char> hit(n, 0);
    for (int v : cert.mapping) {
        if (v < 0 || v >= n || hit[v]) return false;
        hit[v] = 1;
    }
    std::set<std::pair<int, int>> edges2(g2.edges.begin(), g2.edges.end());
    for (auto [a, b] : g1.edges) {
        int x = cert.mapping[a], y = cert.mapping[b];
        if (x > y) std::swap(x, y);
        if (!edges2.count({x, y})) return false;
    }
    return true;
}

namespace {

struct RefineResult {
    std::vector<int> col1, col2;
    bool feasible = true;
    bool discrete = false;
};

// Shared colour refinement on both graphs; colour ids are comparable
// across the two sides. Returns infeasible when class sizes diverge.
RefineResult refine(const std::vector<std::vector<int>>& adj1,
                    const std::vector<std::vector<int>>& adj2, std::vector<int> col1,
                    std::vector<int> col2) {
    const int n1 = static_cast<int>(adj1.size());
    const int n2 = static_cast<int>(adj2.size());
    int classes = 0;
    for (int c : col1) classes = std::max(classes, c + 1);
    for (int c : col2) classes = std::max(classes, c + 1);

    while (true) {
        using Sig = std::pair<int, std::vector<int>>;
        std::map<Sig, int> ids;
        auto signature = [&](const std::vector<std::vector<int>>& adj,
                             const std::vector<int>& col, int v) {
            std::vector<int> around;
            around.reserve(adj[v].size());
            for (int w : adj[v]) around.push_back(col[w]);
            std::sort(around.begin(), around.end());
            return Sig{col[v], std::move(around)};
        };
        std::vector<int> next1(n1), next2(n2);
        for (int v = 0; v < n1; ++v) {
            auto sig = signature(adj1, col1, v);
            auto [it, _] = ids.emplace(std::move(sig), static_cast<int>(ids.size()));
            next1[v] = it->second;
        }
        for (int v = 0; v < n2; ++v) {
            auto sig = signature(adj2, col2, v);
            auto [it, _] = ids.emplace(std::move(sig), static_cast<int>(ids.size()));
            next2[v] = it->second;
        }

        std::vector<int> count1(ids.size(), 0), count2(ids.size(), 0);
        for (int c : next1) ++count1[c];
        for (int c : next2) ++count2[c];
        if (count1 != count2) return {std::move(next1), std::move(next2), false, false};

        const int new_classes = static_cast<int>(ids.size());
        col1 = std::move(next1);
        col2 = std::move(next2);
        if (new_classes == classes) break;
        classes = new_classes;
        if (classes == n1) break;
    }

    RefineResult out{std::move(col1), std::move(col2), true, false};
    std::set<int> distinct(out.col1.begin(), out.col1.end());
    out.discrete = static_cast<int>(distinct.size()) == n1;
    return out;
}

std::optional<IsoCertificate> search(const SimpleGraph& g1, const SimpleGraph& g2,
                                     const std::vector<std::vector<int>>& adj1,
                                     const std::vector<std::vector<int>>& adj2,
                                     std::vector<int> col1, std::vector<int> col2) {
    RefineResult ref = refine(adj1, adj2, std::move(col1), std::move(col2));
    if (!ref.feasible) return std::nullopt;
    const int n = g1.vertex_count();

    if (ref.discrete) {
        std::vector<int> where2(n * 2, -1);
        for (int v = 0; v < n; ++v) where2[ref.col2[v]] = v;
        IsoCertificate cert;
        cert.mapping.resize(n);
        for (int v = 0; v < n; ++v) {
            const int w = where2[ref.col1[v]];
            if (w < 0) return std::nullopt;
            cert.mapping[v] = w;
        }
        if (!verify_simple_iso(g1, g2, cert)) return std::nullopt;
        return cert;
    }

    // Individualize: smallest non-singleton class, smallest g1 member.
    std::map<int, int> class_size;
    for (int c : ref.col1) ++class_size[c];
    int target = -1;
    for (auto [c, size] : class_size)
        if (size > 1 && (target == -1 || size < class_size[target])) target = c;
    int v1 = -1;
    for (int v = 0; v < n && v1 == -1; ++v)
        if (ref.col1[v] == target) v1 = v;

    int fresh = 0;
    for (int c : ref.col1) fresh = std::max(fresh, c + 1);
    for (int v2 = 0; v2 < n; ++v2) {
        if (ref.col2[v2] != target) continue;
        std::vector<int> c1 = ref.col1, c2 = ref.col2;
        c1[v1] = fresh;
        c2[v2] = fresh;
        if (auto found = search(g1, g2, adj1, adj2, std::move(c1), std::move(c2)))
            return found;
    }
    return std::nullopt;
}

} // namespace

std::optional<IsoCertificate> simple_iso(const SimpleGraph& g1, const SimpleGraph& g2) {
    if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count())
        return std::nullopt;
    if (g1.vertex_count() == 0) return IsoCertificate{};
    const auto adj1 = g1.adjacency();
    const auto adj2 = g2.adjacency();
    std::vector<int> col1(g1.vertex_count(), 0), col2(g2.vertex_count(), 0);
    return search(g1, g2, adj1, adj2, std::move(col1), std::move(col2));
}

namespace {

std::optional<IsoCertificate> run_backend(const SimpleIsoBackend& backend,
                                          const SimpleGraph& g1, const SimpleGraph& g2) {
    if (backend) return backend(g1, g2);
    return simple_iso(g1, g2);
}

} // namespace

std::optional<IsoCertificate> four_colour_iso_mapping(const FourColourGraph& g1,
                                                      const FourColourGraph& g2,
                                                      const SimpleIsoBackend& backend) {
    const FourColourReduction r1 = to_simple_four_colour(g1);
    const FourColourReduction r2 = to_simple_four_colour(g2);
    auto cert = run_backend(backend, r1.graph, r2.graph);
    if (!cert) return std::nullopt;

    IsoCertificate out;
    out.mapping.resize(r1.original_count);
    for (int v = 0; v < r1.original_count; ++v) {
        const int w = cert->mapping[v];
        if (w < 0 || w >= r2.original_count)
            throw Error("backend mapped an original vertex onto a gadget vertex");
        out.mapping[v] = w;
    }
    return out;
}

bool four_colour_iso(const FourColourGraph& g1, const FourColourGraph& g2) {
    return four_colour_iso_mapping(g1, g2).has_value();
}

std::optional<IsoCertificate> equipped_iso_mapping(const EquippedGraph& u1,
                                                   const EquippedGraph& u2,
                                                   const SimpleIsoBackend& backend) {
    const EquippedReduction r1 = to_simple_equipped(u1);
    const EquippedReduction r2 = to_simple_equipped(u2);
    auto cert = run_backend(backend, r1.graph, r2.graph);
    if (!cert) return std::nullopt;

    std::vector<int> owner2(r2.graph.vertex_count(), -1);
    for (int v = 0; v < u2.vertex_count(); ++v) {
        if (r2.vertex_of[v] != -1) owner2[r2.vertex_of[v]] = v;
        for (int s : r2.m_vertices_of[v]) owner2[s] = v;
    }

    IsoCertificate out;
    out.mapping.resize(u1.vertex_count());
    for (int v = 0; v < u1.vertex_count(); ++v) {
        const int anchor =
            r1.vertex_of[v] != -1 ? r1.vertex_of[v] : r1.m_vertices_of[v].front();
        const int image = owner2[cert->mapping[anchor]];
        if (image < 0) throw Error("backend mapped an anchor onto a gadget vertex");
        out.mapping[v] = image;
        for (int s : r1.m_vertices_of[v])
            if (owner2[cert->mapping[s]] != image)
                throw Error("backend split an inlined graph across M-vertices");
    }
    return out;
}

bool equipped_iso(const EquippedGraph& u1, const EquippedGraph& u2) {
    return equipped_iso_mapping(u1, u2).has_value();
}

bool verify_four_colour_iso(const FourColourGraph& g1, const FourColourGraph& g2,
                            const std::vector<int>& mapping) {
    const int n = g1.vertex_count();
    if (n != g2.vertex_count() || static_cast<int>(mapping.size()) != n) return false;
    if (g1.edge_count() != g2.edge_count()) return false;
    std::vector<char> hit(n, 0);
    for (int v : mapping) {
        if (v < 0 || v >= n || hit[v]) return false;
        hit[v] = 1;
    }
    using Key = std::tuple<int, int, Colour, int, int>;
    auto edge_key = [](int a, int b, Colour colour, int pa, int pb) {
        if (a <= b) return Key{a, b, colour, pa, pb};
        return Key{b, a, colour, pb, pa};
    };
    std::multiset<Key> want, have;
    for (const FcEdge& e : g2.edges) want.insert(edge_key(e.a, e.b, e.colour, e.pos_a, e.pos_b));
    for (const FcEdge& e : g1.edges)
        have.insert(edge_key(mapping[e.a], mapping[e.b], e.colour, e.pos_a, e.pos_b));
    return want == have;
}

// ---------------------------------------------------------------------
// Exhaustive oracles.
// ---------------------------------------------------------------------

namespace {

struct Budget {
    std::uint64_t left;

    void spend() {
        if (left == 0) throw TooLarge("exhaustive search exceeded its node budget");
        --left;
    }
};

struct FcOracle {
    const FourColourGraph& g1;
    const FourColourGraph& g2;
    Budget& budget;
    // Constraints: tagged cycle pairs that the bijection must map exactly.
    std::vector<std::pair<const OrientedCycle*, const OrientedCycle*>> cycle_pairs;

    std::vector<int> mapping;  // g1 vertex -> g2 vertex or -1
    std::vector<char> used;

    explicit FcOracle(const FourColourGraph& a, const FourColourGraph& b, Budget& bud)
        : g1(a), g2(b), budget(bud) {}

    bool compatible(int v1, int v2) const {
        // Every assigned neighbour relation of v1 must exist for v2 with
        // identical colour and positions.
        for (const FcEdge& e1 : g1.edges) {
            int other = -1;
            if (e1.a == v1) other = e1.b;
            else if (e1.b == v1) other = e1.a;
            else continue;
            if (mapping[other] == -1) continue;
            const int w2 = mapping[other];
            const int pos_v = e1.a == v1 ? e1.pos_a : e1.pos_b;
            const int pos_w = e1.a == v1 ? e1.pos_b : e1.pos_a;
            bool found = false;
            for (const FcEdge& e2 : g2.edges) {
                if (e2.colour != e1.colour) continue;
                int pv = -1, pw = -1;
                if (e2.a == v2 && e2.b == w2) {
                    pv = e2.pos_a;
                    pw = e2.pos_b;
                } else if (e2.b == v2 && e2.a == w2) {
                    pv = e2.pos_b;
                    pw = e2.pos_a;
                } else {
                    continue;
                }
                if (pv == pos_v && pw == pos_w) {
                    found = true;
                    break;
                }
            }
            if (!found) return false;
        }
        return true;
    }

    bool cycles_ok() const {
        for (auto [c1, c2] : cycle_pairs) {
            std::vector<Dart> mapped;
            mapped.reserve(c1->darts.size());
            for (const Dart& d : c1->darts) {
                // Map the edge through the endpoints and colour/positions.
                const FcEdge& e1 = g1.edges[d.edge];
                const int a2 = mapping[e1.a], b2 = mapping[e1.b];
                int image = -1;
                for (int e = 0; e < g2.edge_count(); ++e) {
                    const FcEdge& e2 = g2.edges[e];
                    if (e2.colour != e1.colour) continue;
                    const bool fwd = e2.a == a2 && e2.b == b2 && e2.pos_a == e1.pos_a &&
                                     e2.pos_b == e1.pos_b;
                    const bool rev = e2.a == b2 && e2.b == a2 && e2.pos_a == e1.pos_b &&
                                     e2.pos_b == e1.pos_a;
                    if (fwd || rev) {
                        image = e;
                        break;
                    }
                }
                if (image == -1) return false;
                mapped.push_back({mapping[d.vertex], image});
            }
            if (OrientedCycle::make(c1->kind, std::move(mapped)) != *c2) return false;
        }
        return true;
    }

    bool assign(std::size_t i, const std::vector<int>& order,
                const std::vector<std::vector<int>>& candidates) {
        budget.spend();
        if (i == order.size()) return cycles_ok();
        const int v1 = order[i];
        for (int v2 : candidates[v1]) {
            if (used[v2]) continue;
            if (!compatible(v1, v2)) continue;
            mapping[v1] = v2;
            used[v2] = 1;
            if (assign(i + 1, order, candidates)) return true;
            mapping[v1] = -1;
            used[v2] = 0;
        }
        return false;
    }

    bool run() {
        const int n = g1.vertex_count();
        if (n != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return false;

        FcStructure st1 = build_structure(g1);
        FcStructure st2 = build_structure(g2);
        std::vector<std::vector<int>> candidates(n);
        for (int v1 = 0; v1 < n; ++v1)
            for (int v2 = 0; v2 < n; ++v2)
                if (st1.n_b(v1) == st2.n_b(v2)) candidates[v1].push_back(v2);

        // Assign along a connectivity-first order for early pruning.
        std::vector<int> order;
        std::vector<char> queued(n, 0);
        for (int s = 0; s < n; ++s) {
            if (queued[s]) continue;
            queued[s] = 1;
            std::vector<int> stack = {s};
            while (!stack.empty()) {
                const int v = stack.back();
                stack.pop_back();
                order.push_back(v);
                for (const FcEdge& e : g1.edges) {
                    int other = -1;
                    if (e.a == v) other = e.b;
                    else if (e.b == v) other = e.a;
                    else continue;
                    if (!queued[other]) {
                        queued[other] = 1;
                        stack.push_back(other);
                    }
                }
            }
        }

        mapping.assign(n, -1);
        used.assign(n, 0);
        return assign(0, order, candidates);
    }
};

} // namespace

bool direct_iso_oracle(const FourColourGraph& g1, const FourColourGraph& g2,
                       const OracleOptions& opts) {
    FcStructure st1 = build_structure(g1);
    require_well_formed(st1, g1);
    FcStructure st2 = build_structure(g2);
    require_well_formed(st2, g2);
    Budget budget{opts.max_nodes};
    FcOracle oracle(g1, g2, budget);
    return oracle.run();
}

namespace {

struct EqOracle {
    const EquippedGraph& u1;
    const EquippedGraph& u2;
    Budget& budget;

    std::vector<int> mapping;
    std::vector<char> used;

    EqOracle(const EquippedGraph& a, const EquippedGraph& b, Budget& bud)
        : u1(a), u2(b), budget(bud) {}

    bool vertex_compatible(int v1, int v2) const {
        const EqVertex& a = u1.vertices[v1];
        const EqVertex& b = u2.vertices[v2];
        if (a.kind != b.kind) return false;
        if (a.kind == VertexKind::E && a.weight != b.weight) return false;
        if (a.kind == VertexKind::M) {
            if (a.graph->vertex_count() != b.graph->vertex_count() ||
                a.graph->edge_count() != b.graph->edge_count())
                return false;
        }
        return true;
    }

    int count_edges(const EquippedGraph& u, int tail, int head) const {
        int c = 0;
        for (const EqEdge& e : u.edges)
            if (e.tail == tail && e.head == head) ++c;
        return c;
    }

    bool adjacency_ok(int v1, int v2) const {
        for (int w1 = 0; w1 < u1.vertex_count(); ++w1) {
            if (mapping[w1] == -1) continue;
            if (count_edges(u1, v1, w1) != count_edges(u2, v2, mapping[w1])) return false;
            if (count_edges(u1, w1, v1) != count_edges(u2, mapping[w1], v2)) return false;
        }
        return true;
    }

    // With the vertex bijection fixed, every M-pair needs a four-colour
    // isomorphism carrying each tag to the corresponding edge's tag with
    // the same orientation.
    bool tags_ok() const {
        for (int v1 = 0; v1 < u1.vertex_count(); ++v1) {
            if (u1.vertices[v1].kind != VertexKind::M) continue;
            const int v2 = mapping[v1];
            FcOracle sub(*u1.vertices[v1].graph, *u2.vertices[v2].graph, budget);
            for (const EqEdge& e1 : u1.edges) {
                if (!e1.tag) continue;
                if (e1.tail != v1 && e1.head != v1) continue;
                // The corresponding edge of u2 under the vertex bijection.
                const int t2 = mapping[e1.tail], h2 = mapping[e1.head];
                const OrientedCycle* other_tag = nullptr;
                for (const EqEdge& e2 : u2.edges)
                    if (e2.tail == t2 && e2.head == h2 && e2.tag) other_tag = &*e2.tag;
                if (!other_tag) return false;
                sub.cycle_pairs.emplace_back(&*e1.tag, other_tag);
            }
            if (!sub.run()) return false;
        }
        return true;
    }

    bool assign(int i) {
        budget.spend();
        const int n = u1.vertex_count();
        if (i == n) return u1.edge_count() == u2.edge_count() && tags_ok();
        for (int v2 = 0; v2 < n; ++v2) {
            if (used[v2]) continue;
            if (!vertex_compatible(i, v2)) continue;
            mapping[i] = v2;
            used[v2] = 1;
            if (adjacency_ok(i, v2) && assign(i + 1)) return true;
            mapping[i] = -1;
            used[v2] = 0;
        }
        return false;
    }

    bool run() {
        if (u1.vertex_count() != u2.vertex_count() || u1.edge_count() != u2.edge_count())
            return false;
        mapping.assign(u1.vertex_count(), -1);
        used.assign(u1.vertex_count(), 0);
        return assign(0);
    }
};

} // namespace

bool direct_iso_oracle(const EquippedGraph& u1, const EquippedGraph& u2,
                       const OracleOptions& opts) {
    require_admissible(u1);
    require_admissible(u2);
    Budget budget{opts.max_nodes};
    EqOracle oracle(u1, u2, budget);
    return oracle.run();
}

bool verify_equipped_iso(const EquippedGraph& u1, const EquippedGraph& u2,
                         const std::vector<int>& mapping) {
    const int n = u1.vertex_count();
    if (n != u2.vertex_count() || static_cast<int>(mapping.size()) != n) return false;
    if (u1.edge_count() != u2.edge_count()) return false;
    std::vector<char> hit(n, 0);
    for (int v : mapping) {
        if (v < 0 || v >= n || hit[v]) return false;
        hit[v] = 1;
    }
    Budget budget{OracleOptions{}.max_nodes};
    EqOracle oracle(u1, u2, budget);
    oracle.mapping = mapping;
    oracle.used.assign(n, 1);
    for (int v = 0; v < n; ++v) {
        if (!oracle.vertex_compatible(v, mapping[v])) return false;
        if (!oracle.adjacency_ok(v, mapping[v])) return false;
    }
    return oracle.tags_ok();
}

} // namespace flowgraph
