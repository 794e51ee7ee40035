#include "flowgraph/simple_graph.hpp"

#include <algorithm>

namespace flowgraph {

int SimpleGraph::add_vertex(std::string name) {
    vertex_names.push_back(std::move(name));
    return static_cast<int>(vertex_names.size()) - 1;
}

void SimpleGraph::add_edge(int a, int b) {
    if (a == b) throw Error("simple graphs have no loops");
    if (a > b) std::swap(a, b);
    edges.emplace_back(a, b);
}

bool SimpleGraph::has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

void SimpleGraph::normalize() {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

std::vector<std::vector<int>> SimpleGraph::adjacency() const {
    std::vector<std::vector<int>> adj(vertex_names.size());
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

namespace {

int erase_edge(SimpleGraph& g, int a, int b) {
    if (a > b) std::swap(a, b);
    auto it = std::find(g.edges.begin(), g.edges.end(), std::make_pair(a, b));
    if (it == g.edges.end())
        throw NoSuchEdge("no edge between " + g.vertex_names[a] + " and " + g.vertex_names[b]);
    g.edges.erase(it);
    return a;
}

} // namespace

SimpleGraph k_subdivide(const SimpleGraph& g, int a, int b, int k) {
    if (k < 1) throw Error("k-subdivision needs k >= 1");
    SimpleGraph out = g;
    erase_edge(out, a, b);
    int prev = a;
    const std::string stem = g.vertex_names[a] + "-" + g.vertex_names[b];
    for (int i = 1; i <= k; ++i) {
        int c = out.add_vertex(stem + "#c" + std::to_string(i));
        out.add_edge(prev, c);
        prev = c;
    }
    out.add_edge(prev, b);
    out.normalize();
    return out;
}

SimpleGraph k1k2_subdivide(const SimpleGraph& g, int a, int b, int k1, int k2) {
    if (k1 < 1 || k2 < 1) throw Error("(k1,k2)-subdivision needs k1,k2 >= 1");
    SimpleGraph out = g;
    erase_edge(out, a, b);
    const std::string stem = g.vertex_names[a] + "-" + g.vertex_names[b];
    int prev = a;
    for (int i = 1; i <= k1; ++i) {
        int c = out.add_vertex(stem + "#c" + std::to_string(i));
        out.add_edge(prev, c);
        prev = c;
    }
    const int v = out.add_vertex(stem + "#v");
    const int tu = out.add_vertex(stem + "#u");
    const int tw = out.add_vertex(stem + "#w");
    out.add_edge(prev, v);
    out.add_edge(v, tu);
    out.add_edge(tu, tw);
    out.add_edge(v, tw);
    prev = v;
    for (int i = 1; i <= k2; ++i) {
        int d = out.add_vertex(stem + "#d" + std::to_string(i));
        out.add_edge(prev, d);
        prev = d;
    }
    out.add_edge(prev, b);
    out.normalize();
    return out;
}

} // namespace flowgraph
