#include "flowgraph/generator.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace flowgraph {

namespace {

// Random perfect matching: shuffle and pair up consecutive entries.
std::vector<std::pair<int, int>> random_matching(int n, std::mt19937_64& rng) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(n / 2);
    for (int i = 0; i < n; i += 2) pairs.emplace_back(order[i], order[i + 1]);
    return pairs;
}

} // namespace

FourColourGraph random_admissible(int n_target, std::uint64_t seed,
                                  const GeneratorOptions& opts) {
    if (n_target < 4 || n_target % 2 != 0)
        throw Error("generator needs an even vertex count >= 4");

    std::mt19937_64 rng(seed);

    for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
        FourColourGraph g;
        g.name = "gen" + std::to_string(n_target) + "_" + std::to_string(seed);
        for (int v = 1; v <= n_target; ++v) g.vertex_names.push_back(std::to_string(v));

        int counter = 0;
        auto add = [&](Colour colour, int a, int b, int pa, int pb) {
            FcEdge e;
            e.name = std::string(1, colour_letter(colour)) + std::to_string(++counter);
            e.colour = colour;
            e.a = a;
            e.b = b;
            e.pos_a = pa;
            e.pos_b = pb;
            g.edges.push_back(std::move(e));
        };

        for (auto [a, b] : random_matching(n_target, rng)) add(Colour::T, a, b, 0, 0);
        for (auto [a, b] : random_matching(n_target, rng)) add(Colour::U, a, b, 0, 0);
        for (auto [a, b] : random_matching(n_target, rng)) add(Colour::S, a, b, 0, 0);

        // Corner count n + 2*mc must be divisible by 4; the c-edge count is
        // biased towards 0-2 per vertex to keep rejection rates usable.
        const int parity = (n_target % 4 == 0) ? 0 : 1;
        int mc = 0;
        if (std::uniform_int_distribution<int>(0, 3)(rng) != 0 || parity == 1) {
            const int cap = std::max(1, n_target / 2);
            do {
                mc = std::uniform_int_distribution<int>(0, cap)(rng);
            } while (mc % 2 != parity);
        }
        std::vector<std::vector<int>> c_edges_at(n_target);
        for (int i = 0; i < mc; ++i) {
            const int a = std::uniform_int_distribution<int>(0, n_target - 1)(rng);
            int b = std::uniform_int_distribution<int>(0, n_target - 2)(rng);
            if (b >= a) ++b;
            add(Colour::C, a, b, 0, 0);
            c_edges_at[a].push_back(g.edge_count() - 1);
            c_edges_at[b].push_back(g.edge_count() - 1);
        }
        for (int v = 0; v < n_target; ++v) {
            std::vector<int> positions(c_edges_at[v].size());
            std::iota(positions.begin(), positions.end(), 1);
            std::shuffle(positions.begin(), positions.end(), rng);
            for (std::size_t i = 0; i < c_edges_at[v].size(); ++i) {
                FcEdge& e = g.edges[c_edges_at[v][i]];
                if (e.a == v && e.pos_a == 0)
                    e.pos_a = positions[i];
                else
                    e.pos_b = positions[i];
            }
        }

        if (validate_four_colour(g).empty()) return g;
    }
    throw GenerationBudgetExceeded("no admissible graph with " + std::to_string(n_target) +
                                   " vertices after " + std::to_string(opts.max_attempts) +
                                   " attempts");
}

} // namespace flowgraph
