#pragma once

#include "graph.hpp"
#include "isomorphism.hpp"

#include <cstdint>
#include <random>
#include <unordered_set>
#include <vector>

namespace k2n {

// Every simple graph on vertices 0..n-1, one representative per isomorphism
// class. Built by extending the (n-1)-vertex list with all 2^(n-1) possible
// neighborhoods of a new vertex and deduplicating on canonical form.
inline std::vector<Graph> all_graphs(int n) {
    if (n < 0) throw std::invalid_argument("all_graphs: negative n");
    if (n > 9) throw std::invalid_argument("all_graphs: n > 9 is out of reach here");
    if (n == 0) return {Graph(0)};
    std::vector<Graph> cur{Graph(1)};
    for (int k = 2; k <= n; ++k) {
        std::vector<Graph> next;
        std::unordered_set<std::string> seen;
        for (const Graph& g : cur) {
            for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
                std::vector<Edge> es = g.edges();
                for (int j = 0; j < k - 1; ++j)
                    if (mask >> j & 1) es.push_back({j, k - 1});
                std::vector<int> vs(k);
                std::iota(vs.begin(), vs.end(), 0);
                Graph h(std::move(vs), es);
                if (seen.insert(canonical_form(h)).second) next.push_back(std::move(h));
            }
        }
        cur = std::move(next);
    }
    return cur;
}

inline std::vector<Graph> connected_graphs(int n) {
    std::vector<Graph> out;
    for (auto& g : all_graphs(n))
        if (is_connected(g)) out.push_back(std::move(g));
    return out;
}

inline std::vector<Graph> two_connected_graphs(int n) {
    std::vector<Graph> out;
    for (auto& g : all_graphs(n))
        if (is_k_connected(g, 2)) out.push_back(std::move(g));
    return out;
}

inline std::vector<Graph> three_connected_graphs(int n) {
    std::vector<Graph> out;
    for (auto& g : all_graphs(n))
        if (is_k_connected(g, 3)) out.push_back(std::move(g));
    return out;
}

// Seeded generator. Raw engine output reduced by modulo, so sequences are
// identical across platforms (the <random> distributions are not).
struct Rng {
    std::mt19937 eng;
    explicit Rng(std::uint32_t seed) : eng(seed) {}

    std::uint32_t u32() { return eng(); }

    int below(int n) { // uniform-ish over 0..n-1, n > 0
        if (n <= 0) throw std::invalid_argument("Rng::below: n <= 0");
        return int(eng() % std::uint32_t(n));
    }

    bool chance(int pct) { return below(100) < pct; }

    template <class T> void shuffle(std::vector<T>& v) {
        for (int i = int(v.size()) - 1; i > 0; --i) std::swap(v[i], v[size_t(below(i + 1))]);
    }

    template <class T> T pick(const std::vector<T>& v) { return v[size_t(below(int(v.size())))]; }
};

inline Graph random_graph(int n, int edge_pct, Rng& rng) {
    Graph g(n);
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.chance(edge_pct)) es.push_back({i, j});
    std::vector<int> vs(n);
    std::iota(vs.begin(), vs.end(), 0);
    return Graph(std::move(vs), es);
}

inline Graph random_connected_graph(int n, int edge_pct, Rng& rng) {
    for (int tries = 0; tries < 100000; ++tries) {
        Graph g = random_graph(n, edge_pct, rng);
        if (is_connected(g)) return g;
    }
    throw std::runtime_error("random_connected_graph: rejection sampling stalled");
}

inline Graph random_2connected_graph(int n, int edge_pct, Rng& rng) {
    for (int tries = 0; tries < 100000; ++tries) {
        Graph g = random_graph(n, edge_pct, rng);
        if (is_k_connected(g, 2)) return g;
    }
    throw std::runtime_error("random_2connected_graph: rejection sampling stalled");
}

} // namespace k2n
