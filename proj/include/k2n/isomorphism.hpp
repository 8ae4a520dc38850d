#pragma once

#include "graph.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace k2n {

// vertex -> color; vertices not listed have color 0
using Coloring = std::map<int, int>;

namespace detail {

inline int color_of(const Coloring& c, int v) {
    auto it = c.find(v);
    return it == c.end() ? 0 : it->second;
}

// Stable partition refinement: split color classes by the multiset of
// neighbor colors until no class splits further. Colors are renumbered
// 0..k-1 in signature order, so the result depends only on the initial
// color values and the structure.
inline void refine_colors(const MaskView& mv, std::vector<int>& color) {
    int n = mv.n;
    for (;;) {
        int before = 1 + *std::max_element(color.begin(), color.end());
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int i = 0; i < n; ++i) {
            std::vector<int> nb;
            std::uint64_t m = mv.nbr[i];
            while (m) {
                int j = std::countr_zero(m);
                m &= m - 1;
                nb.push_back(color[j]);
            }
            std::sort(nb.begin(), nb.end());
            std::vector<int> s{color[i]};
            s.insert(s.end(), nb.begin(), nb.end());
            sig[i] = {std::move(s), i};
        }
        std::sort(sig.begin(), sig.end());
        int c = -1;
        for (int k = 0; k < n; ++k) {
            if (k == 0 || sig[k].first != sig[k - 1].first) ++c;
            color[sig[k].second] = c;
        }
        if (c + 1 == before) break;
    }
}

// Individualization-refinement search: on a non-discrete coloring, pick the
// first non-singleton cell, try each of its vertices as a forced singleton,
// and keep the lexicographically least leaf encoding. `init` carries the
// caller-supplied colors so they end up in the output string.
inline std::string canon_search(const MaskView& mv, std::vector<int> color,
                                const std::vector<int>& init) {
    refine_colors(mv, color);
    int n = mv.n;
    int target = -1;
    std::vector<std::vector<int>> cells(n);
    for (int i = 0; i < n; ++i) cells[color[i]].push_back(i);
    for (int c = 0; c < n && target < 0; ++c)
        if (cells[c].size() > 1) target = c;
    if (target < 0) {
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[color[i]] = i;
        std::string out((n * (n - 1) / 2 + 7) / 8, '\0');
        int pos = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++pos)
                if (mv.nbr[perm[i]] >> perm[j] & 1) out[pos >> 3] |= char(1 << (pos & 7));
        for (int i = 0; i < n; ++i) {
            unsigned c = unsigned(init[perm[i]]);
            out.push_back(char(c & 0xff));
            out.push_back(char(c >> 8 & 0xff));
            out.push_back(char(c >> 16 & 0xff));
            out.push_back(char(c >> 24 & 0xff));
        }
        return out;
    }
    std::string best;
    for (int v : cells[target]) {
        std::vector<int> c2 = color;
        c2[v] = n; // fresh color, becomes a singleton on the next refine
        std::string leaf = canon_search(mv, std::move(c2), init);
        if (best.empty() || leaf < best) best = std::move(leaf);
    }
    return best;
}

} // namespace detail

// Canonical byte string: equal strings iff the (colored) graphs are
// isomorphic by a color-preserving map. Exponential on highly symmetric
// graphs, fine at the sizes we enumerate.
inline std::string canonical_form(const Graph& g, const Coloring& colors = {}) {
    int n = g.order();
    std::string head(1, char(n));
    if (n == 0) return head;
    MaskView mv(g);
    std::vector<int> init(n);
    for (int i = 0; i < n; ++i) init[i] = detail::color_of(colors, g.vertices()[i]);
    return head + detail::canon_search(mv, init, init);
}

// Color-preserving isomorphism test by backtracking. Vertices of `a` are
// matched in an order that keeps each new vertex adjacent to the already
// matched part where possible. Throws above max_order; callers working on
// graphs they control may raise the bound (MaskView caps everything at 64).
inline bool are_isomorphic(const Graph& a, const Graph& b, const Coloring& ca,
                           const Coloring& cb, int max_order = 16,
                           std::map<int, int>* mapping = nullptr) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    if (a.order() > max_order)
        throw std::invalid_argument("are_isomorphic: order exceeds bound " +
                                    std::to_string(max_order));
    int n = a.order();
    if (n == 0) {
        if (mapping) mapping->clear();
        return true;
    }
    MaskView ma(a), mb(b);
    std::vector<int> colA(n), colB(n);
    for (int i = 0; i < n; ++i) colA[i] = detail::color_of(ca, a.vertices()[i]);
    for (int i = 0; i < n; ++i) colB[i] = detail::color_of(cb, b.vertices()[i]);
    auto profile = [](const MaskView& m, const std::vector<int>& col) {
        std::vector<std::pair<int, int>> v(m.n);
        for (int i = 0; i < m.n; ++i) v[i] = {std::popcount(m.nbr[i]), col[i]};
        std::sort(v.begin(), v.end());
        return v;
    };
    if (profile(ma, colA) != profile(mb, colB)) return false;

    std::vector<int> order;
    {
        std::uint64_t placed = 0;
        for (int step = 0; step < n; ++step) {
            int best = -1, best_key = -1;
            for (int i = 0; i < n; ++i) {
                if (placed >> i & 1) continue;
                int key = std::popcount(ma.nbr[i] & placed) * 64 + std::popcount(ma.nbr[i]);
                if (key > best_key) {
                    best_key = key;
                    best = i;
                }
            }
            placed |= 1ULL << best;
            order.push_back(best);
        }
    }

    std::vector<int> img(n, -1);
    std::uint64_t mapped_a = 0, used_b = 0;
    auto rec = [&](auto&& self, int pos) -> bool {
        if (pos == n) return true;
        int ai = order[pos];
        std::uint64_t want = 0;
        std::uint64_t mn = ma.nbr[ai] & mapped_a;
        while (mn) {
            int k = std::countr_zero(mn);
            mn &= mn - 1;
            want |= 1ULL << img[k];
        }
        for (int bj = 0; bj < n; ++bj) {
            if (used_b >> bj & 1) continue;
            if (colB[bj] != colA[ai]) continue;
            if (std::popcount(mb.nbr[bj]) != std::popcount(ma.nbr[ai])) continue;
            if ((mb.nbr[bj] & used_b) != want) continue;
            img[ai] = bj;
            mapped_a |= 1ULL << ai;
            used_b |= 1ULL << bj;
            if (self(self, pos + 1)) return true;
            mapped_a &= ~(1ULL << ai);
            used_b &= ~(1ULL << bj);
            img[ai] = -1;
        }
        return false;
    };
    if (!rec(rec, 0)) return false;
    if (mapping) {
        mapping->clear();
        for (int i = 0; i < n; ++i) (*mapping)[a.vertices()[i]] = b.vertices()[img[i]];
    }
    return true;
}

inline bool are_isomorphic(const Graph& a, const Graph& b, int max_order = 16,
                           std::map<int, int>* mapping = nullptr) {
    return are_isomorphic(a, b, {}, {}, max_order, mapping);
}

} // namespace k2n
