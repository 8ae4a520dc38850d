#pragma once

#include "graph.hpp"
#include "work.hpp"

#include <json.hpp>

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace k2n {

// Witness for a K_{2,n} minor. In any model of K_{2,n} the leaf branch sets
// can be shrunk to single vertices (walk each leaf set toward the second hub
// and absorb the rest into the first), so two disjoint connected hub sets
// plus n distinct outside vertices adjacent to both hubs are fully general.
struct K2nWitness {
    std::vector<int> hub1, hub2, leaves;
};

inline nlohmann::json witness_to_json(const K2nWitness& w) {
    return {{"hub1", w.hub1}, {"hub2", w.hub2}, {"leaves", w.leaves}};
}

inline K2nWitness witness_from_json(const nlohmann::json& j) {
    K2nWitness w;
    w.hub1 = j.at("hub1").get<std::vector<int>>();
    w.hub2 = j.at("hub2").get<std::vector<int>>();
    w.leaves = j.at("leaves").get<std::vector<int>>();
    return w;
}

inline bool verify_k2n_witness(const Graph& g, const K2nWitness& w, int n,
                               std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (n < 1) return fail("n must be at least 1");
    if (w.hub1.empty() || w.hub2.empty()) return fail("a hub is empty");
    if (int(w.leaves.size()) < n) return fail("fewer than n leaves");
    for (int v : w.hub1)
        if (!g.has_vertex(v)) return fail("hub1 vertex missing from graph");
    for (int v : w.hub2)
        if (!g.has_vertex(v)) return fail("hub2 vertex missing from graph");
    for (int v : w.leaves)
        if (!g.has_vertex(v)) return fail("leaf missing from graph");
    auto sorted = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    std::vector<int> h1 = sorted(w.hub1), h2 = sorted(w.hub2), lv = sorted(w.leaves);
    if (std::adjacent_find(h1.begin(), h1.end()) != h1.end()) return fail("hub1 repeats a vertex");
    if (std::adjacent_find(h2.begin(), h2.end()) != h2.end()) return fail("hub2 repeats a vertex");
    if (std::adjacent_find(lv.begin(), lv.end()) != lv.end()) return fail("leaves repeat");
    auto meets = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> out;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return !out.empty();
    };
    if (meets(h1, h2)) return fail("hubs share a vertex");
    if (meets(h1, lv) || meets(h2, lv)) return fail("a leaf lies in a hub");
    if (!is_connected(induced_subgraph(g, h1))) return fail("hub1 is not connected");
    if (!is_connected(induced_subgraph(g, h2))) return fail("hub2 is not connected");
    for (int l : w.leaves) {
        bool a = false, b = false;
        for (int u : g.neighbors(l)) {
            if (std::binary_search(h1.begin(), h1.end(), u)) a = true;
            if (std::binary_search(h2.begin(), h2.end(), u)) b = true;
        }
        if (!a || !b) return fail("leaf " + std::to_string(l) + " misses a hub");
    }
    return true;
}

namespace detail {

// Do all leaves have a neighbor inside `set`?
inline bool dominates(const MaskView& mv, std::uint64_t set, std::uint64_t leaves) {
    while (leaves) {
        int i = std::countr_zero(leaves);
        leaves &= leaves - 1;
        if (!(mv.nbr[i] & set)) return false;
    }
    return true;
}

// Search the component `comp` for two disjoint connected sets inside
// comp \ leaves, each with a neighbor of every leaf. The first hub is grown
// over all connected subsets (each visited once via the usual
// candidate/forbidden scheme); a subset is only expanded while it does not
// yet dominate the leaves, since shrinking a dominating hub never hurts.
// The second hub can always be taken as a whole component of the rest.
inline bool search_hubs(const MaskView& mv, std::uint64_t leaves, std::uint64_t comp,
                        Budget& bud, std::uint64_t* hub1, std::uint64_t* hub2) {
    std::uint64_t universe = comp & ~leaves;
    if (!dominates(mv, universe, leaves)) return false;

    auto rec = [&](auto&& self, std::uint64_t set, std::uint64_t cand,
                   std::uint64_t forbidden) -> bool {
        bud.spend();
        if (!dominates(mv, mv.reach(set, universe & ~forbidden), leaves)) return false;
        std::uint64_t rest = universe & ~set;
        bool set_dominates = dominates(mv, set, leaves);
        bool second_possible = false;
        std::uint64_t rr = rest;
        while (rr) {
            int i = std::countr_zero(rr);
            std::uint64_t c = mv.reach(1ULL << i, rest);
            rr &= ~c;
            if (dominates(mv, c, leaves)) {
                if (set_dominates) {
                    *hub1 = set;
                    *hub2 = c;
                    return true;
                }
                second_possible = true;
                break;
            }
        }
        if (!second_possible || set_dominates) return false;
        std::uint64_t skipped = forbidden;
        std::uint64_t c = cand;
        while (c) {
            int v = std::countr_zero(c);
            c &= c - 1;
            std::uint64_t set2 = set | (1ULL << v);
            std::uint64_t cand2 = (cand | mv.nbr[v]) & universe & ~set2 & ~skipped;
            if (self(self, set2, cand2, skipped)) return true;
            skipped |= 1ULL << v;
        }
        return false;
    };

    std::uint64_t tried = 0;
    std::uint64_t seeds = universe;
    while (seeds) {
        int s = std::countr_zero(seeds);
        seeds &= seeds - 1;
        std::uint64_t seed = 1ULL << s;
        if (rec(rec, seed, mv.nbr[s] & universe & ~tried, tried)) return true;
        tried |= seed;
    }
    return false;
}

} // namespace detail

// Exact K_{2,n} minor test. Exhausts candidate leaf sets, then hub pairs;
// a negative answer is a proof of absence. Throws WorkLimitExceeded when the
// budget runs dry (callers treat that as "unknown").
inline bool has_k2n_minor(const Graph& g, int n, K2nWitness* witness = nullptr,
                          Budget* budget = nullptr) {
    if (n < 1) throw std::invalid_argument("has_k2n_minor: n < 1");
    Budget local;
    Budget& bud = budget ? *budget : local;
    for (auto& comp : components(g)) {
        if (int(comp.size()) < n + 2) continue;
        Graph sub = induced_subgraph(g, comp);
        MaskView mv(sub);
        std::uint64_t all = mv.full();
        std::vector<int> eligible; // indices that could serve as leaves
        for (int i = 0; i < mv.n; ++i)
            if (std::popcount(mv.nbr[i]) >= 2) eligible.push_back(i);
        if (int(eligible.size()) < n) continue;

        std::vector<int> pick;
        auto leaf_rec = [&](auto&& self, int start) -> bool {
            if (int(pick.size()) == n) {
                bud.spend();
                std::uint64_t leaves = 0;
                for (int i : pick) leaves |= 1ULL << i;
                for (int i : pick)
                    if (std::popcount(mv.nbr[i] & ~leaves) < 2) return false;
                std::uint64_t h1 = 0, h2 = 0;
                if (!detail::search_hubs(mv, leaves, all, bud, &h1, &h2)) return false;
                if (witness) {
                    witness->hub1 = mv.to_vertices(h1);
                    witness->hub2 = mv.to_vertices(h2);
                    witness->leaves = mv.to_vertices(leaves);
                }
                return true;
            }
            for (int k = start; k <= int(eligible.size()) - (n - int(pick.size())); ++k) {
                pick.push_back(eligible[k]);
                if (self(self, k + 1)) return true;
                pick.pop_back();
            }
            return false;
        };
        if (leaf_rec(leaf_rec, 0)) return true;
    }
    return false;
}

// largest n such that a K_{2,n} minor exists, 0 when even K_{2,1} is absent
inline int max_k2(const Graph& g, Budget* budget = nullptr) {
    int n = 0;
    while (n + 2 <= g.order() && has_k2n_minor(g, n + 1, nullptr, budget)) ++n;
    return n;
}

// K_{1,n} minor: a connected set with at least n outside neighbors.
inline bool has_k1n_minor(const Graph& g, int n, Budget* budget = nullptr) {
    if (n < 0) throw std::invalid_argument("has_k1n_minor: n < 0");
    if (n == 0) return g.order() >= 1;
    if (n == 1) return g.size() >= 1;
    for (int v : g.vertices())
        if (g.degree(v) >= n) return true;
    if (n == 2) return false; // a component on 3+ vertices has a degree-2 vertex
    Budget local;
    Budget& bud = budget ? *budget : local;
    for (auto& comp : components(g)) {
        if (int(comp.size()) < n + 1) continue;
        Graph sub = induced_subgraph(g, comp);
        MaskView mv(sub);
        auto rec = [&](auto&& self, std::uint64_t set, std::uint64_t cand,
                       std::uint64_t forbidden) -> bool {
            bud.spend();
            if (std::popcount(mv.neighborhood(set)) >= n) return true;
            // every reachable extension keeps its neighbors inside this region
            std::uint64_t closure = mv.reach(set, mv.full() & ~forbidden);
            std::uint64_t possible = (closure & ~set) | mv.neighborhood(closure);
            if (std::popcount(possible) < n) return false;
            std::uint64_t skipped = forbidden;
            std::uint64_t c = cand;
            while (c) {
                int v = std::countr_zero(c);
                c &= c - 1;
                std::uint64_t set2 = set | (1ULL << v);
                std::uint64_t cand2 = (cand | mv.nbr[v]) & ~set2 & ~skipped;
                if (self(self, set2, cand2, skipped)) return true;
                skipped |= 1ULL << v;
            }
            return false;
        };
        std::uint64_t tried = 0;
        for (int s = 0; s < mv.n; ++s) {
            std::uint64_t seed = 1ULL << s;
            if (rec(rec, seed, mv.nbr[s] & ~tried, tried)) return true;
            tried |= seed;
        }
    }
    return false;
}

// Minor model presented explicitly: one connected branch set per pattern
// vertex, pairwise disjoint, every pattern edge realized between sets.
struct MinorModel {
    std::map<int, std::vector<int>> branch_sets;
};

inline bool verify_minor_model(const Graph& g, const Graph& h, const MinorModel& m,
                               std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    std::vector<int> used;
    for (int v : h.vertices()) {
        auto it = m.branch_sets.find(v);
        if (it == m.branch_sets.end() || it->second.empty())
            return fail("no branch set for vertex " + std::to_string(v));
        for (int u : it->second) {
            if (!g.has_vertex(u)) return fail("branch set vertex missing from host");
            used.push_back(u);
        }
        if (!is_connected(induced_subgraph(g, it->second)))
            return fail("branch set of " + std::to_string(v) + " is not connected");
    }
    std::sort(used.begin(), used.end());
    if (std::adjacent_find(used.begin(), used.end()) != used.end())
        return fail("branch sets overlap");
    for (auto [a, b] : h.edges()) {
        bool hit = false;
        for (int u : m.branch_sets.at(a)) {
            for (int w : g.neighbors(u))
                if (std::find(m.branch_sets.at(b).begin(), m.branch_sets.at(b).end(), w) !=
                    m.branch_sets.at(b).end()) {
                    hit = true;
                    break;
                }
            if (hit) break;
        }
        if (!hit)
            return fail("edge " + std::to_string(a) + "-" + std::to_string(b) + " not realized");
    }
    return true;
}

// Reference oracle: enumerate partitions of vertex subsets of g into
// |V(h)| connected cells and look for h inside the quotient. Exponential,
// capped by order; this is the thing the fast search is checked against.
inline bool brute_force_minor(const Graph& g, const Graph& h, Budget* budget = nullptr,
                              int max_host_order = 10) {
    if (g.order() > max_host_order)
        throw std::invalid_argument("brute_force_minor: host larger than cap");
    int k = h.order();
    if (k == 0) return true;
    if (k > g.order() || h.size() > g.size()) return false;
    Budget local;
    Budget& bud = budget ? *budget : local;
    MaskView mv(g);
    int n = mv.n;
    MaskView mh(h);

    // does h embed into the quotient of the cells, bijectively?
    auto quotient_has_h = [&](const std::vector<std::uint64_t>& cells) {
        std::vector<std::uint64_t> qadj(k, 0);
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                if (mv.neighborhood(cells[a]) & cells[b]) {
                    qadj[a] |= 1ULL << b;
                    qadj[b] |= 1ULL << a;
                }
        std::vector<int> img(k, -1);
        std::uint64_t used = 0;
        auto embed = [&](auto&& self, int hv) -> bool {
            if (hv == k) return true;
            for (int c = 0; c < k; ++c) {
                if (used >> c & 1) continue;
                bool ok = true;
                std::uint64_t req = mh.nbr[hv];
                while (req && ok) {
                    int w = std::countr_zero(req);
                    req &= req - 1;
                    if (w < hv && !(qadj[c] >> img[w] & 1)) ok = false;
                }
                if (!ok) continue;
                img[hv] = c;
                used |= 1ULL << c;
                if (self(self, hv + 1)) return true;
                used &= ~(1ULL << c);
                img[hv] = -1;
            }
            return false;
        };
        return embed(embed, 0);
    };

    std::vector<std::uint64_t> cells;
    auto rec = [&](auto&& self, int i) -> bool {
        bud.spend();
        std::uint64_t future = i >= 64 ? 0 : (~0ULL << i) & mv.full();
        // a cell no future vertex can reconnect is dead
        for (auto c : cells) {
            std::uint64_t low = c & (~c + 1);
            if ((mv.reach(low, c | future) & c) != c) return false;
        }
        if (i == n) {
            if (int(cells.size()) != k) return false;
            for (auto c : cells)
                if (!mv.connected_in(c, c)) return false;
            return quotient_has_h(cells);
        }
        if (int(cells.size()) + (n - i) < k) return false; // not enough vertices left
        std::uint64_t bit = 1ULL << i;
        if (self(self, i + 1)) return true; // leave vertex i out
        for (auto& c : cells) {
            c |= bit;
            if (self(self, i + 1)) return true;
            c &= ~bit;
        }
        if (int(cells.size()) < k) {
            cells.push_back(bit);
            if (self(self, i + 1)) return true;
            cells.pop_back();
        }
        return false;
    };
    return rec(rec, 0);
}

} // namespace k2n
