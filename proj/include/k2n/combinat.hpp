#pragma once

// Certificate machinery shared by the structure searches: R-trees with many
// leaves (and the bridge decomposition of graphs without them), interleaving
// versus gap for two integer sets, unavoidable simple 0-1 submatrices, and
// nonseparating induced paths in subdivisions of 3-connected graphs. Every
// finder emits a certificate that an independently written checker validates.

#include "graph.hpp"
#include "io.hpp"
#include "work.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace k2n {

// ---- R-trees ------------------------------------------------------------

// Tree inside a host graph with every leaf in R; when the tree is a path,
// additionally no interior vertex may lie in R.
struct RTreeCertificate {
    Graph tree;
    std::vector<int> leaves;
};

inline std::vector<int> tree_leaves(const Graph& t) {
    std::vector<int> out;
    for (int v : t.vertices())
        if (t.degree(v) == 1) out.push_back(v);
    return out;
}

inline bool is_r_tree(const Graph& g, const std::vector<int>& r, const Graph& tree,
                      int min_leaves, std::string* why = nullptr) {
    auto fail = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    if (tree.order() < 2) return fail("tree needs at least two vertices");
    if (tree.size() != tree.order() - 1 || !is_connected(tree)) return fail("not a tree");
    for (int v : tree.vertices())
        if (!g.has_vertex(v)) return fail("vertex not in host");
    for (auto [u, v] : tree.edges())
        if (!g.has_edge(u, v)) return fail("edge not in host");
    std::set<int> rset(r.begin(), r.end());
    std::vector<int> leaves = tree_leaves(tree);
    for (int v : leaves)
        if (!rset.count(v)) return fail("leaf outside R");
    if (static_cast<int>(leaves.size()) < min_leaves) return fail("too few leaves");
    bool path = true;
    for (int v : tree.vertices()) path = path && tree.degree(v) <= 2;
    if (path)
        for (int v : tree.vertices())
            if (tree.degree(v) == 2 && rset.count(v)) return fail("path interior meets R");
    return true;
}

// Finds an R-tree with at least n leaves, exactly. For n = 2 this is a path
// between two R-vertices whose interior avoids R. For n >= 3 such a tree
// exists iff some n-subset L of R has a component of g - L adjacent to all
// of L: peeling n leaves off a tree leaves a connected graph each leaf still
// touches, and conversely a spanning tree of the component plus one edge per
// vertex of L, trimmed of leaves outside R, is such a tree (the vertices of
// L keep degree one throughout, so the trim never strands them).
inline std::optional<RTreeCertificate> find_r_tree(const Graph& g, std::vector<int> r,
                                                   int n, Budget* budget = nullptr) {
    if (n < 2) throw std::invalid_argument("find_r_tree: need n >= 2");
    if (!is_connected(g)) throw std::invalid_argument("find_r_tree: host must be connected");
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    for (int v : r)
        if (!g.has_vertex(v)) throw std::invalid_argument("find_r_tree: R outside host");
    if (static_cast<int>(r.size()) < n) return std::nullopt;
    Budget local;
    Budget& bud = budget_or(budget, local);
    std::set<int> rset(r.begin(), r.end());

    if (n == 2) {
        for (size_t i = 0; i < r.size(); ++i)
            for (size_t j = i + 1; j < r.size(); ++j) {
                bud.spend(g.order());
                std::vector<int> keep;
                for (int v : g.vertices())
                    if (!rset.count(v) || v == r[i] || v == r[j]) keep.push_back(v);
                Path p = shortest_path(induced_subgraph(g, keep), r[i], r[j]);
                if (p.verts.empty()) continue;
                std::vector<Edge> es;
                for (size_t t = 0; t + 1 < p.verts.size(); ++t)
                    es.push_back(mk_edge(p.verts[t], p.verts[t + 1]));
                return RTreeCertificate{Graph(p.verts, es), {r[i], r[j]}};
            }
        return std::nullopt;
    }

    std::vector<int> idx(static_cast<size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    auto advance = [&]() {
        int k = n - 1;
        while (k >= 0 && idx[k] == static_cast<int>(r.size()) - n + k) --k;
        if (k < 0) return false;
        ++idx[k];
        for (int t = k + 1; t < n; ++t) idx[t] = idx[t - 1] + 1;
        return true;
    };
    do {
        bud.spend(g.order());
        std::vector<int> chosen;
        for (int t : idx) chosen.push_back(r[t]);
        std::set<int> lset(chosen.begin(), chosen.end());
        std::vector<int> rest;
        for (int v : g.vertices())
            if (!lset.count(v)) rest.push_back(v);
        Graph sub = induced_subgraph(g, rest);
        for (const auto& comp : components(sub)) {
            std::set<int> cset(comp.begin(), comp.end());
            bool all = true;
            for (int l : chosen) {
                bool touch = false;
                for (int w : g.neighbors(l)) touch = touch || cset.count(w) > 0;
                all = all && touch;
            }
            if (!all) continue;
            std::vector<Edge> es;
            std::set<int> seen{comp[0]};
            std::vector<int> queue{comp[0]};
            for (size_t qi = 0; qi < queue.size(); ++qi)
                for (int w : sub.neighbors(queue[qi]))
                    if (cset.count(w) && seen.insert(w).second) {
                        es.push_back(mk_edge(queue[qi], w));
                        queue.push_back(w);
                    }
            std::vector<int> tv = comp;
            for (int l : chosen) {
                for (int w : g.neighbors(l))
                    if (cset.count(w)) {
                        es.push_back(mk_edge(l, w));
                        break;
                    }
                tv.push_back(l);
            }
            Graph tree(tv, es);
            for (bool again = true; again;) {
                again = false;
                for (int v : tree.vertices())
                    if (tree.degree(v) == 1 && !rset.count(v)) {
                        tree = delete_vertex(tree, v);
                        again = true;
                        break;
                    }
            }
            return RTreeCertificate{tree, tree_leaves(tree)};
        }
    } while (advance());
    return std::nullopt;
}

// Bridge decomposition of a connected graph with no R-tree of n leaves.
struct RTreeStructure {
    Graph aux;              // graph on R; x ~ y when some R-bridge attaches to both
    std::vector<int> r0;    // aux vertices of degree != 2, or one vertex if aux is a cycle
    std::vector<int> r1;    // closed aux-neighborhoods of r0
    Graph g0;               // union of the R-bridges attaching only inside r1
    std::vector<BridgeSubgraph> g0_bridges;
    int r_in_g0 = 0;
};

// Builds g0 and checks that its bridges hang off it in the simplest possible
// way: pairwise disjoint attachment pairs inside R, and any further R-vertex
// of a bridge cuts it between the two attachments. Throws when the
// precondition (no R-tree with n leaves) or a conclusion fails.
inline RTreeStructure r_tree_structure(const Graph& g, std::vector<int> r, int n,
                                       Budget* budget = nullptr) {
    if (find_r_tree(g, r, n, budget))
        throw std::invalid_argument("r_tree_structure: an R-tree with n leaves exists");
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    std::set<int> rset(r.begin(), r.end());

    std::vector<BridgeSubgraph> rb = bridges(g, r);
    std::vector<Edge> ae;
    for (const auto& b : rb)
        for (size_t i = 0; i < b.attachments.size(); ++i)
            for (size_t j = i + 1; j < b.attachments.size(); ++j)
                ae.push_back(mk_edge(b.attachments[i], b.attachments[j]));
    Graph aux(r, ae);

    std::vector<int> r0;
    if (is_cycle(aux)) {
        r0 = {aux.vertices().front()};
    } else {
        for (int v : r)
            if (aux.degree(v) != 2) r0.push_back(v);
    }
    std::set<int> r1s;
    for (int v : r0) {
        r1s.insert(v);
        for (int w : aux.neighbors(v)) r1s.insert(w);
    }

    std::vector<int> gv;
    std::vector<Edge> ge;
    for (const auto& b : rb) {
        bool keep = true;
        for (int a : b.attachments) keep = keep && r1s.count(a) > 0;
        if (!keep) continue;
        gv.insert(gv.end(), b.verts.begin(), b.verts.end());
        ge.insert(ge.end(), b.edges.begin(), b.edges.end());
    }
    // no bridges at all only happens when g is a single vertex inside R
    Graph g0 = rb.empty() ? induced_subgraph(g, r) : Graph(gv, ge);
    if (g0 != induced_subgraph(g, g0.vertices()))
        throw std::logic_error("r_tree_structure: g0 is not induced");

    std::vector<BridgeSubgraph> gb = bridges(g, g0.vertices(), g0.edges());
    std::set<int> taken;
    for (const auto& b : gb)
        for (int a : b.attachments)
            if (!taken.insert(a).second)
                throw std::logic_error("r_tree_structure: two bridges share an attachment");
    for (const auto& b : gb) {
        if (b.attachments.size() != 2 || !rset.count(b.attachments[0]) ||
            !rset.count(b.attachments[1]))
            throw std::logic_error("r_tree_structure: bridge attachments not a pair in R");
        Graph bg(b.verts, b.edges);
        for (int v : b.verts) {
            if (v == b.attachments[0] || v == b.attachments[1] || !rset.count(v)) continue;
            Path p = shortest_path(delete_vertex(bg, v), b.attachments[0], b.attachments[1]);
            if (!p.verts.empty())
                throw std::logic_error("r_tree_structure: inner R-vertex fails to cut its bridge");
        }
    }
    int rin = 0;
    for (int v : g0.vertices()) rin += rset.count(v) ? 1 : 0;
    return {aux, r0, std::vector<int>(r1s.begin(), r1s.end()), g0, gb, rin};
}

// ---- interleaving or gap --------------------------------------------------

struct IntervalCertificate {
    bool interleaving = false;
    std::vector<int> xs, ys; // interleaving: n of each, alternating; gap: m xs, no ys
};

// Either n elements of each set alternating x < y < x < y < ..., or m
// elements of X whose closed span misses Y entirely; requires |X| >= n(m+1).
// Greedy: always extend by the smallest legal element, which makes the
// alternating sequence lexicographically minimum. When it stalls at k < n
// pairs, the windows [x_i, y_i] and the part above y_k partition X and a
// counting argument puts a gap in one of them: above y_k everything past the
// first element is beyond every y, and inside a window the open interval
// (x_i, y_i) contains no y at all.
inline IntervalCertificate interleave_or_gap(std::vector<int> xs, std::vector<int> ys,
                                             int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("interleave_or_gap: need n, m >= 1");
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    if (static_cast<int>(xs.size()) < n * (m + 1))
        throw std::invalid_argument("interleave_or_gap: |X| below n(m+1)");

    std::vector<int> px, py;
    {
        size_t xi = 0, yi = 0;
        while (static_cast<int>(px.size()) < n) {
            while (xi < xs.size() && !py.empty() && xs[xi] <= py.back()) ++xi;
            if (xi == xs.size()) break;
            while (yi < ys.size() && ys[yi] <= xs[xi]) ++yi;
            if (yi == ys.size()) break;
            px.push_back(xs[xi]);
            py.push_back(ys[yi]);
        }
    }
    if (static_cast<int>(px.size()) == n) return {true, px, py};

    int k = static_cast<int>(px.size());
    std::vector<int> tail; // everything above y_k
    for (int x : xs)
        if (k == 0 || x > py.back()) tail.push_back(x);
    if (static_cast<int>(tail.size()) >= m + 1)
        return {false, std::vector<int>(tail.begin() + 1, tail.begin() + 1 + m), {}};
    for (int i = 0; i < k; ++i) {
        std::vector<int> win;
        for (int x : xs)
            if (x > px[i] && x < py[i]) win.push_back(x);
        if (static_cast<int>(win.size()) >= m)
            return {false, std::vector<int>(win.begin(), win.begin() + m), {}};
    }
    throw std::logic_error("interleave_or_gap: dichotomy failed");
}

inline bool validate_interleave_or_gap(const std::vector<int>& xs, const std::vector<int>& ys,
                                       int n, int m, const IntervalCertificate& c) {
    std::set<int> x(xs.begin(), xs.end()), y(ys.begin(), ys.end());
    if (c.interleaving) {
        if (static_cast<int>(c.xs.size()) != n || static_cast<int>(c.ys.size()) != n)
            return false;
        int last = std::numeric_limits<int>::min();
        for (int i = 0; i < n; ++i) {
            if (!x.count(c.xs[i]) || !y.count(c.ys[i])) return false;
            if (i > 0 && c.xs[i] <= last) return false;
            if (c.ys[i] <= c.xs[i]) return false;
            last = c.ys[i];
        }
        return true;
    }
    if (static_cast<int>(c.xs.size()) != m || !c.ys.empty()) return false;
    for (int i = 0; i < m; ++i) {
        if (!x.count(c.xs[i])) return false;
        if (i > 0 && c.xs[i - 1] >= c.xs[i]) return false;
    }
    for (int v : y)
        if (c.xs.front() <= v && v <= c.xs.back()) return false;
    return true;
}

// ---- unavoidable 0-1 submatrices -------------------------------------------

struct ZeroOneMatrix {
    int rows = 0, cols = 0;
    std::vector<std::uint8_t> bits; // row-major

    ZeroOneMatrix() = default;
    ZeroOneMatrix(int r, int c)
        : rows(r), cols(c), bits(static_cast<size_t>(r) * static_cast<size_t>(c), 0) {
        if (r < 0 || c < 0) throw std::invalid_argument("negative matrix dimension");
    }
    int at(int i, int j) const { return bits[static_cast<size_t>(i) * cols + j]; }
    void set(int i, int j, int v) { bits[static_cast<size_t>(i) * cols + j] = v ? 1 : 0; }
};

// no two distinct columns equal
inline bool is_simple(const ZeroOneMatrix& a) {
    for (int j = 0; j < a.cols; ++j)
        for (int j2 = j + 1; j2 < a.cols; ++j2) {
            bool same = true;
            for (int i = 0; i < a.rows && same; ++i) same = a.at(i, j) == a.at(i, j2);
            if (same) return false;
        }
    return true;
}

// one row per line of 0/1 characters
inline ZeroOneMatrix matrix_from_text(std::istream& in) {
    std::vector<std::string> lines;
    std::string s;
    while (std::getline(in, s)) {
        while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.pop_back();
        if (s.empty()) continue;
        lines.push_back(s);
    }
    if (lines.empty()) return {};
    ZeroOneMatrix a(static_cast<int>(lines.size()), static_cast<int>(lines[0].size()));
    for (int i = 0; i < a.rows; ++i) {
        if (static_cast<int>(lines[i].size()) != a.cols)
            throw std::invalid_argument("matrix rows differ in length");
        for (int j = 0; j < a.cols; ++j) {
            char c = lines[i][j];
            if (c != '0' && c != '1') throw std::invalid_argument("matrix entry not 0/1");
            a.set(i, j, c == '1');
        }
    }
    return a;
}

inline ZeroOneMatrix matrix_from_text(const std::string& text) {
    std::istringstream in(text);
    return matrix_from_text(in);
}

inline std::string matrix_to_text(const ZeroOneMatrix& a) {
    std::string out;
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) out += a.at(i, j) ? '1' : '0';
        out += '\n';
    }
    return out;
}

enum class MatrixPattern { identity, co_identity, staircase };

inline const char* pattern_name(MatrixPattern p) {
    switch (p) {
        case MatrixPattern::identity: return "identity";
        case MatrixPattern::co_identity: return "co-identity";
        default: return "staircase";
    }
}

// Row and column selections, in pattern order: entry (i, j) of the selected
// submatrix is read at (row_order[i], col_order[j]).
struct SubmatrixWitness {
    MatrixPattern type = MatrixPattern::identity;
    std::vector<int> row_order, col_order;
};

inline bool check_submatrix(const ZeroOneMatrix& a, const SubmatrixWitness& w) {
    int n = static_cast<int>(w.row_order.size());
    if (n == 0 || static_cast<int>(w.col_order.size()) != n) return false;
    std::set<int> rs(w.row_order.begin(), w.row_order.end());
    std::set<int> cs(w.col_order.begin(), w.col_order.end());
    if (static_cast<int>(rs.size()) != n || static_cast<int>(cs.size()) != n) return false;
    if (*rs.begin() < 0 || *rs.rbegin() >= a.rows) return false;
    if (*cs.begin() < 0 || *cs.rbegin() >= a.cols) return false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int want = w.type == MatrixPattern::identity     ? i == j
                       : w.type == MatrixPattern::co_identity ? i != j
                                                              : i >= j;
            if (a.at(w.row_order[i], w.col_order[j]) != want) return false;
        }
    return true;
}

// Hunts for an n x n identity, co-identity, or staircase submatrix up to row
// and column permutation. For each n-subset of rows, columns are classified
// by their restriction mask: identity needs the n one-hot masks, co-identity
// their complements, and a staircase is a chain of masks from full down to a
// singleton, each dropping one row.
inline std::optional<SubmatrixWitness> unavoidable_submatrix(const ZeroOneMatrix& a, int n,
                                                             Budget* budget = nullptr) {
    if (n < 1 || n > 63) throw std::invalid_argument("unavoidable_submatrix: bad n");
    if (!is_simple(a)) throw std::invalid_argument("unavoidable_submatrix: matrix not simple");
    if (n > a.rows || n > a.cols) return std::nullopt;
    Budget local;
    Budget& bud = budget_or(budget, local);

    std::vector<int> idx(static_cast<size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    auto advance = [&]() {
        int k = n - 1;
        while (k >= 0 && idx[k] == a.rows - n + k) --k;
        if (k < 0) return false;
        ++idx[k];
        for (int t = k + 1; t < n; ++t) idx[t] = idx[t - 1] + 1;
        return true;
    };
    std::uint64_t full = (n == 63) ? ~(1ull << 63) : (1ull << n) - 1;
    do {
        bud.spend(static_cast<std::uint64_t>(a.cols) + 1);
        std::map<std::uint64_t, int> by_mask; // restriction -> first column with it
        for (int j = 0; j < a.cols; ++j) {
            std::uint64_t msk = 0;
            for (int p = 0; p < n; ++p)
                msk |= static_cast<std::uint64_t>(a.at(idx[p], j)) << p;
            by_mask.emplace(msk, j);
        }
        for (bool co : {false, true}) {
            std::vector<int> cols;
            for (int p = 0; p < n; ++p) {
                std::uint64_t want = 1ull << p;
                if (co) want = full ^ want;
                auto it = by_mask.find(want);
                if (it == by_mask.end()) break;
                cols.push_back(it->second);
            }
            if (static_cast<int>(cols.size()) == n)
                return SubmatrixWitness{co ? MatrixPattern::co_identity : MatrixPattern::identity,
                                        idx, cols};
        }
        std::vector<std::uint64_t> chain;
        auto dfs = [&](auto&& self, std::uint64_t cur) -> bool {
            if (by_mask.find(cur) == by_mask.end()) return false;
            chain.push_back(cur);
            if (static_cast<int>(chain.size()) == n) return true;
            for (int p = 0; p < n; ++p)
                if (((cur >> p) & 1) && self(self, cur & ~(1ull << p))) return true;
            chain.pop_back();
            return false;
        };
        if (dfs(dfs, full)) {
            SubmatrixWitness w;
            w.type = MatrixPattern::staircase;
            for (int j = 0; j + 1 < n; ++j)
                w.row_order.push_back(idx[std::countr_zero(chain[j] ^ chain[j + 1])]);
            w.row_order.push_back(idx[std::countr_zero(chain[n - 1])]);
            for (std::uint64_t msk : chain) w.col_order.push_back(by_mask.at(msk));
            return w;
        }
    } while (advance());
    return std::nullopt;
}

// ---- nonseparating induced paths --------------------------------------------

// True when iteratively smoothing degree-2 vertices ends in a 3-connected
// graph. Smoothing a vertex whose neighbors are already adjacent would need
// a parallel edge, so no simple 3-connected graph lies underneath.
inline bool is_subdivision_of_3connected(const Graph& g) {
    Graph h = g;
    for (bool again = true; again;) {
        again = false;
        for (int v : h.vertices())
            if (h.degree(v) == 2) {
                auto nb = h.neighbors(v);
                if (h.has_edge(nb[0], nb[1])) return false;
                h = delete_vertex(h, v).with_edge(nb[0], nb[1]);
                again = true;
                break;
            }
    }
    return h.order() >= 4 && is_k_connected(h, 3);
}

namespace detail {

inline std::vector<Edge> path_edges(const Path& p) {
    std::vector<Edge> es;
    for (size_t i = 0; i + 1 < p.verts.size(); ++i)
        es.push_back(mk_edge(p.verts[i], p.verts[i + 1]));
    return es;
}

inline bool path_nonseparating(const Graph& g, const Path& p, int x, int y) {
    return !p.verts.empty() && p.front() == x && p.back() == y && is_induced_path_of(g, p) &&
           is_connected(delete_vertices(g, p.verts));
}

// depth-first over all induced xy-paths, first one with connected complement
inline bool exhaustive_nonsep_path(const Graph& g, int y, std::vector<int>& cur,
                                   std::set<int>& used, Path& out, Budget& bud) {
    bud.spend();
    if (cur.back() == y) {
        if (is_connected(delete_vertices(g, cur))) {
            out.verts = cur;
            return true;
        }
        return false;
    }
    for (int w : g.neighbors(cur.back())) {
        if (used.count(w)) continue;
        bool chord = false;
        for (size_t i = 0; i + 1 < cur.size(); ++i) chord = chord || g.has_edge(cur[i], w);
        if (chord) continue;
        cur.push_back(w);
        used.insert(w);
        if (exhaustive_nonsep_path(g, y, cur, used, out, bud)) return true;
        cur.pop_back();
        used.erase(w);
    }
    return false;
}

} // namespace detail

// Induced xy-path whose removal leaves the graph connected. Keeps an xy-path
// and reroutes through any bridge whose attachment span strictly encloses an
// end or attachment of the current largest bridge; each reroute merges that
// vertex into the largest bridge, so the size strictly grows and the rounds
// are bounded. When no reroute applies, the path itself or a path through
// the largest bridge is the answer; both are checked, with an exhaustive
// search as a final safety net.
inline Path nonseparating_induced_path(const Graph& g, int x, int y, Budget* budget = nullptr) {
    if (!g.has_vertex(x) || !g.has_vertex(y) || x == y)
        throw std::invalid_argument("nonseparating_induced_path: need distinct vertices of g");
    if (!is_subdivision_of_3connected(g))
        throw std::invalid_argument(
            "nonseparating_induced_path: host must be a subdivision of a 3-connected graph");
    Budget local;
    Budget& bud = budget_or(budget, local);

    Path p = shortest_path(g, x, y);
    for (int round = 0; round <= g.size(); ++round) {
        bud.spend(static_cast<std::uint64_t>(g.size()) + 1);
        std::vector<BridgeSubgraph> bs = bridges(g, p.verts, detail::path_edges(p));
        if (bs.empty()) break;
        size_t big = 0;
        for (size_t i = 1; i < bs.size(); ++i)
            if (bs[i].inner().size() > bs[big].inner().size()) big = i;
        std::map<int, int> pos;
        for (size_t i = 0; i < p.verts.size(); ++i) pos[p.verts[i]] = static_cast<int>(i);
        std::set<int> marks{x, y};
        for (int a : bs[big].attachments) marks.insert(a);

        bool moved = false;
        for (size_t i = 0; i < bs.size() && !moved; ++i) {
            if (i == big) continue;
            int lo = static_cast<int>(p.verts.size()), hi = -1;
            for (int a : bs[i].attachments) {
                lo = std::min(lo, pos.at(a));
                hi = std::max(hi, pos.at(a));
            }
            bool encloses = false;
            for (int mk : marks) encloses = encloses || (pos.at(mk) > lo && pos.at(mk) < hi);
            if (!encloses) continue;
            int u = p.verts[lo], v = p.verts[hi];
            Path q;
            if (bs[i].trivial) {
                q.verts = {u, v};
            } else {
                std::vector<int> allowed = bs[i].inner();
                allowed.push_back(u);
                allowed.push_back(v);
                q = shortest_path(induced_subgraph(Graph(bs[i].verts, bs[i].edges), allowed), u, v);
            }
            std::vector<int> nv(p.verts.begin(), p.verts.begin() + lo);
            nv.insert(nv.end(), q.verts.begin(), q.verts.end());
            nv.insert(nv.end(), p.verts.begin() + hi + 1, p.verts.end());
            p.verts = std::move(nv);
            moved = true;
        }
        if (moved) continue;

        if (detail::path_nonseparating(g, p, x, y)) return p;
        Graph bg(bs[big].verts, bs[big].edges);
        if (bg.has_vertex(x) && bg.has_vertex(y)) {
            std::vector<int> allowed = bs[big].inner();
            allowed.push_back(x);
            allowed.push_back(y);
            Path q = shortest_path(induced_subgraph(bg, allowed), x, y);
            if (detail::path_nonseparating(g, q, x, y)) return q;
        }
        break;
    }
    if (detail::path_nonseparating(g, p, x, y)) return p;

    Path out;
    std::vector<int> cur{x};
    std::set<int> used{x};
    if (detail::exhaustive_nonsep_path(g, y, cur, used, out, bud)) return out;
    throw std::logic_error("nonseparating_induced_path: no path found");
}

// ---- certificate JSON --------------------------------------------------------

inline nlohmann::json r_tree_to_json(const RTreeCertificate& c) {
    return {{"tree", graph_to_json(c.tree)}, {"leaves", c.leaves}};
}

inline nlohmann::json interval_certificate_to_json(const IntervalCertificate& c) {
    return {{"type", c.interleaving ? "interleaving" : "gap"}, {"xs", c.xs}, {"ys", c.ys}};
}

inline nlohmann::json submatrix_witness_to_json(const SubmatrixWitness& w) {
    return {{"pattern", pattern_name(w.type)},
            {"rows", w.row_order},
            {"cols", w.col_order}};
}

} // namespace k2n
