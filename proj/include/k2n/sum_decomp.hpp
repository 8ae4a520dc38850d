#pragma once

#include "graph.hpp"
#include "io.hpp"
#include "isomorphism.hpp"
#include "minor.hpp"
#include "type_one.hpp"
#include "work.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace k2n {

// ---- 2-sum -------------------------------------------------------------------

// Of the two ways to pair the neighbors of z1 with the neighbors of z2,
// `straight` matches them in sorted order, `crossed` swaps.
enum class Pairing { straight, crossed };

inline Pairing flip(Pairing p) {
    return p == Pairing::straight ? Pairing::crossed : Pairing::straight;
}

struct TwoSum {
    Graph graph;
    int join_x = -1, join_y = -1; // identified vertices, ids taken from the first summand
};

// Delete z_i and the edge between its neighbors (if present), identify the
// neighbor pairs, and put the edge between the joins back iff at least one
// side had it. Ids of the first summand survive.
inline TwoSum two_sum(const Graph& g1, int z1, const Graph& g2, int z2, Pairing how) {
    for (int v : g2.vertices())
        if (g1.has_vertex(v)) throw std::invalid_argument("two_sum: summands share vertex ids");
    if (!g1.has_vertex(z1) || g1.degree(z1) != 2) throw std::invalid_argument("two_sum: z1 must have degree 2");
    if (!g2.has_vertex(z2) || g2.degree(z2) != 2) throw std::invalid_argument("two_sum: z2 must have degree 2");
    int x1 = g1.neighbors(z1)[0], y1 = g1.neighbors(z1)[1];
    int x2 = g2.neighbors(z2)[0], y2 = g2.neighbors(z2)[1];
    if (how == Pairing::crossed) std::swap(x2, y2);
    bool join = g1.has_edge(x1, y1) || g2.has_edge(x2, y2);

    std::vector<int> vs;
    for (int v : g1.vertices())
        if (v != z1) vs.push_back(v);
    for (int v : g2.vertices())
        if (v != z2 && v != x2 && v != y2) vs.push_back(v);

    Edge e1 = mk_edge(x1, y1), e2 = mk_edge(x2, y2);
    std::vector<Edge> es;
    for (const Edge& e : g1.edges()) {
        if (e.first == z1 || e.second == z1 || e == e1) continue;
        es.push_back(e);
    }
    auto img = [&](int v) { return v == x2 ? x1 : v == y2 ? y1 : v; };
    for (const Edge& e : g2.edges()) {
        if (e.first == z2 || e.second == z2 || e == e2) continue;
        es.push_back(mk_edge(img(e.first), img(e.second)));
    }
    if (join) es.push_back(mk_edge(x1, y1));
    return {Graph(std::move(vs), es), x1, y1};
}

inline TwoSum two_sum(const Graph& g1, int z1, const Graph& g2, int z2) {
    return two_sum(g1, z1, g2, z2, Pairing::straight);
}

// ---- labeled graphs and tree structures ---------------------------------------

// A 2-connected graph with a stable set of degree-2 vertices marked as the
// places where further 2-sums may attach.
struct LabeledGraph {
    Graph graph;
    std::vector<int> labels;
};

inline bool is_valid_labeled(const LabeledGraph& lg, std::string* why = nullptr) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    if (!is_k_connected(lg.graph, 2)) return fail("graph not 2-connected");
    std::vector<int> ls = lg.labels;
    std::sort(ls.begin(), ls.end());
    if (std::adjacent_find(ls.begin(), ls.end()) != ls.end()) return fail("repeated label");
    for (int l : ls) {
        if (!lg.graph.has_vertex(l)) return fail("label is not a vertex");
        if (lg.graph.degree(l) != 2) return fail("label without degree 2");
    }
    for (size_t i = 0; i < ls.size(); ++i)
        for (size_t j = i + 1; j < ls.size(); ++j)
            if (lg.graph.has_edge(ls[i], ls[j])) return fail("adjacent labels");
    if (why) why->clear();
    return true;
}

inline LabeledGraph shift_ids(const LabeledGraph& lg, int offset) {
    std::map<int, int> to;
    for (int v : lg.graph.vertices()) to[v] = v + offset;
    LabeledGraph out{relabel(lg.graph, to), lg.labels};
    for (int& l : out.labels) l += offset;
    return out;
}

// Disjoint pieces hung on a tree; every tree edge consumes one label from
// each endpoint piece, and the pairing tag says how the two label
// neighborhoods line up when the seam is summed.
struct TreeStructure {
    Graph tree;
    std::map<int, LabeledGraph> pieces;  // tree node -> piece
    std::map<int, Edge> glue;            // consumed label vertex -> tree edge
    std::map<Edge, Pairing> orientation; // tree edge -> pairing
};

inline bool is_valid_structure(const TreeStructure& th, std::string* why = nullptr) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    const Graph& t = th.tree;
    if (t.order() == 0) return fail("empty tree");
    if (!is_connected(t) || t.size() != t.order() - 1) return fail("tree graph is not a tree");
    if (int(th.pieces.size()) != t.order()) return fail("piece count differs from node count");
    std::set<int> seen;
    for (const auto& [node, piece] : th.pieces) {
        if (!t.has_vertex(node)) return fail("piece at unknown node");
        std::string sub;
        if (!is_valid_labeled(piece, &sub))
            return fail("piece " + std::to_string(node) + ": " + sub);
        for (int v : piece.graph.vertices())
            if (!seen.insert(v).second) return fail("pieces share vertex " + std::to_string(v));
    }
    if (th.orientation.size() != size_t(t.size())) return fail("orientation entries differ from tree edges");
    for (const Edge& e : t.edges())
        if (!th.orientation.count(e)) return fail("tree edge without orientation");
    std::map<Edge, std::vector<int>> by_edge;
    for (const auto& [label, e] : th.glue) {
        if (!t.has_edge(e.first, e.second)) return fail("glue entry on a non-edge");
        by_edge[e].push_back(label);
    }
    if (by_edge.size() != size_t(t.size())) return fail("some tree edge has no glue");
    for (const Edge& e : t.edges()) {
        auto it = by_edge.find(e);
        if (it == by_edge.end() || it->second.size() != 2)
            return fail("tree edge needs exactly two glued labels");
        auto is_label_of = [&](int node, int v) {
            const auto& ls = th.pieces.at(node).labels;
            return std::find(ls.begin(), ls.end(), v) != ls.end();
        };
        int a = it->second[0], b = it->second[1];
        bool ok = (is_label_of(e.first, a) && is_label_of(e.second, b)) ||
                  (is_label_of(e.first, b) && is_label_of(e.second, a));
        if (!ok) return fail("glued labels must come one from each endpoint piece");
    }
    if (why) why->clear();
    return true;
}

namespace detail {

// the label of `node`'s piece consumed by tree edge e
inline int seam_label(const TreeStructure& th, Edge e, int node) {
    const auto& ls = th.pieces.at(node).labels;
    for (const auto& [label, ge] : th.glue)
        if (ge == e && std::find(ls.begin(), ls.end(), label) != ls.end()) return label;
    throw std::logic_error("seam_label: no glued label for this edge/node");
}

} // namespace detail

// Sum all pieces over the tree in one pass: union-find over the seam
// identifications, each class named by its smallest vertex id. `where`
// (optional) reports (node, piece vertex) -> vertex of the result, for
// every vertex that survives.
inline LabeledGraph tree_sum(const TreeStructure& th,
                             std::map<std::pair<int, int>, int>* where = nullptr) {
    std::string why;
    if (!is_valid_structure(th, &why)) throw std::invalid_argument("tree_sum: " + why);

    std::map<int, int> parent;
    std::function<int(int)> find = [&](int v) {
        auto it = parent.find(v);
        if (it == parent.end() || it->second == v) return v;
        return parent[v] = find(it->second);
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[a] = b;
    };

    for (const Edge& e : th.tree.edges()) {
        int ls = detail::seam_label(th, e, e.first);
        int lt = detail::seam_label(th, e, e.second);
        const Graph& gs = th.pieces.at(e.first).graph;
        const Graph& gt = th.pieces.at(e.second).graph;
        int a2 = gt.neighbors(lt)[0], b2 = gt.neighbors(lt)[1];
        if (th.orientation.at(e) == Pairing::crossed) std::swap(a2, b2);
        unite(gs.neighbors(ls)[0], a2);
        unite(gs.neighbors(ls)[1], b2);
    }

    // class representative: smallest member
    std::map<int, int> best; // root -> min vertex
    for (const auto& kv : th.pieces)
        for (int v : kv.second.graph.vertices()) {
            int r = find(v);
            auto it = best.find(r);
            if (it == best.end() || v < it->second) best[r] = v;
        }
    auto rep = [&](int v) { return best.at(find(v)); };

    std::vector<int> vs, labels;
    std::vector<Edge> es;
    for (const auto& [node, piece] : th.pieces) {
        for (int v : piece.graph.vertices()) {
            if (th.glue.count(v)) continue; // consumed label
            vs.push_back(rep(v));
            if (where) (*where)[{node, v}] = rep(v);
        }
        for (const Edge& e : piece.graph.edges()) {
            if (th.glue.count(e.first) || th.glue.count(e.second)) continue;
            es.push_back(mk_edge(rep(e.first), rep(e.second)));
        }
        for (int l : piece.labels)
            if (!th.glue.count(l)) labels.push_back(l);
    }
    std::sort(labels.begin(), labels.end());
    return {Graph(std::move(vs), es), labels};
}

// Contract one tree edge: 2-sum its two pieces (smaller node id survives)
// and rewire the remaining seams. Each join vertex takes the smaller of the
// two ids it merges, which keeps tree_sum invariant under contraction; the
// orientations of both pieces' other seams are re-derived, since renaming a
// join vertex can swap a neighbor pair's sorted order.
inline TreeStructure contract_seam(const TreeStructure& th, Edge alpha) {
    std::string why;
    if (!is_valid_structure(th, &why)) throw std::invalid_argument("contract_seam: " + why);
    alpha = mk_edge(alpha.first, alpha.second);
    if (!th.tree.has_edge(alpha.first, alpha.second))
        throw std::invalid_argument("contract_seam: not a tree edge");
    int s = alpha.first, t = alpha.second; // s < t, s survives
    int ls = detail::seam_label(th, alpha, s);
    int lt = detail::seam_label(th, alpha, t);
    const Graph& gs = th.pieces.at(s).graph;
    const Graph& gt = th.pieces.at(t).graph;
    Pairing how = th.orientation.at(alpha);
    TwoSum sum = two_sum(gs, ls, gt, lt, how);

    int xs = gs.neighbors(ls)[0], ys = gs.neighbors(ls)[1];
    int xt = gt.neighbors(lt)[0], yt = gt.neighbors(lt)[1];
    if (how == Pairing::crossed) std::swap(xt, yt); // xt merges with xs, yt with ys
    int jx = std::min(xs, xt), jy = std::min(ys, yt);
    auto renamed = [&](int side, int v) {
        if (side == s) return v == xs ? jx : v == ys ? jy : v;
        return v == xt ? jx : v == yt ? jy : v;
    };
    std::map<int, int> fix;
    if (jx != xs) fix[xs] = jx;
    if (jy != ys) fix[ys] = jy;

    TreeStructure out;
    out.tree = contract_edge(th.tree, s, t);
    for (const auto& [node, piece] : th.pieces)
        if (node != s && node != t) out.pieces[node] = piece;
    LabeledGraph merged{fix.empty() ? sum.graph : relabel(sum.graph, fix), {}};
    for (int l : th.pieces.at(s).labels)
        if (l != ls) merged.labels.push_back(l);
    for (int l : th.pieces.at(t).labels)
        if (l != lt) merged.labels.push_back(l);
    std::sort(merged.labels.begin(), merged.labels.end());
    out.pieces[s] = merged;

    auto remap_edge = [&](Edge e) {
        int a = e.first == t ? s : e.first;
        int b = e.second == t ? s : e.second;
        return mk_edge(a, b);
    };
    for (const auto& [label, e] : th.glue) {
        if (label == ls || label == lt) continue;
        out.glue[label] = remap_edge(e);
    }
    for (const Edge& e : th.tree.edges()) {
        if (e == alpha) continue;
        Pairing p = th.orientation.at(e);
        int side = e.first == s || e.first == t   ? e.first
                 : e.second == s || e.second == t ? e.second
                                                  : -1;
        if (side != -1) {
            int l = detail::seam_label(th, e, side);
            const Graph& gp = side == s ? gs : gt;
            int n1 = gp.neighbors(l)[0], n2 = gp.neighbors(l)[1];
            if (renamed(side, n1) > renamed(side, n2)) p = flip(p);
        }
        out.orientation[remap_edge(e)] = p;
    }
    return out;
}

// Keep a connected set of tree nodes; labels consumed by dropped seams turn
// back into ordinary labels. The sum of the result is a minor of the sum of
// the whole structure.
inline TreeStructure subtree_structure(const TreeStructure& th, std::vector<int> nodes) {
    std::string why;
    if (!is_valid_structure(th, &why)) throw std::invalid_argument("subtree_structure: " + why);
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    if (nodes.empty()) throw std::invalid_argument("subtree_structure: empty node set");
    for (int v : nodes)
        if (!th.tree.has_vertex(v)) throw std::invalid_argument("subtree_structure: unknown node");
    TreeStructure out;
    out.tree = induced_subgraph(th.tree, nodes);
    if (!is_connected(out.tree)) throw std::invalid_argument("subtree_structure: nodes not a subtree");
    for (int v : nodes) out.pieces[v] = th.pieces.at(v);
    for (const auto& [label, e] : th.glue)
        if (out.tree.has_edge(e.first, e.second)) out.glue[label] = e;
    for (const auto& [e, p] : th.orientation)
        if (out.tree.has_edge(e.first, e.second)) out.orientation[e] = p;
    return out;
}

// Wire pieces into a path; seam i glues seam_labels[i] = (label in piece i,
// label in piece i+1), all seams straight. Pieces must be disjoint already.
inline TreeStructure chain_structure(const std::vector<LabeledGraph>& pieces,
                                     const std::vector<std::pair<int, int>>& seam_labels) {
    if (pieces.empty()) throw std::invalid_argument("chain_structure: no pieces");
    if (seam_labels.size() + 1 != pieces.size())
        throw std::invalid_argument("chain_structure: need one seam less than pieces");
    TreeStructure th;
    int k = int(pieces.size());
    std::vector<int> ns(static_cast<std::size_t>(k));
    std::iota(ns.begin(), ns.end(), 0);
    std::vector<Edge> es;
    for (int i = 0; i + 1 < k; ++i) es.push_back({i, i + 1});
    th.tree = Graph(ns, es);
    for (int i = 0; i < k; ++i) th.pieces[i] = pieces[size_t(i)];
    for (int i = 0; i + 1 < k; ++i) {
        Edge e{i, i + 1};
        th.glue[seam_labels[size_t(i)].first] = e;
        th.glue[seam_labels[size_t(i)].second] = e;
        th.orientation[e] = Pairing::straight;
    }
    std::string why;
    if (!is_valid_structure(th, &why)) throw std::invalid_argument("chain_structure: " + why);
    return th;
}

// ---- structure JSON ------------------------------------------------------------

inline nlohmann::json structure_to_json(const TreeStructure& th) {
    nlohmann::json j;
    j["tree"] = {{"nodes", th.tree.vertices()}, {"edges", nlohmann::json::array()}};
    for (const Edge& e : th.tree.edges()) j["tree"]["edges"].push_back({e.first, e.second});
    j["pieces"] = nlohmann::json::array();
    for (const auto& [node, piece] : th.pieces)
        j["pieces"].push_back(
            {{"node", node}, {"graph", graph_to_json(piece.graph)}, {"labels", piece.labels}});
    j["glue"] = nlohmann::json::array();
    for (const auto& [label, e] : th.glue)
        j["glue"].push_back({{"label", label},
                             {"edge", {e.first, e.second}},
                             {"pairing", th.orientation.at(e) == Pairing::straight ? "straight" : "crossed"}});
    return j;
}

inline TreeStructure structure_from_json(const nlohmann::json& j) {
    TreeStructure th;
    if (!j.contains("tree") || !j.contains("pieces"))
        throw std::invalid_argument("structure json: missing tree or pieces");
    std::vector<int> nodes;
    for (const auto& v : j["tree"]["nodes"]) nodes.push_back(v.get<int>());
    std::vector<Edge> es;
    if (j["tree"].contains("edges"))
        for (const auto& e : j["tree"]["edges"]) es.push_back(mk_edge(e[0].get<int>(), e[1].get<int>()));
    th.tree = Graph(nodes, es);
    for (const auto& p : j["pieces"]) {
        LabeledGraph lg;
        lg.graph = graph_from_json(p["graph"]);
        if (p.contains("labels"))
            for (const auto& l : p["labels"]) lg.labels.push_back(l.get<int>());
        th.pieces[p["node"].get<int>()] = lg;
    }
    if (j.contains("glue"))
        for (const auto& g : j["glue"]) {
            Edge e = mk_edge(g["edge"][0].get<int>(), g["edge"][1].get<int>());
            th.glue[g["label"].get<int>()] = e;
            Pairing p = g["pairing"].get<std::string>() == "crossed" ? Pairing::crossed : Pairing::straight;
            auto it = th.orientation.find(e);
            if (it != th.orientation.end() && it->second != p)
                throw std::invalid_argument("structure json: conflicting pairings on one edge");
            th.orientation[e] = p;
        }
    std::string why;
    if (!is_valid_structure(th, &why)) throw std::invalid_argument("structure json: " + why);
    return th;
}

// ---- the piece catalogue -------------------------------------------------------

// Pieces that survive decomposition: short cycles, K4 minus an edge,
// K_{2,3}, and internally 3-connected graphs.
enum class CTag { none, c3, c4, c5, c6, k4e, k23, internally_3c };

inline CTag in_class_C(const Graph& g) {
    if (is_cycle(g)) {
        switch (g.order()) {
        case 3: return CTag::c3;
        case 4: return CTag::c4;
        case 5: return CTag::c5;
        case 6: return CTag::c6;
        default: return CTag::none;
        }
    }
    if (g.order() == 4 && are_isomorphic(g, k4_minus_e())) return CTag::k4e;
    if (g.order() == 5 && are_isomorphic(g, complete_bipartite(2, 3))) return CTag::k23;
    if (is_internally_3connected(g)) return CTag::internally_3c;
    return CTag::none;
}

// The split of the catalogue: pieces whose 2-sums stay type-I versus the
// rest (K_{2,3} and the internally 3-connected graphs other than K_{3,3}
// minus an edge).
inline bool in_c1(const Graph& g) {
    CTag t = in_class_C(g);
    if (t == CTag::c3 || t == CTag::c4 || t == CTag::c5 || t == CTag::c6 || t == CTag::k4e) return true;
    return t == CTag::internally_3c && g.order() == 6 && are_isomorphic(g, k33_minus_e());
}

inline bool in_c2(const Graph& g) {
    CTag t = in_class_C(g);
    if (t == CTag::k23) return true;
    if (t != CTag::internally_3c) return false;
    return !(g.order() == 6 && are_isomorphic(g, k33_minus_e()));
}

// ---- 2-cut classification ------------------------------------------------------

enum class CutTag { not_a_cut, admissible, k23_exception, k4e_exception, isolated_vertex };

// For an admissible cut, side1/side2 are the unions of components of
// G\{x,y} making up the two summands, and xy_side says which side keeps the
// xy edge when it exists (0 when it does not).
struct CutClassification {
    CutTag tag = CutTag::not_a_cut;
    int x = -1, y = -1;
    std::vector<int> side1, side2;
    int xy_side = 0;
};

inline CutClassification classify_2cut(const Graph& g, int x, int y) {
    if (!g.has_vertex(x) || !g.has_vertex(y) || x == y)
        throw std::invalid_argument("classify_2cut: bad cut pair");
    if (!is_k_connected(g, 2)) throw std::invalid_argument("classify_2cut: graph not 2-connected");
    CutClassification out;
    out.x = x;
    out.y = y;
    auto comps = components(delete_vertices(g, {x, y}));
    if (comps.size() < 2) return out; // not_a_cut
    std::sort(comps.begin(), comps.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    bool e = g.has_edge(x, y);
    int k = int(comps.size());
    auto join2 = [&](int i, int j) {
        std::vector<int> s = comps[size_t(i)];
        s.insert(s.end(), comps[size_t(j)].begin(), comps[size_t(j)].end());
        std::sort(s.begin(), s.end());
        return s;
    };
    if (k >= 3) {
        if (k == 3 && comps[2].size() == 1 && !e) {
            out.tag = CutTag::k23_exception; // the graph is exactly K_{2,3}
            return out;
        }
        out.tag = CutTag::admissible;
        out.side1 = join2(0, 1);
        for (int i = 2; i < k; ++i)
            out.side2.insert(out.side2.end(), comps[size_t(i)].begin(), comps[size_t(i)].end());
        std::sort(out.side2.begin(), out.side2.end());
        out.xy_side = e ? 2 : 0;
        return out;
    }
    if (e) {
        if (comps[1].size() == 1) {
            out.tag = CutTag::k4e_exception; // the graph is exactly K4 minus an edge
            return out;
        }
        out.tag = CutTag::admissible;
        out.side1 = comps[0];
        out.side2 = comps[1];
        out.xy_side = 1;
        return out;
    }
    if (comps[0].size() == 1) {
        out.tag = CutTag::isolated_vertex;
        return out;
    }
    out.tag = CutTag::admissible;
    out.side1 = comps[0];
    out.side2 = comps[1];
    out.xy_side = 0;
    return out;
}

namespace detail {

// One side of an admissible split, on the original ids: the component union
// plus x, y, minus the xy edge when the other side keeps it, plus a fresh
// degree-2 vertex z standing in for the rest of the graph.
inline Graph split_side(const Graph& g, const CutClassification& c, int which, int z) {
    const std::vector<int>& side = which == 1 ? c.side1 : c.side2;
    std::vector<int> keep = side;
    keep.push_back(c.x);
    keep.push_back(c.y);
    Graph h = induced_subgraph(g, keep);
    if (c.xy_side != 0 && c.xy_side != which) h = delete_edge(h, c.x, c.y);
    return h.with_vertex(z).with_edge(c.x, z).with_edge(c.y, z);
}

inline std::optional<CutClassification> first_admissible(const Graph& g, const std::vector<int>& labels) {
    auto banned = [&](int v) { return std::find(labels.begin(), labels.end(), v) != labels.end(); };
    auto vs = g.vertices();
    for (size_t i = 0; i < vs.size(); ++i) {
        if (banned(vs[i])) continue;
        for (size_t j = i + 1; j < vs.size(); ++j) {
            if (banned(vs[j])) continue;
            CutClassification c = classify_2cut(g, vs[i], vs[j]);
            if (c.tag == CutTag::admissible) return c;
        }
    }
    return std::nullopt;
}

} // namespace detail

// All ways to choose a stable set of degree-2 vertices (including the empty
// set); the candidate label sets of a graph.
inline std::vector<std::vector<int>> stable_degree2_subsets(const Graph& g) {
    std::vector<int> d2 = degree2_vertices(g);
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == d2.size()) {
            out.push_back(cur);
            return;
        }
        rec(i + 1);
        bool ok = true;
        for (int u : cur)
            if (g.has_edge(u, d2[i])) ok = false;
        if (ok) {
            cur.push_back(d2[i]);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

// The lexicographically first admissible 2-cut avoiding the labels, as an
// explicit split: two disjoint summands whose straight 2-sum rebuilds G
// verbatim. Side 2 gets fresh names for x and y (in increasing order, so
// the straight pairing is the right one).
struct AdmissibleCut {
    int x = -1, y = -1;
    Graph g1;
    int z1 = -1;
    Graph g2;
    int z2 = -1;
};

inline std::optional<AdmissibleCut> find_admissible_2cut(const Graph& g, const std::vector<int>& labels) {
    std::string why;
    if (!is_valid_labeled({g, labels}, &why))
        throw std::invalid_argument("find_admissible_2cut: " + why);
    auto c = detail::first_admissible(g, labels);
    if (!c) return std::nullopt;
    int m = g.max_vertex_id();
    int z1 = m + 1, z2 = m + 2, x2 = m + 3, y2 = m + 4;
    AdmissibleCut out;
    out.x = c->x;
    out.y = c->y;
    out.z1 = z1;
    out.z2 = z2;
    out.g1 = detail::split_side(g, *c, 1, z1);
    Graph raw = detail::split_side(g, *c, 2, z2);
    std::map<int, int> to{{std::min(c->x, c->y), x2}, {std::max(c->x, c->y), y2}};
    out.g2 = relabel(raw, to);
    return out;
}

// ---- decomposition -------------------------------------------------------------

namespace detail {

struct RawSeam {
    int z1, z2; // the fresh degree-2 stand-ins, one per side
    int x, y;   // the cut pair, shared by both sides at split time
};

struct RawDecomp {
    std::vector<LabeledGraph> pieces; // leaves of the recursion, in DFS order
    std::vector<RawSeam> seams;
};

inline void decompose_raw(const Graph& g, const std::vector<int>& labels, int& next_id,
                          RawDecomp& out) {
    if (in_class_C(g) != CTag::none) {
        std::vector<int> ls = labels;
        std::sort(ls.begin(), ls.end());
        out.pieces.push_back({g, ls});
        return;
    }
    auto c = first_admissible(g, labels);
    if (!c) throw std::logic_error("decompose: piece outside the catalogue has no admissible cut");
    int z1 = next_id++, z2 = next_id++;
    Graph g1 = split_side(g, *c, 1, z1);
    Graph g2 = split_side(g, *c, 2, z2);
    std::vector<int> l1{z1}, l2{z2};
    for (int l : labels) {
        if (std::find(c->side1.begin(), c->side1.end(), l) != c->side1.end()) l1.push_back(l);
        else l2.push_back(l);
    }
    out.seams.push_back({z1, z2, c->x, c->y});
    decompose_raw(g1, l1, next_id, out);
    decompose_raw(g2, l2, next_id, out);
}

} // namespace detail

// Split along admissible 2-cuts until every piece is in the catalogue. The
// recursion shares the cut pairs between sides; a final pass renames later
// copies so pieces are disjoint, which also fixes each seam's pairing. The
// sum of the result rebuilds (G, L) verbatim, not just up to isomorphism.
inline TreeStructure decompose(const Graph& g, const std::vector<int>& labels) {
    std::string why;
    if (!is_valid_labeled({g, labels}, &why)) throw std::invalid_argument("decompose: " + why);
    int next_id = g.max_vertex_id() + 1;
    detail::RawDecomp rd;
    detail::decompose_raw(g, labels, next_id, rd);

    int k = int(rd.pieces.size());
    std::map<int, int> first_home; // vertex -> first node holding it
    std::vector<std::map<int, int>> rename(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t)
        for (int v : rd.pieces[size_t(t)].graph.vertices()) {
            auto it = first_home.find(v);
            if (it == first_home.end()) first_home[v] = t;
            else rename[size_t(t)][v] = next_id++;
        }

    TreeStructure th;
    std::vector<int> ns(static_cast<std::size_t>(k));
    std::iota(ns.begin(), ns.end(), 0);
    std::map<int, int> node_of_z;
    std::vector<Edge> tes;
    for (int t = 0; t < k; ++t) {
        const LabeledGraph& raw = rd.pieces[size_t(t)];
        for (int l : raw.labels)
            if (rename[size_t(t)].count(l)) throw std::logic_error("decompose: a label got renamed");
        th.pieces[t] = {relabel(raw.graph, rename[size_t(t)]), raw.labels};
        for (int l : raw.labels) node_of_z[l] = t;
    }
    for (const detail::RawSeam& s : rd.seams) {
        int t1 = node_of_z.at(s.z1), t2 = node_of_z.at(s.z2);
        Edge e = mk_edge(t1, t2);
        tes.push_back(e);
        th.glue[s.z1] = e;
        th.glue[s.z2] = e;
        auto named = [&](int t, int v) {
            auto it = rename[size_t(t)].find(v);
            return it == rename[size_t(t)].end() ? v : it->second;
        };
        bool o1 = named(t1, s.x) < named(t1, s.y);
        bool o2 = named(t2, s.x) < named(t2, s.y);
        th.orientation[e] = o1 == o2 ? Pairing::straight : Pairing::crossed;
    }
    th.tree = Graph(ns, tes);
    if (!is_valid_structure(th, &why)) throw std::logic_error("decompose: built invalid structure: " + why);
    return th;
}

// ---- catalogue-2 pieces along tree paths ----------------------------------------

namespace detail {

inline std::vector<int> tree_path(const Graph& tree, int s, int t) {
    Path p = shortest_path(tree, s, t);
    return p.verts;
}

inline std::map<int, bool> c2_flags(const TreeStructure& th) {
    std::map<int, bool> f;
    for (const auto& [node, piece] : th.pieces) f[node] = in_c2(piece.graph);
    return f;
}

inline int count_flags(const std::vector<int>& path, const std::map<int, bool>& f) {
    int c = 0;
    for (int v : path)
        if (f.at(v)) ++c;
    return c;
}

} // namespace detail

// Most catalogue-2 pieces any single tree path can collect.
inline int c2_count_on_paths(const TreeStructure& th) {
    std::string why;
    if (!is_valid_structure(th, &why)) throw std::invalid_argument("c2_count_on_paths: " + why);
    auto f = detail::c2_flags(th);
    int best = 0;
    auto vs = th.tree.vertices();
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i; j < vs.size(); ++j)
            best = std::max(best, detail::count_flags(detail::tree_path(th.tree, vs[i], vs[j]), f));
    return best;
}

inline std::vector<int> best_c2_path(const TreeStructure& th) {
    std::string why;
    if (!is_valid_structure(th, &why)) throw std::invalid_argument("best_c2_path: " + why);
    auto f = detail::c2_flags(th);
    int best = -1;
    std::vector<int> arg;
    auto vs = th.tree.vertices();
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i; j < vs.size(); ++j) {
            auto p = detail::tree_path(th.tree, vs[i], vs[j]);
            int c = detail::count_flags(p, f);
            if (c > best) {
                best = c;
                arg = p;
            }
        }
    return arg;
}

namespace detail {

// Disjoint connected rails through one piece, with an optional extra vertex
// adjacent to both. need_a / need_b are the port vertices each rail must
// pick up; an exhaustive scan over connected candidate rails.
struct PieceGadget {
    std::vector<int> a, b;
    int leaf = -1;
};

inline bool find_gadget(const Graph& g, const std::vector<int>& universe, std::vector<int> need_a,
                        std::vector<int> need_b, bool need_leaf, PieceGadget* out, Budget* bud) {
    std::sort(need_a.begin(), need_a.end());
    need_a.erase(std::unique(need_a.begin(), need_a.end()), need_a.end());
    std::sort(need_b.begin(), need_b.end());
    need_b.erase(std::unique(need_b.begin(), need_b.end()), need_b.end());
    for (int v : need_a)
        if (std::find(need_b.begin(), need_b.end(), v) != need_b.end()) return false;

    Graph sub = induced_subgraph(g, universe);
    MaskView mv(sub);
    auto bit = [&](int v) { return std::uint64_t(1) << sub.index_of(v); };
    std::uint64_t mask_a = 0, mask_b = 0;
    for (int v : need_a) mask_a |= bit(v);
    for (int v : need_b) mask_b |= bit(v);

    auto try_complete = [&](std::uint64_t a_set) -> bool {
        std::uint64_t rest = mv.full() & ~a_set;
        auto comp_of = [&](std::uint64_t inside, std::uint64_t seedbit) {
            return mv.reach(seedbit, inside);
        };
        auto b_candidate = [&](std::uint64_t inside) -> std::uint64_t {
            if (mask_b) {
                std::uint64_t c = comp_of(inside, mask_b & (-std::int64_t(mask_b)));
                return (mask_b & ~c) == 0 ? c : 0;
            }
            return inside; // any nonempty component will do; caller refines
        };
        if (!need_leaf) {
            std::uint64_t inside = rest;
            if (mask_b) {
                std::uint64_t c = b_candidate(inside);
                if (!c) return false;
                out->a = mv.to_vertices(a_set);
                out->b = mv.to_vertices(c);
                return true;
            }
            if (!inside) return false;
            std::uint64_t seed = inside & (-std::int64_t(inside));
            out->a = mv.to_vertices(a_set);
            out->b = mv.to_vertices(mv.reach(seed, inside));
            return true;
        }
        // need a leaf: try each w adjacent to the a-rail, then a b-rail
        // avoiding w that w also touches
        std::uint64_t w_opts = mv.neighborhood(a_set) & rest;
        while (w_opts) {
            std::uint64_t wbit = w_opts & (-std::int64_t(w_opts));
            w_opts &= w_opts - 1;
            if (wbit & mask_b) continue;
            std::uint64_t inside = rest & ~wbit;
            if (mask_b) {
                std::uint64_t c = comp_of(inside, mask_b & (-std::int64_t(mask_b)));
                if ((mask_b & ~c) != 0) continue;
                if (!(mv.neighborhood(wbit) & c)) continue;
                out->a = mv.to_vertices(a_set);
                out->b = mv.to_vertices(c);
                out->leaf = mv.to_vertices(wbit)[0];
                return true;
            }
            std::uint64_t opts = mv.neighborhood(wbit) & inside;
            if (!opts) continue;
            std::uint64_t c = comp_of(inside, opts & (-std::int64_t(opts)));
            out->a = mv.to_vertices(a_set);
            out->b = mv.to_vertices(c);
            out->leaf = mv.to_vertices(wbit)[0];
            return true;
        }
        return false;
    };

    // enumerate connected rail candidates a_set: supersets of mask_a (or, with
    // no ports to hit, connected sets with a fixed minimum element)
    std::function<bool(std::uint64_t, std::uint64_t)> grow = [&](std::uint64_t cur,
                                                                 std::uint64_t banned) -> bool {
        if (bud) bud->spend();
        if ((mask_a & ~cur) == 0 && try_complete(cur)) return true;
        std::uint64_t ext = mv.neighborhood(cur) & mv.full() & ~mask_b & ~banned;
        while (ext) {
            std::uint64_t vbit = ext & (-std::int64_t(ext));
            ext &= ext - 1;
            if (grow(cur | vbit, banned)) return true;
            banned |= vbit;
        }
        return false;
    };

    if (mask_a) {
        std::uint64_t seed = mask_a & (-std::int64_t(mask_a));
        return grow(seed, 0);
    }
    for (int i = 0; i < mv.n; ++i) {
        std::uint64_t seed = std::uint64_t(1) << i;
        if (seed & mask_b) continue;
        // restrict to indices >= i so each connected set is tried once
        std::uint64_t banned = seed - 1;
        if (grow(seed, banned)) return true;
    }
    return false;
}

} // namespace detail

// Build a minor witness from a tree path carrying n catalogue-2 pieces:
// contract everything off the path, thread two disjoint rails through the
// remaining chain, and let each catalogue-2 piece contribute one extra
// vertex adjacent to both rails. The witness lives in tree_sum(Θ).
inline K2nWitness c2_paths_give_minor(const TreeStructure& th, int n, Budget* bud = nullptr) {
    if (n < 1) throw std::invalid_argument("c2_paths_give_minor: n must be at least 1");
    std::string why;
    if (!is_valid_structure(th, &why)) throw std::invalid_argument("c2_paths_give_minor: " + why);
    auto flags = detail::c2_flags(th);
    std::vector<int> path = best_c2_path(th);
    while (!path.empty() && !flags.at(path.front())) path.erase(path.begin());
    while (!path.empty() && !flags.at(path.back())) path.pop_back();
    if (detail::count_flags(path, flags) < n)
        throw std::invalid_argument("c2_paths_give_minor: no tree path carries that many pieces");

    // absorb everything hanging off the path
    TreeStructure chain = th;
    for (;;) {
        std::set<Edge> keep;
        for (size_t i = 0; i + 1 < path.size(); ++i)
            keep.insert(mk_edge(path[i], path[i + 1]));
        std::optional<Edge> todo;
        for (const Edge& e : chain.tree.edges())
            if (!keep.count(e)) {
                todo = e;
                break;
            }
        if (!todo) break;
        chain = contract_seam(chain, *todo);
        int survivor = todo->first, absorbed = todo->second;
        auto it = std::find(path.begin(), path.end(), absorbed);
        if (it != path.end()) {
            flags[survivor] = flags.at(absorbed);
            *it = survivor;
        }
        flags.erase(absorbed);
    }

    int k = int(path.size());
    struct Task {
        const Graph* g = nullptr;
        std::vector<int> universe;
        int in_a = -1, in_b = -1;   // entry ports under states true/false
        int out_a = -1, out_b = -1; // exit ports likewise
        bool needs_leaf = false;
    };
    std::vector<Task> tasks(static_cast<std::size_t>(k));
    std::vector<bool> seam_flip(static_cast<std::size_t>(std::max(0, k - 1)), false);
    for (int i = 0; i < k; ++i) {
        const LabeledGraph& piece = chain.pieces.at(path[size_t(i)]);
        Task& tk = tasks[size_t(i)];
        tk.g = &piece.graph;
        tk.needs_leaf = flags.at(path[size_t(i)]);
        std::vector<int> consumed;
        if (i > 0) {
            int l = detail::seam_label(chain, mk_edge(path[size_t(i - 1)], path[size_t(i)]), path[size_t(i)]);
            consumed.push_back(l);
            tk.in_a = piece.graph.neighbors(l)[0];
            tk.in_b = piece.graph.neighbors(l)[1];
        }
        if (i + 1 < k) {
            Edge e = mk_edge(path[size_t(i)], path[size_t(i + 1)]);
            int l = detail::seam_label(chain, e, path[size_t(i)]);
            consumed.push_back(l);
            tk.out_a = piece.graph.neighbors(l)[0];
            tk.out_b = piece.graph.neighbors(l)[1];
            seam_flip[size_t(i)] = chain.orientation.at(e) == Pairing::crossed;
        }
        for (int v : piece.graph.vertices())
            if (std::find(consumed.begin(), consumed.end(), v) == consumed.end())
                tk.universe.push_back(v);
    }

    // state after piece i: does rail A hold the smaller exit port?
    auto solve_piece = [&](int i, int state_in, int state_out, detail::PieceGadget* gd) {
        const Task& tk = tasks[size_t(i)];
        std::vector<int> na, nb;
        if (tk.in_a >= 0) {
            na.push_back(state_in ? tk.in_a : tk.in_b);
            nb.push_back(state_in ? tk.in_b : tk.in_a);
        }
        if (tk.out_a >= 0) {
            na.push_back(state_out ? tk.out_a : tk.out_b);
            nb.push_back(state_out ? tk.out_b : tk.out_a);
        }
        return detail::find_gadget(*tk.g, tk.universe, na, nb, tk.needs_leaf, gd, bud);
    };

    std::vector<detail::PieceGadget> chosen(static_cast<std::size_t>(k));
    bool done = false;
    if (k == 1) {
        done = solve_piece(0, 0, 0, &chosen[0]);
    } else {
        // DFS over exit states; at most two live states per boundary
        std::function<bool(int, int)> run = [&](int i, int state_in) -> bool {
            if (i == k - 1) return solve_piece(i, state_in, 0, &chosen[size_t(i)]);
            for (int state_out : {1, 0}) {
                if (!solve_piece(i, state_in, state_out, &chosen[size_t(i)])) continue;
                int next_in = seam_flip[size_t(i)] ? !state_out : state_out;
                if (run(i + 1, next_in)) return true;
            }
            return false;
        };
        done = run(0, 0);
    }
    if (!done) throw std::logic_error("c2_paths_give_minor: no rail assignment found");

    std::map<std::pair<int, int>, int> where;
    tree_sum(chain, &where);
    std::set<int> h1, h2;
    std::vector<int> leaves;
    for (int i = 0; i < k; ++i) {
        int node = path[size_t(i)];
        for (int v : chosen[size_t(i)].a) h1.insert(where.at({node, v}));
        for (int v : chosen[size_t(i)].b) h2.insert(where.at({node, v}));
        if (tasks[size_t(i)].needs_leaf) leaves.push_back(where.at({node, chosen[size_t(i)].leaf}));
    }
    K2nWitness w;
    w.hub1.assign(h1.begin(), h1.end());
    w.hub2.assign(h2.begin(), h2.end());
    std::sort(leaves.begin(), leaves.end());
    w.leaves = leaves;
    return w;
}

// ---- the layered presentation ---------------------------------------------------

enum class LayerKind { type_one, kernel };

// A decomposition with the chain pieces merged away: kernel nodes are the
// catalogue-2 pieces, everything else has collapsed into type-I pieces, and
// the tree is rooted at its center so the level count stays below n.
struct StructurePresentation {
    TreeStructure theta;
    int root = -1;
    int depth = 0;            // number of levels
    std::map<int, int> level; // node -> distance from root
    std::map<int, LayerKind> kind;
    std::map<int, ChordDiagram> reference_cycles; // for the type-I nodes
};

inline StructurePresentation decompose_to_structure(const Graph& g, int n, Budget* bud = nullptr) {
    if (has_k2n_minor(g, n, nullptr, bud))
        throw std::invalid_argument("decompose_to_structure: the input has a K_{2," + std::to_string(n) +
                                    "}-minor, nothing to present");
    TreeStructure th = decompose(g, {});
    auto flags = detail::c2_flags(th);
    for (;;) {
        std::optional<Edge> todo;
        for (const Edge& e : th.tree.edges())
            if (!flags.at(e.first) && !flags.at(e.second)) {
                todo = e;
                break;
            }
        if (!todo) break;
        th = contract_seam(th, *todo);
        flags.erase(todo->second); // survivor keeps its (false) flag
    }

    StructurePresentation out;
    out.theta = th;
    for (const auto& [node, piece] : th.pieces) {
        if (flags.at(node)) {
            out.kind[node] = LayerKind::kernel;
            if (!in_c2(piece.graph)) throw std::logic_error("decompose_to_structure: kernel piece left the catalogue");
            if (has_k2n_minor(piece.graph, n, nullptr, bud))
                throw std::logic_error("decompose_to_structure: kernel piece grew the excluded minor");
        } else {
            out.kind[node] = LayerKind::type_one;
            auto d = recognize_type_one(piece.graph, std::max(16, piece.graph.order()));
            if (!d) throw std::logic_error("decompose_to_structure: merged chain piece is not type-I");
            out.reference_cycles[node] = *d;
        }
    }

    // no path may carry n kernel pieces, so rooting at the center keeps the
    // number of levels at most n
    auto vs = th.tree.vertices();
    int best_ecc = -1;
    for (int v : vs) {
        int ecc = 0;
        for (int u : vs) ecc = std::max(ecc, int(detail::tree_path(th.tree, v, u).size()) - 1);
        if (best_ecc < 0 || ecc < best_ecc) {
            best_ecc = ecc;
            out.root = v;
        }
    }
    for (int u : vs) {
        int d = int(detail::tree_path(th.tree, out.root, u).size()) - 1;
        out.level[u] = d;
        out.depth = std::max(out.depth, d + 1);
    }
    std::map<int, bool> kernel_flags;
    for (const auto& [node, kd] : out.kind) kernel_flags[node] = kd == LayerKind::kernel;
    for (int s : vs)
        for (int t : vs)
            if (detail::count_flags(detail::tree_path(th.tree, s, t), kernel_flags) >= n)
                throw std::logic_error("decompose_to_structure: a path still carries n kernel pieces");
    if (out.depth > std::max(1, n))
        throw std::logic_error("decompose_to_structure: presentation deeper than the guarantee");
    return out;
}

} // namespace k2n
