#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace k2n {

// Undirected simple graph edge, stored with first < second.
using Edge = std::pair<int, int>;

inline Edge mk_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("loop edge " + std::to_string(u));
    return u < v ? Edge{u, v} : Edge{v, u};
}

// Simple undirected graph over arbitrary non-negative integer vertex ids.
// Value type: all mutating operations below return fresh graphs, ids of
// untouched vertices are stable.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) {
        if (n < 0) throw std::invalid_argument("negative order");
        verts_.resize(n);
        std::iota(verts_.begin(), verts_.end(), 0);
        build_adj();
    }

    Graph(std::vector<int> verts, const std::vector<Edge>& edges) {
        for (int v : verts)
            if (v < 0) throw std::invalid_argument("negative vertex id");
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        verts_ = std::move(verts);
        for (auto [u, v] : edges) {
            Edge e = mk_edge(u, v);
            if (!std::binary_search(verts_.begin(), verts_.end(), e.first) ||
                !std::binary_search(verts_.begin(), verts_.end(), e.second))
                throw std::invalid_argument("edge endpoint not a vertex");
            edges_.push_back(e);
        }
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
        build_adj();
    }

    static Graph from_edges(const std::vector<Edge>& edges) {
        std::vector<int> vs;
        for (auto [u, v] : edges) {
            vs.push_back(u);
            vs.push_back(v);
        }
        return Graph(std::move(vs), edges);
    }

    int order() const { return static_cast<int>(verts_.size()); }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<int>& vertices() const { return verts_; }
    const std::vector<Edge>& edges() const { return edges_; }

    // position of v in vertices(), -1 if absent
    int index_of(int v) const {
        auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
        if (it == verts_.end() || *it != v) return -1;
        return static_cast<int>(it - verts_.begin());
    }

    bool has_vertex(int v) const { return index_of(v) >= 0; }

    bool has_edge(int u, int v) const {
        if (u == v) return false;
        return std::binary_search(edges_.begin(), edges_.end(), mk_edge(u, v));
    }

    const std::vector<int>& neighbors(int v) const {
        int i = index_of(v);
        if (i < 0) throw std::invalid_argument("unknown vertex " + std::to_string(v));
        return adj_[i];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    int max_vertex_id() const { return verts_.empty() ? -1 : verts_.back(); }

    Graph with_vertex(int v) const {
        if (has_vertex(v)) return *this;
        std::vector<int> vs = verts_;
        vs.push_back(v);
        return Graph(std::move(vs), edges_);
    }

    Graph with_edge(int u, int v) const {
        std::vector<int> vs = verts_;
        vs.push_back(u);
        vs.push_back(v);
        std::vector<Edge> es = edges_;
        es.push_back(mk_edge(u, v));
        return Graph(std::move(vs), es);
    }

    bool operator==(const Graph& o) const { return verts_ == o.verts_ && edges_ == o.edges_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    std::vector<int> verts_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;

    void build_adj() {
        adj_.assign(verts_.size(), {});
        for (auto [u, v] : edges_) {
            adj_[index_of(u)].push_back(v);
            adj_[index_of(v)].push_back(u);
        }
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    }
};

// ---- vertex/edge surgery ----------------------------------------------------

inline Graph delete_vertex(const Graph& g, int v) {
    if (!g.has_vertex(v)) throw std::invalid_argument("delete_vertex: unknown vertex");
    std::vector<int> vs;
    for (int u : g.vertices())
        if (u != v) vs.push_back(u);
    std::vector<Edge> es;
    for (auto e : g.edges())
        if (e.first != v && e.second != v) es.push_back(e);
    return Graph(std::move(vs), es);
}

inline Graph delete_vertices(const Graph& g, const std::vector<int>& del) {
    Graph r = g;
    for (int v : del) r = delete_vertex(r, v);
    return r;
}

inline Graph delete_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("delete_edge: no such edge");
    Edge e = mk_edge(u, v);
    std::vector<Edge> es;
    for (auto f : g.edges())
        if (f != e) es.push_back(f);
    return Graph(g.vertices(), es);
}

// Simple contraction: u and v merge into min(u,v); loops and parallel edges
// produced by the merge are discarded.
inline Graph contract_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("contract_edge: no such edge");
    int keep = std::min(u, v), gone = std::max(u, v);
    std::vector<int> vs;
    for (int w : g.vertices())
        if (w != gone) vs.push_back(w);
    std::vector<Edge> es;
    for (auto [a, b] : g.edges()) {
        if (a == gone) a = keep;
        if (b == gone) b = keep;
        if (a == b) continue;
        es.push_back(mk_edge(a, b));
    }
    return Graph(std::move(vs), es);
}

// Replace edge uv by a path u - w1 - ... - wk - v on k fresh vertices.
inline Graph subdivide_edge(const Graph& g, int u, int v, int k = 1) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("subdivide_edge: no such edge");
    if (k < 1) throw std::invalid_argument("subdivide_edge: k < 1");
    std::vector<int> vs = g.vertices();
    std::vector<Edge> es;
    Edge e = mk_edge(u, v);
    for (auto f : g.edges())
        if (f != e) es.push_back(f);
    int prev = u;
    int next_id = g.max_vertex_id() + 1;
    for (int i = 0; i < k; ++i) {
        int w = next_id++;
        vs.push_back(w);
        es.push_back(mk_edge(prev, w));
        prev = w;
    }
    es.push_back(mk_edge(prev, v));
    return Graph(std::move(vs), es);
}

inline Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    std::vector<int> vs = keep;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (int v : vs)
        if (!g.has_vertex(v)) throw std::invalid_argument("induced_subgraph: unknown vertex");
    std::vector<Edge> es;
    for (auto [u, v] : g.edges())
        if (std::binary_search(vs.begin(), vs.end(), u) &&
            std::binary_search(vs.begin(), vs.end(), v))
            es.push_back({u, v});
    return Graph(std::move(vs), es);
}

inline Graph relabel(const Graph& g, const std::map<int, int>& to) {
    std::vector<int> vs;
    for (int v : g.vertices()) {
        auto it = to.find(v);
        vs.push_back(it == to.end() ? v : it->second);
    }
    std::vector<int> check = vs;
    std::sort(check.begin(), check.end());
    if (std::adjacent_find(check.begin(), check.end()) != check.end())
        throw std::invalid_argument("relabel: mapping not injective");
    auto img = [&](int v) {
        auto it = to.find(v);
        return it == to.end() ? v : it->second;
    };
    std::vector<Edge> es;
    for (auto [u, v] : g.edges()) es.push_back(mk_edge(img(u), img(v)));
    return Graph(std::move(vs), es);
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    for (int v : b.vertices())
        if (a.has_vertex(v)) throw std::invalid_argument("disjoint_union: shared vertex id");
    std::vector<int> vs = a.vertices();
    vs.insert(vs.end(), b.vertices().begin(), b.vertices().end());
    std::vector<Edge> es = a.edges();
    es.insert(es.end(), b.edges().begin(), b.edges().end());
    return Graph(std::move(vs), es);
}

// ---- connectivity -----------------------------------------------------------

inline std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<std::vector<int>> out;
    std::map<int, bool> seen;
    for (int s : g.vertices()) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_connected(const Graph& g) {
    if (g.order() == 0) return true; // empty graph counts as connected here
    return components(g).size() == 1;
}

// k-connectivity for small k by explicit cut enumeration: |G| > k and no
// vertex set of size < k disconnects. Intended for k <= 5 on desk-scale graphs.
inline bool is_k_connected(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("is_k_connected: negative k");
    if (k > 5) throw std::invalid_argument("is_k_connected: k > 5 unsupported");
    if (k == 0) return g.order() > 0;
    if (g.order() <= k) return false;
    if (!is_connected(g)) return false;
    int n = g.order();
    std::vector<int> vs = g.vertices();
    // subsets of size 1..k-1
    std::vector<int> pick;
    auto rec = [&](auto&& self, int start, int want) -> bool { // true = found a cut
        if (want == 0) {
            Graph h = delete_vertices(g, pick);
            return h.order() > 0 && !is_connected(h);
        }
        for (int i = start; i <= n - want; ++i) {
            pick.push_back(vs[i]);
            if (self(self, i + 1, want - 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    for (int s = 1; s < k; ++s)
        if (rec(rec, 0, s)) return false;
    return true;
}

inline std::vector<int> degree2_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v : g.vertices())
        if (g.degree(v) == 2) out.push_back(v);
    return out;
}

inline bool is_cycle(const Graph& g) {
    if (g.order() < 3 || g.size() != g.order() || !is_connected(g)) return false;
    for (int v : g.vertices())
        if (g.degree(v) != 2) return false;
    return true;
}

// Suppress every degree-2 vertex simultaneously (replace u-w-v by uv).
// Fails (nullopt-style via thrown flag) is not used: returns false through
// *ok when the result would have a loop or parallel edge, i.e. when the
// degree-2 vertices are not independent subdivision vertices.
inline Graph suppress_degree2(const Graph& g, bool* ok) {
    *ok = true;
    std::vector<int> d2 = degree2_vertices(g);
    std::vector<Edge> added;
    for (int w : d2) {
        auto nb = g.neighbors(w);
        int u = nb[0], v = nb[1];
        if (g.degree(u) == 2 || g.degree(v) == 2) { *ok = false; return g; } // adjacent or chained
        if (g.has_edge(u, v)) { *ok = false; return g; }                     // would be parallel
        added.push_back(mk_edge(u, v));
    }
    std::sort(added.begin(), added.end());
    if (std::adjacent_find(added.begin(), added.end()) != added.end()) {
        *ok = false; // two suppressions yield the same edge
        return g;
    }
    Graph h = g;
    for (int w : d2) h = delete_vertex(h, w);
    for (auto [u, v] : added) h = h.with_edge(u, v);
    return h;
}

// A graph is internally 3-connected when it arises from a 3-connected graph
// by subdividing each edge at most once. Checked structurally:
//  (a) degree-2 vertices form an independent set,
//  (b) the two neighbors of each degree-2 vertex are non-adjacent,
//  (c) suppressing all degree-2 vertices yields a simple 3-connected graph.
inline bool is_internally_3connected(const Graph& g) {
    for (int w : degree2_vertices(g)) {
        auto nb = g.neighbors(w);
        if (g.degree(nb[0]) == 2 || g.degree(nb[1]) == 2) return false; // (a)
        if (g.has_edge(nb[0], nb[1])) return false;                     // (b)
    }
    bool ok = false;
    Graph h = suppress_degree2(g, &ok);
    if (!ok) return false;
    return is_k_connected(h, 3);
}

// ---- standard graphs --------------------------------------------------------

inline Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g = g.with_edge(i, i + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n < 3");
    Graph g = path_graph(n);
    return g.with_edge(n - 1, 0);
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g = g.with_edge(i, j);
    return g;
}

inline Graph complete_bipartite(int m, int n) {
    Graph g(m + n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) g = g.with_edge(i, m + j);
    return g;
}

// K4 minus one edge; vertices 0,1 have degree 3, vertices 2,3 degree 2.
inline Graph k4_minus_e() {
    return Graph({0, 1, 2, 3}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

// K_{3,3} minus one edge; parts {0,1,2} and {3,4,5}, missing edge 2-5.
inline Graph k33_minus_e() {
    Graph g = complete_bipartite(3, 3);
    return delete_edge(g, 2, 5);
}

// hub is vertex 0, rim 1..n
inline Graph wheel_graph(int rim) {
    if (rim < 3) throw std::invalid_argument("wheel_graph: rim < 3");
    Graph g(rim + 1);
    for (int i = 1; i <= rim; ++i) {
        g = g.with_edge(0, i);
        g = g.with_edge(i, i % rim + 1);
    }
    return g;
}

inline Graph petersen_graph() {
    std::vector<Edge> es;
    for (int i = 0; i < 5; ++i) {
        es.push_back(mk_edge(i, (i + 1) % 5)); // outer 5-cycle
        es.push_back(mk_edge(i, i + 5));       // spokes
        es.push_back(mk_edge(i + 5, (i + 2) % 5 + 5)); // inner pentagram
    }
    return Graph({0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, es);
}

// ---- paths ------------------------------------------------------------------

struct Path {
    std::vector<int> verts;

    int length() const { return static_cast<int>(verts.size()) - 1; } // edge count
    int front() const { return verts.front(); }
    int back() const { return verts.back(); }
    bool contains(int v) const {
        return std::find(verts.begin(), verts.end(), v) != verts.end();
    }
    std::vector<int> interior() const {
        if (verts.size() <= 2) return {};
        return std::vector<int>(verts.begin() + 1, verts.end() - 1);
    }
};

inline bool is_path_of(const Graph& g, const Path& p) {
    if (p.verts.empty()) return false;
    std::vector<int> sorted = p.verts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (int v : p.verts)
        if (!g.has_vertex(v)) return false;
    for (size_t i = 0; i + 1 < p.verts.size(); ++i)
        if (!g.has_edge(p.verts[i], p.verts[i + 1])) return false;
    return true;
}

inline bool is_induced_path_of(const Graph& g, const Path& p) {
    if (!is_path_of(g, p)) return false;
    for (size_t i = 0; i < p.verts.size(); ++i)
        for (size_t j = i + 2; j < p.verts.size(); ++j)
            if (g.has_edge(p.verts[i], p.verts[j])) return false;
    return true;
}

// shortest path between u and v, empty verts if none
inline Path shortest_path(const Graph& g, int u, int v) {
    std::map<int, int> par;
    par[u] = u;
    std::vector<int> queue{u};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int x = queue[qi];
        if (x == v) break;
        for (int w : g.neighbors(x))
            if (!par.count(w)) {
                par[w] = x;
                queue.push_back(w);
            }
    }
    if (!par.count(v)) return {};
    Path p;
    for (int x = v; x != u; x = par[x]) p.verts.push_back(x);
    p.verts.push_back(u);
    std::reverse(p.verts.begin(), p.verts.end());
    return p;
}

// ---- bridges of a subgraph --------------------------------------------------

// Bridge of H in G: either an edge of G-E(H) with both ends in V(H) (trivial),
// or a component C of G-V(H) together with all edges from C to V(H).
// attachments = bridge vertices lying in V(H).
struct BridgeSubgraph {
    std::vector<int> verts;       // includes attachments
    std::vector<Edge> edges;
    std::vector<int> attachments; // sorted
    bool trivial = false;

    std::vector<int> inner() const { // verts minus attachments
        std::vector<int> out;
        for (int v : verts)
            if (!std::binary_search(attachments.begin(), attachments.end(), v))
                out.push_back(v);
        return out;
    }
};

inline std::vector<BridgeSubgraph> bridges(const Graph& g, const std::vector<int>& h_verts,
                                           const std::vector<Edge>& h_edges) {
    std::vector<int> hv = h_verts;
    std::sort(hv.begin(), hv.end());
    auto in_h = [&](int v) { return std::binary_search(hv.begin(), hv.end(), v); };
    std::vector<Edge> he = h_edges;
    std::sort(he.begin(), he.end());
    auto h_has = [&](Edge e) { return std::binary_search(he.begin(), he.end(), e); };

    std::vector<BridgeSubgraph> out;
    for (auto e : g.edges()) {
        if (in_h(e.first) && in_h(e.second) && !h_has(e)) {
            BridgeSubgraph b;
            b.verts = {e.first, e.second};
            b.edges = {e};
            b.attachments = {e.first, e.second};
            b.trivial = true;
            out.push_back(std::move(b));
        }
    }
    std::vector<int> rest;
    for (int v : g.vertices())
        if (!in_h(v)) rest.push_back(v);
    Graph outside = induced_subgraph(g, rest);
    for (auto& comp : components(outside)) {
        BridgeSubgraph b;
        std::vector<int> att;
        b.verts = comp;
        for (int v : comp) {
            for (int w : g.neighbors(v)) {
                if (in_h(w)) {
                    b.edges.push_back(mk_edge(v, w));
                    att.push_back(w);
                } else {
                    if (v < w) b.edges.push_back({v, w});
                }
            }
        }
        std::sort(att.begin(), att.end());
        att.erase(std::unique(att.begin(), att.end()), att.end());
        b.attachments = att;
        b.verts.insert(b.verts.end(), att.begin(), att.end());
        std::sort(b.verts.begin(), b.verts.end());
        std::sort(b.edges.begin(), b.edges.end());
        b.edges.erase(std::unique(b.edges.begin(), b.edges.end()), b.edges.end());
        out.push_back(std::move(b));
    }
    std::sort(out.begin(), out.end(), [](const BridgeSubgraph& a, const BridgeSubgraph& b) {
        if (a.trivial != b.trivial) return a.trivial > b.trivial;
        return a.verts < b.verts;
    });
    return out;
}

inline std::vector<BridgeSubgraph> bridges(const Graph& g, const std::vector<int>& h_verts) {
    return bridges(g, h_verts, {});
}

// ---- bitmask view for the exhaustive searches -------------------------------

// Index-space adjacency masks; requires order <= 64.
struct MaskView {
    int n = 0;
    std::vector<std::uint64_t> nbr; // nbr[i] = mask of neighbors of vertex index i
    const Graph* g = nullptr;

    explicit MaskView(const Graph& graph) : g(&graph) {
        n = graph.order();
        if (n > 64) throw std::invalid_argument("MaskView: more than 64 vertices");
        nbr.assign(n, 0);
        for (auto [u, v] : graph.edges()) {
            int a = graph.index_of(u), b = graph.index_of(v);
            nbr[a] |= 1ULL << b;
            nbr[b] |= 1ULL << a;
        }
    }

    std::uint64_t full() const { return n == 64 ? ~0ULL : (1ULL << n) - 1; }

    std::uint64_t neighborhood(std::uint64_t set) const { // N(set) \ set
        std::uint64_t out = 0, s = set;
        while (s) {
            int i = std::countr_zero(s);
            s &= s - 1;
            out |= nbr[i];
        }
        return out & ~set;
    }

    // is `set` connected in the graph restricted to `allowed`?
    bool connected_in(std::uint64_t set, std::uint64_t allowed) const {
        std::uint64_t s = set & allowed;
        if (s != set) return false;
        if (!set) return true;
        std::uint64_t seen = set & (-set); // lowest bit
        for (;;) {
            std::uint64_t grow = (neighborhood(seen) | seen) & set;
            if (grow == seen) break;
            seen = grow;
        }
        return seen == set;
    }

    // connected closure of seed within allowed
    std::uint64_t reach(std::uint64_t seed, std::uint64_t allowed) const {
        std::uint64_t seen = seed & allowed;
        for (;;) {
            std::uint64_t grow = (neighborhood(seen) & allowed) | seen;
            if (grow == seen) return seen;
            seen = grow;
        }
    }

    std::vector<int> to_vertices(std::uint64_t set) const {
        std::vector<int> out;
        while (set) {
            int i = std::countr_zero(set);
            set &= set - 1;
            out.push_back(g->vertices()[i]);
        }
        return out;
    }

    std::uint64_t to_mask(const std::vector<int>& vs) const {
        std::uint64_t m = 0;
        for (int v : vs) {
            int i = g->index_of(v);
            if (i < 0) throw std::invalid_argument("to_mask: unknown vertex");
            m |= 1ULL << i;
        }
        return m;
    }
};

} // namespace k2n
