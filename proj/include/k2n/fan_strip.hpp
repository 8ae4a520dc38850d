#pragma once
// Fans, strips, and augmentations. A fan is a cycle with every chord hung
// off one center vertex; a strip is a ladder of two boundary paths joined by
// chords with a restricted crossing pattern. Both attach to a core graph at
// their corners, and this header provides the builders, the searches that
// find them inside a host, and the peeling pipeline that recovers a
// presentation base + additions from a host.

#include "combinat.hpp"
#include "enumerate.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "minor.hpp"
#include "type_one.hpp"
#include "work.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace k2n {

// ---- fans ---------------------------------------------------------------------

// center + rim path; the cycle is center-rim-center and every chord joins the
// center to a rim interior vertex. length = chord count.
struct Fan {
    Graph graph;
    int center = -1;
    Path rim; // runs corner-to-corner
    int length = 0;

    std::array<int, 3> corners() const { return {center, rim.front(), rim.back()}; }
    bool nontrivial() const { return length >= 2; }
};

inline bool is_fan(const Fan& f, std::string* why = nullptr) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    if (!f.graph.has_vertex(f.center)) return fail("center not in the graph");
    if (f.rim.verts.size() < 3) return fail("rim needs at least three vertices");
    if (!is_path_of(f.graph, f.rim)) return fail("rim is not a path of the graph");
    if (f.rim.contains(f.center)) return fail("center lies on the rim");
    if (f.graph.order() != int(f.rim.verts.size()) + 1) return fail("stray vertex");
    if (!f.graph.has_edge(f.center, f.rim.front()) || !f.graph.has_edge(f.center, f.rim.back()))
        return fail("center misses a rim end");
    int chords = 0;
    for (auto [u, v] : f.graph.edges()) {
        if (u != f.center && v != f.center) {
            // must be a rim path edge
            auto it = std::find(f.rim.verts.begin(), f.rim.verts.end(), u);
            auto jt = std::find(f.rim.verts.begin(), f.rim.verts.end(), v);
            if (std::abs(int(it - jt)) != 1) return fail("edge off the rim path");
            continue;
        }
        int t = u == f.center ? v : u;
        if (t == f.rim.front() || t == f.rim.back()) continue;
        ++chords; // center to rim interior
    }
    if (chords < 1) return fail("no chords");
    if (chords != f.length) return fail("stored length is off");
    ChordDiagram d;
    d.cycle.push_back(f.center);
    d.cycle.insert(d.cycle.end(), f.rim.verts.begin(), f.rim.verts.end());
    for (int t : f.rim.interior())
        if (f.graph.has_edge(f.center, t)) d.chords.push_back(mk_edge(f.center, t));
    if (!validate_diagram(d, why)) return false;
    if (!is_type_one(d)) return fail("crossing chords break the pattern");
    if (why) why->clear();
    return true;
}

// canonical fan: cycle 0,1,...,length+2 with chords 0-i for i = 2..length+1.
// subdivision[j] extra vertices go into the j-th rim edge.
inline Fan make_fan(int length, const std::vector<int>& subdivision = {}) {
    if (length < 1) throw std::invalid_argument("make_fan: length must be at least 1");
    std::vector<int> sub = subdivision.empty() ? std::vector<int>(size_t(length) + 1, 0) : subdivision;
    if (int(sub.size()) != length + 1)
        throw std::invalid_argument("make_fan: need one subdivision count per rim edge");
    for (int s : sub)
        if (s < 0) throw std::invalid_argument("make_fan: negative subdivision count");

    int fresh = length + 3;
    std::vector<int> rim{1};
    for (int j = 0; j <= length; ++j) {
        for (int s = 0; s < sub[size_t(j)]; ++s) rim.push_back(fresh++);
        rim.push_back(j + 2);
    }
    std::vector<Edge> es;
    for (size_t i = 0; i + 1 < rim.size(); ++i) es.push_back(mk_edge(rim[i], rim[i + 1]));
    es.push_back(mk_edge(0, rim.front()));
    es.push_back(mk_edge(0, rim.back()));
    for (int t = 2; t <= length + 1; ++t) es.push_back(mk_edge(0, t));
    std::vector<int> vs = rim;
    vs.push_back(0);
    Fan f{Graph(vs, es), 0, Path{rim}, length};
    std::string why;
    if (!is_fan(f, &why)) throw std::logic_error("make_fan built a bad fan: " + why);
    return f;
}

// ---- strips -------------------------------------------------------------------

// boundary (p1, p2; a, b, c, d): p1 runs a..d, p2 runs b..c, the cycle closes
// through the ab and dc slots (which may be absent from the graph), and every
// other edge is a chord between the two paths.
struct Strip {
    Graph graph;
    Path p1, p2;
    int length = 0; // convenience copy; always recomputed by strip_length

    std::array<int, 4> corners() const { return {p1.front(), p2.front(), p2.back(), p1.back()}; }
};

inline bool is_strip(const Strip& s, std::string* why = nullptr) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    if (s.p1.verts.size() < 2 || s.p2.verts.size() < 2) return fail("boundary path too short");
    if (!is_path_of(s.graph, s.p1) || !is_path_of(s.graph, s.p2))
        return fail("boundary is not a pair of paths");
    for (int v : s.p1.verts)
        if (s.p2.contains(v)) return fail("boundary paths overlap");
    if (s.graph.order() != int(s.p1.verts.size() + s.p2.verts.size())) return fail("stray vertex");
    std::map<int, int> pos1, pos2;
    for (int i = 0; i < int(s.p1.verts.size()); ++i) pos1[s.p1.verts[size_t(i)]] = i;
    for (int i = 0; i < int(s.p2.verts.size()); ++i) pos2[s.p2.verts[size_t(i)]] = i;
    for (auto [u, v] : s.graph.edges()) {
        bool u1 = pos1.count(u), v1 = pos1.count(v);
        if (u1 == v1) { // both ends on the same path
            auto& pos = u1 ? pos1 : pos2;
            if (std::abs(pos.at(u) - pos.at(v)) != 1) return fail("edge inside a boundary path");
        }
    }
    for (int v : s.graph.vertices())
        if (s.graph.degree(v) < 2) return fail("degree below two");
    ChordDiagram d;
    d.cycle = s.p1.verts;
    d.cycle.insert(d.cycle.end(), s.p2.verts.rbegin(), s.p2.verts.rend());
    Edge ab = mk_edge(s.p1.front(), s.p2.front()), dc = mk_edge(s.p1.back(), s.p2.back());
    for (auto [u, v] : s.graph.edges()) {
        if (pos1.count(u) == pos1.count(v)) continue;
        Edge e = mk_edge(u, v);
        if (e == ab || e == dc) continue;
        d.chords.push_back(e);
    }
    if (!validate_diagram(d, why)) return false;
    if (!is_type_one(d)) return fail("crossing chords break the pattern");
    if (why) why->clear();
    return true;
}

// chord endpoints as (index on p1, index on p2); the ab and dc slots are
// cycle edges, not chords.
inline std::vector<std::pair<int, int>> strip_chord_positions(const Strip& s) {
    std::map<int, int> pos1, pos2;
    for (int i = 0; i < int(s.p1.verts.size()); ++i) pos1[s.p1.verts[size_t(i)]] = i;
    for (int i = 0; i < int(s.p2.verts.size()); ++i) pos2[s.p2.verts[size_t(i)]] = i;
    int l1 = int(s.p1.verts.size()) - 1, l2 = int(s.p2.verts.size()) - 1;
    std::vector<std::pair<int, int>> out;
    for (auto [u, v] : s.graph.edges()) {
        if (pos1.count(u) && pos2.count(v)) out.push_back({pos1.at(u), pos2.at(v)});
        else if (pos1.count(v) && pos2.count(u)) out.push_back({pos1.at(v), pos2.at(u)});
        else continue;
        auto [i, j] = out.back();
        if ((i == 0 && j == 0) || (i == l1 && j == l2)) out.pop_back();
    }
    std::sort(out.begin(), out.end());
    return out;
}

// maximum set of chords that pairwise neither cross nor share an end: a
// longest chain strictly increasing in both path positions.
inline int strip_length(const Strip& s) {
    std::string why;
    if (!is_strip(s, &why)) throw std::invalid_argument("strip_length: " + why);
    auto ch = strip_chord_positions(s);
    int n = int(ch.size()), best = 0;
    std::vector<int> dp(size_t(n), 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j)
            if (ch[size_t(j)].first < ch[size_t(i)].first && ch[size_t(j)].second < ch[size_t(i)].second)
                dp[size_t(i)] = std::max(dp[size_t(i)], dp[size_t(j)] + 1);
        best = std::max(best, dp[size_t(i)]);
    }
    return best;
}

inline Strip strip_from_parts(const std::vector<int>& p1, const std::vector<int>& p2,
                              const std::vector<Edge>& edges) {
    std::vector<int> vs = p1;
    vs.insert(vs.end(), p2.begin(), p2.end());
    Strip s{Graph(vs, edges), Path{p1}, Path{p2}, 0};
    std::string why;
    if (!is_strip(s, &why)) throw std::invalid_argument("strip_from_parts: " + why);
    s.length = strip_length(s);
    return s;
}

// layered ladder: layers {2i, 2i+1} with consecutive layers completely
// joined; p1 takes the even ids, p2 the odd ones. Both boundary slots are
// absent, the 2k diagonals are the chords.
inline Strip regular_strip(int pieces) {
    if (pieces < 1) throw std::invalid_argument("regular_strip: pieces must be at least 1");
    std::vector<int> p1, p2;
    std::vector<Edge> es;
    for (int i = 0; i <= pieces; ++i) {
        p1.push_back(2 * i);
        p2.push_back(2 * i + 1);
    }
    for (int i = 0; i < pieces; ++i) {
        es.push_back(mk_edge(2 * i, 2 * i + 2));
        es.push_back(mk_edge(2 * i, 2 * i + 3));
        es.push_back(mk_edge(2 * i + 1, 2 * i + 2));
        es.push_back(mk_edge(2 * i + 1, 2 * i + 3));
    }
    return strip_from_parts(p1, p2, es);
}

// ---- host pieces --------------------------------------------------------------

inline bool is_subgraph(const Graph& host, const Graph& piece) {
    for (int v : piece.vertices())
        if (!host.has_vertex(v)) return false;
    for (auto [u, v] : piece.edges())
        if (!host.has_edge(u, v)) return false;
    return true;
}

// every host edge at a non-corner piece vertex must lie inside the piece
inline bool closed_in_host(const Graph& host, const Graph& piece, const std::vector<int>& corners) {
    for (int v : piece.vertices()) {
        if (std::count(corners.begin(), corners.end(), v)) continue;
        for (int u : host.neighbors(v))
            if (!piece.has_edge(u, v)) return false;
    }
    return true;
}

inline std::vector<int> interior_vertices(const Graph& piece, const std::vector<int>& corners) {
    std::vector<int> out;
    for (int v : piece.vertices())
        if (!std::count(corners.begin(), corners.end(), v)) out.push_back(v);
    return out;
}

inline bool is_fan_of(const Graph& host, const Fan& f, std::string* why = nullptr) {
    if (!is_fan(f, why)) return false;
    auto c = f.corners();
    if (!is_subgraph(host, f.graph) || !closed_in_host(host, f.graph, {c.begin(), c.end()})) {
        if (why) *why = "fan is not an attached piece of the host";
        return false;
    }
    return true;
}

inline bool is_strip_of(const Graph& host, const Strip& s, std::string* why = nullptr) {
    if (!is_strip(s, why)) return false;
    auto c = s.corners();
    if (!is_subgraph(host, s.graph) || !closed_in_host(host, s.graph, {c.begin(), c.end()})) {
        if (why) *why = "strip is not an attached piece of the host";
        return false;
    }
    return true;
}

// ---- augmentations ------------------------------------------------------------

struct FanAddition {
    Fan fan;
    std::array<int, 3> to; // images of corners(): center, rim front, rim back
};

struct StripAddition {
    Strip strip;
    std::array<int, 4> to; // images of corners(): a, b, c, d
};

struct AugmentationPresentation {
    Graph base;
    std::vector<FanAddition> fans;
    std::vector<StripAddition> strips;
};

namespace detail {

// corner kinds for the sharing rule: two corners may land on one base vertex
// only when one is a fan center and the other is a fan center or strip corner
enum class CornerKind { fan_center, fan_end, strip_corner };

inline void validate_presentation(const AugmentationPresentation& p) {
    std::map<int, std::vector<CornerKind>> at;
    auto place = [&](int base_v, CornerKind k) {
        if (!p.base.has_vertex(base_v))
            throw std::invalid_argument("augment: corner mapped outside the base");
        at[base_v].push_back(k);
    };
    for (const FanAddition& fa : p.fans) {
        std::string why;
        if (!is_fan(fa.fan, &why)) throw std::invalid_argument("augment: bad fan: " + why);
        if (fa.to[0] == fa.to[1] || fa.to[0] == fa.to[2] || fa.to[1] == fa.to[2])
            throw std::invalid_argument("augment: fan corners must map to distinct vertices");
        place(fa.to[0], CornerKind::fan_center);
        place(fa.to[1], CornerKind::fan_end);
        place(fa.to[2], CornerKind::fan_end);
    }
    for (const StripAddition& sa : p.strips) {
        std::string why;
        if (!is_strip(sa.strip, &why)) throw std::invalid_argument("augment: bad strip: " + why);
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (sa.to[size_t(i)] == sa.to[size_t(j)])
                    throw std::invalid_argument("augment: strip corners must map to distinct vertices");
        for (int v : sa.to) place(v, CornerKind::strip_corner);
    }
    for (const auto& [v, kinds] : at) {
        if (kinds.size() < 2) continue;
        int ends = 0, strips = 0;
        for (CornerKind k : kinds) {
            ends += k == CornerKind::fan_end;
            strips += k == CornerKind::strip_corner;
        }
        if (ends > 0 || strips > 1)
            throw std::invalid_argument("augment: shared vertex needs a fan center on one side");
    }
}

} // namespace detail

inline Graph augment(const AugmentationPresentation& p) {
    detail::validate_presentation(p);
    int fresh = 0;
    for (int v : p.base.vertices()) fresh = std::max(fresh, v + 1);
    std::vector<int> vs = p.base.vertices();
    std::vector<Edge> es = p.base.edges();
    auto add_piece = [&](const Graph& g, const std::vector<int>& corners, const std::vector<int>& to) {
        std::map<int, int> img;
        for (size_t i = 0; i < corners.size(); ++i) img[corners[i]] = to[i];
        for (int v : g.vertices()) {
            if (img.count(v)) continue;
            img[v] = fresh++;
            vs.push_back(img[v]);
        }
        for (auto [u, v] : g.edges()) es.push_back(mk_edge(img.at(u), img.at(v)));
    };
    for (const FanAddition& fa : p.fans) {
        auto c = fa.fan.corners();
        add_piece(fa.fan.graph, {c.begin(), c.end()}, {fa.to.begin(), fa.to.end()});
    }
    for (const StripAddition& sa : p.strips) {
        auto c = sa.strip.corners();
        add_piece(sa.strip.graph, {c.begin(), c.end()}, {sa.to.begin(), sa.to.end()});
    }
    return Graph(std::move(vs), es);
}

inline bool in_class_A(const AugmentationPresentation& p, int m) {
    try {
        detail::validate_presentation(p);
    } catch (const std::invalid_argument&) {
        return false;
    }
    return p.base.order() <= m;
}

// strips only, all corners identified with pairwise distinct vertices
inline bool in_class_A_prime(const AugmentationPresentation& p, int m) {
    if (!in_class_A(p, m) || !p.fans.empty()) return false;
    std::vector<int> all;
    for (const StripAddition& sa : p.strips) all.insert(all.end(), sa.to.begin(), sa.to.end());
    std::sort(all.begin(), all.end());
    return std::adjacent_find(all.begin(), all.end()) == all.end();
}

// complete graph on 4a vertices plus a disjoint regular strips of length b,
// strip j attached at the vertex block 4j..4j+3
inline Graph make_J(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("make_J: both parameters must be at least 1");
    AugmentationPresentation p{complete_graph(4 * a), {}, {}};
    for (int j = 0; j < a; ++j)
        p.strips.push_back({regular_strip(b), {4 * j, 4 * j + 1, 4 * j + 3, 4 * j + 2}});
    return augment(p);
}

// ---- capture searches ----------------------------------------------------------

// shortest subpath holding m consecutive neighbors of x such that no other
// vertex outside the path attaches to it
inline std::optional<Path> neighbor_run(const Graph& g, const Path& p, int x, int m) {
    if (m < 1) throw std::invalid_argument("neighbor_run: m must be positive");
    if (!g.has_vertex(x) || p.contains(x) || !is_induced_path_of(g, p))
        throw std::invalid_argument("neighbor_run: need an induced path avoiding x");
    std::vector<int> hits;
    for (int i = 0; i < int(p.verts.size()); ++i)
        if (g.has_edge(x, p.verts[size_t(i)])) hits.push_back(i);
    for (size_t w = 0; w + size_t(m) <= hits.size(); ++w) {
        int lo = hits[w], hi = hits[w + size_t(m) - 1];
        bool clean = true;
        for (int i = lo; i <= hi && clean; ++i)
            for (int u : g.neighbors(p.verts[size_t(i)]))
                if (u != x && !p.contains(u)) {
                    clean = false;
                    break;
                }
        if (clean)
            return Path{std::vector<int>(p.verts.begin() + lo, p.verts.begin() + hi + 1)};
    }
    return std::nullopt;
}

struct Capture {
    Path pstar, qstar;
    std::optional<Fan> fan;
    std::optional<Strip> strip; // exactly one of the two is engaged
};

namespace detail {

inline std::vector<int> slice(const std::vector<int>& v, int lo, int hi) {
    return std::vector<int>(v.begin() + lo, v.begin() + hi + 1);
}

} // namespace detail

// exhaustive scan over subpath pairs: interior vertices may only attach to
// the pair, and the pair plus the edges between them must form a fan or a
// strip of length >= m
inline std::optional<Capture> capture_between_paths(const Graph& g, const Path& p, const Path& q,
                                                    int m, Budget* budget = nullptr) {
    Budget local;
    Budget& bud = budget_or(budget, local);
    if (m < 1) throw std::invalid_argument("capture_between_paths: m must be positive");
    if (!is_induced_path_of(g, p) || !is_induced_path_of(g, q))
        throw std::invalid_argument("capture_between_paths: need two induced paths");
    for (int v : p.verts)
        if (q.contains(v)) throw std::invalid_argument("capture_between_paths: paths overlap");
    if (int(p.verts.size() + q.verts.size()) != g.order())
        throw std::invalid_argument("capture_between_paths: paths must cover the graph");

    auto confined = [&](const std::vector<int>& ps, const std::vector<int>& qs) {
        std::set<int> in(ps.begin(), ps.end());
        in.insert(qs.begin(), qs.end());
        auto ok = [&](const std::vector<int>& side) {
            for (size_t i = 1; i + 1 < side.size(); ++i)
                for (int u : g.neighbors(side[i]))
                    if (!in.count(u)) return false;
            return true;
        };
        return ok(ps) && ok(qs);
    };
    auto piece_edges = [&](const std::vector<int>& ps, const std::vector<int>& qs) {
        std::vector<Edge> es;
        for (size_t i = 0; i + 1 < ps.size(); ++i) es.push_back(mk_edge(ps[i], ps[i + 1]));
        for (size_t i = 0; i + 1 < qs.size(); ++i) es.push_back(mk_edge(qs[i], qs[i + 1]));
        for (int u : ps)
            for (int v : qs)
                if (g.has_edge(u, v)) es.push_back(mk_edge(u, v));
        return es;
    };
    auto try_fan = [&](const std::vector<int>& rim, int center) -> std::optional<Fan> {
        if (rim.size() < 3) return std::nullopt;
        std::vector<int> vs = rim;
        vs.push_back(center);
        Fan f{Graph(vs, piece_edges(rim, {center})), center, Path{rim}, 0};
        for (int t : f.rim.interior()) f.length += g.has_edge(center, t) ? 1 : 0;
        if (!is_fan(f) || f.length < m) return std::nullopt;
        return f;
    };

    int np = int(p.verts.size()), nq = int(q.verts.size());
    for (int i1 = 0; i1 < np; ++i1)
        for (int i2 = i1; i2 < np; ++i2)
            for (int j1 = 0; j1 < nq; ++j1)
                for (int j2 = j1; j2 < nq; ++j2) {
                    bud.spend();
                    auto ps = detail::slice(p.verts, i1, i2);
                    auto qs = detail::slice(q.verts, j1, j2);
                    if (!confined(ps, qs)) continue;
                    if (qs.size() == 1 && ps.size() >= 3) {
                        if (auto f = try_fan(ps, qs[0]))
                            return Capture{Path{ps}, Path{qs}, f, std::nullopt};
                    } else if (ps.size() == 1 && qs.size() >= 3) {
                        if (auto f = try_fan(qs, ps[0]))
                            return Capture{Path{ps}, Path{qs}, f, std::nullopt};
                    } else if (ps.size() >= 2 && qs.size() >= 2) {
                        for (int orient = 0; orient < 2; ++orient) {
                            std::vector<int> qo = qs;
                            if (orient) std::reverse(qo.begin(), qo.end());
                            std::vector<int> vs = ps;
                            vs.insert(vs.end(), qo.begin(), qo.end());
                            Strip s{Graph(vs, piece_edges(ps, qo)), Path{ps}, Path{qo}, 0};
                            if (!is_strip(s)) continue;
                            s.length = strip_length(s);
                            if (s.length < m) continue;
                            return Capture{Path{ps}, Path{qo}, std::nullopt, s};
                        }
                    }
                }
    return std::nullopt;
}

// longest path outside H whose vertices all have degree exactly two once H
// is removed; qualifies when its length reaches 2m
inline std::optional<Path> degree2_path_near(const Graph& g, const std::vector<int>& h_verts, int m) {
    if (m < 1) throw std::invalid_argument("degree2_path_near: m must be positive");
    if (!is_internally_3connected(g))
        throw std::invalid_argument("degree2_path_near: host must be internally 3-connected");
    if (h_verts.empty()) throw std::invalid_argument("degree2_path_near: empty subgraph");
    for (int v : h_verts)
        if (!g.has_vertex(v)) throw std::invalid_argument("degree2_path_near: subgraph off the host");
    if (!is_connected(induced_subgraph(g, h_verts)))
        throw std::invalid_argument("degree2_path_near: subgraph must be connected");
    Graph k = delete_vertices(g, h_verts);
    if (k.order() == 0 || !is_connected(k))
        throw std::invalid_argument("degree2_path_near: complement must be connected");

    Graph kd = induced_subgraph(k, degree2_vertices(k));
    for (const auto& comp : components(kd)) {
        if (int(comp.size()) - 1 < 2 * m) continue;
        int start = -1;
        for (int v : comp)
            if (kd.degree(v) <= 1) {
                start = v;
                break;
            }
        bool cycle = start < 0;
        if (cycle) start = comp[0];
        std::vector<int> walk{start};
        int prev = -1, cur = start;
        while (int(walk.size()) < int(comp.size())) {
            int next = -1;
            for (int u : kd.neighbors(cur))
                if (u != prev) {
                    next = u;
                    break;
                }
            if (next < 0) break;
            prev = cur;
            cur = next;
            walk.push_back(cur);
        }
        if (int(walk.size()) == int(comp.size()) && int(walk.size()) - 1 >= 2 * m)
            return Path{walk};
        (void)cycle;
    }
    return std::nullopt;
}

namespace detail {

inline bool nonsep_dfs(const Graph& g, int m, std::vector<int>& cur, std::set<int>& used,
                       Path& out, Budget& bud) {
    bud.spend();
    if (int(cur.size()) - 1 >= m && is_connected(delete_vertices(g, cur))) {
        out = Path{cur};
        return true;
    }
    for (int v : g.neighbors(cur.back())) {
        if (used.count(v)) continue;
        bool chord = false; // induced: the new vertex may only touch the tail
        for (size_t i = 0; i + 1 < cur.size() && !chord; ++i)
            chord = g.has_edge(cur[i], v);
        if (chord) continue;
        cur.push_back(v);
        used.insert(v);
        if (nonsep_dfs(g, m, cur, used, out, bud)) return true;
        used.erase(v);
        cur.pop_back();
    }
    return false;
}

} // namespace detail

// induced path of length >= m with connected complement: distant endpoint
// pairs are tried through the rerouting search first, then an exhaustive
// scan settles existence
inline std::optional<Path> long_nonseparating_path(const Graph& g, int m, Budget* budget = nullptr) {
    Budget local;
    Budget& bud = budget_or(budget, local);
    if (m < 0) throw std::invalid_argument("long_nonseparating_path: negative m");
    if (g.order() == 0) return std::nullopt;
    if (m == 0) return Path{{g.vertices().front()}};
    if (is_subdivision_of_3connected(g)) {
        std::vector<std::tuple<int, int, int>> pairs; // (-dist, x, y)
        for (int x : g.vertices())
            for (int y : g.vertices()) {
                if (x >= y) continue;
                Path sp = shortest_path(g, x, y);
                if (!sp.verts.empty()) pairs.push_back({-sp.length(), x, y});
            }
        std::sort(pairs.begin(), pairs.end());
        int tried = 0;
        for (auto [negd, x, y] : pairs) {
            if (-negd < m || tried++ > g.order()) break;
            Path p = nonseparating_induced_path(g, x, y, &bud);
            if (p.length() >= m) return p;
        }
    }
    for (int start : g.vertices()) {
        std::vector<int> cur{start};
        std::set<int> used{start};
        Path out;
        if (detail::nonsep_dfs(g, m, cur, used, out, bud)) return out;
    }
    return std::nullopt;
}

// ---- fan enumeration ------------------------------------------------------------

namespace detail {

inline std::vector<int> cycle_order(const Graph& c) {
    std::vector<int> out{c.vertices().front()};
    out.push_back(std::min(c.neighbors(out[0])[0], c.neighbors(out[0])[1]));
    while (int(out.size()) < c.order()) {
        int cur = out.back(), prev = out[out.size() - 2];
        for (int u : c.neighbors(cur))
            if (u != prev) {
                out.push_back(u);
                break;
            }
    }
    return out;
}

inline std::optional<Fan> fan_from_seq(const Graph& g, int z, const std::vector<int>& seq) {
    std::vector<int> marks;
    for (int i = 0; i < int(seq.size()); ++i)
        if (g.has_edge(z, seq[size_t(i)])) marks.push_back(i);
    if (int(marks.size()) < 3) return std::nullopt;
    std::vector<int> rim(seq.begin() + marks.front(), seq.begin() + marks.back() + 1);
    std::vector<int> vs = rim;
    vs.push_back(z);
    std::vector<Edge> es;
    for (size_t i = 0; i + 1 < rim.size(); ++i) es.push_back(mk_edge(rim[i], rim[i + 1]));
    int chords = 0;
    for (int v : rim) {
        if (!g.has_edge(z, v)) continue;
        es.push_back(mk_edge(z, v));
        chords += v != rim.front() && v != rim.back();
    }
    return Fan{Graph(vs, es), z, Path{rim}, chords};
}

} // namespace detail

// all maximal fans of the host: the rim interior is forced onto a chain of
// degree-2 vertices of G minus the center, so each chain yields at most one
// maximal fan per center, plus the rim-arc family when G minus the center is
// a bare cycle
inline std::vector<Fan> find_maximal_fans(const Graph& g, Budget* budget = nullptr) {
    Budget local;
    Budget& bud = budget_or(budget, local);
    std::vector<Fan> all;
    auto add = [&](std::optional<Fan> f) {
        if (f) all.push_back(std::move(*f));
    };
    for (int z : g.vertices()) {
        bud.spend();
        Graph k = delete_vertex(g, z);
        if (is_cycle(k)) {
            auto cyc = detail::cycle_order(k);
            int n = int(cyc.size());
            std::vector<int> marks;
            for (int i = 0; i < n; ++i)
                if (g.has_edge(z, cyc[size_t(i)])) marks.push_back(i);
            int t = int(marks.size());
            if (t < 3) continue;
            for (int i = 0; i < t; ++i) {
                int from = marks[size_t((i + 1) % t)], to = marks[size_t(i)];
                std::vector<int> rim;
                for (int q = from; ; q = (q + 1) % n) {
                    rim.push_back(cyc[size_t(q)]);
                    if (q == to) break;
                }
                add(detail::fan_from_seq(g, z, rim));
            }
            continue;
        }
        Graph kd = induced_subgraph(k, degree2_vertices(k));
        for (const auto& comp : components(kd)) {
            bud.spend();
            int start = -1;
            for (int v : comp)
                if (kd.degree(v) <= 1) {
                    start = v;
                    break;
                }
            if (start < 0) continue; // a chain cycle only happens when k is one
            std::vector<int> chain{start};
            int prev = -1, cur = start;
            while (int(chain.size()) < int(comp.size())) {
                int next = -1;
                for (int u : kd.neighbors(cur))
                    if (u != prev) {
                        next = u;
                        break;
                    }
                prev = cur;
                cur = next;
                chain.push_back(cur);
            }
            auto outside = [&](int end, int inner) {
                for (int u : k.neighbors(end))
                    if (u != inner) return u;
                return -1;
            };
            int w1, w2;
            if (chain.size() == 1) {
                w1 = k.neighbors(chain[0])[0];
                w2 = k.neighbors(chain[0])[1];
            } else {
                w1 = outside(chain.front(), chain[1]);
                w2 = outside(chain.back(), chain[chain.size() - 2]);
            }
            if (w1 != w2) {
                std::vector<int> seq{w1};
                seq.insert(seq.end(), chain.begin(), chain.end());
                seq.push_back(w2);
                add(detail::fan_from_seq(g, z, seq));
            } else {
                std::vector<int> left{w1}, right = chain;
                left.insert(left.end(), chain.begin(), chain.end());
                right.push_back(w2);
                add(detail::fan_from_seq(g, z, left));
                add(detail::fan_from_seq(g, z, right));
            }
        }
    }
    // dedup presentations of one subgraph (first center in id order wins)
    std::vector<Fan> out;
    std::set<std::pair<std::vector<int>, std::vector<Edge>>> seen;
    std::sort(all.begin(), all.end(), [](const Fan& a, const Fan& b) {
        return std::tie(a.center, a.rim.verts) < std::tie(b.center, b.rim.verts);
    });
    for (Fan& f : all)
        if (seen.insert({f.graph.vertices(), f.graph.edges()}).second) out.push_back(std::move(f));
    // keep only subgraph-maximal fans
    std::vector<Fan> kept;
    for (size_t i = 0; i < out.size(); ++i) {
        bool covered = false;
        for (size_t j = 0; j < out.size() && !covered; ++j) {
            if (i == j) continue;
            covered = is_subgraph(out[j].graph, out[i].graph) &&
                      !(out[i].graph == out[j].graph);
        }
        if (!covered) kept.push_back(std::move(out[i]));
    }
    for (const Fan& f : kept) {
        std::string why;
        if (!is_fan_of(g, f, &why)) throw std::logic_error("find_maximal_fans: " + why);
    }
    return kept;
}

// ---- strip enumeration -----------------------------------------------------------

namespace detail {

struct StripSearch {
    const Graph& g;
    int min_length;
    Budget& bud;
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    std::vector<Strip> found;

    static bool in(const std::vector<int>& v, int x) {
        return std::find(v.begin(), v.end(), x) != v.end();
    }

    // chords between settled interiors must pairwise align or form a unit
    // cross, and each may cross at most one other
    bool chord_layout_ok(const std::vector<int>& a, const std::vector<int>& b) const {
        std::map<int, int> bp;
        for (int j = 1; j + 1 < int(b.size()); ++j) bp[b[size_t(j)]] = j;
        std::vector<std::pair<int, int>> ch;
        for (int i = 1; i + 1 < int(a.size()); ++i)
            for (int u : g.neighbors(a[size_t(i)])) {
                auto it = bp.find(u);
                if (it != bp.end()) ch.push_back({i, it->second});
            }
        std::vector<int> crossings(ch.size(), 0);
        for (size_t x = 0; x < ch.size(); ++x)
            for (size_t y = x + 1; y < ch.size(); ++y) {
                long di = ch[x].first - ch[y].first, dj = ch[x].second - ch[y].second;
                if (di * dj >= 0) continue;
                if (std::abs(di) != 1 || std::abs(dj) != 1) return false;
                if (++crossings[x] > 1 || ++crossings[y] > 1) return false;
            }
        return true;
    }

    void try_stop(const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<Edge> forced;
        std::vector<Edge> slots;
        for (size_t i = 0; i + 1 < a.size(); ++i) forced.push_back(mk_edge(a[i], a[i + 1]));
        for (size_t i = 0; i + 1 < b.size(); ++i) forced.push_back(mk_edge(b[i], b[i + 1]));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) {
                if (!g.has_edge(a[i], b[j])) continue;
                bool corner_pair = (i == 0 || i + 1 == a.size()) && (j == 0 || j + 1 == b.size());
                (corner_pair ? slots : forced).push_back(mk_edge(a[i], b[j]));
            }
        std::vector<int> vs = a;
        vs.insert(vs.end(), b.begin(), b.end());
        std::vector<int> masks(size_t(1) << slots.size());
        for (size_t i = 0; i < masks.size(); ++i) masks[i] = int(i);
        std::sort(masks.begin(), masks.end(), [](int x, int y) {
            int px = std::popcount(unsigned(x)), py = std::popcount(unsigned(y));
            return px != py ? px < py : x < y;
        });
        for (int drop : masks) {
            std::vector<Edge> es = forced;
            for (size_t i = 0; i < slots.size(); ++i)
                if (!((drop >> i) & 1)) es.push_back(slots[i]);
            Strip s{Graph(vs, es), Path{a}, Path{b}, 0};
            if (!is_strip(s)) continue;
            auto cs = s.corners();
            if (!closed_in_host(g, s.graph, {cs.begin(), cs.end()})) continue;
            // an end whose corner out-ranks a degree-2 second vertex belongs
            // to the shorter presentation found elsewhere
            auto bad_end = [&](const std::vector<int>& path, bool front) {
                int v = front ? path.front() : path.back();
                int u = front ? path[1] : path[path.size() - 2];
                return g.degree(u) == 2 && g.degree(v) > 2;
            };
            if (bad_end(a, true) || bad_end(a, false) || bad_end(b, true) || bad_end(b, false))
                return;
            s.length = strip_length(s);
            if (s.length < min_length) continue;
            found.push_back(std::move(s));
            return;
        }
    }

    bool close_ok(const std::vector<int>& path, const std::vector<int>& other, int v) {
        int t = path.back();
        int prev = path[path.size() - 2];
        for (int u : g.neighbors(t)) {
            if (u == prev || u == v) continue;
            if (in(path, u)) return false; // same-side chords never legalize
            (void)other;                   // other-side and unplaced stay possible
        }
        return true;
    }

    void run(std::vector<int>& a, std::vector<int>& b) {
        bud.spend();
        if (!seen.insert({a, b}).second) return;
        if (!chord_layout_ok(a, b)) return;
        if (a.size() >= 2 && b.size() >= 2) try_stop(a, b);
        for (int side = 0; side < 2; ++side) {
            auto& path = side ? b : a;
            auto& other = side ? a : b;
            std::vector<int> nbrs = g.neighbors(path.back());
            for (int v : nbrs) {
                if (in(a, v) || in(b, v)) continue;
                if (path.size() >= 2 && !close_ok(path, other, v)) continue;
                path.push_back(v);
                run(a, b);
                path.pop_back();
            }
        }
    }
};

} // namespace detail

// all maximal strips of the host with at least the requested length, by
// frontier growth from every corner seed pair
inline std::vector<Strip> find_maximal_strips(const Graph& g, int min_length,
                                              Budget* budget = nullptr) {
    Budget local;
    Budget& bud = budget_or(budget, local);
    detail::StripSearch search{g, std::max(min_length, 0), bud, {}, {}};
    for (int a0 : g.vertices())
        for (int b0 : g.vertices()) {
            if (a0 >= b0) continue;
            std::vector<int> a{a0}, b{b0};
            search.run(a, b);
        }
    // one strip per underlying subgraph: boundary re-presentations collapse
    // onto the longest one, ties broken by the least boundary form
    auto bkey = [](const Strip& s) {
        std::vector<int> r1 = s.p1.verts, r2 = s.p2.verts;
        std::reverse(r1.begin(), r1.end());
        std::reverse(r2.begin(), r2.end());
        std::vector<std::pair<std::vector<int>, std::vector<int>>> forms{
            {s.p1.verts, s.p2.verts}, {r1, r2}, {s.p2.verts, s.p1.verts}, {r2, r1}};
        return *std::min_element(forms.begin(), forms.end());
    };
    auto gkey = [](const Strip& s) { return std::pair(s.graph.vertices(), s.graph.edges()); };
    std::sort(search.found.begin(), search.found.end(), [&](const Strip& x, const Strip& y) {
        auto gx = gkey(x), gy = gkey(y);
        if (gx != gy) return gx < gy;
        if (x.length != y.length) return x.length > y.length;
        return bkey(x) < bkey(y);
    });
    std::vector<Strip> uniq;
    for (Strip& s : search.found)
        if (uniq.empty() || gkey(uniq.back()) != gkey(s)) uniq.push_back(std::move(s));
    std::vector<char> covered(uniq.size(), 0);
    for (size_t i = 0; i < uniq.size(); ++i)
        for (size_t j = 0; j < uniq.size() && !covered[i]; ++j)
            covered[i] = i != j && is_subgraph(uniq[j].graph, uniq[i].graph);
    std::vector<Strip> kept;
    for (size_t i = 0; i < uniq.size(); ++i)
        if (!covered[i]) kept.push_back(std::move(uniq[i]));
    std::sort(kept.begin(), kept.end(), [&](const Strip& x, const Strip& y) { return bkey(x) < bkey(y); });
    return kept;
}

// ---- pairwise interaction --------------------------------------------------------

enum class Interaction { almost_disjoint, embedded, agrees, same_center, violation };

inline const char* interaction_name(Interaction i) {
    switch (i) {
    case Interaction::almost_disjoint: return "almost-disjoint";
    case Interaction::embedded: return "embedded";
    case Interaction::agrees: return "agrees";
    case Interaction::same_center: return "same-center";
    default: return "violation";
    }
}

using HostPiece = std::variant<Fan, Strip>;

inline const Graph& piece_graph(const HostPiece& p) {
    if (auto* f = std::get_if<Fan>(&p)) return f->graph;
    return std::get<Strip>(p).graph;
}

inline std::vector<int> piece_corners(const HostPiece& p) {
    if (auto* f = std::get_if<Fan>(&p)) {
        auto c = f->corners();
        return {c.begin(), c.end()};
    }
    auto c = std::get<Strip>(p).corners();
    return {c.begin(), c.end()};
}

namespace detail {

inline bool contiguous_in(const std::vector<int>& sub, const std::vector<int>& full) {
    if (sub.size() > full.size()) return false;
    for (size_t at = 0; at + sub.size() <= full.size(); ++at)
        if (std::equal(sub.begin(), sub.end(), full.begin() + at)) return true;
    return false;
}

inline bool fan_embedded_in(const Fan& f, const Strip& s) {
    if (!is_subgraph(s.graph, f.graph)) return false;
    std::vector<int> rim = f.rim.verts, rev = rim;
    std::reverse(rev.begin(), rev.end());
    auto on = [&](const Path& p) { return contiguous_in(rim, p.verts) || contiguous_in(rev, p.verts); };
    return (on(s.p1) && s.p2.contains(f.center)) || (on(s.p2) && s.p1.contains(f.center));
}

inline bool strip_embedded_in(const Strip& inner, const Strip& outer) {
    if (!is_subgraph(outer.graph, inner.graph)) return false;
    for (int swap = 0; swap < 2; ++swap)
        for (int rev = 0; rev < 2; ++rev) {
            std::vector<int> q1 = swap ? inner.p2.verts : inner.p1.verts;
            std::vector<int> q2 = swap ? inner.p1.verts : inner.p2.verts;
            if (rev) { // reversing both keeps the boundary orientation aligned
                std::reverse(q1.begin(), q1.end());
                std::reverse(q2.begin(), q2.end());
            }
            auto forward = [](const std::vector<int>& sub, const std::vector<int>& full) {
                for (size_t at = 0; at + sub.size() <= full.size(); ++at)
                    if (std::equal(sub.begin(), sub.end(), full.begin() + at)) return true;
                return false;
            };
            if (forward(q1, outer.p1.verts) && forward(q2, outer.p2.verts)) return true;
        }
    return false;
}

inline bool fan_agrees_with(const Fan& f, const Strip& s) {
    if (f.length != 2 || f.graph.order() != 5) return false; // basic fans only
    auto cs = s.corners();
    auto corner = [&](int v) { return std::count(cs.begin(), cs.end(), v) > 0; };
    auto interior = [&](int v) { return s.graph.has_vertex(v) && !corner(v); };
    if (!corner(f.center)) return false;
    std::vector<int> rim = f.rim.verts;
    for (int rev = 0; rev < 2; ++rev) {
        if ((interior(rim[0]) && !interior(rim[3])) && (corner(rim[1]) || corner(rim[2])))
            return true;
        std::reverse(rim.begin(), rim.end());
    }
    return false;
}

} // namespace detail

inline Interaction check_pairwise_interaction(const Graph& host, const HostPiece& j1,
                                              const HostPiece& j2) {
    auto check = [&](const HostPiece& p) {
        std::string why;
        bool ok = std::holds_alternative<Fan>(p) ? is_fan_of(host, std::get<Fan>(p), &why)
                                                 : is_strip_of(host, std::get<Strip>(p), &why);
        if (!ok) throw std::invalid_argument("check_pairwise_interaction: " + why);
    };
    check(j1);
    check(j2);
    if (piece_graph(j1) == piece_graph(j2))
        throw std::invalid_argument("check_pairwise_interaction: pieces are not distinct");

    auto c1 = piece_corners(j1), c2 = piece_corners(j2);
    auto corner_of = [](const std::vector<int>& cs, int v) {
        return std::count(cs.begin(), cs.end(), v) > 0;
    };
    std::vector<int> shared;
    for (int v : piece_graph(j1).vertices())
        if (piece_graph(j2).has_vertex(v)) shared.push_back(v);
    bool corners_only = true;
    for (int v : shared) corners_only = corners_only && corner_of(c1, v) && corner_of(c2, v);

    const Fan* f1 = std::get_if<Fan>(&j1);
    const Fan* f2 = std::get_if<Fan>(&j2);
    if (f1 && f2) {
        if (f1->center == f2->center && !shared.empty() && !corners_only)
            return Interaction::same_center;
        return corners_only ? Interaction::almost_disjoint : Interaction::violation;
    }
    if (!f1 && !f2) {
        const Strip &s1 = std::get<Strip>(j1), &s2 = std::get<Strip>(j2);
        if (detail::strip_embedded_in(s1, s2) || detail::strip_embedded_in(s2, s1))
            return Interaction::embedded;
        return corners_only ? Interaction::almost_disjoint : Interaction::violation;
    }
    const Fan& f = f1 ? *f1 : *f2;
    const Strip& s = f1 ? std::get<Strip>(j2) : std::get<Strip>(j1);
    if (detail::fan_embedded_in(f, s)) return Interaction::embedded;
    if (detail::fan_agrees_with(f, s)) return Interaction::agrees;
    return corners_only ? Interaction::almost_disjoint : Interaction::violation;
}

// ---- normal-form scripts ----------------------------------------------------------

// delete/contract recipe turning a strip into the 8-vertex shape: two
// 4-vertex boundary paths joined by the two surviving chords. Needs a
// noncrossing nonadjacent chord pair clear of the corners.
inline std::optional<nlohmann::json> normal_form_script(const Strip& s) {
    auto ch = strip_chord_positions(s);
    int l1 = int(s.p1.verts.size()) - 1, l2 = int(s.p2.verts.size()) - 1;
    std::pair<int, int> e{-1, -1}, f{-1, -1};
    for (size_t x = 0; x < ch.size() && e.first < 0; ++x)
        for (size_t y = 0; y < ch.size(); ++y) {
            auto [i1, j1] = ch[x];
            auto [i2, j2] = ch[y];
            if (i1 <= 0 || j1 <= 0 || i2 >= l1 || j2 >= l2) continue;
            if (i1 < i2 && j1 < j2) {
                e = ch[x];
                f = ch[y];
                break;
            }
        }
    if (e.first < 0) return std::nullopt;

    nlohmann::json ops = nlohmann::json::array();
    std::map<int, int> rep;
    for (int v : s.graph.vertices()) rep[v] = v;
    auto chase = [&](int v) {
        while (rep[v] != v) v = rep[v];
        return v;
    };
    // surviving chords keep their endpoints, everything else goes
    auto keep = [&](int i, int j) {
        return (i == e.first && j == e.second) || (i == f.first && j == f.second);
    };
    for (auto [i, j] : ch)
        if (!keep(i, j))
            ops.push_back({{"op", "delete_edge"},
                           {"u", s.p1.verts[size_t(i)]},
                           {"v", s.p2.verts[size_t(j)]}});
    // squeeze each boundary run between markers down to a single edge
    auto squeeze = [&](const std::vector<int>& path, int m1, int m2) {
        for (int t = m1; t + 1 < m2; ++t) {
            int u = chase(path[size_t(m1)]), v = chase(path[size_t(t + 1)]);
            ops.push_back({{"op", "contract_edge"}, {"u", u}, {"v", v}});
            int m = std::min(u, v);
            rep[u] = m;
            rep[v] = m;
        }
    };
    squeeze(s.p1.verts, 0, e.first);
    squeeze(s.p1.verts, e.first, f.first);
    squeeze(s.p1.verts, f.first, l1);
    squeeze(s.p2.verts, 0, e.second);
    squeeze(s.p2.verts, e.second, f.second);
    squeeze(s.p2.verts, f.second, l2);
    return ops;
}

inline Graph apply_script(Graph g, const nlohmann::json& ops) {
    for (const auto& op : ops) {
        std::string kind = op.at("op").get<std::string>();
        int u = op.at("u").get<int>(), v = op.at("v").get<int>();
        if (kind == "delete_edge") g = delete_edge(g, u, v);
        else if (kind == "contract_edge") g = contract_edge(g, u, v);
        else throw std::invalid_argument("apply_script: unknown op " + kind);
    }
    return g;
}

// ---- extraction --------------------------------------------------------------------

namespace detail {

// rebuild the strip induced by trimmed boundary paths: every host edge with
// an interior end is forced, corner-to-corner edges may be left outside when
// keeping them breaks the chord pattern
inline std::optional<Strip> rebuild_strip(const Graph& host, const std::vector<int>& p1,
                                          const std::vector<int>& p2) {
    if (p1.size() < 2 || p2.size() < 2) return std::nullopt;
    std::vector<Edge> forced, slots;
    for (size_t i = 0; i + 1 < p1.size(); ++i) forced.push_back(mk_edge(p1[i], p1[i + 1]));
    for (size_t i = 0; i + 1 < p2.size(); ++i) forced.push_back(mk_edge(p2[i], p2[i + 1]));
    for (size_t i = 0; i < p1.size(); ++i)
        for (size_t j = 0; j < p2.size(); ++j) {
            if (!host.has_edge(p1[i], p2[j])) continue;
            bool corner_pair = (i == 0 || i + 1 == p1.size()) && (j == 0 || j + 1 == p2.size());
            (corner_pair ? slots : forced).push_back(mk_edge(p1[i], p2[j]));
        }
    std::vector<int> vs = p1;
    vs.insert(vs.end(), p2.begin(), p2.end());
    std::vector<int> masks(size_t(1) << slots.size());
    for (size_t i = 0; i < masks.size(); ++i) masks[i] = int(i);
    std::sort(masks.begin(), masks.end(), [](int x, int y) {
        int px = std::popcount(unsigned(x)), py = std::popcount(unsigned(y));
        return px != py ? px < py : x < y;
    });
    for (int drop : masks) {
        std::vector<Edge> es = forced;
        for (size_t i = 0; i < slots.size(); ++i)
            if (!((drop >> i) & 1)) es.push_back(slots[i]);
        Strip s{Graph(vs, es), Path{p1}, Path{p2}, 0};
        if (!is_strip_of(host, s)) continue;
        s.length = strip_length(s);
        return s;
    }
    return std::nullopt;
}

inline std::optional<Fan> rebuild_fan(const Graph& host, int z, const std::vector<int>& rim) {
    if (rim.size() < 3) return std::nullopt;
    std::vector<Edge> es;
    for (size_t i = 0; i + 1 < rim.size(); ++i) es.push_back(mk_edge(rim[i], rim[i + 1]));
    int chords = 0;
    for (int v : rim) {
        if (!host.has_edge(z, v)) continue;
        es.push_back(mk_edge(z, v));
        chords += v != rim.front() && v != rim.back();
    }
    std::vector<int> vs = rim;
    vs.push_back(z);
    Fan f{Graph(vs, es), z, Path{rim}, chords};
    if (!is_fan_of(host, f)) return std::nullopt;
    return f;
}

} // namespace detail

// peel maximal strips (longest first), then maximal nontrivial fans, trimming
// ends when corner assignments would collide; whatever refuses to peel stays
// in the base, so the presentation always augments back to the host
inline AugmentationPresentation extract_augmentation(const Graph& g, int n, Budget* budget = nullptr) {
    Budget local;
    Budget& bud = budget_or(budget, local);
    if (!is_internally_3connected(g))
        throw std::invalid_argument("extract_augmentation: host must be internally 3-connected");
    if (has_k2n_minor(g, n, nullptr, &bud))
        throw std::invalid_argument("extract_augmentation: host has the forbidden minor");

    Graph cur = g;
    AugmentationPresentation out;
    std::map<int, char> role; // 'c' fan center, 's' strip corner, 'x' fan end

    auto strip_roles_ok = [&](const std::array<int, 4>& cs) {
        for (int v : cs) {
            auto it = role.find(v);
            if (it != role.end() && it->second != 'c') return false;
        }
        return true;
    };
    // deleting a recorded corner would orphan its addition
    auto keeps_corners = [&](const std::vector<int>& inner) {
        for (int v : inner)
            if (role.count(v)) return false;
        return true;
    };
    // fans first: strip regions cannot hide a fan (their interiors lack the
    // degree-2 chain a rim needs), but fan regions do admit short stray strips
    while (true) {
        auto fans = find_maximal_fans(cur, &bud);
        std::erase_if(fans, [](const Fan& f) { return !f.nontrivial(); });
        std::sort(fans.begin(), fans.end(), [](const Fan& x, const Fan& y) {
            return std::tie(y.length, x.center, x.rim.verts) <
                   std::tie(x.length, y.center, y.rim.verts);
        });
        bool peeled = false;
        for (const Fan& f : fans) {
            auto it = role.find(f.center);
            if (it != role.end() && it->second == 'x') continue;
            std::vector<int> marks;
            for (int i = 0; i < int(f.rim.verts.size()); ++i)
                if (cur.has_edge(f.center, f.rim.verts[size_t(i)])) marks.push_back(i);
            int tm = int(marks.size());
            for (int total = 0; total <= 4 && !peeled; ++total)
                for (int ta = 0; ta <= total && !peeled; ++ta) {
                    int tb = total - ta;
                    if (ta + tb > tm - 3) continue; // keep at least one chord
                    auto rim = detail::slice(f.rim.verts, marks[size_t(ta)],
                                             marks[size_t(tm - 1 - tb)]);
                    auto cand = detail::rebuild_fan(cur, f.center, rim);
                    if (!cand || !cand->nontrivial()) continue;
                    if (role.count(rim.front()) || role.count(rim.back())) continue;
                    auto cs = cand->corners();
                    auto inner = interior_vertices(cand->graph, {cs.begin(), cs.end()});
                    if (inner.empty() || !keeps_corners(inner)) continue;
                    out.fans.push_back({*cand, cs});
                    if (!role.count(f.center)) role[f.center] = 'c';
                    role[rim.front()] = 'x';
                    role[rim.back()] = 'x';
                    cur = delete_vertices(cur, inner);
                    peeled = true;
                }
            if (peeled) break;
        }
        if (!peeled) break;
    }
    while (true) {
        auto strips = find_maximal_strips(cur, 2, &bud);
        // prefer long strips hung on high-degree corners: those are the
        // attachment points, so the peel recovers glued presentations
        auto corner_weight = [&](const Strip& s) {
            int w = 0;
            for (int v : s.corners()) w += cur.degree(v);
            return w;
        };
        std::sort(strips.begin(), strips.end(), [&](const Strip& x, const Strip& y) {
            int wx = corner_weight(x), wy = corner_weight(y);
            return std::tie(y.length, wy, x.p1.verts, x.p2.verts) <
                   std::tie(x.length, wx, y.p1.verts, y.p2.verts);
        });
        bool peeled = false;
        for (const Strip& s : strips) {
            int n1 = int(s.p1.verts.size()), n2 = int(s.p2.verts.size());
            for (int total = 0; total <= 8 && !peeled; ++total)
                for (int t0 = 0; t0 <= total && !peeled; ++t0)
                    for (int t1 = 0; t0 + t1 <= total && !peeled; ++t1)
                        for (int t2 = 0; t0 + t1 + t2 <= total && !peeled; ++t2) {
                            int t3 = total - t0 - t1 - t2;
                            if (t0 + t1 > n1 - 2 || t2 + t3 > n2 - 2) continue;
                            auto q1 = detail::slice(s.p1.verts, t0, n1 - 1 - t1);
                            auto q2 = detail::slice(s.p2.verts, t2, n2 - 1 - t3);
                            auto cand = detail::rebuild_strip(cur, q1, q2);
                            if (!cand || cand->length < 2) continue;
                            auto cs = cand->corners();
                            auto inner = interior_vertices(cand->graph, {cs.begin(), cs.end()});
                            if (inner.empty() || !strip_roles_ok(cs)) continue;
                            if (!keeps_corners(inner)) continue;
                            out.strips.push_back({*cand, cs});
                            for (int v : cs) role[v] = 's';
                            cur = delete_vertices(cur, inner);
                            peeled = true;
                        }
            if (peeled) break;
        }
        if (!peeled) break;
    }
    out.base = cur;
    return out;
}

// ---- random presentations -----------------------------------------------------------

// small legal presentation: a 3-connected core plus a few fans and regular
// strips with rule-abiding corner assignments
inline AugmentationPresentation random_presentation(Rng& rng) {
    std::vector<Graph> bases{complete_graph(4), complete_graph(5), wheel_graph(4), wheel_graph(5)};
    AugmentationPresentation p{bases[size_t(rng.below(int(bases.size())))], {}, {}};
    std::map<int, char> role;
    std::vector<int> verts = p.base.vertices();
    auto pick = [&](const std::vector<int>& pool) {
        return pool[size_t(rng.below(int(pool.size())))];
    };
    int want = 1 + rng.below(3);
    for (int t = 0; t < want; ++t) {
        if (rng.below(2)) {
            std::vector<int> pool;
            for (int v : verts)
                if (!role.count(v) || role[v] == 'c') pool.push_back(v);
            if (pool.size() < 4) continue;
            std::array<int, 4> to{};
            for (int i = 0; i < 4; ++i) {
                int v = pick(pool);
                pool.erase(std::find(pool.begin(), pool.end(), v));
                to[size_t(i)] = v;
            }
            p.strips.push_back({regular_strip(1 + rng.below(3)), to});
            for (int v : to) role[v] = 's';
        } else {
            int len = 1 + rng.below(3);
            std::vector<int> sub(size_t(len) + 1, 0);
            if (rng.below(2)) sub[size_t(rng.below(len + 1))] = 1;
            std::vector<int> center_pool, fresh_pool;
            for (int v : verts) {
                if (!role.count(v)) fresh_pool.push_back(v);
                if (!role.count(v) || role[v] != 'x') center_pool.push_back(v);
            }
            if (center_pool.empty() || fresh_pool.size() < 2) continue;
            int center = pick(center_pool);
            fresh_pool.erase(std::remove(fresh_pool.begin(), fresh_pool.end(), center),
                             fresh_pool.end());
            if (fresh_pool.size() < 2) continue;
            int b = pick(fresh_pool);
            fresh_pool.erase(std::find(fresh_pool.begin(), fresh_pool.end(), b));
            int c = pick(fresh_pool);
            p.fans.push_back({make_fan(len, sub), {center, b, c}});
            if (!role.count(center)) role[center] = 'c';
            role[b] = 'x';
            role[c] = 'x';
        }
    }
    return p;
}

// ---- serialization --------------------------------------------------------------------

inline nlohmann::json fan_to_json(const Fan& f) {
    return {{"type", "fan"},
            {"center", f.center},
            {"rim", f.rim.verts},
            {"length", f.length},
            {"graph", graph_to_json(f.graph)}};
}

inline nlohmann::json strip_to_json(const Strip& s) {
    auto script = normal_form_script(s);
    return {{"type", "strip"},
            {"p1", s.p1.verts},
            {"p2", s.p2.verts},
            {"length", strip_length(s)},
            {"graph", graph_to_json(s.graph)},
            {"normal_form", script ? *script : nlohmann::json()}};
}

inline nlohmann::json presentation_to_json(const AugmentationPresentation& p) {
    nlohmann::json adds = nlohmann::json::array();
    for (const FanAddition& fa : p.fans) {
        nlohmann::json j = fan_to_json(fa.fan);
        j["to"] = fa.to;
        adds.push_back(j);
    }
    for (const StripAddition& sa : p.strips) {
        nlohmann::json j = strip_to_json(sa.strip);
        j["to"] = sa.to;
        adds.push_back(j);
    }
    return {{"base", graph_to_json(p.base)}, {"additions", adds}};
}

} // namespace k2n
