#pragma once

#include "combinat.hpp"
#include "enumerate.hpp"
#include "fan_strip.hpp"
#include "graph.hpp"
#include "isomorphism.hpp"
#include "minor.hpp"
#include "sum_decomp.hpp"
#include "type_one.hpp"
#include "work.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace k2n {

// Named property suites, runnable by id. Each suite derives its whole
// instance stream from the seed, so reports are reproducible, and it keeps
// counting after a failure so one run describes the full corpus.
enum class Scale { quick, desk };

struct SuiteReport {
    std::string id, title;
    long instances = 0; // property checks attempted
    long failures = 0;  // property checks that came back false
    std::vector<std::string> notes;

    bool passed() const { return failures == 0 && instances > 0; }
};

namespace detail {

inline void note(SuiteReport& r, const std::string& s) {
    if (r.notes.size() < 64) r.notes.push_back(s);
}

inline void flunk(SuiteReport& r, const std::string& s) {
    ++r.failures;
    note(r, "fail: " + s);
}

inline std::string gdesc(const Graph& g) {
    return "order " + std::to_string(g.order()) + " size " + std::to_string(g.size());
}

inline long by_scale(Scale sc, long quick, long desk) { return sc == Scale::desk ? desk : quick; }

inline SuiteReport make_report(const char* id, const char* title) {
    SuiteReport r;
    r.id = id;
    r.title = title;
    return r;
}

} // namespace detail

// ---- catalogue and decomposition ------------------------------------------------

// id 2.3: a 2-connected graph carries a catalogue tag exactly when some
// stable degree-2 labeling admits no admissible 2-cut
inline SuiteReport suite_catalogue_cut_free(Scale sc, std::uint32_t) {
    SuiteReport r = detail::make_report("2.3", "catalogue membership equals cut-free labelability");
    int cap = int(detail::by_scale(sc, 6, 8));
    for (int n = 3; n <= cap; ++n) {
        long seen = 0;
        for (const Graph& g : two_connected_graphs(n)) {
            bool tagged = in_class_C(g) != CTag::none;
            bool cut_free = false;
            for (const std::vector<int>& ls : stable_degree2_subsets(g))
                if (!find_admissible_2cut(g, ls)) {
                    cut_free = true;
                    break;
                }
            ++r.instances;
            ++seen;
            if (tagged != cut_free)
                detail::flunk(r, detail::gdesc(g) +
                                     (tagged ? ": tagged but every labeling leaves a cut"
                                             : ": untagged yet some labeling is cut-free"));
        }
        detail::note(r, "order " + std::to_string(n) + ": " + std::to_string(seen) + " graphs");
    }
    return r;
}

// id 2.6: decompose() returns catalogue pieces whose tree sum rebuilds the
// input up to isomorphism
inline SuiteReport suite_decompose_roundtrip(Scale sc, std::uint32_t seed) {
    SuiteReport r = detail::make_report("2.6", "decompositions use catalogue pieces and rebuild their input");
    auto run_one = [&](const Graph& g) {
        ++r.instances;
        TreeStructure th = decompose(g, {});
        for (const auto& [node, piece] : th.pieces)
            if (in_class_C(piece.graph) == CTag::none) {
                detail::flunk(r, detail::gdesc(g) + ": piece at node " + std::to_string(node) +
                                     " is outside the catalogue");
                return;
            }
        if (!are_isomorphic(tree_sum(th).graph, g))
            detail::flunk(r, detail::gdesc(g) + ": tree sum differs from the input");
    };
    int cap = int(detail::by_scale(sc, 6, 7));
    for (int n = 3; n <= cap; ++n) {
        long seen = 0;
        for (const Graph& g : two_connected_graphs(n)) {
            run_one(g);
            ++seen;
        }
        detail::note(r, "order " + std::to_string(n) + ": " + std::to_string(seen) + " graphs");
    }
    Rng rng(seed);
    long batch = detail::by_scale(sc, 40, 200);
    int big = cap + 1;
    for (long i = 0; i < batch; ++i) run_one(random_2connected_graph(big, 25 + rng.below(50), rng));
    detail::note(r, "seeded batch: " + std::to_string(batch) + " graphs of order " +
                        std::to_string(big));
    return r;
}

namespace detail {

// pieces for assembled tree structures; ports are stable degree-2 vertices
inline LabeledGraph chain_piece_k23() {
    Graph g = complete_bipartite(2, 3);
    return {g, degree2_vertices(g)};
}

inline LabeledGraph chain_piece_spacer(int kind) {
    if (kind >= 3) {
        Graph g = k4_minus_e();
        return {g, degree2_vertices(g)};
    }
    return {cycle_graph(4 + kind), {0, 2}};
}

inline LabeledGraph chain_piece_split_k4() {
    Graph g = subdivide_edge(complete_graph(4), 0, 1);
    return {g, degree2_vertices(g)};
}

} // namespace detail

// id 2.9: enough dense pieces along one tree path always produce a checkable
// K_{2,n} witness in the summed graph
inline SuiteReport suite_chain_witnesses(Scale sc, std::uint32_t seed) {
    SuiteReport r = detail::make_report("2.9", "dense pieces on a tree path certify a K_{2,n} minor");
    Rng rng(seed);

    auto check_structure = [&](const TreeStructure& th, int n) {
        ++r.instances;
        int have = c2_count_on_paths(th);
        if (have < n) {
            detail::flunk(r, "assembly found only " + std::to_string(have) +
                                 " dense path pieces, wanted " + std::to_string(n));
            return;
        }
        K2nWitness w = c2_paths_give_minor(th, n);
        Graph g = tree_sum(th).graph;
        std::string why;
        if (!verify_k2n_witness(g, w, n, &why))
            detail::flunk(r, "witness rejected on " + detail::gdesc(g) + ": " + why);
    };

    auto random_chain = [&](int n) {
        int len = n + rng.below(3);
        std::vector<int> dense(static_cast<size_t>(len), 0);
        {
            std::vector<int> at(static_cast<size_t>(len), 0);
            std::iota(at.begin(), at.end(), 0);
            rng.shuffle(at);
            for (int i = 0; i < n; ++i) dense[size_t(at[size_t(i)])] = 1;
        }
        std::vector<LabeledGraph> pieces;
        std::vector<std::array<int, 2>> ports; // [left, right] label per piece
        for (int i = 0; i < len; ++i) {
            LabeledGraph base;
            if (dense[size_t(i)]) {
                bool at_end = i == 0 || i == len - 1;
                base = at_end && rng.chance(25) ? detail::chain_piece_split_k4()
                                                : detail::chain_piece_k23();
            } else {
                base = detail::chain_piece_spacer(rng.below(4));
            }
            pieces.push_back(shift_ids(base, 100 * (i + 1)));
            std::vector<int> ls = pieces.back().labels;
            rng.shuffle(ls);
            ports.push_back({ls[0], ls.size() > 1 ? ls[1] : ls[0]});
        }
        std::vector<std::pair<int, int>> seams;
        for (int i = 0; i + 1 < len; ++i)
            seams.push_back({ports[size_t(i)][1], ports[size_t(i) + 1][0]});
        TreeStructure th = chain_structure(pieces, seams);
        for (auto& [e, how] : th.orientation)
            if (rng.chance(50)) how = Pairing::crossed;
        return th;
    };

    for (int n = 2; n <= 4; ++n) {
        {
            // all-dense chain, straight seams
            std::vector<LabeledGraph> pieces;
            std::vector<std::pair<int, int>> seams;
            for (int i = 0; i < n; ++i)
                pieces.push_back(shift_ids(detail::chain_piece_k23(), 100 * (i + 1)));
            for (int i = 0; i + 1 < n; ++i)
                seams.push_back({pieces[size_t(i)].labels[1], pieces[size_t(i) + 1].labels[0]});
            check_structure(chain_structure(pieces, seams), n);
        }
        long batch = detail::by_scale(sc, 12, 60);
        for (long i = 0; i < batch; ++i) check_structure(random_chain(n), n);
    }

    {
        // branched shape: three dense leaves on a dense hub still put three
        // dense pieces on one tree path
        TreeStructure th;
        th.tree = Graph({0, 1, 2, 3}, {{0, 1}, {0, 2}, {0, 3}});
        LabeledGraph hub = shift_ids(detail::chain_piece_k23(), 100);
        th.pieces[0] = hub;
        for (int leaf = 1; leaf <= 3; ++leaf) {
            LabeledGraph lg = shift_ids(detail::chain_piece_k23(), 100 * (leaf + 1));
            lg.labels = {lg.labels[0]};
            th.pieces[leaf] = lg;
            Edge e = mk_edge(0, leaf);
            th.glue[hub.labels[size_t(leaf) - 1]] = e;
            th.glue[lg.labels[0]] = e;
            th.orientation[e] = Pairing::straight;
        }
        check_structure(th, 3);
    }
    detail::note(r, "chain lengths n..n+2 with mixed spacers, seams flipped at random");
    return r;
}

// ---- connector trees, intervals, matrices, anchored paths -----------------------

// id 3.1: when no n-leaf connector tree exists, the fallback structure around
// the terminal set must assemble without contradiction
inline SuiteReport suite_terminal_fallback(Scale sc, std::uint32_t seed) {
    SuiteReport r = detail::make_report("3.1", "hosts without an n-leaf connector split around a hub region");
    Rng rng(seed);
    long target = detail::by_scale(sc, 40, 200), done = 0, tried = 0, skips = 0;
    long cap = target * 80;
    while (done < target && tried < cap) {
        ++tried;
        Graph g = random_connected_graph(4 + rng.below(5), 30 + rng.below(40), rng);
        std::vector<int> vs = g.vertices();
        rng.shuffle(vs);
        int k = std::min(g.order(), 2 + rng.below(std::max(1, g.order() - 1)));
        std::vector<int> terminals(vs.begin(), vs.begin() + k);
        int n = 3 + rng.below(2);
        if (find_r_tree(g, terminals, n)) continue;
        ++r.instances;
        ++done;
        try {
            r_tree_structure(g, terminals, n);
        } catch (const WorkLimitExceeded&) {
            ++skips;
            --r.instances;
            --done;
        } catch (const std::logic_error& e) {
            detail::flunk(r, detail::gdesc(g) + ": " + e.what());
        }
    }
    detail::note(r, std::to_string(done) + " tree-free instances from " + std::to_string(tried) +
                        " draws, " + std::to_string(skips) + " over budget");
    if (done < target) detail::flunk(r, "instance generation starved");
    return r;
}

// id 3.2: every (X, Y, n, m) with |X| >= n(m+1) yields a certificate that
// revalidates, over all subsets of a small ground interval
inline SuiteReport suite_interleave_dichotomy(Scale sc, std::uint32_t) {
    SuiteReport r = detail::make_report("3.2", "large X forces n alternations or an m-point gap");
    int bound = int(detail::by_scale(sc, 10, 12));
    long inter = 0, gaps = 0;
    std::vector<int> xs, ys;
    for (std::uint32_t xmask = 1; xmask < (1u << bound); ++xmask) {
        xs.clear();
        for (int v = 1; v <= bound; ++v)
            if (xmask >> (v - 1) & 1) xs.push_back(v);
        int xn = int(xs.size());
        std::vector<std::pair<int, int>> nm;
        for (int n = 1; n <= 3; ++n)
            for (int m = 1; m <= 3; ++m)
                if (xn >= n * (m + 1)) nm.push_back({n, m});
        if (nm.empty()) continue;
        for (std::uint32_t ymask = 0; ymask < (1u << bound); ++ymask) {
            ys.clear();
            for (int v = 1; v <= bound; ++v)
                if (ymask >> (v - 1) & 1) ys.push_back(v);
            for (auto [n, m] : nm) {
                IntervalCertificate c = interleave_or_gap(xs, ys, n, m);
                ++r.instances;
                if (!validate_interleave_or_gap(xs, ys, n, m, c))
                    detail::flunk(r, "certificate rejected at |X|=" + std::to_string(xn) +
                                         " n=" + std::to_string(n) + " m=" + std::to_string(m));
                else
                    ++(c.interleaving ? inter : gaps);
            }
        }
    }
    detail::note(r, "ground set [1," + std::to_string(bound) + "]: " + std::to_string(inter) +
                        " alternations, " + std::to_string(gaps) + " gaps");
    return r;
}

namespace detail {

inline int pattern_bit(MatrixPattern t, int i, int j) {
    switch (t) {
        case MatrixPattern::identity: return i == j;
        case MatrixPattern::co_identity: return i != j;
        default: return i >= j;
    }
}

inline ZeroOneMatrix pattern_matrix(MatrixPattern t, int n) {
    ZeroOneMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.set(i, j, pattern_bit(t, i, j));
    return a;
}

inline std::vector<int> sorted_sample(Rng& rng, int upper, int want) {
    std::vector<int> all(static_cast<size_t>(upper), 0);
    std::iota(all.begin(), all.end(), 0);
    rng.shuffle(all);
    all.resize(size_t(want));
    std::sort(all.begin(), all.end());
    return all;
}

// rejection-sampled matrix with pairwise distinct columns, as the finder
// requires; nullopt when the density makes simplicity too rare
inline std::optional<ZeroOneMatrix> random_simple_matrix(Rng& rng, int rows, int cols, int pct) {
    for (int tries = 0; tries < 60; ++tries) {
        ZeroOneMatrix a(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) a.set(i, j, rng.chance(pct));
        if (is_simple(a)) return a;
    }
    return std::nullopt;
}

// any ordered 2x2 selection matching one of the three shapes
inline bool has_order2_pattern(const ZeroOneMatrix& a) {
    std::array<MatrixPattern, 3> kinds{MatrixPattern::identity, MatrixPattern::co_identity,
                                       MatrixPattern::staircase};
    for (int r1 = 0; r1 < a.rows; ++r1)
        for (int r2 = 0; r2 < a.rows; ++r2) {
            if (r1 == r2) continue;
            for (int c1 = 0; c1 < a.cols; ++c1)
                for (int c2 = 0; c2 < a.cols; ++c2) {
                    if (c1 == c2) continue;
                    for (MatrixPattern t : kinds)
                        if (a.at(r1, c1) == pattern_bit(t, 0, 0) &&
                            a.at(r1, c2) == pattern_bit(t, 0, 1) &&
                            a.at(r2, c1) == pattern_bit(t, 1, 0) &&
                            a.at(r2, c2) == pattern_bit(t, 1, 1))
                            return true;
                }
        }
    return false;
}

} // namespace detail

// id 3.3: returned submatrix witnesses revalidate, planted shapes are found,
// and absence agrees with a 2x2 exhaustive scan
inline SuiteReport suite_matrix_patterns(Scale sc, std::uint32_t seed) {
    SuiteReport r = detail::make_report("3.3", "unavoidable submatrix witnesses check out");
    std::array<MatrixPattern, 3> kinds{MatrixPattern::identity, MatrixPattern::co_identity,
                                       MatrixPattern::staircase};
    for (MatrixPattern t : kinds)
        for (int n = 2; n <= 4; ++n) {
            ZeroOneMatrix a = detail::pattern_matrix(t, n);
            auto w = unavoidable_submatrix(a, n);
            ++r.instances;
            if (!w || !check_submatrix(a, *w))
                detail::flunk(r, std::string("pure ") + pattern_name(t) + " of order " +
                                     std::to_string(n) + " missed");
        }

    Rng rng(seed);
    long planted = detail::by_scale(sc, 30, 150), planted_skips = 0;
    for (long p = 0; p < planted; ++p) {
        int n = 2 + rng.below(2);
        int rows = n + 1 + rng.below(4), cols = n + 1 + rng.below(4);
        auto base = detail::random_simple_matrix(rng, rows, cols, 45);
        if (!base) {
            ++planted_skips;
            continue;
        }
        ZeroOneMatrix a = *base;
        MatrixPattern t = kinds[size_t(rng.below(3))];
        std::vector<int> rpos = detail::sorted_sample(rng, rows, n);
        std::vector<int> cpos = detail::sorted_sample(rng, cols, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                a.set(rpos[size_t(i)], cpos[size_t(j)], detail::pattern_bit(t, i, j));
        if (!is_simple(a)) { // planting may collapse two columns
            ++planted_skips;
            continue;
        }
        auto w = unavoidable_submatrix(a, n);
        ++r.instances;
        if (!w)
            detail::flunk(r, std::string("planted ") + pattern_name(t) + " of order " +
                                 std::to_string(n) + " missed");
        else if (!check_submatrix(a, *w))
            detail::flunk(r, "witness rejected on a planted matrix");
    }

    long randoms = detail::by_scale(sc, 60, 300), random_skips = 0;
    long found = 0, absent = 0;
    for (long p = 0; p < randoms; ++p) {
        int rows = 2 + rng.below(5), cols = 2 + rng.below(5);
        auto made = detail::random_simple_matrix(rng, rows, cols, 20 + rng.below(60));
        if (!made) {
            ++random_skips;
            continue;
        }
        ZeroOneMatrix a = *made;
        for (int n : {2, 3}) {
            auto w = unavoidable_submatrix(a, n);
            ++r.instances;
            if (w) {
                ++found;
                if (!check_submatrix(a, *w)) detail::flunk(r, "witness rejected on a random matrix");
            } else {
                ++absent;
                if (n == 2 && detail::has_order2_pattern(a))
                    detail::flunk(r, "order-2 shape present but not found");
            }
        }
    }
    detail::note(r, std::to_string(found) + " found / " + std::to_string(absent) +
                        " absent over random matrices, " +
                        std::to_string(planted_skips + random_skips) + " non-simple skips");
    return r;
}

// id 3.4: in subdivisions of 3-connected hosts, every vertex pair is joined
// by an induced path whose removal keeps the rest connected
inline SuiteReport suite_anchored_nonseparating(Scale sc, std::uint32_t seed) {
    SuiteReport r = detail::make_report("3.4", "every vertex pair joins along a nonseparating induced path");
    auto run_pairs = [&](const Graph& g) {
        std::vector<int> vs = g.vertices();
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j) {
                ++r.instances;
                try {
                    Path p = nonseparating_induced_path(g, vs[i], vs[j]);
                    if (!detail::path_nonseparating(g, p, vs[i], vs[j]))
                        detail::flunk(r, detail::gdesc(g) + ": returned path fails its contract");
                } catch (const std::logic_error&) {
                    detail::flunk(r, detail::gdesc(g) + ": no path between " +
                                         std::to_string(vs[i]) + " and " + std::to_string(vs[j]));
                }
            }
    };
    int cap = int(detail::by_scale(sc, 6, 7));
    for (int n = 4; n <= cap; ++n) {
        long seen = 0;
        for (const Graph& g : three_connected_graphs(n)) {
            run_pairs(g);
            ++seen;
        }
        detail::note(r, "order " + std::to_string(n) + ": " + std::to_string(seen) +
                            " 3-connected hosts, all pairs");
    }
    Rng rng(seed);
    std::vector<Graph> p5 = three_connected_graphs(5), p6 = three_connected_graphs(6);
    long batch = detail::by_scale(sc, 20, 100);
    for (long i = 0; i < batch; ++i) {
        const Graph& base = rng.chance(50) ? rng.pick(p5) : rng.pick(p6);
        Edge e = rng.pick(base.edges());
        run_pairs(subdivide_edge(base, e.first, e.second));
    }
    detail::note(r, std::to_string(batch) + " single-subdivision variants, all pairs");
    return r;
}

// ---- windows, captures, runs, long paths -----------------------------------------

// id 4.1: the attachment window search agrees with scanning every contiguous
// window for m neighbors and a clean boundary
inline SuiteReport suite_neighbor_windows(Scale sc, std::uint32_t seed) {
    SuiteReport r = detail::make_report("4.1", "neighbor windows match an exhaustive window scan");
    auto window_exists = [](const Graph& g, const Path& p, int x, int m) {
        int len = int(p.verts.size());
        for (int i = 0; i < len; ++i)
            for (int j = i; j < len; ++j) {
                int hits = 0;
                bool clean = true;
                for (int t = i; t <= j && clean; ++t) {
                    int v = p.verts[size_t(t)];
                    hits += g.has_edge(x, v);
                    for (int u : g.neighbors(v))
                        if (u != x && !p.contains(u)) clean = false;
                }
                if (clean && hits >= m) return true;
            }
        return false;
    };
    auto window_good = [](const Graph& g, const Path& p, int x, int m, const Path& w) {
        if (w.verts.empty() || !detail::contiguous_in(w.verts, p.verts)) return false;
        if (!g.has_edge(x, w.verts.front()) || !g.has_edge(x, w.verts.back())) return false;
        int hits = 0;
        for (int v : w.verts) {
            hits += g.has_edge(x, v);
            for (int u : g.neighbors(v))
                if (u != x && !p.contains(u)) return false;
        }
        return hits >= m;
    };

    for (int rim = 5; rim <= 8; ++rim) {
        // hub against a rim subpath: the omitted rim vertex dirties both ends
        Graph g = wheel_graph(rim);
        std::vector<int> pv;
        for (int v = 1; v < rim; ++v) pv.push_back(v);
        Path p{pv};
        for (int m = 1; m <= rim - 1; ++m) {
            auto res = neighbor_run(g, p, 0, m);
            ++r.instances;
            bool want = m <= rim - 3;
            if (res.has_value() != want)
                detail::flunk(r, "wheel rim " + std::to_string(rim) + " m " + std::to_string(m) +
                                     (want ? ": window missed" : ": spurious window"));
            else if (res && !window_good(g, p, 0, m, *res))
                detail::flunk(r, "wheel window fails its contract");
        }
    }

    Rng rng(seed);
    long target = detail::by_scale(sc, 150, 600), done = 0, tried = 0;
    while (done < target && tried < target * 20) {
        ++tried;
        Graph g = random_connected_graph(5 + rng.below(6), 25 + rng.below(45), rng);
        std::vector<int> vs = g.vertices();
        int a = rng.pick(vs), b = rng.pick(vs);
        if (a == b) continue;
        Path p = shortest_path(g, a, b);
        if (p.verts.size() < 2) continue;
        std::vector<int> outside;
        for (int v : vs)
            if (!p.contains(v)) outside.push_back(v);
        if (outside.empty()) continue;
        int x = rng.pick(outside);
        int m = 1 + rng.below(3);
        auto res = neighbor_run(g, p, x, m);
        ++r.instances;
        ++done;
        if (res.has_value() != window_exists(g, p, x, m))
            detail::flunk(r, "window scan disagreement on " + detail::gdesc(g));
        else if (res && !window_good(g, p, x, m, *res))
            detail::flunk(r, "returned window fails its contract on " + detail::gdesc(g));
    }
    detail::note(r, std::to_string(done) + " random host/path/apex draws");
    return r;
}

// id 4.2: capture over two covering paths engages a fan or strip exactly
// when some confined subpath pair supports one
inline SuiteReport suite_capture_pieces(Scale sc, std::uint32_t seed) {
    SuiteReport r = detail::make_report("4.2", "two covering paths engage a fan or strip exactly when one fits");

    auto slice = [](const std::vector<int>& v, int lo, int hi) {
        return std::vector<int>(v.begin() + lo, v.begin() + hi + 1);
    };
    auto oracle = [&](const Graph& g, const std::vector<int>& pv, const std::vector<int>& qv,
                      int m) {
        auto confined = [&](const std::vector<int>& ps, const std::vector<int>& qs) {
            std::set<int> in(ps.begin(), ps.end());
            in.insert(qs.begin(), qs.end());
            for (const std::vector<int>* side : {&ps, &qs})
                for (size_t i = 1; i + 1 < side->size(); ++i)
                    for (int u : g.neighbors((*side)[i]))
                        if (!in.count(u)) return false;
            return true;
        };
        auto joint_edges = [&](const std::vector<int>& ps, const std::vector<int>& qs) {
            std::vector<Edge> es;
            for (size_t i = 0; i + 1 < ps.size(); ++i) es.push_back(mk_edge(ps[i], ps[i + 1]));
            for (size_t i = 0; i + 1 < qs.size(); ++i) es.push_back(mk_edge(qs[i], qs[i + 1]));
            for (int u : ps)
                for (int v : qs)
                    if (g.has_edge(u, v)) es.push_back(mk_edge(u, v));
            return es;
        };
        auto fan_fits = [&](const std::vector<int>& rim, int center) {
            if (rim.size() < 3) return false;
            std::vector<int> vs = rim;
            vs.push_back(center);
            Fan f{Graph(vs, joint_edges(rim, {center})), center, Path{rim}, 0};
            for (int t : f.rim.interior()) f.length += g.has_edge(center, t) ? 1 : 0;
            return f.length >= m && is_fan(f);
        };
        auto strip_fits = [&](const std::vector<int>& ps, const std::vector<int>& qs) {
            for (int rev = 0; rev < 2; ++rev) {
                std::vector<int> qo = qs;
                if (rev) std::reverse(qo.begin(), qo.end());
                std::vector<int> vs = ps;
                vs.insert(vs.end(), qo.begin(), qo.end());
                Strip s{Graph(vs, joint_edges(ps, qo)), Path{ps}, Path{qo}, 0};
                if (is_strip(s) && strip_length(s) >= m) return true;
            }
            return false;
        };
        int np = int(pv.size()), nq = int(qv.size());
        for (int i1 = 0; i1 < np; ++i1)
            for (int i2 = i1; i2 < np; ++i2)
                for (int j1 = 0; j1 < nq; ++j1)
                    for (int j2 = j1; j2 < nq; ++j2) {
                        std::vector<int> ps = slice(pv, i1, i2), qs = slice(qv, j1, j2);
                        if (!confined(ps, qs)) continue;
                        if (qs.size() == 1 && ps.size() >= 3 && fan_fits(ps, qs[0])) return true;
                        if (ps.size() == 1 && qs.size() >= 3 && fan_fits(qs, ps[0])) return true;
                        if (ps.size() >= 2 && qs.size() >= 2 && strip_fits(ps, qs)) return true;
                    }
        return false;
    };
    auto capture_good = [&](const Graph& g, const Path& p, const Path& q, int m,
                            const Capture& c) {
        if (c.fan.has_value() == c.strip.has_value()) return false;
        std::vector<int> qrev = q.verts;
        std::reverse(qrev.begin(), qrev.end());
        if (!detail::contiguous_in(c.pstar.verts, p.verts)) return false;
        if (!detail::contiguous_in(c.qstar.verts, q.verts) && !detail::contiguous_in(c.qstar.verts, qrev))
            return false;
        if (c.fan) return c.fan->length >= m && is_fan_of(g, *c.fan);
        return strip_length(*c.strip) >= m && is_strip_of(g, *c.strip);
    };
    auto run_case = [&](const Graph& g, const std::vector<int>& pv, const std::vector<int>& qv,
                        int m, int expect /* -1 unknown, else bool */) {
        auto res = capture_between_paths(g, Path{pv}, Path{qv}, m);
        ++r.instances;
        bool want = expect >= 0 ? expect > 0 : oracle(g, pv, qv, m);
        if (res.has_value() != want)
            detail::flunk(r, detail::gdesc(g) + " m " + std::to_string(m) +
                                 (want ? ": capture missed" : ": spurious capture"));
        else if (res && !capture_good(g, Path{pv}, Path{qv}, m, *res))
            detail::flunk(r, "capture fails its contract on " + detail::gdesc(g));
    };

    for (int k = 4; k <= 6; ++k) {
        // straight ladder: rungs at every position, usable chords at the
        // k - 2 interior positions
        std::vector<int> pv, qv;
        std::vector<Edge> es;
        for (int i = 0; i < k; ++i) {
            pv.push_back(i);
            qv.push_back(100 + i);
            es.push_back(mk_edge(i, 100 + i));
        }
        for (int i = 0; i + 1 < k; ++i) {
            es.push_back(mk_edge(i, i + 1));
            es.push_back(mk_edge(100 + i, 100 + i + 1));
        }
        std::vector<int> vs = pv;
        vs.insert(vs.end(), qv.begin(), qv.end());
        Graph g(vs, es);
        for (int m = 1; m <= k; ++m) run_case(g, pv, qv, m, m <= k - 2 ? 1 : 0);
    }
    {
        // fan host: rim against its center
        Fan f = make_fan(3);
        for (int m = 1; m <= 4; ++m)
            run_case(f.graph, f.rim.verts, {f.center}, m, m <= 3 ? 1 : 0);
    }

    Rng rng(seed);
    long batch = detail::by_scale(sc, 60, 200);
    for (long i = 0; i < batch; ++i) {
        int pl = 3 + rng.below(5), ql = 1 + rng.below(5);
        if (pl + ql < 4) ql = 4 - pl;
        std::vector<int> pv, qv;
        std::vector<Edge> es;
        for (int v = 0; v < pl; ++v) pv.push_back(v);
        for (int v = 0; v < ql; ++v) qv.push_back(100 + v);
        for (int v = 0; v + 1 < pl; ++v) es.push_back(mk_edge(v, v + 1));
        for (int v = 0; v + 1 < ql; ++v) es.push_back(mk_edge(100 + v, 100 + v + 1));
        int pct = 20 + rng.below(45);
        for (int u : pv)
            for (int v : qv)
                if (rng.chance(pct)) es.push_back(mk_edge(u, v));
        std::vector<int> vs = pv;
        vs.insert(vs.end(), qv.begin(), qv.end());
        run_case(Graph(vs, es), pv, qv, 1 + rng.below(4), -1);
    }
    detail::note(r, std::to_string(batch) + " random two-path hosts against the subpair scan");
    return r;
}

// id 4.3: the degree-2 run search near a connected subgraph agrees with
// component sizes of the degree-2 slice of the complement
inline SuiteReport suite_degree2_runs(Scale sc, std::uint32_t seed) {
    SuiteReport r = detail::make_report("4.3", "degree-2 runs near a subgraph match component sizes");
    auto expect_present = [](const Graph& g, const std::vector<int>& hv, int m) {
        Graph k = delete_vertices(g, hv);
        Graph kd = induced_subgraph(k, degree2_vertices(k));
        for (const auto& comp : components(kd))
            if (int(comp.size()) - 1 >= 2 * m) return true;
        return false;
    };
    auto run_case = [&](const Graph& g, const std::vector<int>& hv, int m) {
        auto res = degree2_path_near(g, hv, m);
        ++r.instances;
        if (res.has_value() != expect_present(g, hv, m)) {
            detail::flunk(r, "run search disagreement on " + detail::gdesc(g) + " m " +
                                 std::to_string(m));
            return;
        }
        if (!res) return;
        Graph k = delete_vertices(g, hv);
        bool shape = is_path_of(k, *res) && res->length() >= 2 * m;
        for (int v : res->verts) shape = shape && k.degree(v) == 2;
        if (!shape) detail::flunk(r, "returned run fails its contract on " + detail::gdesc(g));
    };

    for (int rim = 4; rim <= 9; ++rim) {
        Graph g = wheel_graph(rim);
        for (int m = 1; m <= 3; ++m) {
            run_case(g, {0}, m);     // complement is the whole rim cycle
            run_case(g, {0, 1}, m);  // complement is a rim path with soft ends
        }
    }

    Rng rng(seed);
    long target = detail::by_scale(sc, 30, 120), done = 0, tried = 0;
    while (done < target && tried < target * 60) {
        ++tried;
        Graph g = random_2connected_graph(6 + rng.below(4), 30 + rng.below(35), rng);
        if (!is_internally_3connected(g)) continue;
        std::vector<int> vs = g.vertices();
        std::vector<int> hv{rng.pick(vs)};
        int grow = rng.below(3);
        for (int s = 0; s < grow; ++s) {
            std::vector<int> fringe;
            for (int h : hv)
                for (int u : g.neighbors(h))
                    if (!std::count(hv.begin(), hv.end(), u)) fringe.push_back(u);
            if (fringe.empty()) break;
            hv.push_back(rng.pick(fringe));
        }
        Graph k = delete_vertices(g, hv);
        if (k.order() == 0 || !is_connected(k)) continue;
        run_case(g, hv, 1 + rng.below(3));
        ++done;
    }
    detail::note(r, std::to_string(done) + " random separated-subgraph draws");
    return r;
}

// id 4.4: the long nonseparating path search agrees with an exhaustive
// induced-path enumeration on small hosts
inline SuiteReport suite_long_nonseparating(Scale sc, std::uint32_t seed) {
    SuiteReport r = detail::make_report("4.4", "long nonseparating paths match exhaustive search");

    // fresh exhaustive search: extend induced paths, accept on connected rest
    struct Brute {
        const Graph& g;
        int m;
        bool walk(std::vector<int>& cur, std::set<int>& used) {
            if (int(cur.size()) - 1 >= m && is_connected(delete_vertices(g, cur))) return true;
            for (int v : g.neighbors(cur.back())) {
                if (used.count(v)) continue;
                bool chord = false;
                for (size_t i = 0; i + 1 < cur.size() && !chord; ++i)
                    chord = g.has_edge(cur[i], v);
                if (chord) continue;
                cur.push_back(v);
                used.insert(v);
                if (walk(cur, used)) return true;
                used.erase(v);
                cur.pop_back();
            }
            return false;
        }
        bool found() {
            for (int s : g.vertices()) {
                std::vector<int> cur{s};
                std::set<int> used{s};
                if (walk(cur, used)) return true;
            }
            return false;
        }
    };
    auto run_case = [&](const Graph& g, int m, int expect) {
        auto res = long_nonseparating_path(g, m);
        ++r.instances;
        bool want = expect >= 0 ? expect > 0 : Brute{g, m}.found();
        if (res.has_value() != want) {
            detail::flunk(r, detail::gdesc(g) + " m " + std::to_string(m) +
                                 (want ? ": path missed" : ": spurious path"));
            return;
        }
        if (res && !(is_induced_path_of(g, *res) && res->length() >= m &&
                     is_connected(delete_vertices(g, res->verts))))
            detail::flunk(r, "returned path fails its contract on " + detail::gdesc(g));
    };

    run_case(complete_graph(4), 1, 1);
    run_case(complete_graph(4), 2, 0); // triangles forbid induced 3-vertex paths
    run_case(wheel_graph(8), 6, 1);
    run_case(wheel_graph(8), 7, 0);
    run_case(cycle_graph(7), 5, 1);
    run_case(cycle_graph(7), 6, 0);

    Rng rng(seed);
    long batch = detail::by_scale(sc, 50, 200);
    for (long i = 0; i < batch; ++i) {
        Graph g = random_2connected_graph(5 + rng.below(4), 30 + rng.below(40), rng);
        run_case(g, 1 + rng.below(4), -1);
    }
    detail::note(r, std::to_string(batch) + " random hosts against exhaustive enumeration");
    return r;
}

// ---- shared pieces ---------------------------------------------------------------

// id 5.1: maximal nontrivial fans that share an interior vertex agree on
// their center
inline SuiteReport suite_fan_centers(Scale sc, std::uint32_t seed) {
    SuiteReport r = detail::make_report("5.1", "overlapping nontrivial fans share their center");
    long sharing_pairs = 0;
    auto run_host = [&](const Graph& g) {
        std::vector<Fan> fans;
        try {
            fans = find_maximal_fans(g);
        } catch (const WorkLimitExceeded&) {
            detail::note(r, "fan enumeration over budget on " + detail::gdesc(g));
            return;
        }
        for (size_t i = 0; i < fans.size(); ++i)
            for (size_t j = i + 1; j < fans.size(); ++j) {
                const Fan &f1 = fans[i], &f2 = fans[j];
                if (!f1.nontrivial() || !f2.nontrivial()) continue;
                if (f1.graph == f2.graph) continue;
                std::vector<int> iv = f1.rim.interior();
                std::set<int> inner(iv.begin(), iv.end());
                bool share = false;
                for (int v : f2.rim.interior()) share = share || inner.count(v);
                if (!share) continue;
                ++r.instances;
                ++sharing_pairs;
                if (f1.center != f2.center) {
                    detail::flunk(r, "centers differ on " + detail::gdesc(g));
                    continue;
                }
                if (check_pairwise_interaction(g, f1, f2) != Interaction::same_center)
                    detail::flunk(r, "interaction tag is not same_center on " + detail::gdesc(g));
            }
    };

    for (int rim = 4; rim <= 8; ++rim) run_host(wheel_graph(rim));

    Rng rng(seed);
    long target = detail::by_scale(sc, 25, 120), done = 0, tried = 0;
    while (done < target && tried < target * 60) {
        ++tried;
        Graph g = random_2connected_graph(7 + rng.below(3), 25 + rng.below(35), rng);
        if (!is_internally_3connected(g)) continue;
        run_host(g);
        ++done;
    }
    detail::note(r, std::to_string(done) + " random hosts, " + std::to_string(sharing_pairs) +
                        " overlapping fan pairs");
    if (sharing_pairs == 0) detail::flunk(r, "no overlapping fan pairs were generated");
    return r;
}

namespace detail {

inline Strip relabel_strip(const Strip& s, const std::map<int, int>& to) {
    auto mapv = [&](std::vector<int> v) {
        for (int& x : v) x = to.at(x);
        return v;
    };
    return Strip{relabel(s.graph, to), Path{mapv(s.p1.verts)}, Path{mapv(s.p2.verts)}, s.length};
}

inline Graph cube_graph() {
    std::vector<int> vs{0, 1, 2, 3, 4, 5, 6, 7};
    std::vector<Edge> es;
    for (int u = 0; u < 8; ++u)
        for (int b = 0; b < 3; ++b) {
            int v = u ^ (1 << b);
            if (u < v) es.push_back({u, v});
        }
    return Graph(vs, es);
}

// the 8-cycle with two nested chords, presented as a strip between the four
// given host corners; fresh interior ids start at base
inline Strip eight_cycle_piece(int a, int b, int c, int d, int base) {
    std::vector<int> p1{a, base, base + 1, d};
    std::vector<int> p2{b, base + 3, base + 2, c};
    std::vector<Edge> es;
    for (size_t i = 0; i + 1 < p1.size(); ++i) es.push_back(mk_edge(p1[i], p1[i + 1]));
    for (size_t i = 0; i + 1 < p2.size(); ++i) es.push_back(mk_edge(p2[i], p2[i + 1]));
    es.push_back(mk_edge(a, b));                // ab slot
    es.push_back(mk_edge(d, c));                // dc slot
    es.push_back(mk_edge(base, base + 3));      // nested chords
    es.push_back(mk_edge(base + 1, base + 2));
    return strip_from_parts(p1, p2, es);
}

} // namespace detail

// id 5.5: the 8-cycle-with-two-chords piece is recognized inside long strips,
// and otherwise stays almost disjoint from every strip of length >= 8
inline SuiteReport suite_strip_isolation(Scale sc, std::uint32_t) {
    SuiteReport r = detail::make_report("5.5", "the short chorded piece embeds or stays almost disjoint");

    auto ladder_host = [&](int k) {
        std::vector<int> pv, qv;
        std::vector<Edge> es;
        for (int i = 0; i < k; ++i) {
            pv.push_back(i);
            qv.push_back(100 + i);
            es.push_back(mk_edge(i, 100 + i));
        }
        for (int i = 0; i + 1 < k; ++i) {
            es.push_back(mk_edge(i, i + 1));
            es.push_back(mk_edge(100 + i, 100 + i + 1));
        }
        std::vector<int> vs = pv;
        vs.insert(vs.end(), qv.begin(), qv.end());
        return std::tuple{Graph(vs, es), pv, qv};
    };

    // embedded side: inside a long ladder the piece sits in the full strip
    int lk = int(detail::by_scale(sc, 12, 14));
    {
        auto [g, pv, qv] = ladder_host(lk);
        int at = 3; // sub-ladder [at, at+3] is exactly the chorded piece
        std::vector<int> sp1(pv.begin() + at, pv.begin() + at + 4);
        std::vector<int> sp2(qv.begin() + at, qv.begin() + at + 4);
        std::vector<Edge> es;
        for (size_t i = 0; i + 1 < sp1.size(); ++i) es.push_back(mk_edge(sp1[i], sp1[i + 1]));
        for (size_t i = 0; i + 1 < sp2.size(); ++i) es.push_back(mk_edge(sp2[i], sp2[i + 1]));
        for (size_t i = 0; i < sp1.size(); ++i) es.push_back(mk_edge(sp1[i], sp2[i]));
        Strip piece = strip_from_parts(sp1, sp2, es);
        Strip whole = strip_from_parts(pv, qv, [&] {
            std::vector<Edge> all;
            for (size_t i = 0; i + 1 < pv.size(); ++i) all.push_back(mk_edge(pv[i], pv[i + 1]));
            for (size_t i = 0; i + 1 < qv.size(); ++i) all.push_back(mk_edge(qv[i], qv[i + 1]));
            for (size_t i = 0; i < pv.size(); ++i) all.push_back(mk_edge(pv[i], qv[i]));
            return all;
        }());
        ++r.instances;
        if (check_pairwise_interaction(g, piece, whole) != Interaction::embedded)
            detail::flunk(r, "piece not recognized inside the full ladder strip");
        std::vector<int> mp1(pv.begin() + 1, pv.begin() + 9), mp2(qv.begin() + 1, qv.begin() + 9);
        std::vector<Edge> mes;
        for (size_t i = 0; i + 1 < mp1.size(); ++i) mes.push_back(mk_edge(mp1[i], mp1[i + 1]));
        for (size_t i = 0; i + 1 < mp2.size(); ++i) mes.push_back(mk_edge(mp2[i], mp2[i + 1]));
        for (size_t i = 0; i < mp1.size(); ++i) mes.push_back(mk_edge(mp1[i], mp2[i]));
        Strip middle = strip_from_parts(mp1, mp2, mes);
        ++r.instances;
        if (check_pairwise_interaction(g, piece, middle) != Interaction::embedded)
            detail::flunk(r, "piece not recognized inside a middle ladder strip");
    }

    // isolated side: the piece hangs off one cube face, a long regular strip
    // off the other, so no strip of length >= 6 can absorb the piece
    auto isolated_host = [&](int pieces) {
        Graph cube = detail::cube_graph();
        Strip jp = detail::eight_cycle_piece(0, 1, 2, 3, 20);
        Strip reg = regular_strip(pieces);
        std::map<int, int> to;
        int hi1 = 2 * pieces, hi2 = 2 * pieces + 1;
        for (int v : reg.graph.vertices()) {
            if (v == 0) to[v] = 4;
            else if (v == 1) to[v] = 5;
            else if (v == hi1) to[v] = 6;
            else if (v == hi2) to[v] = 7;
            else to[v] = v % 2 ? 40 + v / 2 : 30 + v / 2;
        }
        Strip s = detail::relabel_strip(reg, to);
        std::vector<int> vs = cube.vertices();
        std::vector<Edge> es = cube.edges();
        for (const Graph& part : {jp.graph, s.graph}) {
            for (int v : part.vertices())
                if (!cube.has_vertex(v)) vs.push_back(v);
            for (Edge e : part.edges())
                if (!cube.has_edge(e.first, e.second)) es.push_back(e);
        }
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        return std::tuple{Graph(vs, es), jp, s};
    };
    std::vector<int> sizes{8};
    if (sc == Scale::desk) sizes.push_back(10);
    for (int pieces : sizes) {
        auto [host, jp, s] = isolated_host(pieces);
        ++r.instances;
        if (!is_strip_of(host, jp) || !is_strip_of(host, s)) {
            detail::flunk(r, "assembled host rejects its own pieces");
            continue;
        }
        if (check_pairwise_interaction(host, jp, s) != Interaction::almost_disjoint)
            detail::flunk(r, "piece overlaps the planted long strip");
        std::vector<Strip> all = find_maximal_strips(host, 6);
        long longs = 0;
        for (const Strip& cand : all) {
            if (cand.graph == jp.graph) continue;
            Interaction tag = check_pairwise_interaction(host, jp, cand);
            ++r.instances;
            if (tag == Interaction::embedded) {
                detail::flunk(r, "piece embeds in a length-" +
                                     std::to_string(strip_length(cand)) + " strip");
                continue;
            }
            if (strip_length(cand) >= 8) {
                ++longs;
                if (tag != Interaction::almost_disjoint)
                    detail::flunk(r, "piece shares interior with a length-8+ strip");
            }
        }
        detail::note(r, "strip block " + std::to_string(pieces) + ": " +
                            std::to_string(all.size()) + " maximal strips, " +
                            std::to_string(longs) + " of length 8+");
        if (longs == 0) detail::flunk(r, "no long strips found in the assembled host");
    }
    return r;
}

// ---- minor bounds ----------------------------------------------------------------

// id 6.1: chord-diagram graphs never reach a K_{2,5} minor, and deleting or
// contracting a crossing chord keeps them recognizable
inline SuiteReport suite_chord_diagram_bound(Scale sc, std::uint32_t seed) {
    SuiteReport r = detail::make_report("6.1", "chord-diagram graphs stay below K_{2,5}");
    Rng rng(seed);
    long target = detail::by_scale(sc, 150, 1000);
    long closures = 0, closure_cap = detail::by_scale(sc, 12, 60);
    int worst = 0;
    for (long i = 0; i < target; ++i) {
        ChordDiagram d = random_type_one(3 + rng.below(14), rng.u32());
        Graph g = d.graph();
        int mk = max_k2(g);
        worst = std::max(worst, mk);
        ++r.instances;
        if (mk > 4) {
            detail::flunk(r, "K_{2," + std::to_string(mk) + "} minor in " + detail::gdesc(g));
            continue;
        }
        if (closures >= closure_cap || g.order() > 12) continue;
        std::optional<Edge> pick;
        for (size_t a = 0; a < d.chords.size() && !pick; ++a)
            for (size_t b = a + 1; b < d.chords.size() && !pick; ++b) {
                const Edge &e1 = d.chords[a], &e2 = d.chords[b];
                if (e1.first == e2.first || e1.first == e2.second || e1.second == e2.first ||
                    e1.second == e2.second)
                    continue;
                if (chords_cross(d, e1, e2)) pick = e1;
            }
        if (!pick) continue;
        ++closures;
        ++r.instances;
        if (!recognize_type_one(delete_edge(g, pick->first, pick->second)))
            detail::flunk(r, "deletion of a crossing chord left the class");
        else if (!recognize_type_one(contract_edge(g, pick->first, pick->second)))
            detail::flunk(r, "contraction of a crossing chord left the class");
    }
    detail::note(r, std::to_string(target) + " samples, largest minor parameter " +
                        std::to_string(worst) + ", " + std::to_string(closures) +
                        " closure checks");
    return r;
}

// id 6.2: a 2-sum of a K_{2,m}-free and a K_{2,n}-free part has no
// K_{2,(m-1)(n-1)+1} minor
inline SuiteReport suite_two_sum_bound(Scale sc, std::uint32_t seed) {
    SuiteReport r = detail::make_report("6.2", "2-sums respect the product minor bound");
    Rng rng(seed);
    long target = detail::by_scale(sc, 60, 300), done = 0, tried = 0;
    while (done < target && tried < target * 60) {
        ++tried;
        Graph g1 = random_2connected_graph(4 + rng.below(5), 25 + rng.below(35), rng);
        Graph g2 = random_2connected_graph(4 + rng.below(5), 25 + rng.below(35), rng);
        std::vector<int> d1 = degree2_vertices(g1), d2 = degree2_vertices(g2);
        if (d1.empty() || d2.empty()) continue;
        int mk1 = max_k2(g1), mk2 = max_k2(g2);
        if (mk1 + 1 > 4 || mk2 + 1 > 4) continue;
        std::map<int, int> to;
        for (int v : g2.vertices()) to[v] = v + 100;
        Graph h2 = relabel(g2, to);
        Pairing how = rng.chance(50) ? Pairing::straight : Pairing::crossed;
        TwoSum s = two_sum(g1, rng.pick(d1), h2, rng.pick(d2) + 100, how);
        ++r.instances;
        ++done;
        int bound = mk1 * mk2; // (m - 1)(n - 1) for m = mk1 + 1, n = mk2 + 1
        if (has_k2n_minor(s.graph, bound + 1))
            detail::flunk(r, "sum of " + detail::gdesc(g1) + " and " + detail::gdesc(g2) +
                                 " exceeds the bound " + std::to_string(bound));
    }
    detail::note(r, std::to_string(done) + " sums from " + std::to_string(tried) + " draws");
    if (done < target) detail::flunk(r, "instance generation starved");
    return r;
}

// id 6.3: adding fans and strips to a base of order k never builds a
// K_{2,10k*2^k} minor; the observed parameters stay far below the bound
inline SuiteReport suite_augmentation_bound(Scale sc, std::uint32_t seed) {
    SuiteReport r = detail::make_report("6.3", "augmented hosts stay below the base-size minor bound");
    Rng rng(seed);
    long target = detail::by_scale(sc, 50, 200), skips = 0;
    int worst = 0;
    long smallest_bound = -1;
    for (long i = 0; i < target; ++i) {
        AugmentationPresentation p = random_presentation(rng);
        Graph g = augment(p);
        long k = p.base.order();
        long bound = 10 * k * (1L << k);
        if (smallest_bound < 0 || bound < smallest_bound) smallest_bound = bound;
        Budget bud;
        bud.remaining = 50'000'000;
        int mk;
        try {
            mk = max_k2(g, &bud);
        } catch (const WorkLimitExceeded&) {
            ++skips;
            continue;
        }
        worst = std::max(worst, mk);
        ++r.instances;
        if (mk >= bound)
            detail::flunk(r, "K_{2," + std::to_string(mk) + "} minor meets the bound " +
                                 std::to_string(bound) + " on " + detail::gdesc(g));
    }
    detail::note(r, "largest minor parameter " + std::to_string(worst) +
                        " against smallest bound " + std::to_string(smallest_bound) + ", " +
                        std::to_string(skips) + " over budget");
    return r;
}

// ---- extraction and surveys ------------------------------------------------------

// id roundtrip: presentations rebuild their host after extraction from the
// bare graph
inline SuiteReport suite_extraction_roundtrip(Scale sc, std::uint32_t seed) {
    SuiteReport r = detail::make_report("roundtrip", "extracted presentations rebuild their host");
    Rng rng(seed);
    long target = detail::by_scale(sc, 40, 200), done = 0, tried = 0, skips = 0;
    while (done < target && tried < target * 8) {
        ++tried;
        AugmentationPresentation p = random_presentation(rng);
        Graph g = augment(p);
        if (!is_internally_3connected(g)) continue;
        ++r.instances;
        ++done;
        try {
            AugmentationPresentation q = extract_augmentation(g, max_k2(g) + 1);
            if (!are_isomorphic(augment(q), g))
                detail::flunk(r, "rebuilt host differs on " + detail::gdesc(g));
        } catch (const WorkLimitExceeded&) {
            ++skips;
            --r.instances;
            --done;
        } catch (const std::exception& e) {
            detail::flunk(r, "extraction failed on " + detail::gdesc(g) + ": " + e.what());
        }
    }
    detail::note(r, std::to_string(done) + " round trips from " + std::to_string(tried) +
                        " draws, " + std::to_string(skips) + " over budget");
    if (done < target) detail::flunk(r, "instance generation starved");
    return r;
}

// id degree-survey: record the maximum degree seen across 4-connected hosts
// with no K_{2,4} minor; observational, no asserted threshold
inline SuiteReport suite_degree_survey(Scale sc, std::uint32_t seed) {
    SuiteReport r = detail::make_report("degree-survey", "degree ceiling of 4-connected K_{2,4}-free samples");
    Rng rng(seed);
    long draws = detail::by_scale(sc, 80, 400), samples = 0;
    int worst = 0;
    auto consider = [&](const Graph& g) {
        ++r.instances;
        if (!is_k_connected(g, 4) || has_k2n_minor(g, 4)) return;
        ++samples;
        for (int v : g.vertices()) worst = std::max(worst, g.degree(v));
    };
    consider(complete_graph(5));
    consider(complete_graph(6) /* carries a K_{2,4} minor, filtered out */);
    for (long i = 0; i < draws; ++i) consider(random_graph(5 + rng.below(6), 55 + rng.below(40), rng));
    detail::note(r, std::to_string(samples) + " qualifying samples from " +
                        std::to_string(r.instances) + " draws");
    detail::note(r, samples > 0 ? "maximum degree observed: " + std::to_string(worst)
                                : "no qualifying samples this run");
    return r;
}

// ---- registry --------------------------------------------------------------------

struct SuiteEntry {
    const char* id;
    SuiteReport (*fn)(Scale, std::uint32_t);
};

inline const std::vector<SuiteEntry>& suite_registry() {
    static const std::vector<SuiteEntry> entries{
        {"2.3", suite_catalogue_cut_free},
        {"2.6", suite_decompose_roundtrip},
        {"2.9", suite_chain_witnesses},
        {"3.1", suite_terminal_fallback},
        {"3.2", suite_interleave_dichotomy},
        {"3.3", suite_matrix_patterns},
        {"3.4", suite_anchored_nonseparating},
        {"4.1", suite_neighbor_windows},
        {"4.2", suite_capture_pieces},
        {"4.3", suite_degree2_runs},
        {"4.4", suite_long_nonseparating},
        {"5.1", suite_fan_centers},
        {"5.5", suite_strip_isolation},
        {"6.1", suite_chord_diagram_bound},
        {"6.2", suite_two_sum_bound},
        {"6.3", suite_augmentation_bound},
        {"roundtrip", suite_extraction_roundtrip},
        {"degree-survey", suite_degree_survey},
    };
    return entries;
}

inline std::vector<std::string> suite_ids() {
    std::vector<std::string> out;
    for (const SuiteEntry& e : suite_registry()) out.push_back(e.id);
    return out;
}

inline SuiteReport run_suite(const std::string& id, Scale sc, std::uint32_t seed) {
    for (const SuiteEntry& e : suite_registry())
        if (id == e.id) return e.fn(sc, seed);
    throw std::invalid_argument("run_suite: unknown suite id '" + id + "'");
}

} // namespace k2n
