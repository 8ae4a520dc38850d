#include <catch2/catch_amalgamated.hpp>

#include "k2n/enumerate.hpp"
#include "k2n/fan_strip.hpp"
#include "k2n/graph.hpp"
#include "k2n/isomorphism.hpp"
#include "k2n/minor.hpp"
#include "k2n/sum_decomp.hpp"

#include <algorithm>
#include <set>

using namespace k2n;

namespace {

Graph shifted(const Graph& g, int off) {
    std::map<int, int> to;
    for (int v : g.vertices()) to[v] = v + off;
    return relabel(g, to);
}

// longest chord chain by exhaustive subset scan, for cross-checking the DP
int brute_strip_length(const Strip& s) {
    auto ch = strip_chord_positions(s);
    int n = int(ch.size()), best = 0;
    REQUIRE(n <= 12);
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<std::pair<int, int>> pick;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) pick.push_back(ch[size_t(i)]);
        bool chain = true;
        for (size_t a = 0; a < pick.size() && chain; ++a)
            for (size_t b = a + 1; b < pick.size() && chain; ++b) {
                auto [i1, j1] = pick[a];
                auto [i2, j2] = pick[b];
                chain = (i1 < i2 && j1 < j2) || (i2 < i1 && j2 < j1);
            }
        if (chain) best = std::max(best, int(pick.size()));
    }
    return best;
}

// boundary paths 0..n-1 and 10..10+n-1 with every rung present
Strip full_ladder(int n) {
    std::vector<int> p1, p2;
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) {
        p1.push_back(i);
        p2.push_back(10 + i);
        if (i) {
            es.push_back(mk_edge(i - 1, i));
            es.push_back(mk_edge(10 + i - 1, 10 + i));
        }
        es.push_back(mk_edge(i, 10 + i));
    }
    return strip_from_parts(p1, p2, es);
}

Graph bowtie() {
    return Graph({0, 1, 2, 3, 4}, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

Graph prism() {
    return Graph({0, 1, 2, 3, 4, 5},
                 {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

} // namespace

TEST_CASE("make_fan builds the canonical shapes") {
    Fan f1 = make_fan(1);
    CHECK(f1.length == 1);
    CHECK_FALSE(f1.nontrivial());
    CHECK(are_isomorphic(f1.graph, k4_minus_e()));

    Fan f2 = make_fan(2);
    CHECK(f2.graph.order() == 5);
    CHECK(f2.graph.size() == 7);
    CHECK(f2.nontrivial());
    CHECK(f2.corners() == std::array<int, 3>{0, 1, 4});

    Fan f3 = make_fan(3, {1, 0, 0, 1});
    CHECK(f3.graph.order() == 8);
    CHECK(f3.rim.verts.size() == 7);
    CHECK(f3.length == 3);
    CHECK(is_fan(f3));

    CHECK_THROWS_AS(make_fan(0), std::invalid_argument);
    CHECK_THROWS_AS(make_fan(2, {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(make_fan(2, {0, -1, 0}), std::invalid_argument);
}

TEST_CASE("the fan validator pins down each failure mode") {
    Fan good = make_fan(2);
    std::string why;
    REQUIRE(is_fan(good, &why));
    CHECK(why.empty());

    Fan f = good;
    f.length = 3;
    CHECK_FALSE(is_fan(f, &why));
    CHECK(why == "stored length is off");

    f = good;
    f.graph = f.graph.with_vertex(99);
    CHECK_FALSE(is_fan(f, &why));
    CHECK(why == "stray vertex");

    f = good;
    std::swap(f.rim.verts[0], f.rim.verts[1]);
    CHECK_FALSE(is_fan(f, &why));
    CHECK(why == "rim is not a path of the graph");

    f = good;
    f.graph = f.graph.with_edge(f.rim.verts[0], f.rim.verts[2]);
    CHECK_FALSE(is_fan(f, &why));
    CHECK(why == "edge off the rim path");

    // center joined to the rim ends only: the cycle has no chord at all
    Fan bare{Graph({0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}), 0, Path{{1, 2, 3}}, 0};
    CHECK_FALSE(is_fan(bare, &why));
    CHECK(why == "no chords");
}

TEST_CASE("regular strips match the small complete bipartite shapes") {
    Strip r1 = regular_strip(1);
    CHECK(are_isomorphic(r1.graph, cycle_graph(4)));
    CHECK(r1.length == 1);

    Strip r2 = regular_strip(2);
    CHECK(are_isomorphic(r2.graph, complete_bipartite(2, 4)));
    CHECK(r2.length == 2);

    for (int k = 1; k <= 5; ++k) {
        Strip r = regular_strip(k);
        CHECK(r.graph.order() == 2 * k + 2);
        CHECK(r.graph.size() == 4 * k);
        CHECK(strip_length(r) == k);
        CHECK(r.corners() == std::array<int, 4>{0, 1, 2 * k + 1, 2 * k});
    }
    CHECK_THROWS_AS(regular_strip(0), std::invalid_argument);
}

TEST_CASE("regular strips arise as chains of two-summed pieces") {
    for (int k = 1; k <= 3; ++k) {
        Graph cur = k33_minus_e();
        for (int i = 1; i < k; ++i) {
            Graph next = shifted(k33_minus_e(), 100 * i);
            TwoSum s = two_sum(cur, degree2_vertices(cur)[0], next, degree2_vertices(next)[0]);
            cur = s.graph;
        }
        Graph trimmed = delete_vertices(cur, degree2_vertices(cur));
        CHECK(are_isomorphic(trimmed, regular_strip(k).graph));
    }
}

TEST_CASE("strip_from_parts rejects malformed boundaries") {
    // an edge skipping along a boundary path
    CHECK_THROWS_AS(strip_from_parts({0, 1, 2}, {3, 4, 5},
                                     {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {0, 3}, {2, 5},
                                      {1, 4}}),
                    std::invalid_argument);
    // overlapping paths
    CHECK_THROWS_AS(strip_from_parts({0, 1}, {1, 2}, {{0, 1}, {1, 2}, {0, 2}}),
                    std::invalid_argument);
    // a corner of degree one
    CHECK_THROWS_AS(strip_from_parts({0, 1, 2}, {3, 4, 5},
                                     {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {1, 4}, {2, 4}}),
                    std::invalid_argument);
    // chords 0-6 and 2-4 cross far from each other's ends
    CHECK_THROWS_AS(strip_from_parts({0, 1, 2, 3}, {4, 5, 6, 7},
                                     {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7}, {0, 4},
                                      {3, 7}, {0, 6}, {2, 4}}),
                    std::invalid_argument);
}

TEST_CASE("strip_length is the longest chain of noncrossing chords") {
    // two chords forming a single unit cross collapse to length one
    Strip cross = strip_from_parts({0, 1, 2}, {3, 4, 5},
                                   {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {2, 5}, {0, 4},
                                    {1, 3}});
    CHECK(strip_length(cross) == 1);

    CHECK(strip_length(full_ladder(6)) == 4); // end rungs are cycle edges, not chords

    for (int k = 2; k <= 5; ++k) {
        Strip r = regular_strip(k);
        CHECK(strip_length(r) == brute_strip_length(r));
    }
    CHECK(strip_length(cross) == brute_strip_length(cross));
    CHECK(strip_length(full_ladder(5)) == brute_strip_length(full_ladder(5)));
}

TEST_CASE("make_J glues regular strips onto a complete core") {
    CHECK(are_isomorphic(make_J(1, 1), complete_graph(4)));

    Graph j12 = make_J(1, 2);
    CHECK(j12.order() == 6);
    CHECK(j12.size() == 14);
    CHECK(max_k2(j12) == 4);

    Graph j22 = make_J(2, 2);
    CHECK(j22.order() == 12);
    CHECK(j22.size() == 28 + 16);
    CHECK(is_internally_3connected(j22));
    CHECK(is_internally_3connected(make_J(1, 3)));

    CHECK_THROWS_AS(make_J(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_J(1, 0), std::invalid_argument);
}

TEST_CASE("augment enforces the corner sharing rule") {
    Graph base = complete_graph(6);
    Fan fan = make_fan(2);
    Strip strip = regular_strip(1);

    // fan center on a strip corner is the one legal overlap
    AugmentationPresentation mixed{base, {{fan, {0, 1, 2}}}, {{strip, {0, 3, 4, 5}}}};
    Graph g = augment(mixed);
    CHECK(g.order() == 6 + 2);
    CHECK(is_internally_3connected(g));

    // two fans may share their center
    AugmentationPresentation twofan{base, {{fan, {0, 1, 2}}, {fan, {0, 3, 4}}}, {}};
    CHECK(augment(twofan).order() == 6 + 4);

    auto rejected = [&](AugmentationPresentation p) {
        CHECK_THROWS_AS(augment(p), std::invalid_argument);
    };
    // strip corners may not meet each other
    rejected({base, {}, {{strip, {0, 1, 2, 3}}, {strip, {0, 3, 4, 5}}}});
    // a fan end may not meet anything
    rejected({base, {{fan, {1, 0, 2}}}, {{strip, {0, 3, 4, 5}}}});
    rejected({base, {{fan, {0, 1, 2}}, {fan, {3, 1, 4}}}, {}});
    // corners map to distinct vertices inside the base
    rejected({base, {{fan, {0, 1, 1}}}, {}});
    rejected({base, {{fan, {0, 1, 99}}}, {}});
}

TEST_CASE("class A and A-prime classify presentations") {
    AugmentationPresentation j{complete_graph(4), {}, {{regular_strip(2), {0, 1, 2, 3}}}};
    CHECK(in_class_A(j, 4));
    CHECK(in_class_A_prime(j, 4));
    CHECK_FALSE(in_class_A(j, 3)); // base too big

    AugmentationPresentation withfan{complete_graph(5),
                                     {{make_fan(2), {0, 1, 2}}},
                                     {{regular_strip(1), {1, 2, 3, 4}}}};
    CHECK_FALSE(in_class_A(withfan, 5)); // fan end 1 collides with a strip corner
    withfan.fans[0].to = {0, 1, 2};
    withfan.strips[0].to = {0, 2, 3, 4};
    CHECK_FALSE(in_class_A(withfan, 5)); // fan end 2 still collides
    AugmentationPresentation legalfan{complete_graph(6),
                                      {{make_fan(2), {0, 1, 2}}},
                                      {{regular_strip(1), {0, 3, 4, 5}}}};
    CHECK(in_class_A(legalfan, 6));
    CHECK_FALSE(in_class_A_prime(legalfan, 6)); // fans bar the prime class
}

TEST_CASE("neighbor_run finds confined windows") {
    Fan f = make_fan(3);
    Graph g = f.graph;
    auto whole = neighbor_run(g, f.rim, 0, 5);
    REQUIRE(whole.has_value());
    CHECK(whole->verts == f.rim.verts);

    auto first = neighbor_run(g, f.rim, 0, 2);
    REQUIRE(first.has_value());
    CHECK(first->verts == std::vector<int>{1, 2});

    // an outside attachment poisons every window through rim vertex 2
    Graph dirty = g.with_edge(9, 2);
    auto shiftedrun = neighbor_run(dirty, f.rim, 0, 2);
    REQUIRE(shiftedrun.has_value());
    CHECK(shiftedrun->verts == std::vector<int>{3, 4});
    CHECK_FALSE(neighbor_run(dirty, f.rim, 0, 4).has_value());

    CHECK_THROWS_AS(neighbor_run(g, f.rim, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(neighbor_run(g, f.rim, 1, 2), std::invalid_argument); // x on the path
    CHECK_THROWS_AS(neighbor_run(complete_graph(4), Path{{0, 1, 2}}, 3, 1),
                    std::invalid_argument); // path not induced
}

TEST_CASE("capture_between_paths recovers fans and strips") {
    Fan f = make_fan(2);
    auto cf = capture_between_paths(f.graph, f.rim, Path{{0}}, 2);
    REQUIRE(cf.has_value());
    REQUIRE(cf->fan.has_value());
    CHECK_FALSE(cf->strip.has_value());
    CHECK(cf->fan->length >= 2);
    CHECK(cf->fan->center == 0);

    Strip r3 = regular_strip(3);
    auto cs = capture_between_paths(r3.graph, r3.p1, r3.p2, 3);
    REQUIRE(cs.has_value());
    REQUIRE(cs->strip.has_value());
    CHECK(strip_length(*cs->strip) == 3);

    Strip lad = full_ladder(6);
    auto cl = capture_between_paths(lad.graph, lad.p1, lad.p2, 4);
    REQUIRE(cl.has_value());
    REQUIRE(cl->strip.has_value());

    Strip r1 = regular_strip(1);
    CHECK_FALSE(capture_between_paths(r1.graph, r1.p1, r1.p2, 2).has_value());

    Graph c6 = cycle_graph(6);
    CHECK_THROWS_AS(capture_between_paths(c6, Path{{0, 1}}, Path{{3, 4}}, 1),
                    std::invalid_argument); // paths must cover the graph
    CHECK_THROWS_AS(capture_between_paths(c6, Path{{0, 1, 2}}, Path{{2, 3, 4, 5}}, 1),
                    std::invalid_argument); // overlap
}

TEST_CASE("degree2_path_near walks the long rim") {
    Graph w8 = wheel_graph(8);
    auto p = degree2_path_near(w8, {0}, 3);
    REQUIRE(p.has_value());
    CHECK(p->length() == 7);
    std::set<int> got(p->verts.begin(), p->verts.end());
    CHECK(got == std::set<int>{1, 2, 3, 4, 5, 6, 7, 8});

    CHECK_FALSE(degree2_path_near(w8, {0}, 4).has_value()); // needs length 8
    CHECK_FALSE(degree2_path_near(complete_graph(5), {0}, 1).has_value());

    CHECK_THROWS_AS(degree2_path_near(w8, {0}, 0), std::invalid_argument);
    CHECK_THROWS_AS(degree2_path_near(w8, {}, 1), std::invalid_argument);
    CHECK_THROWS_AS(degree2_path_near(w8, {99}, 1), std::invalid_argument);
    CHECK_THROWS_AS(degree2_path_near(w8, {1, 4}, 1), std::invalid_argument); // disconnected
    auto all = complete_graph(4).vertices();
    CHECK_THROWS_AS(degree2_path_near(complete_graph(4), all, 1),
                    std::invalid_argument); // empty complement
    CHECK_THROWS_AS(degree2_path_near(bowtie(), {0}, 1), std::invalid_argument);
}

TEST_CASE("long_nonseparating_path meets the length targets") {
    auto verify = [](const Graph& g, int m) {
        auto p = long_nonseparating_path(g, m);
        REQUIRE(p.has_value());
        CHECK(p->length() >= m);
        CHECK(is_induced_path_of(g, *p));
        CHECK(is_connected(delete_vertices(g, p->verts)));
    };
    verify(complete_graph(4), 1);
    verify(wheel_graph(8), 4);
    verify(prism(), 2);
    verify(cycle_graph(6), 4);

    CHECK_FALSE(long_nonseparating_path(complete_graph(4), 5).has_value());
    CHECK(long_nonseparating_path(complete_graph(4), 0)->length() == 0);
    CHECK_FALSE(long_nonseparating_path(Graph(), 1).has_value());
    CHECK_THROWS_AS(long_nonseparating_path(complete_graph(4), -1), std::invalid_argument);
}

TEST_CASE("find_maximal_fans enumerates the wheel and glued cases") {
    auto fans = find_maximal_fans(complete_graph(4));
    CHECK(fans.size() == 6);
    for (const Fan& f : fans) {
        CHECK(f.length == 1);
        CHECK(are_isomorphic(f.graph, k4_minus_e()));
    }

    fans = find_maximal_fans(wheel_graph(5));
    CHECK(fans.size() == 5);
    for (const Fan& f : fans) {
        CHECK(f.center == 0);
        CHECK(f.length == 3);
        CHECK(is_fan_of(wheel_graph(5), f));
    }

    fans = find_maximal_fans(wheel_graph(4));
    CHECK(fans.size() == 4);
    for (const Fan& f : fans) CHECK(f.length == 2);

    fans = find_maximal_fans(k4_minus_e());
    REQUIRE(fans.size() == 1);
    CHECK(fans[0].length == 1);
    CHECK(fans[0].graph == k4_minus_e());

    CHECK(find_maximal_fans(cycle_graph(5)).empty());

    // a glued fan is recovered exactly, subdivision and all
    Fan glued = make_fan(2, {0, 1, 0});
    Graph host = augment({complete_graph(5), {{glued, {0, 1, 2}}}, {}});
    fans = find_maximal_fans(host);
    std::vector<Fan> big;
    for (const Fan& f : fans)
        if (f.nontrivial()) big.push_back(f);
    REQUIRE(big.size() == 1);
    CHECK(big[0].length == 2);
    CHECK(big[0].rim.verts.size() == 5);
    CHECK(big[0].center == 0);

    Budget tiny{3};
    CHECK_THROWS_AS(find_maximal_fans(wheel_graph(5), &tiny), WorkLimitExceeded);
}

TEST_CASE("find_maximal_strips dedups to distinct subgraphs") {
    Graph j13 = make_J(1, 3);
    auto strips = find_maximal_strips(j13, 2);
    CHECK(strips.size() == 4);
    bool natural = false;
    for (const Strip& s : strips) {
        CHECK(is_strip_of(j13, s));
        auto c = s.corners();
        std::set<int> cs(c.begin(), c.end());
        if (cs == std::set<int>{0, 1, 2, 3} && strip_length(s) == 3) natural = true;
    }
    CHECK(natural);
    for (size_t a = 0; a < strips.size(); ++a)
        for (size_t b = 0; b < strips.size(); ++b)
            if (a != b) CHECK_FALSE(is_subgraph(strips[a].graph, strips[b].graph));

    // a bare strip is its own single maximal strip
    Strip r4 = regular_strip(4);
    strips = find_maximal_strips(r4.graph, 1);
    REQUIRE(strips.size() == 1);
    CHECK(strips[0].graph == r4.graph);
    CHECK(strip_length(strips[0]) == 4);

    // K4 threads as one strip of length one, so a floor of two leaves nothing
    strips = find_maximal_strips(complete_graph(4), 1);
    REQUIRE(strips.size() == 1);
    CHECK(strips[0].graph == complete_graph(4));
    CHECK(strip_length(strips[0]) == 1);
    CHECK(find_maximal_strips(complete_graph(4), 2).empty());

    Budget tiny{10};
    CHECK_THROWS_AS(find_maximal_strips(j13, 2, &tiny), WorkLimitExceeded);
}

TEST_CASE("pairwise interactions carry the right tags") {
    // the two glued strips of make_J(2, 2) meet the core at separate blocks
    Graph j22 = make_J(2, 2);
    Strip s0 = strip_from_parts({0, 8, 2}, {1, 9, 3},
                                {{0, 8}, {0, 9}, {1, 8}, {1, 9}, {8, 2}, {8, 3}, {9, 2},
                                 {9, 3}});
    Strip s1 = strip_from_parts({4, 10, 6}, {5, 11, 7},
                                {{4, 10}, {4, 11}, {5, 10}, {5, 11}, {10, 6}, {10, 7},
                                 {11, 6}, {11, 7}});
    REQUIRE(is_strip_of(j22, s0));
    REQUIRE(is_strip_of(j22, s1));
    CHECK(check_pairwise_interaction(j22, s0, s1) == Interaction::almost_disjoint);

    auto fans = find_maximal_fans(wheel_graph(5));
    REQUIRE(fans.size() >= 2);
    CHECK(check_pairwise_interaction(wheel_graph(5), fans[0], fans[1]) ==
          Interaction::same_center);
    CHECK(std::string(interaction_name(Interaction::same_center)) == "same-center");
}

TEST_CASE("a fan sitting inside a strip is embedded") {
    std::vector<int> p1, p2;
    std::vector<Edge> es;
    for (int i = 0; i <= 7; ++i) {
        p1.push_back(i);
        p2.push_back(10 + i);
        if (i) {
            es.push_back(mk_edge(i - 1, i));
            es.push_back(mk_edge(10 + i - 1, 10 + i));
        }
    }
    es.push_back(mk_edge(0, 10));
    es.push_back(mk_edge(7, 17));
    es.push_back(mk_edge(1, 11));
    es.push_back(mk_edge(6, 16));
    for (int t = 3; t <= 6; ++t) es.push_back(mk_edge(t, 13));
    Strip s = strip_from_parts(p1, p2, es);

    std::vector<int> rim{3, 4, 5, 6};
    std::vector<Edge> fes{{3, 4}, {4, 5}, {5, 6}, {13, 3}, {13, 4}, {13, 5}, {13, 6}};
    Fan f{Graph({3, 4, 5, 6, 13}, fes), 13, Path{rim}, 2};
    REQUIRE(is_fan_of(s.graph, f));

    CHECK(check_pairwise_interaction(s.graph, f, s) == Interaction::embedded);
    CHECK(check_pairwise_interaction(s.graph, s, f) == Interaction::embedded);
}

TEST_CASE("a sub-ladder of a ladder is embedded") {
    Strip outer = full_ladder(5);
    std::vector<Edge> es{{1, 2}, {2, 3}, {11, 12}, {12, 13}, {1, 11}, {2, 12}, {3, 13}};
    Strip inner = strip_from_parts({1, 2, 3}, {11, 12, 13}, es);
    REQUIRE(is_strip_of(outer.graph, inner));
    CHECK(check_pairwise_interaction(outer.graph, inner, outer) == Interaction::embedded);
    CHECK(check_pairwise_interaction(outer.graph, outer, inner) == Interaction::embedded);
}

TEST_CASE("a basic fan hanging off a strip corner agrees with it") {
    std::vector<int> p1, p2;
    std::vector<Edge> es;
    for (int i = 0; i <= 7; ++i) {
        p1.push_back(i);
        p2.push_back(10 + i);
        if (i) {
            es.push_back(mk_edge(i - 1, i));
            es.push_back(mk_edge(10 + i - 1, 10 + i));
        }
        if (i >= 1 && i <= 6) es.push_back(mk_edge(i, 10 + i));
    }
    es.push_back(mk_edge(0, 10));
    es.push_back(mk_edge(7, 17));
    es.push_back(mk_edge(0, 11));
    Strip s = strip_from_parts(p1, p2, es);
    REQUIRE(strip_length(s) == 6);

    Graph host = s.graph;
    for (Edge e : {mk_edge(10, 20), mk_edge(20, 21), mk_edge(21, 0), mk_edge(0, 20)})
        host = host.with_edge(e.first, e.second);

    std::vector<Edge> fes{{11, 10}, {10, 20}, {20, 21}, {0, 11}, {0, 21}, {0, 10}, {0, 20}};
    Fan f{Graph({0, 10, 11, 20, 21}, fes), 0, Path{{11, 10, 20, 21}}, 2};
    REQUIRE(is_fan_of(host, f));
    REQUIRE(is_strip_of(host, s));

    CHECK(check_pairwise_interaction(host, f, s) == Interaction::agrees);
    CHECK(check_pairwise_interaction(host, s, f) == Interaction::agrees);
}

TEST_CASE("overlapping interiors with different centers are a violation") {
    Graph k4 = complete_graph(4);
    Fan f1{Graph({0, 1, 2, 3}, {{1, 2}, {1, 3}, {0, 1}, {0, 2}, {0, 3}}), 0, Path{{2, 1, 3}}, 1};
    Fan f2{Graph({0, 1, 2, 3}, {{0, 1}, {1, 3}, {0, 2}, {1, 2}, {2, 3}}), 2, Path{{0, 1, 3}}, 1};
    REQUIRE(is_fan_of(k4, f1));
    REQUIRE(is_fan_of(k4, f2));
    CHECK(check_pairwise_interaction(k4, f1, f2) == Interaction::violation);

    CHECK_THROWS_AS(check_pairwise_interaction(k4, f1, f1), std::invalid_argument);
    CHECK_THROWS_AS(check_pairwise_interaction(complete_graph(5), f1, f2),
                    std::invalid_argument); // pieces must close in the host
}

TEST_CASE("normal form scripts reduce strips to the two-chord core") {
    Strip r5 = regular_strip(5);
    auto script = normal_form_script(r5);
    REQUIRE(script.has_value());
    CHECK(script->size() == 12); // 8 chord deletions, 4 boundary contractions
    Graph reduced = apply_script(r5.graph, *script);
    CHECK(reduced.order() == 8);
    CHECK(reduced.size() == 8);
    Graph expect({0, 1, 2, 3, 10, 11, 12, 13},
                 {{0, 1}, {1, 2}, {2, 3}, {10, 11}, {11, 12}, {12, 13}, {1, 11}, {2, 12}});
    CHECK(are_isomorphic(reduced, expect));

    // boundary slots survive the reduction
    Strip lad = full_ladder(5);
    auto ls = normal_form_script(lad);
    REQUIRE(ls.has_value());
    Graph lred = apply_script(lad.graph, *ls);
    CHECK(lred.order() == 8);
    CHECK(lred.size() == 10);
    CHECK(are_isomorphic(lred, expect.with_edge(0, 10).with_edge(3, 13)));

    // the surviving pair must sit strictly inside both boundary paths
    CHECK_FALSE(normal_form_script(regular_strip(1)).has_value());
    CHECK_FALSE(normal_form_script(regular_strip(3)).has_value());
    CHECK(normal_form_script(regular_strip(4)).has_value());
}

TEST_CASE("scripts replay literal edge operations") {
    nlohmann::json ops = nlohmann::json::array();
    ops.push_back({{"op", "delete_edge"}, {"u", 0}, {"v", 1}});
    ops.push_back({{"op", "contract_edge"}, {"u", 2}, {"v", 3}});
    Graph g = apply_script(cycle_graph(5), ops);
    CHECK(g == Graph({0, 1, 2, 4}, {{1, 2}, {2, 4}, {0, 4}}));

    nlohmann::json bad = nlohmann::json::array();
    bad.push_back({{"op", "subdivide"}, {"u", 0}, {"v", 1}});
    CHECK_THROWS_AS(apply_script(cycle_graph(5), bad), std::invalid_argument);
}

TEST_CASE("extract_augmentation recovers natural presentations") {
    Graph j15 = make_J(1, 5);
    AugmentationPresentation p = extract_augmentation(j15, 5);
    CHECK(are_isomorphic(p.base, complete_graph(4)));
    CHECK(p.fans.empty());
    REQUIRE(p.strips.size() == 1);
    CHECK(strip_length(p.strips[0].strip) == 5);
    CHECK(are_isomorphic(augment(p), j15));

    Fan f3 = make_fan(3);
    Graph hostf = augment({complete_graph(5), {{f3, {0, 1, 2}}}, {}});
    p = extract_augmentation(hostf, 5);
    CHECK(are_isomorphic(p.base, complete_graph(5)));
    REQUIRE(p.fans.size() == 1);
    CHECK(p.strips.empty());
    CHECK(p.fans[0].fan.length == 3);
    CHECK(are_isomorphic(augment(p), hostf));

    AugmentationPresentation mixed{complete_graph(6),
                                   {{make_fan(2), {0, 1, 2}}},
                                   {{regular_strip(3), {0, 3, 4, 5}}}};
    Graph hostm = augment(mixed);
    p = extract_augmentation(hostm, 7);
    CHECK(are_isomorphic(p.base, complete_graph(6)));
    CHECK(p.fans.size() == 1);
    CHECK(p.strips.size() == 1);
    CHECK(are_isomorphic(augment(p), hostm));

    // nothing to peel leaves the host as its own base
    p = extract_augmentation(complete_graph(4), 3);
    CHECK(p.base == complete_graph(4));
    CHECK(p.fans.empty());
    CHECK(p.strips.empty());

    CHECK_THROWS_AS(extract_augmentation(complete_graph(6), 3),
                    std::invalid_argument); // forbidden minor present
    CHECK_THROWS_AS(extract_augmentation(bowtie(), 3), std::invalid_argument);
}

TEST_CASE("extraction untangles two strips on separate blocks") {
    Graph j22 = make_J(2, 2);
    AugmentationPresentation p = extract_augmentation(j22, 9);
    CHECK(are_isomorphic(p.base, complete_graph(8)));
    CHECK(p.fans.empty());
    CHECK(p.strips.size() == 2);
    CHECK(are_isomorphic(augment(p), j22));
}

TEST_CASE("random presentations round-trip through extraction") {
    Rng rng(2026);
    int done = 0, tried = 0;
    while (done < 25 && tried < 60) {
        ++tried;
        AugmentationPresentation p = random_presentation(rng);
        Graph g = augment(p);
        if (!is_internally_3connected(g)) continue;
        int n = max_k2(g) + 1;
        AugmentationPresentation q = extract_augmentation(g, n);
        CHECK(are_isomorphic(augment(q), g));
        CHECK(q.base.order() <= g.order());
        ++done;
    }
    CHECK(done == 25);
}

TEST_CASE("presentations serialize with their scripts") {
    AugmentationPresentation p{complete_graph(4),
                               {{make_fan(2), {0, 1, 2}}},
                               {{regular_strip(4), {0, 1, 2, 3}}}};
    nlohmann::json j = presentation_to_json(p);
    CHECK(graph_from_json(j.at("base")) == p.base);
    REQUIRE(j.at("additions").size() == 2);
    const auto& jf = j.at("additions")[0];
    CHECK(jf.at("type") == "fan");
    CHECK(jf.at("center") == 0);
    CHECK(jf.at("to").size() == 3);
    const auto& js = j.at("additions")[1];
    CHECK(js.at("type") == "strip");
    CHECK(js.at("length") == 4);
    CHECK(js.at("to").size() == 4);
    CHECK_FALSE(js.at("normal_form").is_null());
    CHECK(graph_from_json(js.at("graph")) == regular_strip(4).graph);
}
