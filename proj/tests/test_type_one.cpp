#include <catch2/catch_amalgamated.hpp>

#include "k2n/graph.hpp"
#include "k2n/minor.hpp"
#include "k2n/type_one.hpp"

using namespace k2n;

namespace {

ChordDiagram diag(int n, std::vector<Edge> chords) {
    ChordDiagram d;
    for (int i = 0; i < n; ++i) d.cycle.push_back(i);
    for (Edge& e : chords) d.chords.push_back(mk_edge(e.first, e.second));
    return d;
}

} // namespace

TEST_CASE("diagram validation") {
    std::string why;
    CHECK(validate_diagram(diag(5, {{0, 2}}), &why));
    CHECK(why.empty());
    CHECK_FALSE(validate_diagram(diag(2, {})));
    CHECK_FALSE(validate_diagram(diag(5, {{0, 7}}), &why));   // end off the cycle
    CHECK_FALSE(validate_diagram(diag(5, {{0, 1}})));         // duplicates a cycle edge
    CHECK_FALSE(validate_diagram(diag(5, {{4, 0}})));         // wrap-around cycle edge
    CHECK_FALSE(validate_diagram(diag(6, {{0, 2}, {2, 0}}))); // duplicate chord

    ChordDiagram rep = diag(4, {});
    rep.cycle[2] = 0;
    CHECK_FALSE(validate_diagram(rep, &why));
    CHECK(why == "repeated vertex on cycle");
}

TEST_CASE("diagram reconstructs its graph") {
    ChordDiagram d = diag(5, {{0, 2}, {1, 4}});
    Graph g = d.graph();
    CHECK(g.order() == 5);
    CHECK(g.size() == 7);
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(4, 0));
}

TEST_CASE("chord crossing is interleaving, symmetric, and rotation-proof") {
    ChordDiagram d = diag(6, {{0, 3}, {1, 4}, {2, 4}, {0, 2}, {3, 5}});
    CHECK(chords_cross(d, {0, 3}, {1, 4}));
    CHECK(chords_cross(d, {1, 4}, {0, 3}));
    CHECK(chords_cross(d, {0, 3}, {2, 4})); // wraps past position 0
    CHECK_FALSE(chords_cross(d, {0, 2}, {3, 5}));
    CHECK(chords_cross(d, {2, 4}, {0, 3}) == chords_cross(d, {0, 3}, {2, 4}));
    CHECK_THROWS_AS(chords_cross(d, {0, 3}, {0, 2}), std::invalid_argument); // share an end
    CHECK_THROWS_AS(chords_cross(d, {0, 3}, {1, 5}), std::invalid_argument); // not a chord
}

TEST_CASE("membership accepts the legal crossing patterns") {
    // C4 plus both diagonals is K4: one crossing pair, all four spanned
    // edges on the cycle
    CHECK(is_type_one(diag(4, {{0, 2}, {1, 3}})));
    // crossing ends sit consecutively: 0-1 and 3-4 are cycle edges
    CHECK(is_type_one(diag(6, {{0, 3}, {1, 4}})));
    // no crossings at all
    CHECK(is_type_one(diag(6, {{0, 2}, {3, 5}})));
    CHECK(is_type_one(diag(7, {})));
    // incident chords never cross, a fan is fine
    CHECK(is_type_one(diag(7, {{0, 2}, {0, 3}, {0, 4}, {0, 5}})));
}

TEST_CASE("membership rejects bad crossings") {
    // 0-4 and 2-6 cross but no spanned pair lies on the cycle
    CHECK_FALSE(is_type_one(diag(8, {{0, 4}, {2, 6}})));
    // middle chord crosses two others
    CHECK_FALSE(is_type_one(diag(6, {{0, 3}, {1, 4}, {2, 5}})));
    // one leg consecutive, the other not
    CHECK_FALSE(is_type_one(diag(8, {{0, 4}, {1, 6}})));
}

TEST_CASE("recognition searches over reference cycles") {
    auto c7 = recognize_type_one(cycle_graph(7));
    REQUIRE(c7.has_value());
    CHECK(c7->chords.empty());
    CHECK(are_isomorphic(c7->graph(), cycle_graph(7)));

    auto k4 = recognize_type_one(complete_graph(4));
    REQUIRE(k4.has_value());
    CHECK(is_type_one(*k4));
    CHECK(are_isomorphic(k4->graph(), complete_graph(4)));

    // a working cycle exists even though the obvious bipartite order fails
    auto k33e = recognize_type_one(k33_minus_e());
    REQUIRE(k33e.has_value());
    CHECK(are_isomorphic(k33e->graph(), k33_minus_e()));

    // no Hamiltonian cycle at all
    CHECK_FALSE(recognize_type_one(complete_bipartite(2, 3)).has_value());
    CHECK_FALSE(recognize_type_one(petersen_graph()).has_value());
    // K5 is Hamiltonian but every cycle leaves a chord crossing twice
    CHECK_FALSE(recognize_type_one(complete_graph(5)).has_value());

    CHECK_THROWS_AS(recognize_type_one(complete_graph(4), 3), std::invalid_argument);
}

TEST_CASE("random members pass the membership test") {
    for (int n : {3, 4, 6, 9, 12, 16}) {
        for (std::uint32_t seed = 1; seed <= 8; ++seed) {
            ChordDiagram d = random_type_one(n, seed);
            REQUIRE(validate_diagram(d));
            REQUIRE(is_type_one(d));
            CHECK(d.graph().order() == n);
        }
    }
    CHECK(random_type_one(3, 5).chords.empty()); // a triangle admits no chord
    CHECK_THROWS_AS(random_type_one(2, 1), std::invalid_argument);
}

TEST_CASE("random members have small complete bipartite minors") {
    for (std::uint32_t seed = 1; seed <= 6; ++seed) {
        Graph g = random_type_one(10, seed).graph();
        CHECK(max_k2(g) <= 4);
    }
}

TEST_CASE("diagram json round trip") {
    ChordDiagram d = diag(6, {{0, 3}, {1, 4}});
    ChordDiagram back = diagram_from_json(diagram_to_json(d));
    CHECK(back.cycle == d.cycle);
    CHECK(back.chords == d.chords);

    nlohmann::json bad = {{"cycle", {0, 1}}, {"chords", nlohmann::json::array()}};
    CHECK_THROWS_AS(diagram_from_json(bad), std::invalid_argument);
}
