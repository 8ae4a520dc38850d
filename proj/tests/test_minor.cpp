#include <catch2/catch_amalgamated.hpp>

#include "k2n/enumerate.hpp"
#include "k2n/graph.hpp"
#include "k2n/minor.hpp"

using namespace k2n;

TEST_CASE("brute force minor on pencil-checkable pairs") {
    CHECK(brute_force_minor(complete_graph(4), complete_graph(4)));
    CHECK_FALSE(brute_force_minor(complete_graph(4), complete_graph(5)));
    CHECK(brute_force_minor(cycle_graph(5), cycle_graph(3)));
    CHECK_FALSE(brute_force_minor(cycle_graph(5), complete_graph(4)));
    CHECK(brute_force_minor(complete_bipartite(2, 3), complete_bipartite(2, 2)));
    CHECK(brute_force_minor(wheel_graph(4), complete_graph(4)));
    CHECK_FALSE(brute_force_minor(path_graph(6), cycle_graph(3)));
    CHECK(brute_force_minor(k33_minus_e(), complete_bipartite(2, 3)));
    CHECK(brute_force_minor(Graph(3), Graph(0)));
    // the classics: contracting a perfect matching of the Petersen graph
    CHECK(brute_force_minor(petersen_graph(), complete_graph(5)));
    CHECK(brute_force_minor(petersen_graph(), complete_bipartite(3, 3)));
    CHECK_THROWS_AS(brute_force_minor(complete_graph(11), complete_graph(3)),
                    std::invalid_argument);
}

TEST_CASE("k2n witness verification") {
    Graph g = complete_bipartite(2, 3); // hubs 0,1; leaves 2,3,4
    K2nWitness w{{0}, {1}, {2, 3, 4}};
    std::string why;
    CHECK(verify_k2n_witness(g, w, 3, &why));
    CHECK(verify_k2n_witness(g, w, 2, &why)); // extra leaves are fine
    CHECK_FALSE(verify_k2n_witness(g, w, 4, &why));
    CHECK(why == "fewer than n leaves");
    CHECK_FALSE(verify_k2n_witness(g, K2nWitness{{0}, {0}, {2, 3}}, 2, &why));
    CHECK(why == "hubs share a vertex");
    CHECK_FALSE(verify_k2n_witness(g, K2nWitness{{0}, {1}, {2, 2}}, 2, &why));
    // the two hubs of K_{2,3} are not adjacent to each other
    CHECK_FALSE(verify_k2n_witness(g, K2nWitness{{0, 1}, {2}, {3, 4}}, 2, &why));
    CHECK(why == "hub1 is not connected");
    CHECK_FALSE(verify_k2n_witness(g, K2nWitness{{0}, {1}, {2, 9}}, 2, &why));
    CHECK(why == "leaf missing from graph");
    K2nWitness bad{{0}, {2}, {1, 3}};
    CHECK_FALSE(verify_k2n_witness(g, bad, 2, &why)); // leaf 3 not adjacent to leaf-side hub
}

TEST_CASE("witness json round trip") {
    K2nWitness w{{0, 1}, {5}, {2, 3}};
    K2nWitness back = witness_from_json(witness_to_json(w));
    CHECK(back.hub1 == w.hub1);
    CHECK(back.hub2 == w.hub2);
    CHECK(back.leaves == w.leaves);
}

TEST_CASE("k2n search on named graphs") {
    K2nWitness w;
    CHECK(has_k2n_minor(cycle_graph(4), 2, &w));
    CHECK(verify_k2n_witness(cycle_graph(4), w, 2));
    CHECK_FALSE(has_k2n_minor(cycle_graph(4), 3));

    CHECK(has_k2n_minor(complete_bipartite(2, 3), 3, &w));
    CHECK(verify_k2n_witness(complete_bipartite(2, 3), w, 3));

    CHECK(max_k2(complete_graph(4)) == 2);
    CHECK(max_k2(complete_graph(6)) == 4);
    CHECK(max_k2(delete_edge(complete_graph(6), 0, 1)) == 4);
    CHECK(max_k2(cycle_graph(6)) == 2);
    CHECK(max_k2(path_graph(4)) == 1);
    CHECK(max_k2(path_graph(2)) == 0);
    CHECK(max_k2(Graph(5)) == 0);
    CHECK(max_k2(k33_minus_e()) == 3);

    // disconnected hosts take the best component
    Graph two = disjoint_union(complete_graph(4),
                               relabel(complete_bipartite(2, 3), {{0, 10}, {1, 11}, {2, 12}, {3, 13}, {4, 14}}));
    CHECK(max_k2(two) == 3);
    CHECK_THROWS_AS(has_k2n_minor(cycle_graph(4), 0), std::invalid_argument);
}

TEST_CASE("every positive answer carries a checkable witness") {
    Rng rng(911);
    for (int t = 0; t < 40; ++t) {
        Graph g = random_graph(9, 35, rng);
        for (int n = 1; n <= 4; ++n) {
            K2nWitness w;
            if (has_k2n_minor(g, n, &w)) {
                std::string why;
                INFO(why);
                CHECK(verify_k2n_witness(g, w, n, &why));
            }
        }
    }
}

TEST_CASE("fast search agrees with brute force") {
    for (int n = 2; n <= 4; ++n) {
        Graph pattern = complete_bipartite(2, n);
        for (int order = 4; order <= 5; ++order)
            for (const Graph& g : connected_graphs(order))
                CHECK(has_k2n_minor(g, n) == brute_force_minor(g, pattern));
    }
    Rng rng(31337);
    for (int t = 0; t < 25; ++t) {
        Graph g = random_graph(8, 40, rng);
        for (int n = 2; n <= 4; ++n)
            CHECK(has_k2n_minor(g, n) == brute_force_minor(g, complete_bipartite(2, n)));
    }
}

TEST_CASE("k1n minors") {
    CHECK(has_k1n_minor(Graph(1), 0));
    CHECK_FALSE(has_k1n_minor(Graph(0), 0));
    CHECK(has_k1n_minor(path_graph(2), 1));
    CHECK(has_k1n_minor(path_graph(5), 2));
    CHECK_FALSE(has_k1n_minor(path_graph(9), 3)); // path minors are paths
    CHECK_FALSE(has_k1n_minor(cycle_graph(8), 3)); // cycle minors are cycles and paths
    CHECK(has_k1n_minor(complete_graph(4), 3));
    CHECK(has_k1n_minor(complete_bipartite(1, 5), 5));
    CHECK_FALSE(has_k1n_minor(complete_bipartite(1, 5), 6));
    // spider with three legs of length two: contract each leg
    Graph spider = Graph({0, 1, 2, 3, 4, 5, 6},
                         {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    CHECK(has_k1n_minor(spider, 3));
    CHECK_FALSE(has_k1n_minor(spider, 4));
    // a claw around any vertex sees the six remaining vertices, and
    // |N(H)| <= min(|H|+2, 10-|H|) rules out seven
    CHECK(has_k1n_minor(petersen_graph(), 6));
    CHECK_FALSE(has_k1n_minor(petersen_graph(), 7));
}

TEST_CASE("minor model verification") {
    Graph g = cycle_graph(6);
    MinorModel m;
    m.branch_sets[0] = {0, 1};
    m.branch_sets[1] = {2};
    m.branch_sets[2] = {3, 4, 5};
    std::string why;
    CHECK(verify_minor_model(g, cycle_graph(3), m, &why));
    m.branch_sets[2] = {3, 5}; // not connected in C6 once 4 is gone
    CHECK_FALSE(verify_minor_model(g, cycle_graph(3), m, &why));
    CHECK(why == "branch set of 2 is not connected");
    m.branch_sets[2] = {2, 3};
    CHECK_FALSE(verify_minor_model(g, cycle_graph(3), m, &why));
    CHECK(why == "branch sets overlap");
    m.branch_sets[2] = {4};
    CHECK_FALSE(verify_minor_model(g, cycle_graph(3), m, &why)); // edge 0-2 unrealized
    m.branch_sets.erase(2);
    CHECK_FALSE(verify_minor_model(g, cycle_graph(3), m, &why));
}

TEST_CASE("work limits surface as exceptions") {
    Budget tiny;
    tiny.remaining = 5;
    // an absence query has to exhaust every leaf set, so it must overrun
    CHECK_THROWS_AS(has_k2n_minor(cycle_graph(20), 3, nullptr, &tiny), WorkLimitExceeded);
    Budget tiny2;
    tiny2.remaining = 3;
    CHECK_THROWS_AS(brute_force_minor(petersen_graph(), complete_graph(5), &tiny2),
                    WorkLimitExceeded);
}
