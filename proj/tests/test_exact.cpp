#include <catch2/catch_amalgamated.hpp>

#include "qrd/approx.hpp"
#include "qrd/exact.hpp"
#include "qrd/reductions.hpp"
#include "support.hpp"

using qrd::Graph;
using qrd::Labeling;

TEST_CASE("brute force oracle") {
    SECTION("K1 needs weight 4") {
        auto rep = qrd::brute_force_4r(Graph::from_edges(1, {}));
        CHECK(rep.optimum == 4);
        CHECK(rep.witness == Labeling({4}));
    }
    SECTION("P2 needs weight 5") {
        CHECK(qrd::brute_force_4r(qrd::generate(qrd::GraphKind::path, {2})).optimum == 5);
    }
    SECTION("C4 needs weight 8") {
        auto rep = qrd::brute_force_4r(qrd::generate(qrd::GraphKind::cycle, {4}));
        CHECK(rep.optimum == 8);
        CHECK(qrd::is_valid_4rdf(qrd::generate(qrd::GraphKind::cycle, {4}), rep.witness));
        CHECK(qrd::weight(rep.witness) == 8);
    }
    SECTION("cap is enforced") {
        qrd_test::Rng rng(1);
        CHECK_THROWS_AS(qrd::brute_force_4r(qrd_test::random_graph(rng, 10, 30), 9),
                        qrd::budget_error);
    }
    SECTION("witness is the lexicographically smallest optimum") {
        // On P3 both (0,5,0) and e.g. (4,0,... ) variants exist; lex order
        // puts (0,5,0) first among weight-5 labelings.
        auto rep = qrd::brute_force_4r(qrd::generate(qrd::GraphKind::path, {3}));
        CHECK(rep.optimum == 5);
        CHECK(rep.witness == Labeling({0, 5, 0}));
    }
}

TEST_CASE("branch and bound agrees with the oracle") {
    SECTION("all connected graphs on up to 4 vertices") {
        for (int n = 1; n <= 4; ++n) {
            qrd_test::for_all_graphs(n, [](const Graph& g) {
                if (!g.is_connected()) return;
                auto brute = qrd::brute_force_4r(g);
                auto bnb = qrd::branch_and_bound_4r(g);
                REQUIRE(bnb.status == qrd::SolveStatus::optimal);
                CHECK(bnb.optimum == brute.optimum);
                auto rep = qrd::verify(g, bnb.witness);
                CHECK(rep.valid);
                CHECK(rep.weight == bnb.optimum);
            });
        }
    }
    SECTION("disconnected graphs sum per component") {
        Graph g = Graph::from_edges(5, {{0, 1}, {2, 3}});  // P2 + P2 + K1
        CHECK(qrd::branch_and_bound_4r(g).optimum == 5 + 5 + 4);
    }
    SECTION("H-graph of K3 has optimum 13") {
        auto h = qrd::build_h_graph(qrd::generate(qrd::GraphKind::complete, {3}));
        CHECK(qrd::branch_and_bound_4r(h.graph).optimum == 13);
    }
    SECTION("split gadget of a solvable r=2 instance has optimum 10") {
        qrd::EtcInstance inst{2, {{0, 1, 2}, {3, 4, 5}, {0, 3, 4}}};
        auto gg = qrd::build_split(inst);
        CHECK(qrd::branch_and_bound_4r(gg.graph).optimum == 10);
    }
    SECTION("node budget produces a timeout with a valid incumbent") {
        qrd_test::Rng rng(5);
        Graph g = qrd_test::random_connected_graph(rng, 9);
        auto rep = qrd::branch_and_bound_4r(g, qrd::Budget{1, {}});
        CHECK(rep.status == qrd::SolveStatus::timeout);
        auto check = qrd::verify(g, rep.witness);
        CHECK(check.valid);
        CHECK(check.weight == rep.optimum);
    }
    SECTION("reports are deterministic under a node budget") {
        qrd_test::Rng rng(8);
        Graph g = qrd_test::random_connected_graph(rng, 8);
        auto a = qrd::branch_and_bound_4r(g, qrd::Budget{500, {}});
        auto b = qrd::branch_and_bound_4r(g, qrd::Budget{500, {}});
        CHECK(a.optimum == b.optimum);
        CHECK(a.witness == b.witness);
        CHECK(a.nodes_explored == b.nodes_explored);
        CHECK(a.status == b.status);
    }
}

TEST_CASE("domination number") {
    CHECK(qrd::domination_number(qrd::generate(qrd::GraphKind::star, {5})).optimum == 1);
    CHECK(qrd::domination_number(qrd::generate(qrd::GraphKind::star, {5})).witness_set ==
          std::vector<int>{0});
    CHECK(qrd::domination_number(qrd::generate(qrd::GraphKind::cycle, {6})).optimum == 2);
    CHECK(qrd::domination_number(qrd::generate(qrd::GraphKind::path, {4})).optimum == 2);
    CHECK_THROWS_AS(qrd::domination_number(qrd::generate(qrd::GraphKind::cycle, {25})),
                    qrd::budget_error);

    SECTION("witness dominates and the gamma >= n/(Delta+1) bound holds") {
        qrd_test::Rng rng(77);
        for (int trial = 0; trial < 50; ++trial) {
            Graph g = qrd_test::random_connected_graph(rng, 1 + rng.below(10));
            auto rep = qrd::domination_number(g);
            CHECK(qrd::dominates(g, rep.witness_set));
            CHECK(static_cast<int>(rep.witness_set.size()) == rep.optimum);
            int bound = (g.n() + g.max_degree()) / (g.max_degree() + 1);  // ceil
            CHECK(rep.optimum >= bound);
        }
    }
}

TEST_CASE("efficient dominating sets") {
    SECTION("C6 has the perfect code {0,3}") {
        auto d = qrd::find_efficient_dominating_set(qrd::generate(qrd::GraphKind::cycle, {6}));
        REQUIRE(d.has_value());
        CHECK(*d == std::vector<int>{0, 3});
    }
    SECTION("C4 has none") {
        CHECK_FALSE(qrd::find_efficient_dominating_set(qrd::generate(qrd::GraphKind::cycle, {4})));
    }
    SECTION("P2 is covered by one endpoint") {
        auto d = qrd::find_efficient_dominating_set(qrd::generate(qrd::GraphKind::path, {2}));
        REQUIRE(d.has_value());
        CHECK(*d == std::vector<int>{0});
    }
    SECTION("cycles: EDS exists iff length is a multiple of 3") {
        for (int k = 3; k <= 12; ++k) {
            auto d = qrd::find_efficient_dominating_set(qrd::generate(qrd::GraphKind::cycle, {k}));
            CHECK(d.has_value() == (k % 3 == 0));
        }
    }
    SECTION("when an EDS exists its size equals the domination number") {
        qrd_test::Rng rng(31);
        int found = 0;
        for (int trial = 0; trial < 120; ++trial) {
            Graph g = qrd_test::random_graph(rng, 1 + rng.below(9), 25);
            auto d = qrd::find_efficient_dominating_set(g);
            if (!d) continue;
            ++found;
            CHECK(qrd::is_efficient_dominating_set(g, *d));
            CHECK(static_cast<int>(d->size()) == qrd::domination_number(g).optimum);
        }
        CHECK(found > 5);
    }
}

TEST_CASE("gamma_4R basic lower bounds") {
    qrd_test::Rng rng(4242);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = qrd_test::random_graph(rng, 1 + rng.below(6), 40);
        auto rep = qrd::brute_force_4r(g);
        CHECK(rep.optimum >= 4);
        if (g.n() >= 2 && g.is_connected()) CHECK(rep.optimum >= 5);
    }
}
