#include <doctest.h>

#include "mbkit/constructions.hpp"
#include "mbkit/obstructions.hpp"
#include "mbkit/rng.hpp"

using namespace mbk;

namespace {

Graph random_tree(int n, Rng& rng) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, rng.uniform_int(0, v - 1));
    return g;
}

}  // namespace

TEST_SUITE("obstructions") {
    TEST_CASE("independent set bound") {
        CHECK(independent_set_bound(build_complete_multipartite(PartList({3, 2}))).first == 3);
        CHECK(independent_set_bound(complete_graph(6)).first == 1);
        for (int k : {2, 3})
            CHECK(independent_set_bound(build_complete_multipartite(PartList({k, k, k}))).first == k);
    }

    TEST_CASE("induced path bound") {
        CHECK(induced_path_bound(path_graph(6)).first == 5);
        CHECK(induced_path_bound(complete_graph(5)).first == 1);
        for (int n : {3, 5, 6}) CHECK(induced_path_bound(strong_product_path_p2(n)).first == n - 1);
    }

    TEST_CASE("interlacing bound for the vertex cone") {
        CHECK(interlacing_join_bound(5) == 3);
        CHECK(interlacing_join_bound(2) == 2);
        CHECK(interlacing_join_bound(1) == 1);
        CHECK_THROWS_AS(interlacing_join_bound(0), std::invalid_argument);
    }

    TEST_CASE("trees always carry cut-edge witnesses") {
        Rng rng(8);
        for (int trial = 0; trial < 15; ++trial) {
            int n = rng.uniform_int(3, 20);
            Graph t = random_tree(n, rng);
            auto obs = q2_necessary_conditions(t);
            int bridges = 0;
            for (const auto& o : obs)
                if (o.kind == ObstructionWitness::Kind::cut_edge) {
                    ++bridges;
                    CHECK(verify_obstruction(t, o));
                }
            CHECK(bridges == n - 1);  // every tree edge is a bridge
        }
    }

    TEST_CASE("graphs with a planted bridge are caught") {
        Rng rng(9);
        for (int trial = 0; trial < 10; ++trial) {
            // two dense blobs joined by one edge
            int n1 = rng.uniform_int(3, 6), n2 = rng.uniform_int(3, 6);
            Graph g = disjoint_union(complete_graph(n1), complete_graph(n2));
            g.add_edge(0, n1);
            auto obs = q2_necessary_conditions(g);
            bool found_bridge = false;
            for (const auto& o : obs)
                if (o.kind == ObstructionWitness::Kind::cut_edge) found_bridge = true;
            CHECK(found_bridge);
        }
    }

    TEST_CASE("common neighbour deficits") {
        auto obs = q2_necessary_conditions(cycle_graph(5));
        bool deficit = false;
        for (const auto& o : obs)
            if (o.kind == ObstructionWitness::Kind::common_neighbour_deficit) {
                deficit = true;
                CHECK(o.lhs == 1);
                CHECK(verify_obstruction(cycle_graph(5), o));
            }
        CHECK(deficit);

        // the octahedron has two common neighbours everywhere: no witnesses
        Graph octa = build_complete_multipartite(PartList({2, 2, 2}));
        CHECK(q2_necessary_conditions(octa).empty());
    }

    TEST_CASE("neighbourhood union deficit on a hypercube join") {
        // 5-cube: three vertices pairwise at distance >= 3 exist, so joining
        // a 2-vertex graph creates the deficit
        Graph g = join(hypercube(5), path_graph(2));
        auto obs = q2_necessary_conditions(g);
        bool found = false;
        for (const auto& o : obs)
            if (o.kind == ObstructionWitness::Kind::neighbourhood_union_deficit) {
                found = true;
                CHECK(o.lhs == 3);
                CHECK(o.rhs == 2);
                CHECK(o.neighbourhood_union == std::vector<int>{32, 33});
                CHECK(verify_obstruction(g, o));
            }
        CHECK(found);
    }

    TEST_CASE("guards") {
        CHECK_THROWS_AS(q2_necessary_conditions(complete_graph(2)), std::invalid_argument);
        CHECK_THROWS_AS(q2_necessary_conditions(Graph(129)), std::invalid_argument);
        CHECK_THROWS_AS(q2_necessary_conditions(disjoint_union(complete_graph(2), complete_graph(3))),
                        std::invalid_argument);
    }

    TEST_CASE("bounds report: exact cases") {
        BoundsReport k5 = bounds_report(complete_graph(5));
        CHECK(k5.mb_exact == 1);
        CHECK(k5.status == "exact");

        BoundsReport c4 = bounds_report(cycle_graph(4));
        CHECK(c4.mb_exact == 2);
        CHECK(c4.mb2_form);

        // the part of size 3 has only the opposite part (2 vertices) as its
        // pairwise common neighbourhood: a union deficit, so the stronger
        // verdict wins over the independence bound 3 > floor(5/2)
        BoundsReport k32 = bounds_report(build_complete_multipartite(PartList({3, 2})));
        CHECK(k32.status == "q-gt-2-witnessed");
        CHECK(k32.max_lower >= 3);

        BoundsReport c5 = bounds_report(cycle_graph(5));
        CHECK(c5.status == "q-gt-2-witnessed");
    }

    TEST_CASE("bounds report: certificates give upper bounds") {
        RealizationCertificate pp = path_p2_realization(4);
        BoundsReport rep = bounds_report(pp.graph, {&pp});
        CHECK_FALSE(rep.inconsistent);
        REQUIRE(!rep.upper.empty());
        CHECK(rep.upper[0].k == 3);
        CHECK(rep.mb_exact == 3);  // induced-path bound 3 meets the certificate
    }

    TEST_CASE("soundness: construction certificates dominate every lower bound") {
        std::vector<RealizationCertificate> certs;
        certs.push_back(canonical_blocks_auto(CliqueBlockSpec({{1, 1}, {1, 1}})));
        certs.push_back(canonical_blocks_auto(CliqueBlockSpec({{2, 1, 2}, {1, 2, 1}})));
        certs.push_back(path_p2_realization(4));
        certs.push_back(two_edges_removed({3, 3}, {3, 3}, 1.0, 1.0, 4));
        certs.push_back(example_three_cliques({2, 2, 2, 2, 2, 2}, 2.0, 3.0, 1));
        for (const auto& c : certs) {
            BoundsReport rep = bounds_report(c.graph, {&c});
            CHECK_FALSE(rep.inconsistent);
            CHECK(rep.max_lower <= c.k);
            CHECK(rep.obstructions.empty());
        }
    }

    TEST_CASE("independence of a join never crosses the factors") {
        Rng rng(44);
        for (int trial = 0; trial < 12; ++trial) {
            int n1 = rng.uniform_int(1, 7), n2 = rng.uniform_int(1, 7);
            Graph g(n1), h(n2);
            for (int i = 0; i < n1; ++i)
                for (int j = i + 1; j < n1; ++j)
                    if (rng.coin()) g.add_edge(i, j);
            for (int i = 0; i < n2; ++i)
                for (int j = i + 1; j < n2; ++j)
                    if (rng.coin()) h.add_edge(i, j);
            int joint = independent_set_bound(join(g, h)).first;
            int expect = std::max(independent_set_bound(g).first, independent_set_bound(h).first);
            CHECK(joint == expect);
        }
    }
}
