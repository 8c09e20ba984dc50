#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"

using namespace trireduce;

TEST_CASE("euler characteristic and genus") {
    const TopologyReport t4 = euler_genus(build_mesh(fixtures::t4()));
    REQUIRE(t4.euler == 2);
    REQUIRE(t4.genus == 0);
    REQUIRE(t4.is_t4);

    REQUIRE(genus_from_counts(20000, 60024, 40016) == 5);
    REQUIRE(genus_from_counts(7, 21, 14) == 1);
    REQUIRE_THROWS_AS(genus_from_counts(5, 9, 5), TopologyError);   // odd 2 - euler
    REQUIRE_THROWS_AS(genus_from_counts(10, 12, 8), TopologyError); // euler > 2
}

TEST_CASE("is_t4 recognizes only the 4-vertex sphere") {
    REQUIRE(is_t4(build_mesh(fixtures::t4())));
    REQUIRE_FALSE(is_t4(build_mesh(fixtures::octahedron())));
    REQUIRE_FALSE(is_t4(build_mesh(fixtures::torus7())));
}

TEST_CASE("every edge of the 4-vertex sphere fails the link condition") {
    const Mesh m = build_mesh(fixtures::t4());
    for (const EdgeId e : fixtures::live_edges(m)) {
        REQUIRE_FALSE(link_condition_oracle(m, e));
        REQUIRE(critical_cycles_through(m, e) == 0);  // and yet no critical cycle
    }
}

TEST_CASE("every octahedron edge passes the link condition") {
    // adjacent octahedron vertices share exactly the two apexes of their edge
    const Mesh m = build_mesh(fixtures::octahedron());
    for (const EdgeId e : fixtures::live_edges(m)) {
        REQUIRE(link_condition_oracle(m, e));
        REQUIRE(critical_cycles_through(m, e) == 0);
    }
}

TEST_CASE("an edge on a non-facial 3-cycle fails with cycle count one") {
    const Mesh m = build_mesh(fixtures::double_fan(5));
    // interior spokes [pole0, r_i] lie on exactly the cycle (pole0, r_i, pole1)
    for (std::uint32_t i = 1; i + 1 < 5; ++i) {
        const EdgeId e = m.find_edge(VertexId{0}, VertexId{2 + i});
        REQUIRE(e.valid());
        REQUIRE(critical_cycles_through(m, e) == 1);
        REQUIRE_FALSE(link_condition_oracle(m, e));
    }
    // the pole-to-pole edge sees every interior rail vertex as a cycle
    const EdgeId poles = m.find_edge(VertexId{0}, VertexId{1});
    REQUIRE(critical_cycles_through(m, poles) == 3);
}

TEST_CASE("the 7-vertex torus is irreducible") {
    const Mesh m = build_mesh(fixtures::torus7());
    REQUIRE(euler_genus(m).genus == 1);
    for (const EdgeId e : fixtures::live_edges(m))
        REQUIRE_FALSE(link_condition_oracle(m, e));
    REQUIRE(certify_irreducible(m));
}

TEST_CASE("certify_irreducible") {
    REQUIRE(certify_irreducible(build_mesh(fixtures::t4())));
    REQUIRE_FALSE(certify_irreducible(build_mesh(fixtures::octahedron())));
    REQUIRE_FALSE(certify_irreducible(build_mesh(fixtures::double_fan(6))));
}

TEST_CASE("link condition <=> no critical cycle and not the 4-vertex sphere") {
    for (const TriangleSoup& soup :
         {fixtures::t4(), fixtures::octahedron(), fixtures::icosahedron(), fixtures::torus7(),
          fixtures::double_fan(6), gen_torus_grid(3, 3), gen_torus_grid(4, 4),
          gen_badcase_sphere(3), gen_badcase_sphere(4)}) {
        const Mesh m = build_mesh(soup);
        const bool t4 = is_t4(m);
        for (const EdgeId e : fixtures::live_edges(m)) {
            const bool oracle = link_condition_oracle(m, e);
            const bool thm = critical_cycles_through(m, e) == 0 && !t4;
            REQUIRE(oracle == thm);
        }
    }
}
