#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"

using namespace trireduce;

TEST_CASE("tetrahedron generator") {
    const TriangleSoup s = gen_tetrahedron();
    const Mesh m = build_mesh(s);
    REQUIRE(m.live_vertices == 4);
    REQUIRE(m.live_edges == 6);
    REQUIRE(m.live_faces == 4);
    REQUIRE(is_t4(m));
    REQUIRE(certify_irreducible(m));
}

TEST_CASE("torus grids have the advertised counts and genus") {
    const TriangleSoup s = gen_torus_grid(4, 4);
    const Mesh m = build_mesh(s);
    REQUIRE(m.live_vertices == 16);
    REQUIRE(m.live_edges == 48);
    REQUIRE(m.live_faces == 32);
    REQUIRE(euler_genus(m).genus == 1);

    for (std::uint32_t p = 3; p <= 6; ++p) {
        for (std::uint32_t q = 3; q <= 6; ++q) {
            const TriangleSoup grid = gen_torus_grid(p, q);
            const Mesh gm = build_mesh(grid);
            REQUIRE(gm.live_faces == 2 * p * q);
            REQUIRE(gm.live_edges == 3 * p * q);
            REQUIRE(euler_genus(gm).genus == 1);
        }
    }
    REQUIRE_THROWS_AS(gen_torus_grid(2, 5), TopologyError);
}

TEST_CASE("brick genus equals the number of hole cells") {
    REQUIRE(euler_genus(build_mesh(gen_brick(2, 2, "FFFF"))).genus == 0);
    REQUIRE(euler_genus(build_mesh(gen_brick(2, 2, "FHFF"))).genus == 1);
    for (std::uint32_t holes = 0; holes <= 25; ++holes) {
        std::string cells(25, 'C');
        for (std::uint32_t k = 0; k < holes; ++k) cells[k] = 'H';
        const Mesh m = build_mesh(gen_brick(5, 5, cells));
        REQUIRE(euler_genus(m).genus == std::int64_t(holes));
    }
    REQUIRE_THROWS_AS(gen_brick(2, 2, "FFF"), TopologyError);
    REQUIRE_THROWS_AS(parse_brick_cells("FXFF"), ParseError);
}

TEST_CASE("worst-case sphere: size, genus, and blocked edges") {
    const TriangleSoup s = gen_badcase_sphere(4);
    const Mesh m = build_mesh(s);
    REQUIRE(m.live_vertices == 14);  // 3m + 2
    REQUIRE(euler_genus(m).genus == 0);

    for (std::uint32_t mm : {3u, 4u, 8u}) {
        const Mesh bm = build_mesh(gen_badcase_sphere(mm));
        REQUIRE(bm.live_vertices == 3 * mm + 2);
        REQUIRE(euler_genus(bm).genus == 0);

        // documented layout: poles at 0 and 1, ring vertices at 2+3i
        const std::vector<VertexId> poles{VertexId{0}, VertexId{1}};
        std::set<std::uint32_t> ring;
        for (std::uint32_t i = 0; i < mm; ++i) ring.insert(2 + 3 * i);
        for (const VertexId pole : poles) {
            REQUIRE(bm.vertex(pole).degree == 2 * mm);
            for (const std::uint32_t v : ring) REQUIRE(bm.find_edge(pole, VertexId{v}).valid());
        }

        std::uint32_t blocked = 0;
        for (const EdgeId e : fixtures::live_edges(bm)) {
            auto [a, b] = bm.endpoints(e);
            const bool pole_spoke = (a == poles[0] || a == poles[1] || b == poles[0] ||
                                     b == poles[1]) &&
                                    (ring.count(a.index) || ring.count(b.index));
            const bool ring_edge = ring.count(a.index) && ring.count(b.index);
            if (pole_spoke || ring_edge) {
                REQUIRE_FALSE(link_condition_oracle(bm, e));  // blocked by construction
                ++blocked;
            }
        }
        REQUIRE(blocked == 3 * mm);  // m ring edges + 2m pole spokes
    }
    REQUIRE_THROWS_AS(gen_badcase_sphere(2), TopologyError);
}

TEST_CASE("1-to-4 refinement quadruples faces and keeps the genus") {
    const TriangleSoup r1 = refine_1to4(gen_tetrahedron());
    const Mesh m = build_mesh(r1);
    REQUIRE(m.live_vertices == 10);
    REQUIRE(m.live_edges == 24);
    REQUIRE(m.live_faces == 16);
    REQUIRE(euler_genus(m).genus == 0);

    const TriangleSoup torus = gen_torus_grid(4, 4);
    const TriangleSoup r2 = refine_times(torus, 2);
    const Mesh tm = build_mesh(r2);
    REQUIRE(tm.live_faces == 16 * 32);
    REQUIRE(euler_genus(tm).genus == 1);
}

TEST_CASE("generators are deterministic") {
    REQUIRE(write_off_string(gen_badcase_sphere(5)) == write_off_string(gen_badcase_sphere(5)));
    REQUIRE(write_off_string(gen_brick(3, 2, "FCHFCH")) ==
            write_off_string(gen_brick(3, 2, "FCHFCH")));
    REQUIRE(write_off_string(refine_1to4(gen_torus_grid(4, 5))) ==
            write_off_string(refine_1to4(gen_torus_grid(4, 5))));
}
