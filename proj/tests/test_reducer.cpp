#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "fixtures.hpp"

using namespace trireduce;

namespace {

struct RunResult {
    TopologyReport before;
    ReductionOutcome outcome;
};

RunResult run_checked(const TriangleSoup& soup, Mesh& mesh, ReducerOptions opts = {}) {
    mesh = build_mesh(soup);
    RunResult r;
    r.before = euler_genus(mesh);
    opts.check_invariants = true;
    r.outcome = reduce_to_irreducible(mesh, std::move(opts));
    return r;
}

}  // namespace

TEST_CASE("the 4-vertex sphere is a fixed point") {
    Mesh m;
    const RunResult r = run_checked(fixtures::t4(), m);
    REQUIRE(r.outcome.stats.contractions == 0);
    REQUIRE(m.live_vertices == 4);
    REQUIRE(is_t4(m));
    REQUIRE(fixtures::canon(to_soup(m)).triangles == fixtures::canon(fixtures::t4()).triangles);
}

TEST_CASE("the icosahedron reduces to the 4-vertex sphere in 8 contractions") {
    Mesh m;
    const RunResult r = run_checked(fixtures::icosahedron(), m);
    REQUIRE(r.outcome.stats.contractions == 8);  // 12 - 4 vertices, one per contraction
    REQUIRE(is_t4(m));
    REQUIRE_NOTHROW(m.validate());
}

TEST_CASE("an already-irreducible torus is left untouched") {
    REQUIRE(certify_irreducible(build_mesh(fixtures::torus7())));  // pre-certify the fixture
    Mesh m;
    const RunResult r = run_checked(fixtures::torus7(), m);
    REQUIRE(r.outcome.stats.contractions == 0);
    REQUIRE(m.live_vertices == 7);
    REQUIRE(m.live_edges == 21);
    REQUIRE(r.outcome.stats.link_tests <= 21);
}

TEST_CASE("on genus-0 input every contraction happens at the first vertex") {
    for (const TriangleSoup& soup :
         {fixtures::octahedron(), fixtures::icosahedron(), refine_times(gen_tetrahedron(), 2),
          gen_badcase_sphere(6)}) {
        Mesh m;
        std::uint32_t callbacks = 0;
        ReducerOptions opts;
        opts.after_vertex_processed = [&](const Mesh& mesh, VertexId) {
            if (callbacks++ == 0) REQUIRE(mesh.live_vertices == 4);
        };
        run_checked(soup, m, std::move(opts));
        REQUIRE(is_t4(m));
    }
}

TEST_CASE("invariants hold across a varied fixture zoo") {
    const std::vector<TriangleSoup> zoo = {
        fixtures::octahedron(),
        refine_1to4(fixtures::icosahedron()),
        fixtures::double_fan(12),
        gen_torus_grid(4, 4),
        gen_torus_grid(6, 6),
        refine_1to4(gen_torus_grid(4, 4)),
        gen_brick(2, 2, "HCFH"),
        gen_brick(3, 3, "HHHCCCFFF"),
        refine_1to4(gen_brick(2, 2, "CHCF")),
        gen_badcase_sphere(4),
        gen_badcase_sphere(9),
    };
    for (const TriangleSoup& soup : zoo) {
        Mesh m;
        const RunResult r = run_checked(soup, m);
        REQUIRE_NOTHROW(m.validate());
        REQUIRE(certify_irreducible(m));
        REQUIRE(m.euler_characteristic() == r.before.euler);
        REQUIRE(r.outcome.stats.retested_edges == 0);
        REQUIRE(r.outcome.stats.link_tests <= r.before.n_edges);
        REQUIRE(r.outcome.stats.contractions == r.before.n_vertices - m.live_vertices);
        REQUIRE(r.outcome.stats.final_timestamp == r.outcome.stats.contractions);
        if (r.before.genus == 0) {
            REQUIRE(is_t4(m));
        } else {
            REQUIRE(m.live_vertices <= 26 * std::uint64_t(r.before.genus) - 4);
        }
        // processed flags: every surviving vertex was processed
        for (const VertexRecord& v : m.vertices)
            if (v.alive) REQUIRE(v.processed);
    }
}

TEST_CASE("trapped vertices stay trapped as later contractions land") {
    for (const TriangleSoup& soup :
         {refine_1to4(fixtures::octahedron()), gen_torus_grid(4, 4), gen_brick(2, 2, "CHCC")}) {
        Mesh m;
        std::vector<VertexId> processed;
        ReducerOptions opts;
        opts.after_vertex_processed = [&](const Mesh& mesh, VertexId u) {
            processed.push_back(u);
            for (VertexId p : processed) {
                if (!mesh.vertex_alive(p)) continue;
                mesh.for_each_neighbor(p, [&](VertexId, EdgeId e) {
                    REQUIRE_FALSE(link_condition_oracle(mesh, e));
                });
            }
        };
        run_checked(soup, m, std::move(opts));
    }
}

TEST_CASE("replaying the contraction log reproduces the output element set") {
    for (const TriangleSoup& soup : {fixtures::icosahedron(), gen_torus_grid(8, 8)}) {
        Mesh m;
        const RunResult r = run_checked(soup, m);

        const Mesh fresh = build_mesh(soup);
        std::vector<bool> v_alive(fresh.vertices.size(), true);
        std::vector<bool> e_alive(fresh.edges.size(), true);
        std::vector<bool> f_alive(fresh.faces.size(), true);
        for (const ContractionRecord& rec : r.outcome.log) {
            REQUIRE(v_alive[rec.removed_vertex.index]);
            v_alive[rec.removed_vertex.index] = false;
            for (const EdgeId e : rec.removed_edges) {
                REQUIRE(e_alive[e.index]);
                e_alive[e.index] = false;
            }
            for (const FaceId f : rec.removed_faces) {
                REQUIRE(f_alive[f.index]);
                f_alive[f.index] = false;
            }
        }
        for (std::uint32_t i = 0; i < m.vertices.size(); ++i)
            REQUIRE(m.vertices[i].alive == v_alive[i]);
        for (std::uint32_t i = 0; i < m.edges.size(); ++i)
            REQUIRE(m.edges[i].alive == e_alive[i]);
        for (std::uint32_t i = 0; i < m.faces.size(); ++i)
            REQUIRE(m.faces[i].alive == f_alive[i]);
    }
}

TEST_CASE("torus output lands in the known irreducible size range") {
    Mesh m;
    const RunResult r = run_checked(gen_torus_grid(8, 8), m);
    REQUIRE(euler_genus(m).genus == 1);
    REQUIRE(m.live_vertices >= 7);
    REQUIRE(m.live_vertices <= 10);
    REQUIRE(r.outcome.stats.contractions == 64 - m.live_vertices);
}

TEST_CASE("reducing an output again changes nothing") {
    for (const TriangleSoup& soup :
         {refine_1to4(fixtures::octahedron()), gen_torus_grid(6, 6), gen_brick(2, 2, "HHCC")}) {
        Mesh m;
        run_checked(soup, m);
        REQUIRE(certify_irreducible(m));
        const TriangleSoup once = to_soup(m);
        Mesh again = build_mesh(once);
        const ReductionOutcome second = reduce_to_irreducible(again);
        REQUIRE(second.stats.contractions == 0);
        REQUIRE(certify_irreducible(again));
        REQUIRE(fixtures::canon(to_soup(again)).triangles == fixtures::canon(once).triangles);
    }
}

TEST_CASE("a reducible mesh has a contractible edge at a low-degree vertex") {
    // the anchor behind the lowest-degree search strategy: some contractible
    // edge always touches a vertex of degree at most six
    for (const TriangleSoup& soup :
         {fixtures::octahedron(), fixtures::icosahedron(), gen_torus_grid(6, 6),
          refine_1to4(gen_brick(2, 2, "HCFC"))}) {
        const Mesh m = build_mesh(soup);
        REQUIRE_FALSE(certify_irreducible(m));
        bool found = false;
        for (const EdgeId e : fixtures::live_edges(m)) {
            auto [u, v] = m.endpoints(e);
            if (std::min(m.vertex(u).degree, m.vertex(v).degree) <= 6 &&
                link_condition_oracle(m, e))
                found = true;
        }
        REQUIRE(found);
    }
}

TEST_CASE("degree sum equals twice the edge count after initialization") {
    for (const TriangleSoup& soup : {fixtures::octahedron(), gen_torus_grid(5, 5)}) {
        const Mesh m = build_mesh(soup);
        std::uint64_t total = 0;
        for (const VertexRecord& v : m.vertices)
            if (v.alive) total += v.degree;
        REQUIRE(total == 2 * std::uint64_t(m.live_edges));
    }
}
