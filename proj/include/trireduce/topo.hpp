#pragma once

// Topology utilities: Euler characteristic and genus, minimal-triangulation
// recognition, the set-intersection contractibility oracle, and critical
// cycle counting. The oracle deliberately ignores the reducers' cached
// attributes so it can falsify them.

#include <cstdint>
#include <unordered_set>

#include "trireduce/errors.hpp"
#include "trireduce/mesh.hpp"

namespace trireduce {

struct TopologyReport {
    std::uint32_t n_vertices = 0;
    std::uint32_t n_edges = 0;
    std::uint32_t n_faces = 0;
    std::int64_t euler = 0;
    std::int64_t genus = 0;
    bool is_t4 = false;
};

inline std::int64_t genus_from_counts(std::uint64_t nv, std::uint64_t ne, std::uint64_t nf) {
    const std::int64_t euler = std::int64_t(nv) - std::int64_t(ne) + std::int64_t(nf);
    if ((2 - euler) % 2 != 0 || euler > 2)
        throw TopologyError("genus: Euler characteristic " + std::to_string(euler) +
                            " is not that of a closed orientable surface");
    return (2 - euler) / 2;
}

// true iff the mesh has four vertices, each of degree three
inline bool is_t4(const Mesh& m) {
    if (m.live_vertices != 4) return false;
    for (const VertexRecord& r : m.vertices)
        if (r.alive && r.degree != 3) return false;
    return true;
}

inline TopologyReport euler_genus(const Mesh& m) {
    TopologyReport rep;
    rep.n_vertices = m.live_vertices;
    rep.n_edges = m.live_edges;
    rep.n_faces = m.live_faces;
    rep.euler = m.euler_characteristic();
    rep.genus = genus_from_counts(m.live_vertices, m.live_edges, m.live_faces);
    rep.is_t4 = is_t4(m);
    return rep;
}

// Contractibility test by explicit intersection of the two endpoint links:
// the edge is contractible iff the links of its endpoints meet exactly in
// the two apex vertices of the edge (and share no link edge).
inline bool link_condition_oracle(const Mesh& m, EdgeId e) {
    auto [u, v] = m.endpoints(e);
    auto [x, y] = m.link_of_edge(e);

    std::unordered_set<std::uint32_t> u_link_vertices, u_link_edges;
    for (auto [z, le] : m.link_of_vertex(u)) {
        u_link_vertices.insert(z.index);
        u_link_edges.insert(le.index);
    }

    std::uint32_t common_vertices = 0;
    bool common_edge = false;
    for (auto [z, le] : m.link_of_vertex(v)) {
        if (u_link_vertices.count(z.index)) {
            ++common_vertices;
            if (z != x && z != y) return false;  // third common neighbor
        }
        if (u_link_edges.count(le.index)) common_edge = true;
    }
    return common_vertices == 2 && !common_edge;
}

// number of critical 3-cycles through e = [u,v]: vertices adjacent to both
// endpoints other than the two apexes of e
inline std::uint32_t critical_cycles_through(const Mesh& m, EdgeId e) {
    auto [u, v] = m.endpoints(e);
    auto [x, y] = m.link_of_edge(e);
    std::unordered_set<std::uint32_t> u_nbrs;
    m.for_each_neighbor(u, [&](VertexId z, EdgeId) { u_nbrs.insert(z.index); });
    std::uint32_t count = 0;
    m.for_each_neighbor(v, [&](VertexId z, EdgeId) {
        if (z != x && z != y && u_nbrs.count(z.index)) ++count;
    });
    return count;
}

// true iff no edge of the mesh is contractible
inline bool certify_irreducible(const Mesh& m) {
    if (is_t4(m)) return true;
    for (std::uint32_t i = 0; i < m.edges.size(); ++i) {
        if (!m.edges[i].alive) continue;
        if (link_condition_oracle(m, EdgeId{i})) return false;
    }
    return true;
}

}  // namespace trireduce
