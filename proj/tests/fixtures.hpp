#pragma once

// Shared fixtures and independent oracles for the test suites. Expected
// values here are derived from raw triangle lists (adjacency scans, face
// scans), never from the structures under test.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "trireduce/trireduce.hpp"

namespace fixtures {

using namespace trireduce;

inline TriangleSoup t4() { return gen_tetrahedron(); }

inline TriangleSoup octahedron() {
    TriangleSoup s;
    s.positions = {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}, {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}};
    s.triangles = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1},
                   {5, 2, 1}, {5, 3, 2}, {5, 4, 3}, {5, 1, 4}};
    return s;
}

inline TriangleSoup icosahedron() {
    TriangleSoup s;
    for (std::uint32_t i = 0; i < 12; ++i)
        s.positions.push_back({double(i), double((i * 5) % 7), double((i * 3) % 5)});
    s.triangles = {{0, 1, 2},  {0, 2, 3},  {0, 3, 4},  {0, 4, 5},  {0, 5, 1},
                   {1, 5, 6},  {1, 6, 7},  {1, 7, 2},  {2, 7, 8},  {2, 8, 3},
                   {3, 8, 9},  {3, 9, 4},  {4, 9, 10}, {4, 10, 5}, {5, 10, 6},
                   {6, 10, 11}, {6, 11, 7}, {7, 11, 8}, {8, 11, 9}, {9, 11, 10}};
    return s;
}

// the 7-vertex (complete-graph) triangulation of the torus
inline TriangleSoup torus7() {
    TriangleSoup s;
    for (std::uint32_t i = 0; i < 7; ++i)
        s.positions.push_back({double(i), double((3 * i) % 7), 0.0});
    for (std::uint32_t i = 0; i < 7; ++i) {
        s.triangles.push_back({i, (i + 1) % 7, (i + 3) % 7});
        s.triangles.push_back({i, (i + 3) % 7, (i + 2) % 7});
    }
    return s;
}

// two poles joined to every vertex of a path plus a pole-to-pole edge; every
// interior pole spoke lies on exactly one critical cycle (pole, r_i, pole)
inline TriangleSoup double_fan(std::uint32_t k) {
    TriangleSoup s;
    s.positions.push_back({0, 0, 1});   // pole 0
    s.positions.push_back({0, 0, -1});  // pole 1
    for (std::uint32_t i = 0; i < k; ++i) s.positions.push_back({double(i), 1, 0});
    auto r = [](std::uint32_t i) { return 2 + i; };
    for (std::uint32_t i = 0; i + 1 < k; ++i) {
        s.triangles.push_back({0, r(i), r(i + 1)});
        s.triangles.push_back({1, r(i + 1), r(i)});
    }
    s.triangles.push_back({r(0), 0, 1});
    s.triangles.push_back({0, r(k - 1), 1});
    return s;
}

inline std::vector<std::set<std::uint32_t>> adjacency(const TriangleSoup& s) {
    std::vector<std::set<std::uint32_t>> adj(s.positions.size());
    for (const auto& t : s.triangles) {
        for (int k = 0; k < 3; ++k) {
            adj[t[std::size_t(k)]].insert(t[(k + 1) % 3]);
            adj[t[(k + 1) % 3]].insert(t[std::size_t(k)]);
        }
    }
    return adj;
}

// current adjacency sets of a mesh, restricted to live vertices
inline std::map<std::uint32_t, std::set<std::uint32_t>> mesh_adjacency(const Mesh& m) {
    std::map<std::uint32_t, std::set<std::uint32_t>> adj;
    for (std::uint32_t i = 0; i < m.vertices.size(); ++i) {
        if (!m.vertices[i].alive) continue;
        auto& entry = adj[i];
        m.for_each_neighbor(VertexId{i}, [&](VertexId z, EdgeId) { entry.insert(z.index); });
    }
    return adj;
}

// triangles rotated to smallest-vertex-first and sorted, for comparisons
inline TriangleSoup canon(TriangleSoup s) {
    for (auto& t : s.triangles) {
        while (!(t[0] <= t[1] && t[0] <= t[2])) {
            const std::uint32_t tmp = t[0];
            t[0] = t[1];
            t[1] = t[2];
            t[2] = tmp;
        }
    }
    std::sort(s.triangles.begin(), s.triangles.end());
    return s;
}

// collapse plus the degree updates that contraction callers own
inline void collapse_edge(Mesh& m, EdgeId e, VertexId keep) {
    ReductionOutcome scratch;
    std::vector<HalfEdgeId> temp;
    trireduce::detail::baseline_contract(m, e, keep, scratch, temp);
}

inline std::vector<EdgeId> live_edges(const Mesh& m) {
    std::vector<EdgeId> out;
    for (std::uint32_t i = 0; i < m.edges.size(); ++i)
        if (m.edges[i].alive) out.push_back(EdgeId{i});
    return out;
}

}  // namespace fixtures
