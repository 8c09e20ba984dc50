#pragma once

// Comparison reducers: a randomized sweep over a shuffled edge array, and a
// lowest-degree-vertex strategy with per-vertex sorted link dictionaries.
// Both re-test edges freely; both are instrumented like the main reducer.

#include <chrono>
#include <cstdint>
#include <list>
#include <random>
#include <set>
#include <vector>

#include "trireduce/mesh.hpp"
#include "trireduce/stats.hpp"
#include "trireduce/topo.hpp"

namespace trireduce {

namespace detail {

inline void baseline_contract(Mesh& m, EdgeId e, VertexId keep, ReductionOutcome& out,
                              std::vector<HalfEdgeId>& temp) {
    const VertexId gone = m.other_endpoint(e, keep);
    auto [x, y] = m.link_of_edge(e);
    const std::uint32_t gone_degree = m.vertex(gone).degree;
    temp.clear();
    const CollapseResult res = m.collapse(e, keep, temp);
    m.vertex(x).degree -= 1;
    m.vertex(y).degree -= 1;
    m.vertex(keep).degree += gone_degree - 4;
    out.log.push_back(ContractionRecord{keep,
                                        gone,
                                        {e, res.removed_edge_vx, res.removed_edge_vy},
                                        {res.removed_face_a, res.removed_face_b}});
    ++out.stats.contractions;
}

inline std::uint32_t log2_ceil(std::uint32_t n) {
    std::uint32_t bits = 0;
    while ((1u << bits) < n) ++bits;
    return bits;
}

}  // namespace detail

// Sweeps the given edge order, testing each live edge with the full
// set-intersection check and contracting on a pass; failures are deferred
// and re-swept (in failure order) until a sweep contracts nothing.
inline ReductionOutcome brute_force_reduce_ordered(Mesh& m, std::vector<EdgeId> order) {
    ReductionOutcome out;
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<std::uint32_t> test_count(m.edges.size(), 0);
    std::vector<HalfEdgeId> temp;
    std::vector<EdgeId> current = std::move(order), deferred;
    bool contracted_any = true;
    while (contracted_any && !current.empty()) {
        contracted_any = false;
        deferred.clear();
        for (EdgeId e : current) {
            if (!m.edge_alive(e)) continue;
            auto [u, v] = m.endpoints(e);
            ++out.stats.link_tests;
            out.stats.link_test_ops += m.vertex(u).degree + m.vertex(v).degree;
            if (test_count[e.index]++ > 0) ++out.stats.retested_edges;
            if (link_condition_oracle(m, e)) {
                detail::baseline_contract(m, e, u.index < v.index ? u : v, out, temp);
                contracted_any = true;
            } else {
                deferred.push_back(e);
            }
        }
        std::swap(current, deferred);
    }
    out.stats.run_ns = std::uint64_t(std::chrono::duration_cast<std::chrono::nanoseconds>(
                                         std::chrono::steady_clock::now() - t0)
                                         .count());
    return out;
}

inline ReductionOutcome brute_force_reduce(Mesh& m, std::uint64_t seed) {
    std::vector<EdgeId> order;
    order.reserve(m.live_edges);
    for (std::uint32_t i = 0; i < m.edges.size(); ++i)
        if (m.edges[i].alive) order.push_back(EdgeId{i});
    std::mt19937_64 rng(seed);
    for (std::size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[rng() % i]);
    return brute_force_reduce_ordered(m, std::move(order));
}

// Lowest-degree-vertex reducer. Loose vertices sit in degree-indexed FIFO
// buckets; each pick scans the vertex's incident edges in rotational order,
// deciding contractibility through the sorted link dictionary of the far
// endpoint, and traps the vertex when every incident edge fails.
inline ReductionOutcome schipper_reduce(Mesh& m) {
    ReductionOutcome out;
    const auto t0 = std::chrono::steady_clock::now();
    const std::uint32_t n = std::uint32_t(m.vertices.size());

    std::vector<std::set<std::uint32_t>> link_dict(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        if (!m.vertices[i].alive) continue;
        m.for_each_neighbor(VertexId{i},
                            [&](VertexId z, EdgeId) { link_dict[i].insert(z.index); });
    }

    std::vector<std::list<std::uint32_t>> buckets;
    std::vector<std::list<std::uint32_t>::iterator> where(n);
    std::vector<std::uint32_t> bucket_of(n, 0);
    std::vector<bool> in_bucket(n, false);

    auto bucket_insert = [&](std::uint32_t v) {
        const std::uint32_t d = m.vertices[v].degree;
        if (d >= buckets.size()) buckets.resize(d + 1);
        buckets[d].push_back(v);
        where[v] = std::prev(buckets[d].end());
        bucket_of[v] = d;
        in_bucket[v] = true;
    };
    auto bucket_remove = [&](std::uint32_t v) {
        if (!in_bucket[v]) return;
        buckets[bucket_of[v]].erase(where[v]);
        in_bucket[v] = false;
    };
    auto bucket_reposition = [&](std::uint32_t v) {
        if (in_bucket[v] && bucket_of[v] != m.vertices[v].degree) {
            bucket_remove(v);
            bucket_insert(v);
        }
    };

    for (std::uint32_t i = 0; i < n; ++i)
        if (m.vertices[i].alive) bucket_insert(i);

    std::vector<std::uint32_t> test_count(m.edges.size(), 0);
    std::vector<HalfEdgeId> temp;
    std::vector<std::pair<VertexId, EdgeId>> spokes;

    // contractible iff the far endpoint's dictionary holds no vertex of the
    // near link beyond the two apexes; a 4-vertex mesh has no contractible edge
    auto test_edge = [&](VertexId u, VertexId v, EdgeId e) {
        ++out.stats.link_tests;
        if (test_count[e.index]++ > 0) ++out.stats.retested_edges;
        if (m.live_vertices == 4) return false;
        auto [x, y] = m.link_of_edge(e);
        const std::uint32_t probe_cost = 1 + detail::log2_ceil(m.vertex(v).degree + 1);
        bool contractible = true;
        m.for_each_neighbor(u, [&](VertexId w, EdgeId) {
            out.stats.link_test_ops += probe_cost;
            if (w == v || w == x || w == y) return;
            if (link_dict[v.index].count(w.index)) contractible = false;
        });
        return contractible;
    };

    while (true) {
        std::uint32_t u = 0;
        bool found = false;
        for (std::uint32_t d = 3; d < buckets.size(); ++d) {
            if (!buckets[d].empty()) {
                u = buckets[d].front();
                found = true;
                break;
            }
        }
        if (!found) break;

        spokes.clear();
        m.for_each_neighbor(VertexId{u},
                            [&](VertexId z, EdgeId e) { spokes.emplace_back(z, e); });
        EdgeId pass;
        VertexId pass_v;
        for (auto [z, e] : spokes) {
            if (test_edge(VertexId{u}, z, e)) {
                pass = e;
                pass_v = z;
                break;
            }
        }
        if (!pass.valid()) {
            bucket_remove(u);  // trapped
            continue;
        }

        auto [x, y] = m.link_of_edge(pass);
        detail::baseline_contract(m, pass, VertexId{u}, out, temp);

        link_dict[pass_v.index].clear();
        link_dict[x.index].erase(pass_v.index);
        link_dict[y.index].erase(pass_v.index);
        link_dict[u].clear();
        m.for_each_neighbor(VertexId{u},
                            [&](VertexId z, EdgeId) { link_dict[u].insert(z.index); });
        for (HalfEdgeId h3 : temp) {
            const std::uint32_t z = m.destination(h3).index;
            link_dict[z].erase(pass_v.index);
            link_dict[z].insert(u);
        }

        bucket_remove(pass_v.index);
        bucket_reposition(u);
        bucket_reposition(x.index);
        bucket_reposition(y.index);
    }

    out.stats.run_ns = std::uint64_t(std::chrono::duration_cast<std::chrono::nanoseconds>(
                                         std::chrono::steady_clock::now() - t0)
                                         .count());
    return out;
}

}  // namespace trireduce
