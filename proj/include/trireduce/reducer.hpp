#pragma once

// Vertex-at-a-time reduction to an irreducible triangulation. Edges incident
// on the vertex being processed move through two worklists: untested edges
// (popped from the front, degree-3 endpoints first) and tested-but-failed
// edges, whose critical-cycle counters are kept current through a global
// contraction timestamp plus per-vertex became-neighbor / tested times. No
// edge is ever tested against the link condition twice.

#include <chrono>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "trireduce/errors.hpp"
#include "trireduce/mesh.hpp"
#include "trireduce/stats.hpp"
#include "trireduce/topo.hpp"
#include "trireduce/worklist.hpp"

namespace trireduce {

struct ReducerOptions {
    // Verify the worklist invariants at every loop-condition check and the
    // cached cycle counters against the set-intersection oracle before each
    // tested-list scan. Slow; meant for tests.
    bool check_invariants = false;
    std::function<void(const Mesh&, VertexId)> after_vertex_processed;
};

class Reducer {
  public:
    explicit Reducer(Mesh& mesh, ReducerOptions options = {})
        : m_(mesh),
          opts_(std::move(options)),
          lue_(mesh, WorklistTag::unprocessed),
          lte_(mesh, WorklistTag::tested),
          test_count_(mesh.edges.size(), 0) {
        const auto t0 = std::chrono::steady_clock::now();
        queue_.reserve(m_.live_vertices);
        for (std::uint32_t i = 0; i < m_.vertices.size(); ++i) {
            VertexRecord& r = m_.vertices[i];
            if (!r.alive) continue;
            std::uint32_t degree = 0;
            m_.for_each_neighbor(VertexId{i}, [&](VertexId, EdgeId) { ++degree; });
            r.degree = degree;
            r.processed = false;
            r.neighbor_mark = VertexId{};
            r.mark_edge = EdgeId{};
            r.cycle_count = 0;
            r.neighbor_time = kNoTime;
            r.tested_time = kNoTime;
            queue_.push_back(VertexId{i});
        }
        out_.stats.init_ns = std::uint64_t(std::chrono::duration_cast<std::chrono::nanoseconds>(
                                               std::chrono::steady_clock::now() - t0)
                                               .count());
    }

    ReductionOutcome run() {
        const auto t0 = std::chrono::steady_clock::now();
        for (VertexId u : queue_) {
            if (m_.vertex(u).processed) continue;
            process_vertex(u);
        }
        out_.stats.final_timestamp = std::uint64_t(ts_);
        out_.stats.run_ns = std::uint64_t(std::chrono::duration_cast<std::chrono::nanoseconds>(
                                              std::chrono::steady_clock::now() - t0)
                                              .count());
        return std::move(out_);
    }

  private:
    void process_vertex(VertexId u) {
        current_ = u;
        era_insertions_ = 0;
        lue_.clear();
        lte_.clear();
        m_.for_each_neighbor(u, [&](VertexId z, EdgeId spoke) {
            VertexRecord& rz = m_.vertex(z);
            rz.neighbor_mark = u;
            rz.mark_edge = spoke;
            rz.neighbor_time = ts_;
            rz.tested_time = kNoTime;
            rz.cycle_count = 0;  // may be stale from an earlier vertex's tested list
            if (!rz.processed) {
                ++era_insertions_;
                if (rz.degree == 3)
                    lue_.push_front(spoke);
                else
                    lue_.push_back(spoke);
            }
        });
        do {
            while (!lue_.empty()) {
                if (opts_.check_invariants) check_worklist_invariants();
                const EdgeId e = lue_.pop_front();
                const VertexId v = m_.other_endpoint(e, u);
                m_.vertex(v).tested_time = ts_;
                if (m_.vertex(v).degree == 3)
                    process_degree3(e);
                else
                    process_degree_gt3(e);
            }
            if (opts_.check_invariants) check_worklist_invariants();
            if (!lte_.empty()) {
                if (opts_.check_invariants) check_counters_match_oracle();
                process_edge_list();
            }
            if (opts_.check_invariants) check_worklist_invariants();
        } while (!lue_.empty());
        if (opts_.check_invariants) {
            // the vertex is trapped now: everything left in the tested list
            // must genuinely fail the link condition
            lte_.for_each([&](EdgeId e) {
                require(!link_condition_oracle(m_, e),
                        "finished a vertex with a contractible tested edge");
            });
            // each other vertex enters the untested list at most once
            require(era_insertions_ + 1 <= queue_.size(),
                    "more untested-list insertions than vertices");
        }
        m_.vertex(u).processed = true;
        if (opts_.after_vertex_processed) opts_.after_vertex_processed(m_, u);
    }

    // e = [u,v] with degree(v) == 3: contractible unless the whole mesh is
    // the 4-vertex sphere. Contracting it retires the critical cycle that
    // was the link of v, so the apexes' counters may need decrementing.
    void process_degree3(EdgeId e) {
        if (m_.vertex(current_).degree == 3) {
            if (opts_.check_invariants)
                require(!link_condition_oracle(m_, e),
                        "kept a degree-3 edge the oracle calls contractible");
            return;
        }
        if (opts_.check_invariants)
            require(link_condition_oracle(m_, e),
                    "contracting a degree-3 edge the oracle rejects");
        auto [x, y] = m_.link_of_edge(e);
        contract(e);
        const VertexRecord& rx = m_.vertex(x);
        const VertexRecord& ry = m_.vertex(y);
        if (rx.tested_time != kNoTime && ry.tested_time != kNoTime) {
            decrement_cycle_count(x);
            decrement_cycle_count(y);
        } else if (rx.tested_time != kNoTime && rx.tested_time >= ry.neighbor_time) {
            decrement_cycle_count(x);
        } else if (ry.tested_time != kNoTime && ry.tested_time >= rx.neighbor_time) {
            decrement_cycle_count(y);
        }
    }

    // e = [u,v] with degree(v) > 3: count the critical cycles through e by
    // scanning the link of v for marked neighbors of u. While doing so,
    // cycles seen for the first time bump the counters of already-tested
    // edges (the time comparison prevents counting one cycle twice).
    void process_degree_gt3(EdgeId e) {
        const VertexId v = m_.other_endpoint(e, current_);
        ++out_.stats.link_tests;
        if (test_count_[e.index]++ > 0) ++out_.stats.retested_edges;
        auto [x, y] = m_.link_of_edge(e);
        VertexRecord& rv = m_.vertex(v);
        if (opts_.check_invariants)
            require(rv.cycle_count == 0, "edge reached its test with a nonzero counter");
        std::uint32_t found = 0;
        m_.for_each_neighbor(v, [&](VertexId z, EdgeId) {
            ++out_.stats.link_test_ops;
            if (z == current_ || z == x || z == y) return;
            VertexRecord& rz = m_.vertex(z);
            if (rz.neighbor_mark != current_) return;
            ++found;
            if (rz.tested_time != kNoTime && rz.tested_time < rv.neighbor_time) {
                if (++rz.cycle_count == 1) lte_.move_to_back(rz.mark_edge);
            }
        });
        rv.cycle_count = found;
        if (opts_.check_invariants)
            require((found == 0) == link_condition_oracle(m_, e),
                    "contract/defer decision disagrees with the oracle");
        if (found == 0)
            contract(e);
        else
            lte_.push_back(e);
    }

    // contraction of e = [u,v]: stamp the new neighbors of u, collapse the
    // DCEL, fix degrees, and route the replacement edges [u,z]
    void contract(EdgeId e) {
        const VertexId u = current_;
        const VertexId v = m_.other_endpoint(e, u);
        auto [x, y] = m_.link_of_edge(e);
        ++ts_;
        m_.for_each_neighbor(v, [&](VertexId z, EdgeId vz) {
            if (z == u || z == x || z == y) return;
            VertexRecord& rz = m_.vertex(z);
            rz.neighbor_mark = u;
            rz.mark_edge = vz;  // same record survives as [u,z]
            rz.cycle_count = 0;
            rz.neighbor_time = ts_;
            rz.tested_time = kNoTime;
        });
        m_.vertex(v).processed = true;
        const std::uint32_t v_degree = m_.vertex(v).degree;
        temp_.clear();
        const CollapseResult res = m_.collapse(e, u, temp_);
        out_.log.push_back(ContractionRecord{u,
                                             v,
                                             {e, res.removed_edge_vx, res.removed_edge_vy},
                                             {res.removed_face_a, res.removed_face_b}});
        ++out_.stats.contractions;
        // apex/edge pairing must come from the collapse result: link_of_edge
        // reports the apexes in half-edge order, which need not match
        m_.vertex(res.apex_x).degree -= 1;
        m_.vertex(res.apex_y).degree -= 1;
        m_.vertex(u).degree += v_degree - 4;

        const VertexRecord& rx = m_.vertex(res.apex_x);
        if (rx.degree == 3 && !rx.processed && rx.tested_time == kNoTime)
            lue_.move_to_front(res.kept_edge_ux);
        const VertexRecord& ry = m_.vertex(res.apex_y);
        if (ry.degree == 3 && !ry.processed && ry.tested_time == kNoTime)
            lue_.move_to_front(res.kept_edge_uy);

        for (HalfEdgeId h3 : temp_) {
            const EdgeId uz = m_.edge_of(h3);
            const VertexId z = m_.destination(h3);
            const VertexRecord& rz = m_.vertex(z);
            if (!rz.processed) {
                ++era_insertions_;
                if (rz.degree == 3)
                    lue_.push_front(uz);
                else
                    lue_.push_back(uz);
            } else {
                // z is trapped, so [u,z] never enters the worklists; credit
                // any cycle (u,z,w) it creates to w's counter instead
                auto [ax, ay] = m_.link_of_edge(uz);
                m_.for_each_neighbor(z, [&](VertexId w, EdgeId) {
                    if (w == u || w == ax || w == ay) return;
                    VertexRecord& rw = m_.vertex(w);
                    if (rw.neighbor_mark == u && rw.tested_time != kNoTime) {
                        if (++rw.cycle_count == 1) lte_.move_to_back(rw.mark_edge);
                    }
                });
            }
        }
    }

    // once the untested list drains: contract the degree-3 entries waiting at
    // the front of the tested list, then at most one counter-zero entry
    void process_edge_list() {
        while (!lte_.empty()) {
            const EdgeId e = lte_.front();
            const VertexId v = m_.other_endpoint(e, current_);
            if (m_.vertex(v).degree != 3) break;
            lte_.pop_front();
            process_degree3(e);
        }
        if (!lte_.empty()) {
            const EdgeId e = lte_.front();
            const VertexId v = m_.other_endpoint(e, current_);
            if (opts_.check_invariants)
                require((m_.vertex(v).cycle_count == 0) == link_condition_oracle(m_, e),
                        "tested-list front decision disagrees with the oracle");
            if (m_.vertex(v).cycle_count == 0) {
                lte_.pop_front();
                contract(e);
            }
        }
    }

    void decrement_cycle_count(VertexId w) {
        VertexRecord& rw = m_.vertex(w);
        require(rw.cycle_count > 0, "critical-cycle counter underflow");
        if (--rw.cycle_count == 0) lte_.move_to_front(rw.mark_edge);
    }

    void check_worklist_invariants() const {
        bool seen_gt3 = false;
        lue_.for_each([&](EdgeId e) {
            require(m_.edge_alive(e), "untested-list edge is not in the current mesh");
            const VertexId w = m_.other_endpoint(e, current_);
            const VertexRecord& rw = m_.vertex(w);
            if (rw.degree > 3)
                seen_gt3 = true;
            else
                require(!seen_gt3, "degree-3 entry behind a higher-degree one");
            require(!rw.processed, "untested-list endpoint already processed");
            require(rw.neighbor_time != kNoTime, "untested-list endpoint missing mark time");
            require(rw.tested_time == kNoTime, "untested-list endpoint carries a test time");
            require(rw.cycle_count == 0, "untested-list endpoint carries a cycle counter");
            require(test_count_[e.index] == 0, "untested-list edge was already tested");
        });
        bool seen_positive = false;
        lte_.for_each([&](EdgeId e) {
            require(m_.edge_alive(e), "tested-list edge is not in the current mesh");
            const VertexId w = m_.other_endpoint(e, current_);
            const VertexRecord& rw = m_.vertex(w);
            require(rw.neighbor_time > kNoTime && rw.tested_time >= rw.neighbor_time,
                    "tested-list timestamps out of order");
            require(test_count_[e.index] == 1, "tested-list edge not tested exactly once");
            if (rw.cycle_count > 0)
                seen_positive = true;
            else
                require(!seen_positive, "counter-zero entry behind a positive one");
        });
    }

    void check_counters_match_oracle() const {
        lte_.for_each([&](EdgeId e) {
            const VertexId w = m_.other_endpoint(e, current_);
            require(m_.vertex(w).cycle_count == critical_cycles_through(m_, e),
                    "cached cycle counter diverged from the oracle");
        });
    }

    static void require(bool ok, const char* what) {
        if (!ok) throw InvariantViolation(what);
    }

    Mesh& m_;
    ReducerOptions opts_;
    EdgeWorklist lue_;
    EdgeWorklist lte_;
    std::vector<VertexId> queue_;
    std::vector<std::uint8_t> test_count_;
    std::vector<HalfEdgeId> temp_;
    VertexId current_;
    std::int64_t ts_ = 0;
    std::size_t era_insertions_ = 0;
    ReductionOutcome out_;
};

inline ReductionOutcome reduce_to_irreducible(Mesh& mesh, ReducerOptions options = {}) {
    Reducer r(mesh, std::move(options));
    return r.run();
}

}  // namespace trireduce
