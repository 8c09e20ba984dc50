#pragma once

// Augmented doubly-connected edge list for closed, connected, orientable
// surface triangulations. Stores the per-vertex bookkeeping attributes used
// by the reducers and implements the edge-contraction surgery.

#include <array>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "trireduce/errors.hpp"
#include "trireduce/handles.hpp"

namespace trireduce {

inline constexpr std::int64_t kNoTime = -1;

enum class WorklistTag : std::uint8_t { none, unprocessed, tested };

struct VertexRecord {
    HalfEdgeId he;                       // one outgoing half-edge
    std::uint32_t degree = 0;            // maintained by contraction callers
    bool processed = false;
    bool alive = true;
    VertexId neighbor_mark;              // vertex this one was last marked a neighbor of
    EdgeId mark_edge;                    // edge realizing that adjacency
    std::uint32_t cycle_count = 0;       // critical cycles through the marked edge
    std::int64_t neighbor_time = kNoTime;
    std::int64_t tested_time = kNoTime;
};

struct EdgeRecord {
    HalfEdgeId h1, h2;
    bool alive = true;
    // Intrusive node for the per-vertex worklists; lets list moves run in
    // constant time straight from the edge record.
    WorklistTag list_tag = WorklistTag::none;
    EdgeId list_prev, list_next;
};

struct HalfEdgeRecord {
    VertexId origin;
    HalfEdgeId prev, next;
    EdgeId edge;
    FaceId face;
    bool alive = true;
};

struct FaceRecord {
    HalfEdgeId he;
    bool alive = true;
};

struct CollapseResult {
    VertexId removed_vertex;
    VertexId apex_x, apex_y;
    EdgeId kept_edge_ux, kept_edge_uy;
    EdgeId removed_edge_vx, removed_edge_vy;
    FaceId removed_face_a, removed_face_b;
};

class Mesh {
  public:
    std::vector<VertexRecord> vertices;
    std::vector<EdgeRecord> edges;
    std::vector<FaceRecord> faces;
    std::vector<HalfEdgeRecord> half_edges;
    std::vector<std::array<double, 3>> positions;  // opaque payload for I/O

    std::uint32_t live_vertices = 0;
    std::uint32_t live_edges = 0;
    std::uint32_t live_faces = 0;

    // -- navigation ---------------------------------------------------------

    HalfEdgeId mate(HalfEdgeId h) const {
        const EdgeRecord& e = edges[half_edges[h.index].edge.index];
        return e.h1 == h ? e.h2 : e.h1;
    }
    HalfEdgeId next(HalfEdgeId h) const { return half_edges[h.index].next; }
    HalfEdgeId prev(HalfEdgeId h) const { return half_edges[h.index].prev; }
    VertexId origin(HalfEdgeId h) const { return half_edges[h.index].origin; }
    VertexId destination(HalfEdgeId h) const { return origin(mate(h)); }
    EdgeId edge_of(HalfEdgeId h) const { return half_edges[h.index].edge; }
    FaceId face_of(HalfEdgeId h) const { return half_edges[h.index].face; }

    // apex of a half-edge's face: the face vertex not on the half-edge
    VertexId apex(HalfEdgeId h) const { return origin(prev(h)); }

    // next outgoing half-edge around the origin of h
    HalfEdgeId next_outgoing(HalfEdgeId h) const { return next(mate(h)); }

    std::pair<VertexId, VertexId> endpoints(EdgeId e) const {
        const EdgeRecord& r = edges[e.index];
        return {origin(r.h1), origin(r.h2)};
    }

    VertexId other_endpoint(EdgeId e, VertexId v) const {
        auto [a, b] = endpoints(e);
        return a == v ? b : a;
    }

    HalfEdgeId half_edge_from(EdgeId e, VertexId org) const {
        const EdgeRecord& r = edges[e.index];
        return origin(r.h1) == org ? r.h1 : r.h2;
    }

    // the two apexes of the faces incident on e; never equal in a valid mesh
    std::pair<VertexId, VertexId> link_of_edge(EdgeId e) const {
        if (!e.valid() || !edges[e.index].alive)
            throw TopologyError("link_of_edge: dead edge handle");
        const EdgeRecord& r = edges[e.index];
        return {apex(r.h1), apex(r.h2)};
    }

    // visits (neighbor vertex, spoke edge) around v in rotational order
    template <class Fn>
    void for_each_neighbor(VertexId v, Fn&& fn) const {
        const HalfEdgeId start = vertices[v.index].he;
        HalfEdgeId h = start;
        do {
            fn(destination(h), edge_of(h));
            h = next_outgoing(h);
        } while (h != start);
    }

    // (link vertex, link boundary edge) pairs around v in rotational order
    std::vector<std::pair<VertexId, EdgeId>> link_of_vertex(VertexId v) const {
        if (!v.valid() || !vertices[v.index].alive)
            throw TopologyError("link_of_vertex: dead vertex handle");
        std::vector<std::pair<VertexId, EdgeId>> out;
        const HalfEdgeId start = vertices[v.index].he;
        HalfEdgeId h = start;
        do {
            out.emplace_back(destination(h), edge_of(next(h)));
            h = next_outgoing(h);
        } while (h != start);
        return out;
    }

    std::vector<VertexId> neighbors(VertexId v) const {
        std::vector<VertexId> out;
        for_each_neighbor(v, [&](VertexId z, EdgeId) { out.push_back(z); });
        return out;
    }

    EdgeId find_edge(VertexId a, VertexId b) const {
        EdgeId found;
        for_each_neighbor(a, [&](VertexId z, EdgeId e) {
            if (z == b) found = e;
        });
        return found;
    }

    bool has_face(VertexId a, VertexId b, VertexId c) const {
        EdgeId e = find_edge(a, b);
        if (!e.valid()) return false;
        auto [x, y] = link_of_edge(e);
        return x == c || y == c;
    }

    VertexRecord& vertex(VertexId v) { return vertices[v.index]; }
    const VertexRecord& vertex(VertexId v) const { return vertices[v.index]; }
    EdgeRecord& edge(EdgeId e) { return edges[e.index]; }
    const EdgeRecord& edge(EdgeId e) const { return edges[e.index]; }

    bool vertex_alive(VertexId v) const { return v.valid() && vertices[v.index].alive; }
    bool edge_alive(EdgeId e) const { return e.valid() && edges[e.index].alive; }

    std::int64_t euler_characteristic() const {
        return std::int64_t(live_vertices) - std::int64_t(live_edges) + std::int64_t(live_faces);
    }

    // -- contraction surgery -------------------------------------------------
    //
    // Contracts e = [keep, v], merging v into keep. Removes v, edges [keep,v],
    // [v,x], [v,y] and the two faces on e, where x and y are the apexes of e.
    // Every other edge [v,z] keeps its identity and is re-origined to keep;
    // the re-origined half-edges (keep -> z) are appended to temp in
    // rotational order. Degree fields are NOT touched; callers update them.
    CollapseResult collapse(EdgeId e, VertexId keep, std::vector<HalfEdgeId>& temp) {
        if (!edge_alive(e)) throw TopologyError("collapse: dead edge handle");
        const HalfEdgeId h = half_edge_from(e, keep);     // keep -> v
        const HalfEdgeId hm = mate(h);                    // v -> keep
        const VertexId v = origin(hm);
        const VertexId x = apex(h);
        const VertexId y = apex(hm);
        const FaceId face_a = face_of(h);
        const FaceId face_b = face_of(hm);

        const HalfEdgeId h1 = mate(next(h));              // x -> v, in a surviving face
        const HalfEdgeId h2 = mate(prev(hm));             // v -> y, in a surviving face
        const EdgeId e_vx = edge_of(h1);
        const EdgeId e_vy = edge_of(h2);

        // re-origin the surviving spokes of v
        HalfEdgeId h3 = next(h1);
        while (h3 != h2) {
            half_edges[h3.index].origin = keep;
            temp.push_back(h3);
            h3 = next(mate(h3));
        }
        half_edges[h2.index].origin = keep;

        // re-glue the surviving edges [keep,x] and [keep,y]
        const EdgeId e_ux = edge_of(prev(h));
        const EdgeId e_uy = edge_of(next(hm));
        const HalfEdgeId ux_outer = mate(prev(h));        // keep -> x
        const HalfEdgeId uy_outer = mate(next(hm));       // y -> keep
        edges[e_ux.index].h1 = ux_outer;
        edges[e_ux.index].h2 = h1;
        half_edges[h1.index].edge = e_ux;
        edges[e_uy.index].h1 = uy_outer;
        edges[e_uy.index].h2 = h2;
        half_edges[h2.index].edge = e_uy;

        vertices[keep.index].he = h2;                     // keep -> y
        vertices[x.index].he = h1;                        // x -> keep
        vertices[y.index].he = uy_outer;                  // y -> keep

        for (HalfEdgeId dead : {h, next(h), prev(h), hm, next(hm), prev(hm)})
            half_edges[dead.index].alive = false;
        for (EdgeId de : {e, e_vx, e_vy}) edges[de.index].alive = false;
        faces[face_a.index].alive = false;
        faces[face_b.index].alive = false;
        vertices[v.index].alive = false;

        live_vertices -= 1;
        live_edges -= 3;
        live_faces -= 2;

        return CollapseResult{v, x, y, e_ux, e_uy, e_vx, e_vy, face_a, face_b};
    }

    // -- full structural validation ------------------------------------------

    void validate() const {
        std::uint32_t nv = 0, ne = 0, nf = 0, nh = 0;
        for (const auto& r : vertices) nv += r.alive;
        for (const auto& r : edges) ne += r.alive;
        for (const auto& r : faces) nf += r.alive;
        for (const auto& r : half_edges) nh += r.alive;
        if (nv != live_vertices || ne != live_edges || nf != live_faces)
            throw TopologyError("validate: live counts out of sync");
        if (3 * std::uint64_t(nf) != 2 * std::uint64_t(ne))
            throw TopologyError("validate: 3*n_f != 2*n_e");
        if (nh != 2 * ne) throw TopologyError("validate: half-edge count != 2*n_e");

        for (std::uint32_t i = 0; i < half_edges.size(); ++i) {
            const HalfEdgeRecord& r = half_edges[i];
            if (!r.alive) continue;
            const HalfEdgeId h{i};
            if (!vertex_alive(r.origin)) throw TopologyError("validate: dead origin");
            if (!edge_alive(r.edge)) throw TopologyError("validate: dead owning edge");
            if (!r.face.valid() || !faces[r.face.index].alive)
                throw TopologyError("validate: dead owning face");
            if (!half_edges[r.next.index].alive || !half_edges[r.prev.index].alive)
                throw TopologyError("validate: dead next/prev");
            if (prev(next(h)) != h || next(prev(h)) != h)
                throw TopologyError("validate: prev is not the inverse of next");
            if (face_of(next(h)) != r.face)
                throw TopologyError("validate: next leaves the face");
            if (mate(mate(h)) != h) throw TopologyError("validate: mate not an involution");
            if (origin(mate(h)) == r.origin) throw TopologyError("validate: loop edge");
            if (next(next(next(h))) != h)
                throw TopologyError("validate: face loop is not a triangle");
        }

        for (std::uint32_t i = 0; i < edges.size(); ++i) {
            const EdgeRecord& r = edges[i];
            if (!r.alive) continue;
            if (edge_of(r.h1) != EdgeId{i} || edge_of(r.h2) != EdgeId{i})
                throw TopologyError("validate: half-edge/edge ownership mismatch");
            if (face_of(r.h1) == face_of(r.h2))
                throw TopologyError("validate: edge with both sides on one face");
            if (apex(r.h1) == apex(r.h2))
                throw TopologyError("validate: two faces share all three vertices");
        }

        for (std::uint32_t i = 0; i < faces.size(); ++i) {
            const FaceRecord& r = faces[i];
            if (!r.alive) continue;
            if (!half_edges[r.he.index].alive || face_of(r.he) != FaceId{i})
                throw TopologyError("validate: face anchor broken");
            VertexId a = origin(r.he), b = origin(next(r.he)), c = origin(prev(r.he));
            if (a == b || b == c || a == c)
                throw TopologyError("validate: face with repeated vertex");
        }

        std::uint64_t spokes_total = 0;
        for (std::uint32_t i = 0; i < vertices.size(); ++i) {
            const VertexRecord& r = vertices[i];
            if (!r.alive) continue;
            const VertexId v{i};
            if (!r.he.valid() || !half_edges[r.he.index].alive || origin(r.he) != v)
                throw TopologyError("validate: vertex anchor broken");
            std::unordered_set<std::uint32_t> seen;
            std::uint32_t count = 0;
            HalfEdgeId h = r.he;
            do {
                if (!seen.insert(destination(h).index).second)
                    throw TopologyError("validate: duplicate edge between two vertices");
                if (++count > live_edges + 1)
                    throw TopologyError("validate: runaway vertex rotation");
                h = next_outgoing(h);
            } while (h != r.he);
            if (count < 3) throw TopologyError("validate: vertex of degree < 3");
            if (count != r.degree)
                throw TopologyError("validate: stored degree disagrees with rotation of vertex " +
                                    std::to_string(i));
            spokes_total += count;
        }
        if (spokes_total != 2 * std::uint64_t(ne))
            throw TopologyError("validate: vertex umbrellas do not cover all edges");
    }
};

}  // namespace trireduce
