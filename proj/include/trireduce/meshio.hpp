#pragma once

// ASCII OFF reading/writing and DCEL construction from indexed triangles.

#include <array>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "trireduce/errors.hpp"
#include "trireduce/mesh.hpp"

namespace trireduce {

struct TriangleSoup {
    std::vector<std::array<double, 3>> positions;
    std::vector<std::array<std::uint32_t, 3>> triangles;

    bool operator==(const TriangleSoup&) const = default;
};

namespace detail {

// next non-empty, non-comment line; tracks the 1-based line number
inline bool next_content_line(std::istream& in, std::string& line, int& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t i = line.find_first_not_of(" \t\r\n");
        if (i == std::string::npos) continue;
        if (line[i] == '#') continue;
        return true;
    }
    return false;
}

}  // namespace detail

inline TriangleSoup read_off(std::istream& in) {
    int lineno = 0;
    std::string line;
    if (!detail::next_content_line(in, line, lineno))
        throw ParseError("empty OFF stream", lineno);
    {
        std::istringstream ls(line);
        std::string magic;
        ls >> magic;
        if (magic != "OFF") throw ParseError("expected OFF header, got '" + magic + "'", lineno);
    }
    if (!detail::next_content_line(in, line, lineno))
        throw ParseError("missing counts line", lineno);
    std::uint64_t nv = 0, nf = 0, ne = 0;
    {
        std::istringstream ls(line);
        if (!(ls >> nv >> nf >> ne)) throw ParseError("malformed counts line", lineno);
    }

    TriangleSoup soup;
    soup.positions.reserve(nv);
    for (std::uint64_t i = 0; i < nv; ++i) {
        if (!detail::next_content_line(in, line, lineno))
            throw ParseError("unexpected end of file in vertex block", lineno);
        std::istringstream ls(line);
        std::array<double, 3> p{};
        if (!(ls >> p[0] >> p[1] >> p[2]))
            throw ParseError("malformed vertex coordinates", lineno);
        soup.positions.push_back(p);
    }
    soup.triangles.reserve(nf);
    for (std::uint64_t i = 0; i < nf; ++i) {
        if (!detail::next_content_line(in, line, lineno))
            throw ParseError("unexpected end of file in face block", lineno);
        std::istringstream ls(line);
        std::uint64_t arity = 0;
        if (!(ls >> arity)) throw ParseError("malformed face line", lineno);
        if (arity != 3)
            throw UnsupportedFaceError("face with " + std::to_string(arity) +
                                           " vertices; only triangles are supported",
                                       lineno);
        std::array<std::uint32_t, 3> tri{};
        std::uint64_t idx = 0;
        for (int k = 0; k < 3; ++k) {
            if (!(ls >> idx)) throw ParseError("malformed face indices", lineno);
            if (idx >= nv)
                throw ParseError("vertex index " + std::to_string(idx) + " out of range", lineno);
            tri[std::size_t(k)] = std::uint32_t(idx);
        }
        soup.triangles.push_back(tri);
    }
    return soup;
}

inline TriangleSoup read_off(const std::string& bytes) {
    std::istringstream in(bytes);
    return read_off(in);
}

inline void write_off(const TriangleSoup& soup, std::ostream& out) {
    out << "OFF\n" << soup.positions.size() << ' ' << soup.triangles.size() << " 0\n";
    char buf[96];
    for (const auto& p : soup.positions) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", p[0], p[1], p[2]);
        out << buf;
    }
    for (const auto& t : soup.triangles) out << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

// compacts live elements, renumbering vertices in index order
inline TriangleSoup to_soup(const Mesh& m) {
    TriangleSoup soup;
    std::vector<std::uint32_t> remap(m.vertices.size(), 0xffffffffu);
    for (std::uint32_t i = 0; i < m.vertices.size(); ++i) {
        if (!m.vertices[i].alive) continue;
        remap[i] = std::uint32_t(soup.positions.size());
        soup.positions.push_back(m.positions[i]);
    }
    for (std::uint32_t i = 0; i < m.faces.size(); ++i) {
        if (!m.faces[i].alive) continue;
        HalfEdgeId h = m.faces[i].he;
        soup.triangles.push_back({remap[m.origin(h).index], remap[m.origin(m.next(h)).index],
                                  remap[m.origin(m.prev(h)).index]});
    }
    return soup;
}

inline void write_off(const Mesh& m, std::ostream& out) { write_off(to_soup(m), out); }

inline std::string write_off_string(const TriangleSoup& soup) {
    std::ostringstream out;
    write_off(soup, out);
    return out.str();
}

// Builds the DCEL, rejecting anything that is not a closed, connected,
// consistently oriented triangulated surface with all degrees >= 3.
inline Mesh build_mesh(const TriangleSoup& soup) {
    const std::uint32_t nv = std::uint32_t(soup.positions.size());
    const std::uint32_t nf = std::uint32_t(soup.triangles.size());
    if (nf == 0) throw TopologyError("build_mesh: no faces");

    Mesh m;
    m.vertices.resize(nv);
    m.faces.resize(nf);
    m.half_edges.resize(std::size_t(nf) * 3);
    m.positions = soup.positions;

    auto pair_key = [](std::uint32_t a, std::uint32_t b) {
        return (std::uint64_t(a < b ? a : b) << 32) | std::uint64_t(a < b ? b : a);
    };
    std::unordered_map<std::uint64_t, std::pair<HalfEdgeId, HalfEdgeId>> by_pair;
    by_pair.reserve(std::size_t(nf) * 2);

    for (std::uint32_t f = 0; f < nf; ++f) {
        const auto& t = soup.triangles[f];
        if (t[0] >= nv || t[1] >= nv || t[2] >= nv)
            throw TopologyError("build_mesh: vertex index out of range");
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
            throw TopologyError("build_mesh: face with repeated vertex");
        const HalfEdgeId base{3 * f};
        m.faces[f].he = base;
        for (std::uint32_t k = 0; k < 3; ++k) {
            HalfEdgeRecord& h = m.half_edges[base.index + k];
            h.origin = VertexId{t[k]};
            h.next = HalfEdgeId{base.index + (k + 1) % 3};
            h.prev = HalfEdgeId{base.index + (k + 2) % 3};
            h.face = FaceId{f};
            m.vertices[t[k]].he = HalfEdgeId{base.index + k};

            const std::uint32_t dst = t[(k + 1) % 3];
            auto [it, inserted] = by_pair.try_emplace(pair_key(t[k], dst),
                                                      HalfEdgeId{base.index + k}, HalfEdgeId{});
            if (!inserted) {
                if (it->second.second.valid())
                    throw TopologyError("build_mesh: non-manifold edge (more than two faces)");
                it->second.second = HalfEdgeId{base.index + k};
            }
        }
    }

    m.edges.resize(by_pair.size());
    std::uint32_t eid = 0;
    for (auto& [key, halves] : by_pair) {
        auto [ha, hb] = halves;
        if (!hb.valid())
            throw TopologyError("build_mesh: boundary edge (only one incident face)");
        if (m.origin(ha) == m.origin(hb))
            throw TopologyError("build_mesh: inconsistent orientation across an edge");
        m.edges[eid].h1 = ha;
        m.edges[eid].h2 = hb;
        m.half_edges[ha.index].edge = EdgeId{eid};
        m.half_edges[hb.index].edge = EdgeId{eid};
        ++eid;
    }

    m.live_vertices = nv;
    m.live_edges = eid;
    m.live_faces = nf;

    // umbrella check + degree initialization
    for (std::uint32_t i = 0; i < nv; ++i) {
        VertexRecord& r = m.vertices[i];
        if (!r.he.valid()) throw TopologyError("build_mesh: isolated vertex");
        std::uint32_t count = 0;
        HalfEdgeId h = r.he;
        do {
            if (++count > m.live_edges)
                throw TopologyError("build_mesh: broken vertex umbrella");
            h = m.next_outgoing(h);
        } while (h != r.he);
        r.degree = count;
    }

    // surface must be connected: breadth-first walk over face adjacency
    {
        std::vector<bool> seen(nf, false);
        std::vector<std::uint32_t> stack{0};
        seen[0] = true;
        std::uint32_t visited = 1;
        while (!stack.empty()) {
            const std::uint32_t f = stack.back();
            stack.pop_back();
            HalfEdgeId h = m.faces[f].he;
            for (int k = 0; k < 3; ++k, h = m.next(h)) {
                const std::uint32_t g = m.face_of(m.mate(h)).index;
                if (!seen[g]) {
                    seen[g] = true;
                    ++visited;
                    stack.push_back(g);
                }
            }
        }
        if (visited != nf) throw TopologyError("build_mesh: surface is not connected");
    }

    m.validate();
    return m;
}

}  // namespace trireduce
