#pragma once

// Deterministic generators for the benchmark families: the 4-vertex sphere,
// flat torus grids, brick slabs with cavities/holes, the two-pole worst-case
// sphere for sweep reducers, and 1-to-4 midpoint refinement.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "trireduce/errors.hpp"
#include "trireduce/meshio.hpp"

namespace trireduce {

inline TriangleSoup gen_tetrahedron() {
    TriangleSoup soup;
    soup.positions = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
    soup.triangles = {{0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2}};
    return soup;
}

// p x q vertex flat torus, every grid quad split by one diagonal; genus 1
inline TriangleSoup gen_torus_grid(std::uint32_t p, std::uint32_t q) {
    if (p < 3 || q < 3) throw TopologyError("gen_torus_grid: need p >= 3 and q >= 3");
    TriangleSoup soup;
    auto id = [&](std::uint32_t i, std::uint32_t j) { return (i % p) * q + (j % q); };
    const double two_pi = 6.283185307179586;
    for (std::uint32_t i = 0; i < p; ++i) {
        for (std::uint32_t j = 0; j < q; ++j) {
            const double a = two_pi * i / p, b = two_pi * j / q;
            const double r = 2.0 + 0.7 * std::cos(b);
            soup.positions.push_back({r * std::cos(a), r * std::sin(a), 0.7 * std::sin(b)});
        }
    }
    for (std::uint32_t i = 0; i < p; ++i) {
        for (std::uint32_t j = 0; j < q; ++j) {
            soup.triangles.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
            soup.triangles.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
        }
    }
    build_mesh(soup);  // reject parameter combinations that break simplicity
    return soup;
}

enum class BrickCell : char { Flat = 'F', Cavity = 'C', Hole = 'H' };

inline std::vector<BrickCell> parse_brick_cells(const std::string& spec) {
    std::vector<BrickCell> cells;
    cells.reserve(spec.size());
    for (char c : spec) {
        switch (c) {
            case 'F': cells.push_back(BrickCell::Flat); break;
            case 'C': cells.push_back(BrickCell::Cavity); break;
            case 'H': cells.push_back(BrickCell::Hole); break;
            default: throw ParseError(std::string("cell spec: unknown cell kind '") + c + "'");
        }
    }
    return cells;
}

namespace detail {

class SoupBuilder {
  public:
    std::uint32_t vertex(double x, double y, double z) {
        soup.positions.push_back({x, y, z});
        return std::uint32_t(soup.positions.size() - 1);
    }
    void tri(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
        soup.triangles.push_back({a, b, c});
    }
    void quad(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
        tri(a, b, c);
        tri(a, c, d);
    }
    TriangleSoup soup;
};

}  // namespace detail

// A triangulated rectangular slab. Each cell of the rows x cols grid is
// flat, indented by a closed box pit (genus unchanged), or pierced by a
// rectangular tunnel (genus +1). Total genus = number of Hole cells.
inline TriangleSoup gen_brick(std::uint32_t rows, std::uint32_t cols,
                              const std::vector<BrickCell>& cells) {
    if (rows < 1 || cols < 1) throw TopologyError("gen_brick: grid dimensions must be >= 1");
    if (cells.size() != std::size_t(rows) * cols)
        throw TopologyError("gen_brick: cell spec size does not match the grid");

    detail::SoupBuilder b;
    std::vector<std::uint32_t> top((rows + 1) * (cols + 1)), bot((rows + 1) * (cols + 1));
    auto at = [&](std::uint32_t r, std::uint32_t c) { return r * (cols + 1) + c; };
    for (std::uint32_t r = 0; r <= rows; ++r) {
        for (std::uint32_t c = 0; c <= cols; ++c) {
            top[at(r, c)] = b.vertex(c, r, 1.0);
            bot[at(r, c)] = b.vertex(c, r, 0.0);
        }
    }

    for (std::uint32_t r = 0; r < rows; ++r) {
        for (std::uint32_t c = 0; c < cols; ++c) {
            const BrickCell kind = cells[r * cols + c];
            // top rim, counter-clockwise seen from above
            const std::uint32_t t0 = top[at(r, c)], t1 = top[at(r, c + 1)],
                                t2 = top[at(r + 1, c + 1)], t3 = top[at(r + 1, c)];
            // bottom rim, counter-clockwise seen from below
            const std::uint32_t b0 = bot[at(r, c)], b1 = bot[at(r + 1, c)],
                                b2 = bot[at(r + 1, c + 1)], b3 = bot[at(r, c + 1)];
            const double cx = c + 0.5, cy = r + 0.5;

            auto inset_ring = [&](double z, double half) {
                return std::array<std::uint32_t, 4>{
                    b.vertex(cx - half, cy - half, z), b.vertex(cx + half, cy - half, z),
                    b.vertex(cx + half, cy + half, z), b.vertex(cx - half, cy + half, z)};
            };
            auto ring_between = [&](const std::array<std::uint32_t, 4>& rim,
                                    const std::array<std::uint32_t, 4>& mouth) {
                for (int k = 0; k < 4; ++k)
                    b.quad(rim[std::size_t(k)], rim[(k + 1) % 4], mouth[(k + 1) % 4],
                           mouth[std::size_t(k)]);
            };

            if (kind == BrickCell::Flat) {
                b.quad(t0, t1, t2, t3);
                b.quad(b0, b1, b2, b3);
            } else if (kind == BrickCell::Cavity) {
                const std::array<std::uint32_t, 4> rim{t0, t1, t2, t3};
                const auto mouth = inset_ring(1.0, 0.25);
                const auto floor = inset_ring(0.3, 0.25);
                ring_between(rim, mouth);
                ring_between(mouth, floor);
                b.quad(floor[0], floor[1], floor[2], floor[3]);
                b.quad(b0, b1, b2, b3);
            } else {
                const std::array<std::uint32_t, 4> rim_top{t0, t1, t2, t3};
                const std::array<std::uint32_t, 4> rim_bot{b0, b1, b2, b3};
                const auto mouth_top = inset_ring(1.0, 0.25);
                // bottom mouth mirrors the bottom rim's winding
                const auto mt = mouth_top;
                const std::array<std::uint32_t, 4> mouth_bot_src{
                    b.vertex(cx - 0.25, cy - 0.25, 0.0), b.vertex(cx - 0.25, cy + 0.25, 0.0),
                    b.vertex(cx + 0.25, cy + 0.25, 0.0), b.vertex(cx + 0.25, cy - 0.25, 0.0)};
                ring_between(rim_top, mouth_top);
                ring_between(rim_bot, mouth_bot_src);
                // tunnel walls join the top mouth to the bottom mouth; the
                // bottom ring lists the same square in mirrored order
                const std::array<std::uint32_t, 4> mouth_bot{
                    mouth_bot_src[0], mouth_bot_src[3], mouth_bot_src[2], mouth_bot_src[1]};
                for (int k = 0; k < 4; ++k)
                    b.quad(mt[std::size_t(k)], mt[(k + 1) % 4], mouth_bot[(k + 1) % 4],
                           mouth_bot[std::size_t(k)]);
            }
        }
    }

    // perimeter side walls
    for (std::uint32_t c = 0; c < cols; ++c) {
        b.quad(top[at(0, c + 1)], top[at(0, c)], bot[at(0, c)], bot[at(0, c + 1)]);
        b.quad(top[at(rows, c)], top[at(rows, c + 1)], bot[at(rows, c + 1)], bot[at(rows, c)]);
    }
    for (std::uint32_t r = 0; r < rows; ++r) {
        b.quad(top[at(r, 0)], top[at(r + 1, 0)], bot[at(r + 1, 0)], bot[at(r, 0)]);
        b.quad(top[at(r + 1, cols)], top[at(r, cols)], bot[at(r, cols)], bot[at(r + 1, cols)]);
    }

    build_mesh(b.soup);
    return b.soup;
}

inline TriangleSoup gen_brick(std::uint32_t rows, std::uint32_t cols, const std::string& cells) {
    return gen_brick(rows, cols, parse_brick_cells(cells));
}

// Worst case for sweep reducers: poles x and y both adjacent to the whole
// middle ring v_0..v_{m-1}; the pole spokes and ring edges all start out
// non-contractible, and testing a spoke costs time linear in m because the
// pole degrees grow with m. 3m+2 vertices, genus 0.
//
// Around the equator, pocket vertices w_i (above) and u_i (below) interleave
// with the v-ring inside the pole wheels, so the wheels contain no face
// [pole, v_i, v_i+1] and every cycle (pole, v_i, v_i+1) stays critical until
// the pockets collapse.
//
// Vertex layout: x = 0, y = 1, then v_i = 2+3i, w_i = 3+3i, u_i = 4+3i.
inline TriangleSoup gen_badcase_sphere(std::uint32_t m) {
    if (m < 3) throw TopologyError("gen_badcase_sphere: need m >= 3");
    detail::SoupBuilder b;
    const double two_pi = 6.283185307179586;
    const std::uint32_t x = b.vertex(0, 0, 2);
    const std::uint32_t y = b.vertex(0, 0, -2);
    std::vector<std::uint32_t> v(m), w(m), u(m);
    for (std::uint32_t i = 0; i < m; ++i) {
        const double a = two_pi * i / m;
        const double ah = two_pi * (i + 0.5) / m;
        v[i] = b.vertex(2 * std::cos(a), 2 * std::sin(a), 0);
        w[i] = b.vertex(2.2 * std::cos(ah), 2.2 * std::sin(ah), 0.5);
        u[i] = b.vertex(2.2 * std::cos(ah), 2.2 * std::sin(ah), -0.5);
    }
    for (std::uint32_t i = 0; i < m; ++i) {
        const std::uint32_t j = (i + 1) % m;
        b.tri(x, v[i], w[i]);
        b.tri(x, w[i], v[j]);
        b.tri(v[i], v[j], w[i]);
        b.tri(v[i], u[i], v[j]);
        b.tri(y, v[j], u[i]);
        b.tri(y, u[i], v[i]);
    }
    build_mesh(b.soup);
    return b.soup;
}

// splits every triangle into four at the edge midpoints; genus preserved
inline TriangleSoup refine_1to4(const TriangleSoup& soup) {
    TriangleSoup out;
    out.positions = soup.positions;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> midpoint;
    auto mid = [&](std::uint32_t a, std::uint32_t b) {
        const std::pair<std::uint32_t, std::uint32_t> key = std::minmax(a, b);
        auto it = midpoint.find(key);
        if (it != midpoint.end()) return it->second;
        const auto& pa = soup.positions[a];
        const auto& pb = soup.positions[b];
        out.positions.push_back(
            {(pa[0] + pb[0]) / 2, (pa[1] + pb[1]) / 2, (pa[2] + pb[2]) / 2});
        const std::uint32_t id = std::uint32_t(out.positions.size() - 1);
        midpoint.emplace(key, id);
        return id;
    };
    for (const auto& t : soup.triangles) {
        const std::uint32_t ab = mid(t[0], t[1]), bc = mid(t[1], t[2]), ca = mid(t[2], t[0]);
        out.triangles.push_back({t[0], ab, ca});
        out.triangles.push_back({t[1], bc, ab});
        out.triangles.push_back({t[2], ca, bc});
        out.triangles.push_back({ab, bc, ca});
    }
    return out;
}

inline TriangleSoup refine_times(TriangleSoup soup, std::uint32_t times) {
    for (std::uint32_t i = 0; i < times; ++i) soup = refine_1to4(soup);
    return soup;
}

}  // namespace trireduce
