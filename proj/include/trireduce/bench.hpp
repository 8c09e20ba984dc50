#pragma once

// Benchmark driver: runs the reducers over mesh families and emits CSV rows
// with the link-test counters and wall times. Timing covers reduction only,
// never file I/O or DCEL construction.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "trireduce/baselines.hpp"
#include "trireduce/meshio.hpp"
#include "trireduce/reducer.hpp"
#include "trireduce/stats.hpp"
#include "trireduce/topo.hpp"

namespace trireduce {

enum class Algo { rs, schipper, bf, bf_adversarial };

inline const char* algo_name(Algo a) {
    switch (a) {
        case Algo::rs: return "rs";
        case Algo::schipper: return "schipper";
        case Algo::bf: return "bf";
        case Algo::bf_adversarial: return "bf-adversarial";
    }
    return "?";
}

struct SuiteItem {
    std::string name;
    TriangleSoup soup;
};

struct SuiteSpec {
    std::vector<SuiteItem> meshes;
    std::vector<Algo> algos;
    std::uint32_t repetitions = 1;  // seeded repetitions for the shuffled sweep
    std::uint64_t seed_base = 0;
};

struct SuiteRow {
    std::string mesh;
    std::uint64_t n_v = 0, n_e = 0, n_f = 0;
    std::int64_t genus = 0;
    std::string algorithm;
    std::string seed;
    double link_tests = 0, retested_edges = 0, contractions = 0;
    double output_n_v = 0;
    double elapsed_ns = 0;
    double link_test_ops = 0;  // not part of the CSV schema
    std::string status = "ok";
};

// input-mesh edge order with the currently non-contractible edges first
inline std::vector<EdgeId> adversarial_edge_order(const Mesh& m) {
    std::vector<EdgeId> blocked, free_edges;
    for (std::uint32_t i = 0; i < m.edges.size(); ++i) {
        if (!m.edges[i].alive) continue;
        (link_condition_oracle(m, EdgeId{i}) ? free_edges : blocked).push_back(EdgeId{i});
    }
    blocked.insert(blocked.end(), free_edges.begin(), free_edges.end());
    return blocked;
}

inline ReductionOutcome run_algo(Mesh& m, Algo algo, std::uint64_t seed) {
    switch (algo) {
        case Algo::rs: return reduce_to_irreducible(m);
        case Algo::schipper: return schipper_reduce(m);
        case Algo::bf: return brute_force_reduce(m, seed);
        case Algo::bf_adversarial:
            return brute_force_reduce_ordered(m, adversarial_edge_order(m));
    }
    throw std::logic_error("run_algo: unknown algorithm");
}

inline std::vector<SuiteRow> run_suite(const SuiteSpec& spec) {
    std::vector<SuiteRow> rows;
    for (const SuiteItem& item : spec.meshes) {
        for (Algo algo : spec.algos) {
            SuiteRow row;
            row.mesh = item.name;
            row.algorithm = algo_name(algo);
            try {
                const std::uint32_t reps =
                    algo == Algo::bf ? std::max<std::uint32_t>(1, spec.repetitions) : 1;
                double l = 0, eps = 0, contr = 0, out_nv = 0, ns = 0, ops = 0;
                std::int64_t genus_in = 0, euler_in = 0;
                for (std::uint32_t rep = 0; rep < reps; ++rep) {
                    Mesh m = build_mesh(item.soup);
                    const TopologyReport in_rep = euler_genus(m);
                    genus_in = in_rep.genus;
                    euler_in = in_rep.euler;
                    row.n_v = in_rep.n_vertices;
                    row.n_e = in_rep.n_edges;
                    row.n_f = in_rep.n_faces;
                    const ReductionOutcome res = run_algo(m, algo, spec.seed_base + rep);
                    if (m.euler_characteristic() != euler_in)
                        throw TopologyError("reduction changed the Euler characteristic");
                    if (!certify_irreducible(m))
                        throw TopologyError("reduction output is not irreducible");
                    if (genus_in == 0 && m.live_vertices != 4)
                        throw TopologyError("genus-0 output is not the 4-vertex sphere");
                    if (algo == Algo::rs &&
                        (res.stats.retested_edges != 0 || res.stats.link_tests > row.n_e))
                        throw TopologyError("single-test counters violated");
                    l += double(res.stats.link_tests);
                    eps += double(res.stats.retested_edges);
                    contr += double(res.stats.contractions);
                    out_nv += double(m.live_vertices);
                    ns += double(res.stats.run_ns);
                    ops += double(res.stats.link_test_ops);
                }
                row.genus = genus_in;
                row.seed = algo == Algo::bf
                               ? (reps > 1 ? "mean" : std::to_string(spec.seed_base))
                               : "-";
                row.link_tests = l / reps;
                row.retested_edges = eps / reps;
                row.contractions = contr / reps;
                row.output_n_v = out_nv / reps;
                row.elapsed_ns = ns / reps;
                row.link_test_ops = ops / reps;
            } catch (const std::exception& ex) {
                row.status = std::string("error: ") + ex.what();
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

inline void write_csv(const std::vector<SuiteRow>& rows, std::ostream& out) {
    out << "mesh,n_v,n_e,n_f,genus,algorithm,seed,link_tests,retested_edges,"
           "contractions,output_n_v,elapsed_ns,status\n";
    auto num = [](double v) {
        if (v == std::int64_t(v)) return std::to_string(std::int64_t(v));
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.1f", v);
        return std::string(buf);
    };
    for (const SuiteRow& r : rows) {
        if (r.status != "ok") {
            out << r.mesh << ",,,,," << r.algorithm << ",,,,,,,\"" << r.status << "\"\n";
            continue;
        }
        out << r.mesh << ',' << r.n_v << ',' << r.n_e << ',' << r.n_f << ',' << r.genus << ','
            << r.algorithm << ',' << r.seed << ',' << num(r.link_tests) << ','
            << num(r.retested_edges) << ',' << num(r.contractions) << ','
            << num(r.output_n_v) << ',' << num(r.elapsed_ns) << ",ok\n";
    }
}

struct LinearFit {
    double slope = 0, intercept = 0, r2 = 0;
};

inline LinearFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys) {
    const double n = double(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    LinearFit fit;
    const double denom = n * sxx - sx * sx;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    double ss_res = 0, ss_tot = 0;
    const double mean_y = sy / n;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double pred = fit.slope * xs[i] + fit.intercept;
        ss_res += (ys[i] - pred) * (ys[i] - pred);
        ss_tot += (ys[i] - mean_y) * (ys[i] - mean_y);
    }
    fit.r2 = ss_tot == 0 ? 1.0 : 1.0 - ss_res / ss_tot;
    return fit;
}

}  // namespace trireduce
