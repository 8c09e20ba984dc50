#pragma once

// Command-line front end: reduce / verify / gen / bench subcommands.
// Exit codes: 0 success, 1 bad flags or malformed input, 2 topology errors,
// 3 verification failure (and for `verify`, 1 also means "reducible").

#include <CLI11.hpp>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "trireduce/bench.hpp"
#include "trireduce/meshgen.hpp"

namespace trireduce {

namespace climpl {

inline TriangleSoup load_soup(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_off(in);
}

inline void emit_off(const TriangleSoup& soup, const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
        write_off(soup, fallback);
        return;
    }
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    write_off(soup, out);
}

inline std::vector<Algo> parse_algos(const std::string& list) {
    std::vector<Algo> algos;
    std::stringstream ss(list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "rs")
            algos.push_back(Algo::rs);
        else if (tok == "schipper")
            algos.push_back(Algo::schipper);
        else if (tok == "bf")
            algos.push_back(Algo::bf);
        else if (tok == "bf-adversarial")
            algos.push_back(Algo::bf_adversarial);
        else
            throw CLI::ValidationError("--algos", "unknown algorithm '" + tok + "'");
    }
    if (algos.empty()) throw CLI::ValidationError("--algos", "no algorithms given");
    return algos;
}

inline void append_stats_row(const std::string& path, const SuiteRow& row) {
    bool write_header = true;
    {
        std::ifstream probe(path);
        if (probe && probe.peek() != std::ifstream::traits_type::eof()) write_header = false;
    }
    std::ofstream out(path, std::ios::app);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    std::vector<SuiteRow> rows{row};
    if (write_header) {
        write_csv(rows, out);
    } else {
        std::ostringstream tmp;
        write_csv(rows, tmp);
        const std::string text = tmp.str();
        out << text.substr(text.find('\n') + 1);
    }
}

inline SuiteSpec family_suite(const std::string& family, const std::vector<Algo>& algos,
                              std::uint32_t reps, std::uint64_t seed_base) {
    SuiteSpec spec;
    spec.algos = algos;
    spec.repetitions = reps;
    spec.seed_base = seed_base;
    if (family == "genus0-sweep") {
        for (std::uint32_t level = 0; level <= 3; ++level)
            spec.meshes.push_back({"brick3x3C-r" + std::to_string(level),
                                   refine_times(gen_brick(3, 3, std::string(9, 'C')), level)});
    } else if (family == "fixed-genus-sweep") {
        for (std::uint32_t level = 0; level <= 3; ++level)
            spec.meshes.push_back({"brick4x4H-r" + std::to_string(level),
                                   refine_times(gen_brick(4, 4, std::string(16, 'H')), level)});
    } else if (family == "genus-sweep") {
        for (std::uint32_t holes = 0; holes <= 36; holes += 6) {
            std::string cells(36, 'C');
            for (std::uint32_t k = 0; k < holes; ++k) cells[k] = 'H';
            spec.meshes.push_back({"brick6x6-g" + std::to_string(holes),
                                   refine_times(gen_brick(6, 6, cells), 1)});
        }
    } else if (family == "badcase") {
        spec.algos.clear();
        for (Algo a : algos) spec.algos.push_back(a);
        bool has_adv = false;
        for (Algo a : spec.algos) has_adv |= a == Algo::bf_adversarial;
        if (!has_adv) spec.algos.push_back(Algo::bf_adversarial);
        for (std::uint32_t m : {8u, 16u, 32u, 64u})
            spec.meshes.push_back({"badcase-m" + std::to_string(m), gen_badcase_sphere(m)});
    } else {
        throw CLI::ValidationError("--family", "unknown family '" + family + "'");
    }
    return spec;
}

}  // namespace climpl

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"surface triangulation reducer"};
    app.require_subcommand(1);

    // reduce
    auto* reduce = app.add_subcommand("reduce", "reduce a triangulation until irreducible");
    std::string algo = "rs", in_path, out_path, stats_path, log_path;
    std::uint64_t seed = 0;
    bool verify_flag = false;
    reduce->add_option("--algo", algo, "rs, schipper, or bf")
        ->check(CLI::IsMember({"rs", "schipper", "bf"}));
    reduce->add_option("--in", in_path, "input OFF file")->required();
    reduce->add_option("--out", out_path, "output OFF file (stdout if omitted)");
    reduce->add_option("--seed", seed, "shuffle seed for bf");
    reduce->add_option("--stats", stats_path, "append a counters row to this CSV");
    reduce->add_option("--log", log_path, "write the contraction log here");
    reduce->add_flag("--verify", verify_flag, "re-check the output with the oracle");

    // verify
    auto* verify = app.add_subcommand("verify", "report topology and irreducibility");
    std::string verify_in;
    verify->add_option("--in", verify_in, "input OFF file")->required();

    // gen
    auto* gen = app.add_subcommand("gen", "generate a mesh family member");
    gen->require_subcommand(1);
    std::string gen_out;
    std::uint32_t refine = 0;
    gen->add_option("--refine", refine, "apply 1-to-4 refinement this many times");
    gen->add_option("--out", gen_out, "output OFF file (stdout if omitted)");
    auto* gen_tet = gen->add_subcommand("tet", "4-vertex sphere");
    gen_tet->fallthrough();
    std::uint32_t torus_p = 4, torus_q = 4;
    auto* gen_torus = gen->add_subcommand("torus", "flat torus grid");
    gen_torus->fallthrough();
    gen_torus->add_option("p", torus_p, "ring size p")->required();
    gen_torus->add_option("q", torus_q, "ring size q")->required();
    std::uint32_t brick_rows = 1, brick_cols = 1;
    std::string brick_cells;
    auto* gen_brick_cmd = gen->add_subcommand("brick", "slab with cavities/holes");
    gen_brick_cmd->fallthrough();
    gen_brick_cmd->add_option("rows", brick_rows, "grid rows")->required();
    gen_brick_cmd->add_option("cols", brick_cols, "grid cols")->required();
    gen_brick_cmd->add_option("--cells", brick_cells, "row-major cell string over F/C/H")
        ->required();
    std::uint32_t badcase_m = 4;
    auto* gen_badcase = gen->add_subcommand("badcase", "two-pole worst-case sphere");
    gen_badcase->fallthrough();
    gen_badcase->add_option("m", badcase_m, "ring size m (>= 3)")->required();

    // bench
    auto* bench = app.add_subcommand("bench", "run a benchmark family, emit CSV");
    std::string family, algos_list = "rs,schipper,bf", bench_out;
    std::uint32_t reps = 1;
    std::uint64_t seed_base = 0;
    bench->add_option("--family", family, "genus0-sweep, fixed-genus-sweep, genus-sweep, badcase")
        ->required();
    bench->add_option("--algos", algos_list, "comma-separated algorithm list");
    bench->add_option("--reps", reps, "seeded repetitions for bf (mean row)");
    bench->add_option("--seed-base", seed_base, "first bf seed");
    bench->add_option("--out", bench_out, "output CSV file (stdout if omitted)");

    try {
        std::vector<const char*> argv;
        argv.push_back("trireduce");
        for (const std::string& a : args) argv.push_back(a.c_str());
        try {
            app.parse(int(argv.size()), argv.data());
        } catch (const CLI::ParseError& e) {
            if (e.get_exit_code() == 0) {
                out << app.help();
                return 0;
            }
            err << e.what() << '\n';
            return 1;
        }

        if (reduce->parsed()) {
            const TriangleSoup soup = climpl::load_soup(in_path);
            Mesh mesh = build_mesh(soup);
            const TopologyReport before = euler_genus(mesh);
            ReductionOutcome res;
            if (algo == "rs")
                res = reduce_to_irreducible(mesh);
            else if (algo == "schipper")
                res = schipper_reduce(mesh);
            else
                res = brute_force_reduce(mesh, seed);
            if (verify_flag) {
                if (mesh.euler_characteristic() != before.euler) {
                    err << "verification failed: Euler characteristic changed\n";
                    return 3;
                }
                if (!certify_irreducible(mesh)) {
                    err << "verification failed: output is reducible\n";
                    return 3;
                }
            }
            if (!log_path.empty()) {
                std::ofstream log(log_path);
                if (!log) throw ParseError("cannot open '" + log_path + "' for writing");
                for (const ContractionRecord& rec : res.log)
                    log << "contract " << rec.kept_vertex.index << ' '
                        << rec.removed_vertex.index << " | edges "
                        << rec.removed_edges[0].index << ' ' << rec.removed_edges[1].index
                        << ' ' << rec.removed_edges[2].index << " | faces "
                        << rec.removed_faces[0].index << ' ' << rec.removed_faces[1].index
                        << '\n';
            }
            if (!stats_path.empty()) {
                SuiteRow row;
                row.mesh = in_path;
                row.n_v = before.n_vertices;
                row.n_e = before.n_edges;
                row.n_f = before.n_faces;
                row.genus = before.genus;
                row.algorithm = algo;
                row.seed = algo == "bf" ? std::to_string(seed) : "-";
                row.link_tests = double(res.stats.link_tests);
                row.retested_edges = double(res.stats.retested_edges);
                row.contractions = double(res.stats.contractions);
                row.output_n_v = double(mesh.live_vertices);
                row.elapsed_ns = double(res.stats.run_ns);
                climpl::append_stats_row(stats_path, row);
            }
            climpl::emit_off(to_soup(mesh), out_path, out);
            return 0;
        }

        if (verify->parsed()) {
            const TriangleSoup soup = climpl::load_soup(verify_in);
            Mesh mesh = build_mesh(soup);
            const TopologyReport rep = euler_genus(mesh);
            out << "vertices: " << rep.n_vertices << "\nedges: " << rep.n_edges
                << "\nfaces: " << rep.n_faces << "\neuler: " << rep.euler
                << "\ngenus: " << rep.genus << "\nt4: " << (rep.is_t4 ? "yes" : "no") << '\n';
            std::map<std::uint32_t, std::uint32_t> histogram;
            std::vector<EdgeId> contractible;
            for (std::uint32_t i = 0; i < mesh.edges.size(); ++i) {
                if (!mesh.edges[i].alive) continue;
                const EdgeId e{i};
                ++histogram[critical_cycles_through(mesh, e)];
                if (link_condition_oracle(mesh, e)) contractible.push_back(e);
            }
            out << "critical cycles per edge:\n";
            for (auto [cycles, count] : histogram)
                out << "  " << cycles << " -> " << count << " edges\n";
            out << "irreducible: " << (contractible.empty() ? "yes" : "no") << '\n';
            for (EdgeId e : contractible) {
                auto [u, v] = mesh.endpoints(e);
                out << "contractible: " << u.index << ' ' << v.index << '\n';
            }
            return contractible.empty() ? 0 : 1;
        }

        if (gen->parsed()) {
            TriangleSoup soup;
            if (gen_tet->parsed())
                soup = gen_tetrahedron();
            else if (gen_torus->parsed())
                soup = gen_torus_grid(torus_p, torus_q);
            else if (gen_brick_cmd->parsed())
                soup = gen_brick(brick_rows, brick_cols, brick_cells);
            else if (gen_badcase->parsed())
                soup = gen_badcase_sphere(badcase_m);
            soup = refine_times(std::move(soup), refine);
            climpl::emit_off(soup, gen_out, out);
            return 0;
        }

        if (bench->parsed()) {
            const SuiteSpec spec =
                climpl::family_suite(family, climpl::parse_algos(algos_list), reps, seed_base);
            const std::vector<SuiteRow> rows = run_suite(spec);
            if (bench_out.empty()) {
                write_csv(rows, out);
            } else {
                std::ofstream f(bench_out);
                if (!f) throw ParseError("cannot open '" + bench_out + "' for writing");
                write_csv(rows, f);
            }
            return 0;
        }
        return 1;
    } catch (const CLI::Error& e) {
        err << e.what() << '\n';
        return 1;
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << '\n';
        return 1;
    } catch (const TopologyError& e) {
        err << "topology error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace trireduce
