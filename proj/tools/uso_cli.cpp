// Command-line front end: deterministic text I/O over the .uso /
// .eds / .phz formats.  Exit codes: 0 success or true verdict, 1
// semantic false, 2 usage or input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "uso/constructions.hpp"
#include "uso/cube.hpp"
#include "uso/orientation.hpp"
#include "uso/phases.hpp"
#include "uso/recognition.hpp"
#include "uso/reduction.hpp"

namespace {

std::string read_stream(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw uso::ParseError("cannot open file: " + path);
    return read_stream(in);
}

uso::DenseOrientation load_stdin() { return uso::load(read_stream(std::cin)); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"unique sink orientations: generation, recognition, phases, sampling, reduction"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a named orientation as .uso text");
    std::string gen_kind;
    int gen_n = 0;
    gen->add_option("--kind", gen_kind, "uniform|schurr")->required();
    gen->add_option("-n", gen_n, "dimension")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "check the .uso on stdin for the USO property");
    int verify_jobs = 1;
    verify->add_option("--jobs", verify_jobs, "parallel face-sweep workers");

    // phases
    auto* phases = app.add_subcommand("phases", "print the phase partition as .phz text");
    bool phases_naive = false, phases_fast = false;
    int phases_jobs = 1;
    phases->add_flag("--naive", phases_naive, "all-pairs algorithm");
    phases->add_flag("--fast", phases_fast, "per-face min/max algorithm (default)");
    phases->add_option("--jobs", phases_jobs, "parallel face-sweep workers");

    // 2ip
    auto* twoip = app.add_subcommand("2ip", "decide whether two edges are in phase");
    std::string twoip_e1, twoip_e2;
    twoip->add_option("edge1", twoip_e1, "edge as <base-bits>:<dim>")->required();
    twoip->add_option("edge2", twoip_e2, "edge as <base-bits>:<dim>")->required();

    // flippable
    auto* flippable = app.add_subcommand("flippable", "decide whether an edge is flippable");
    std::string flippable_e;
    flippable->add_option("edge", flippable_e, "edge as <base-bits>:<dim>")->required();

    // flip
    auto* flip_cmd = app.add_subcommand("flip", "flip an edge set (.eds file); result unchecked");
    std::string flip_file;
    flip_cmd->add_option("edges", flip_file, ".eds file of canonical edges")->required();

    // flip-matching
    auto* flipm = app.add_subcommand("flip-matching",
                                     "flip a matching after verifying it is a union of phases");
    std::string flipm_file;
    flipm->add_option("edges", flipm_file, ".eds file of canonical edges")->required();

    // partial-swap
    auto* pswap = app.add_subcommand("partial-swap", "swap facet subgraphs over upward j-edges");
    int pswap_j = 0;
    pswap->add_option("-j", pswap_j, "swap dimension")->required();

    // hypervertex
    auto* hyper = app.add_subcommand("hypervertex", "decide whether a face is a hypervertex");
    std::string hyper_face;
    hyper->add_option("face", hyper_face, "face as a {0,1,*} string")->required();

    // sample
    auto* sample = app.add_subcommand("sample", "Markov-chain sample, .uso on stdout");
    int sample_n = 0;
    std::uint64_t sample_steps = 0, sample_seed = 0;
    sample->add_option("-n", sample_n, "dimension")->required();
    sample->add_option("--steps", sample_steps, "chain steps")->required();
    sample->add_option("--seed", sample_seed, "generator seed (required: no ambient entropy)")
        ->required();

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "list every USO of Q_n (n <= 3)");
    int enum_n = 0;
    bool enum_count_only = false;
    enumerate->add_option("-n", enum_n, "dimension")->required();
    enumerate->add_flag("--count", enum_count_only, "print only the number of USOs");

    // reduce
    auto* reduce = app.add_subcommand("reduce", "QBF to two-edges-in-phase reduction");
    std::string reduce_file, reduce_emit;
    bool reduce_decide = false;
    reduce->add_option("qdimacs", reduce_file, "QDIMACS-subset input file")->required();
    reduce->add_option("--emit-uso", reduce_emit, "materialize the orientation to this file");
    reduce->add_flag("--decide", reduce_decide, "print IN-PHASE/NOT-IN-PHASE, exit 0/1");

    // bench
    auto* bench = app.add_subcommand("bench", "pair-comparison counts as CSV");
    int bench_n = 0;
    bench->add_option("-n", bench_n, "dimension (phase algorithms run on uniform(n))")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors exit 2
    }

    try {
        if (*gen) {
            if (gen_kind == "uniform")
                std::cout << uso::store(uso::uniform(gen_n));
            else if (gen_kind == "schurr")
                std::cout << uso::store(uso::schurr(gen_n));
            else {
                std::cerr << "unknown kind: " << gen_kind << "\n";
                return 2;
            }
            return 0;
        }
        if (*verify) {
            uso::DenseOrientation o = load_stdin();
            uso::UsoWitness wit;
            if (uso::is_uso_fast(o, &wit, nullptr, verify_jobs)) return 0;
            std::cerr << "not a USO: face " << uso::face_string(wit.face) << " fails at pair ("
                      << uso::vertex_string(wit.v, o.dim()) << ", "
                      << uso::vertex_string(wit.w, o.dim()) << ")\n";
            return 1;
        }
        if (*phases) {
            if (phases_naive && phases_fast) {
                std::cerr << "choose one of --naive / --fast\n";
                return 2;
            }
            uso::DenseOrientation o = load_stdin();
            uso::PhasePartition p = phases_naive ? uso::compute_phases_naive(o)
                                                 : uso::compute_phases_fast(o, nullptr, phases_jobs);
            std::cout << uso::store_phases(p);
            return 0;
        }
        if (*twoip) {
            uso::DenseOrientation o = load_stdin();
            uso::Edge e1 = uso::parse_edge(twoip_e1, o.dim());
            uso::Edge e2 = uso::parse_edge(twoip_e2, o.dim());
            bool same = uso::in_phase(o, e1, e2);
            std::cout << (same ? "IN-PHASE" : "NOT-IN-PHASE") << "\n";
            return same ? 0 : 1;
        }
        if (*flippable) {
            uso::DenseOrientation o = load_stdin();
            uso::Edge e = uso::parse_edge(flippable_e, o.dim());
            return uso::is_flippable(o, e) ? 0 : 1;
        }
        if (*flip_cmd) {
            uso::DenseOrientation o = load_stdin();
            uso::EdgeSet s = uso::load_edge_set(read_file(flip_file), o.dim());
            std::cout << uso::store(uso::flip(o, s));
            return 0;
        }
        if (*flipm) {
            uso::DenseOrientation o = load_stdin();
            uso::EdgeSet h = uso::load_edge_set(read_file(flipm_file), o.dim());
            try {
                std::cout << uso::store(uso::flip_matching_checked(o, h));
            } catch (const uso::NotAMatching& e) {
                std::cerr << "not a matching: " << e.what() << "\n";
                return 1;
            } catch (const uso::NotUnionOfPhases& e) {
                std::cerr << "not a union of phases: " << e.what() << "\n";
                return 1;
            }
            return 0;
        }
        if (*pswap) {
            uso::DenseOrientation o = load_stdin();
            std::cout << uso::store(uso::partial_swap(o, pswap_j));
            return 0;
        }
        if (*hyper) {
            uso::DenseOrientation o = load_stdin();
            uso::Face f = uso::parse_face(hyper_face);
            if (f.n != o.dim()) throw uso::FaceError("face dimension mismatch");
            return uso::is_hypervertex(o, f) ? 0 : 1;
        }
        if (*sample) {
            std::cout << uso::store(uso::sample_uniform(sample_n, sample_steps, sample_seed));
            return 0;
        }
        if (*enumerate) {
            if (enum_count_only) {
                std::cout << uso::count_usos(enum_n) << "\n";
            } else {
                uso::enumerate_usos(enum_n, [](const uso::DenseOrientation& o) {
                    std::cout << uso::store(o);
                });
            }
            return 0;
        }
        if (*reduce) {
            uso::QbfInstance inst = uso::parse_qbf(read_file(reduce_file));
            uso::ReductionOutput out = uso::reduce_to_2ip(inst);
            int n = out.oracle.dim();
            if (!reduce_emit.empty()) {
                std::ofstream ofs(reduce_emit);
                if (!ofs) {
                    std::cerr << "cannot write " << reduce_emit << "\n";
                    return 2;
                }
                ofs << uso::store(uso::materialize(out.oracle));
            }
            std::cout << "dim " << n << " e " << uso::edge_string(out.e, n) << " e' "
                      << uso::edge_string(out.ep, n) << "\n";
            if (reduce_decide) {
                bool same;
                if (n <= uso::N_MAX) {
                    uso::DenseOrientation dense = uso::materialize(out.oracle);
                    same = uso::in_phase(dense, out.e, out.ep);
                } else {
                    same = uso::in_phase_bfs(out.oracle, out.e, out.ep);
                }
                std::cout << (same ? "IN-PHASE" : "NOT-IN-PHASE") << "\n";
                return same ? 0 : 1;
            }
            return 0;
        }
        if (*bench) {
            uso::DenseOrientation o = uso::uniform(bench_n);
            std::cout << "op,n,pair_checks,wall_ns\n";
            for (bool fast : {false, true}) {
                std::uint64_t checks = 0;
                auto start = std::chrono::steady_clock::now();
                if (fast)
                    uso::compute_phases_fast(o, &checks);
                else
                    uso::compute_phases_naive(o, &checks);
                auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
                std::cout << (fast ? "phases_fast" : "phases_naive") << "," << bench_n << ","
                          << checks << "," << ns << "\n";
            }
            return 0;
        }
    } catch (const uso::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
