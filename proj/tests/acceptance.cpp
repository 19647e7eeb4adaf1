// Acceptance gate: each criterion prints exactly one PASS/FAIL line;
// the process exits nonzero iff any criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "uso/constructions.hpp"
#include "uso/phases.hpp"
#include "uso/recognition.hpp"
#include "uso/reduction.hpp"

using namespace uso;

namespace {

// ---- 1: fast/naive partition equality ------------------------------------

bool algorithms_agree(const DenseOrientation& o) {
    return compute_phases_naive(o) == compute_phases_fast(o);
}

bool criterion_partition_equality() {
    int q3 = 0;
    bool ok = true;
    enumerate_usos(3, [&](const DenseOrientation& o) {
        ++q3;
        if (!algorithms_agree(o)) ok = false;
    });
    if (q3 != 744) return false;
    int q2 = 0;
    enumerate_usos(2, [&](const DenseOrientation& o) {
        ++q2;
        if (!algorithms_agree(o)) ok = false;
    });
    if (q2 != 12) return false;
    for (std::uint64_t seed = 1; seed <= 200; ++seed)
        if (!algorithms_agree(sample_uniform(4, 100, seed))) ok = false;
    for (std::uint64_t seed = 1; seed <= 50; ++seed)
        if (!algorithms_agree(sample_uniform(5, 100, seed))) ok = false;
    return ok;
}

// ---- 2: pair-comparison counts, cross-checked against the bench CSV ------

std::uint64_t pow3(int n) {
    std::uint64_t r = 1;
    while (n-- > 0) r *= 3;
    return r;
}

bool parse_bench_row(const std::string& line, const std::string& op, int n,
                     std::uint64_t* checks) {
    std::string prefix = op + "," + std::to_string(n) + ",";
    if (line.rfind(prefix, 0) != 0) return false;
    *checks = std::stoull(line.substr(prefix.size()));
    return true;
}

bool criterion_pair_check_counts() {
    for (int n = 1; n <= 10; ++n) {
        std::uint64_t fast_checks = 0, naive_checks = 0;
        compute_phases_fast(uniform(n), &fast_checks);
        compute_phases_naive(uniform(n), &naive_checks);
        std::uint64_t vertices = std::uint64_t{1} << n;
        if (fast_checks > pow3(n)) return false;
        if (naive_checks != (vertices / 2) * (vertices - 1)) return false;

        std::string csv = "/tmp/uso_acceptance_bench.csv";
        std::string cmd = std::string(CLI_BINARY_PATH) + " bench -n " + std::to_string(n) +
                          " > " + csv;
        int status = std::system(cmd.c_str());
        if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) return false;
        std::ifstream in(csv);
        std::string header, naive_row, fast_row;
        if (!std::getline(in, header) || !std::getline(in, naive_row) ||
            !std::getline(in, fast_row))
            return false;
        if (header != "op,n,pair_checks,wall_ns") return false;
        std::uint64_t reported = 0;
        if (!parse_bench_row(naive_row, "phases_naive", n, &reported) ||
            reported != naive_checks)
            return false;
        if (!parse_bench_row(fast_row, "phases_fast", n, &reported) || reported != fast_checks)
            return false;
    }
    return true;
}

// ---- 3: phase connectedness in the edge neighborhood graph ---------------

bool all_classes_connected(const DenseOrientation& o) {
    PhasePartition p = compute_phases_fast(o);
    for (int i = 1; i <= o.dim(); ++i)
        for (auto& c : p.classes(i))
            if (!phase_connected_in_Ni(p, c.front())) return false;
    return true;
}

bool criterion_phase_connectedness() {
    bool ok = true;
    enumerate_usos(3, [&](const DenseOrientation& o) {
        if (!all_classes_connected(o)) ok = false;
    });
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        if (!all_classes_connected(sample_uniform(4, 100, seed))) ok = false;
        if (!all_classes_connected(sample_uniform(5, 100, seed))) ok = false;
    }
    return ok;
}

// ---- 4: matching flips preserve the USO property iff union of phases -----

bool union_of_phases_by_dim(const PhasePartition& p, const std::vector<Edge>& h) {
    for (int i = 1; i <= p.dim(); ++i) {
        std::set<Vertex> bases;
        for (const Edge& e : h)
            if (e.dim == i) bases.insert(e.base);
        if (bases.empty()) continue;
        for (Vertex b : bases)
            for (const Edge& m : p.class_members(Edge{b, i}))
                if (!bases.count(m.base)) return false;
    }
    return true;
}

bool criterion_matching_flip() {
    std::vector<Edge> edges;
    for (Vertex v = 0; v < 8; ++v)
        for (int i = 1; i <= 3; ++i)
            if (!bit(v, i)) edges.push_back(Edge{v, i});
    auto disjoint = [](const Edge& a, const Edge& b) {
        return a.base != b.base && a.base != b.other() && a.other() != b.base &&
               a.other() != b.other();
    };
    std::vector<std::vector<Edge>> matchings = {{}};
    for (std::size_t a = 0; a < edges.size(); ++a) {
        matchings.push_back({edges[a]});
        for (std::size_t b = a + 1; b < edges.size(); ++b) {
            if (!disjoint(edges[a], edges[b])) continue;
            matchings.push_back({edges[a], edges[b]});
            for (std::size_t c = b + 1; c < edges.size(); ++c)
                if (disjoint(edges[a], edges[c]) && disjoint(edges[b], edges[c]))
                    matchings.push_back({edges[a], edges[b], edges[c]});
        }
    }
    bool ok = true;
    enumerate_usos(3, [&](const DenseOrientation& o) {
        PhasePartition p = compute_phases_fast(o);
        for (const auto& h : matchings) {
            EdgeSet s(h.begin(), h.end());
            bool flipped_uso = is_uso_fast(flip(o, s));
            if (flipped_uso != union_of_phases_by_dim(p, h)) ok = false;
        }
    });
    return ok;
}

// ---- 5: hypervertex characterizations ------------------------------------

bool criterion_hypervertex() {
    bool ok = true;
    enumerate_usos(3, [&](const DenseOrientation& o) {
        PhasePartition p = compute_phases_fast(o);
        for_each_face(3, [&](const Face& f) {
            // Collect canonical edge bases inside f per spanned dimension.
            std::vector<std::set<Vertex>> inside(4);
            for (Vertex v = 0; v < 8; ++v) {
                if (!f.contains(v)) continue;
                for (int i = 1; i <= 3; ++i)
                    if (bit(f.free_mask(), i) && !bit(v, i)) inside[i].insert(v);
            }
            bool cross_phase = false;
            for (int i = 1; i <= 3; ++i)
                for (Vertex b : inside[i])
                    for (const Edge& m : p.class_members(Edge{b, i}))
                        if (!inside[i].count(m.base)) cross_phase = true;
            if (is_hypervertex(o, f) != !cross_phase) ok = false;
            // A class equal to all of f's i-edges forces a hypervertex.
            for (int i = 1; i <= 3; ++i) {
                if (inside[i].empty()) continue;
                std::set<Vertex> cls;
                for (const Edge& m : p.class_members(Edge{*inside[i].begin(), i}))
                    cls.insert(m.base);
                if (cls == inside[i] && !is_hypervertex(o, f)) ok = false;
            }
        });
    });
    return ok;
}

// ---- 6: the Schurr orientation's top-dimension phase ----------------------

bool criterion_schurr_phase() {
    for (int n = 3; n <= 5; ++n) {
        DenseOrientation s = schurr(n);
        PhasePartition p = compute_phases_fast(s);
        if (p.class_count(n) != 1) return false;
        Mask facet = full_mask(n) & ~basis(n);  // canonical n-edge bases
        // Every antipodal base pair certifies directly.
        for (Vertex b = 0; b <= facet; ++b) {
            if ((b & ~facet) != 0) continue;
            if (!in_direct_phase(s, Edge{b, n}, Edge{Vertex(b ^ facet), n})) return false;
        }
        // No other direct-phase pair crosses the dimension-1 facets.
        std::vector<std::pair<Vertex, Vertex>> direct;
        for (Vertex a = 0; a <= facet; ++a) {
            if ((a & ~facet) != 0) continue;
            for (Vertex b = a + 1; b <= facet; ++b) {
                if ((b & ~facet) != 0) continue;
                if (!in_direct_phase(s, Edge{a, n}, Edge{b, n})) continue;
                direct.emplace_back(a, b);
                bool antipodal = (a ^ b) == facet;
                bool cross_facet = bit(a, 1) != bit(b, 1);
                if (cross_facet && !antipodal) return false;
            }
        }
        // Dropping the antipodal certificates splits the class in two.
        std::map<Vertex, std::vector<Vertex>> adj;
        for (auto [a, b] : direct)
            if ((a ^ b) != facet) {
                adj[a].push_back(b);
                adj[b].push_back(a);
            }
        std::set<Vertex> seen;
        int components = 0;
        for (Vertex b = 0; b <= facet; ++b) {
            if ((b & ~facet) != 0 || seen.count(b)) continue;
            ++components;
            std::vector<Vertex> stack = {b};
            seen.insert(b);
            while (!stack.empty()) {
                Vertex v = stack.back();
                stack.pop_back();
                for (Vertex w : adj[v])
                    if (seen.insert(w).second) stack.push_back(w);
            }
        }
        if (components != 2) return false;
    }
    return true;
}

// ---- 7: partial swap ------------------------------------------------------

bool criterion_partial_swap() {
    bool ok = true;
    enumerate_usos(3, [&](const DenseOrientation& o) {
        PhasePartition p = compute_phases_fast(o);
        for (int j = 1; j <= 3; ++j) {
            DenseOrientation s = partial_swap(o, j);
            if (!is_uso_fast(s)) ok = false;
            if (p.classes(j) != compute_phases_fast(s).classes(j)) ok = false;
        }
    });
    return ok;
}

// ---- 8: phase-count lower bound -------------------------------------------

bool criterion_phase_count() {
    bool ok = true;
    enumerate_usos(3, [&](const DenseOrientation& o) {
        if (compute_phases_fast(o).total_class_count() < 6) ok = false;
    });
    return ok;
}

// ---- 9: sampler uniformity ------------------------------------------------

bool criterion_sampler_uniformity() {
    std::vector<std::vector<Mask>> catalog;
    enumerate_usos(2, [&](const DenseOrientation& o) {
        catalog.push_back({o.outmap(0), o.outmap(1), o.outmap(2), o.outmap(3)});
    });
    std::vector<std::uint64_t> hits(12, 0);
    Rng rng(20240817);
    DenseOrientation cur = uniform(2);
    const std::uint64_t steps = 100000;
    for (std::uint64_t t = 0; t < steps; ++t) {
        cur = markov_step(cur, rng);
        std::vector<Mask> key = {cur.outmap(0), cur.outmap(1), cur.outmap(2), cur.outmap(3)};
        auto it = std::find(catalog.begin(), catalog.end(), key);
        if (it == catalog.end()) return false;
        ++hits[std::size_t(it - catalog.begin())];
    }
    double expected = double(steps) / 12.0;
    double chi2 = 0.0;
    for (std::uint64_t h : hits) {
        double d = double(h) - expected;
        chi2 += d * d / expected;
    }
    std::cout << "  (sampler chi-square over the 12 square orientations: " << chi2 << ")\n";
    return chi2 < 31.0;
}

// ---- 10: end-to-end reduction ----------------------------------------------

QbfInstance random_instance(Rng& rng, int quantifiers) {
    QbfInstance inst;
    inst.num_vars = quantifiers;
    for (int q = 0; q < quantifiers; ++q)
        inst.quantifiers.push_back((rng() & 1) ? Quantifier::Exists : Quantifier::Forall);
    int clauses = 1 + int(rng() % 4);
    for (int c = 0; c < clauses; ++c) {
        Clause cl;
        for (int v = 1; v <= inst.num_vars; ++v) {
            std::uint64_t r = rng() % 3;  // skip / positive / negative
            if (r == 1) cl.push_back(v);
            if (r == 2) cl.push_back(-v);
        }
        if (cl.empty()) cl.push_back(1);
        inst.clauses.push_back(cl);
    }
    return inst;
}

bool reduction_case_holds(const QbfInstance& inst) {
    GadgetLayout layout = build_layout(inst);
    if (layout.total_dim > 12) return true;  // outside the criterion's budget
    DenseOrientation dense = materialize_reduction(inst);
    check_gadget_invariants(dense);
    for (Vertex v = 0; v < dense.vertex_count(); ++v)
        if (dense.outmap(v) != succinct_outmap(inst, layout, v)) return false;
    ReductionOutput out = reduce_to_2ip(inst);
    return in_phase(dense, out.e, out.ep) == eval_qbf(inst);
}

bool criterion_reduction() {
    std::vector<QbfInstance> cases = {
        parse_qbf("p cnf 1 1\ne 1 0\n1 0\n"),
        parse_qbf("p cnf 1 1\na 1 0\n1 0\n"),
        parse_qbf("p cnf 2 2\na 1 0\ne 2 0\n1 2 0\n-1 -2 0\n"),
    };
    Rng rng(7);
    while (cases.size() < 23) {
        int q = 1 + int(rng() % 3);
        QbfInstance inst = random_instance(rng, q);
        if (build_layout(inst).total_dim <= 12) cases.push_back(inst);
    }
    for (const QbfInstance& inst : cases)
        if (!reduction_case_holds(inst)) return false;
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        bool (*run)();
    };
    const Criterion criteria[] = {
        {"fast and naive phase partitions are identical", criterion_partition_equality},
        {"pair-check counts: fast <= 3^n, naive = 2^(n-1)(2^n-1)", criterion_pair_check_counts},
        {"every phase is connected in the edge neighborhood graph",
         criterion_phase_connectedness},
        {"a matching flip preserves unique sinks iff it is a union of phases",
         criterion_matching_flip},
        {"hypervertex characterization by phases", criterion_hypervertex},
        {"top-dimension phase structure of the Schurr orientation", criterion_schurr_phase},
        {"partial swap keeps the orientation valid and the swapped-dimension phases",
         criterion_partial_swap},
        {"every 3-cube orientation has at least 6 phases", criterion_phase_count},
        {"chain sampler is uniform over the 12 square orientations",
         criterion_sampler_uniformity},
        {"quantified-formula reduction agrees with brute-force truth",
         criterion_reduction},
    };
    int failures = 0;
    int index = 0;
    for (const Criterion& c : criteria) {
        ++index;
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            std::cout << "  (criterion " << index << " raised: " << e.what() << ")\n";
        }
        std::cout << "criterion " << index << ": " << (ok ? "PASS" : "FAIL") << " — " << c.name
                  << std::endl;
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
