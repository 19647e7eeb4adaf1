#include "uso/reduction.hpp"

#include <memory>
#include <sstream>

#include "uso/constructions.hpp"
#include "uso/phases.hpp"
#include "uso/recognition.hpp"

namespace uso {

QbfInstance parse_qbf(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    QbfInstance inst;
    bool have_header = false;
    int expected_clauses = 0;
    int next_var = 1;  // next variable a quantifier line must declare
    bool in_clauses = false;

    auto fail = [&](const std::string& msg) -> void {
        throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;  // blank line
        if (first == "c") continue;    // comment
        if (first == "p") {
            if (have_header) fail("duplicate 'p' line");
            std::string fmt;
            int nv = -1, nc = -1;
            std::string rest;
            if (!(ls >> fmt >> nv >> nc) || fmt != "cnf" || (ls >> rest))
                fail("expected 'p cnf <vars> <clauses>'");
            if (nv < 0 || nc < 0) fail("negative counts in 'p' line");
            inst.num_vars = nv;
            expected_clauses = nc;
            have_header = true;
            continue;
        }
        if (!have_header) fail("expected 'p cnf' header before this line");
        if (first == "a" || first == "e") {
            if (in_clauses) fail("quantifier line after clauses");
            Quantifier q = (first == "a") ? Quantifier::Forall : Quantifier::Exists;
            int var;
            bool terminated = false;
            while (ls >> var) {
                if (var == 0) {
                    terminated = true;
                    std::string rest;
                    if (ls >> rest) fail("content after terminating 0");
                    break;
                }
                if (var != next_var)
                    fail("quantifier lines must declare variables 1.." +
                         std::to_string(inst.num_vars) + " in order; got " + std::to_string(var) +
                         ", expected " + std::to_string(next_var));
                inst.quantifiers.push_back(q);
                ++next_var;
            }
            if (!terminated) fail("quantifier line not terminated by 0");
            continue;
        }
        // Clause line.
        in_clauses = true;
        std::istringstream cs(line);
        Clause clause;
        int lit;
        bool terminated = false;
        while (cs >> lit) {
            if (lit == 0) {
                terminated = true;
                std::string rest;
                if (cs >> rest) fail("content after terminating 0");
                break;
            }
            int var = lit > 0 ? lit : -lit;
            if (var > inst.num_vars) fail("literal " + std::to_string(lit) + " out of range");
            if (var >= next_var) fail("variable " + std::to_string(var) + " is not quantified");
            clause.push_back(lit);
        }
        if (!terminated) {
            if (clause.empty()) fail("unrecognized line");
            fail("clause not terminated by 0");
        }
        inst.clauses.push_back(std::move(clause));
    }
    ++lineno;
    if (!have_header) fail("missing 'p cnf' header");
    if (next_var != inst.num_vars + 1)
        fail("only " + std::to_string(next_var - 1) + " of " + std::to_string(inst.num_vars) +
             " variables quantified");
    if (int(inst.clauses.size()) != expected_clauses)
        fail("expected " + std::to_string(expected_clauses) + " clauses, found " +
             std::to_string(inst.clauses.size()));
    return inst;
}

namespace {

bool eval_cnf(const QbfInstance& inst, const std::vector<int>& assign) {
    for (const Clause& clause : inst.clauses) {
        bool sat = false;
        for (int lit : clause) {
            int var = lit > 0 ? lit : -lit;
            bool value = assign[var - 1] != 0;
            if (value == (lit > 0)) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

bool eval_rec(const QbfInstance& inst, std::vector<int>& assign, std::size_t k) {
    if (k == inst.quantifiers.size()) return eval_cnf(inst, assign);
    bool results[2];
    for (int b = 0; b <= 1; ++b) {
        assign[k] = b;
        results[b] = eval_rec(inst, assign, k + 1);
    }
    assign[k] = -1;
    if (inst.quantifiers[k] == Quantifier::Forall) return results[0] && results[1];
    return results[0] || results[1];
}

}  // namespace

bool eval_qbf(const QbfInstance& inst) {
    std::vector<int> assign(inst.num_vars, -1);
    return eval_rec(inst, assign, 0);
}

void check_gadget_invariants(const Orientation& o) {
    int n = o.dim();
    Mask fm = full_mask(n);
    if (!is_uso_fast(o)) throw GadgetError("gadget block is not a USO");
    if (!is_acyclic(o)) throw GadgetError("gadget block is cyclic");
    if (is_combed(o, 1) != Combed::Down) throw GadgetError("gadget block not combed down in dim 1");
    if (o.outmap(0) != 0) throw GadgetError("gadget block sink is not the minimum vertex");
    if (o.outmap(fm) != fm) throw GadgetError("gadget block source is not the maximum vertex");
}

namespace {

bool min_max_edges_in_phase(const DenseOrientation& o) {
    int n = o.dim();
    Edge emin{0, 1};
    Edge emax{full_mask(n) ^ 1u, 1};
    return compute_phases_fast(o).same_class(emin, emax);
}

bool satisfies_level_invariants(const DenseOrientation& o) {
    int n = o.dim();
    Mask fm = full_mask(n);
    return o.outmap(0) == 0 && o.outmap(fm) == fm && is_combed(o, 1) == Combed::Down &&
           is_acyclic(o);
}

}  // namespace

DenseOrientation search_true_base_gadget() {
    // Enumeration is lexicographic in the outmap array, so the first
    // qualifying orientation is the lexicographic minimum.
    std::vector<Mask> found;
    try {
        enumerate_usos(3, [&](const DenseOrientation& o) {
            if (!satisfies_level_invariants(o)) return;
            if (!min_max_edges_in_phase(o)) return;
            found = o.data();
            throw std::uint8_t{0};  // stop enumeration at the first hit
        });
    } catch (std::uint8_t) {
    }
    if (found.empty()) throw GadgetError("no 3-dimensional true gadget exists");
    return DenseOrientation(3, std::move(found));
}

namespace {

const DenseOrientation& true_gadget() {
    static const DenseOrientation g = search_true_base_gadget();
    return g;
}

}  // namespace

DenseOrientation base_gadget(bool truth) {
    if (!truth) return uniform(3);
    return true_gadget();
}

Mask relay_outmap(int d, Vertex v) {
    if (d < 3) throw DimensionError("relay blocks need dimension >= 3");
    if (d == 3) return true_gadget().outmap(v);
    Mask low_mask = full_mask(d - 1);
    Vertex low = v & low_mask;
    Mask out = relay_outmap(d - 1, low);
    // The red top edge above e1 links the two copies' distinguished
    // phases through their minimum 1-edges; e1 is never the global
    // sink or source, so the level invariants survive the flip.
    bool top = bit(v, d) ^ (low == 1u);
    if (top) out |= basis(d);
    return out;
}

DenseOrientation relay(int d) {
    check_dimension(d);
    std::vector<Mask> out(std::uint64_t{1} << d);
    for (Vertex v = 0; v < out.size(); ++v) out[v] = relay_outmap(d, v);
    return DenseOrientation(d, std::move(out));
}

namespace {

void assert_red_flippable(const std::function<Mask(Vertex)>& preflip, Vertex u, Vertex w,
                          int red_dim) {
    if ((preflip(u) ^ preflip(w)) != basis(red_dim))
        throw GadgetError("red edge at " + std::to_string(u) + "-" + std::to_string(w) +
                          " is not flippable in the combed product");
}

}  // namespace

DenseOrientation synth_forall(const Orientation& f, const Orientation& t) {
    int d = f.dim();
    if (t.dim() != d) throw GadgetError("forall gadget inputs must have equal dimension");
    if (d + 2 > N_MAX) throw ResourceError("forall gadget exceeds dense dimension cap");
    check_gadget_invariants(f);
    check_gadget_invariants(t);
    Mask fm = full_mask(d);
    int a = d + 1, b = d + 2;

    // Blocks by (v_a, v_b): (0,0) F, (1,0) F copy, (1,1) T,
    // (0,1) uniform; new dimensions combed down before red flips.
    auto low_out = [&](bool ba, bool bb, Vertex low) -> Mask {
        if (!bb) return f.outmap(low);
        if (ba) return t.outmap(low);
        return low;
    };
    auto preflip = [&](Vertex v) -> Mask {
        bool ba = bit(v, a), bb = bit(v, b);
        Mask out = low_out(ba, bb, v & fm);
        if (ba) out |= basis(a);
        if (bb) out |= basis(b);
        return out;
    };
    // Red 1: the a-edge between the maxima of the two F copies.
    // Red 2: the b-edge between the minima of the F copy and T.
    Vertex r1u = fm, r1w = fm | basis(a);
    Vertex r2u = basis(a), r2w = basis(a) | basis(b);
    assert_red_flippable(preflip, r1u, r1w, a);
    assert_red_flippable(preflip, r2u, r2w, b);

    std::vector<Mask> out(std::uint64_t{1} << (d + 2));
    for (Vertex v = 0; v < out.size(); ++v) {
        Mask m = preflip(v);
        if (v == r1u || v == r1w) m ^= basis(a);
        if (v == r2u || v == r2w) m ^= basis(b);
        out[v] = m;
    }
    return DenseOrientation(d + 2, std::move(out));
}

DenseOrientation synth_exists(const Orientation& f, const Orientation& t) {
    int d = f.dim();
    if (t.dim() != d) throw GadgetError("exists gadget inputs must have equal dimension");
    if (d < 3) throw GadgetError("exists gadget needs input dimension >= 3");
    if (d + 3 > N_MAX) throw ResourceError("exists gadget exceeds dense dimension cap");
    check_gadget_invariants(f);
    check_gadget_invariants(t);
    Mask fm = full_mask(d);
    int a = d + 1, b = d + 2, c = d + 3;
    const Vertex e1 = 1, sub_max = fm;

    // Blocks by (v_a, v_b, v_c): relay blocks at (0,0,0), (0,1,0),
    // (1,1,0) and (1,1,1); F at (1,0,0); T at (0,1,1); uniform
    // fillers at (0,0,1) and (1,0,1).
    auto low_out = [&](bool ba, bool bb, bool bc, Vertex low) -> Mask {
        if ((ba == bb && bb == bc) || (bb && !bc)) return relay_outmap(d, low);
        if (ba && !bb && !bc) return f.outmap(low);
        if (!ba && bb && bc) return t.outmap(low);
        return low;
    };
    auto preflip = [&](Vertex v) -> Mask {
        bool ba = bit(v, a), bb = bit(v, b), bc = bit(v, c);
        Mask out = low_out(ba, bb, bc, v & fm);
        if (ba) out |= basis(a);
        if (bb) out |= basis(b);
        if (bc) out |= basis(c);
        return out;
    };
    // Six red edges forming two chains that share the bottom relay
    // (which holds e) and the top relay (which holds e'):
    //  F chain: r1 a-edge relay000(max) - F(max); F internal iff F
    //  holds; r2 b-edge F(min) - relay110(min); r3 c-edge
    //  relay110(e1) - relay111(e1).
    //  T chain: r4 b-edge relay000(e1) - relay010(e1); relay010
    //  internal; r5 c-edge relay010(max) - T(max); T internal iff T
    //  holds; r6 a-edge T(min) - relay111(min).
    struct Red {
        Vertex u, w;
        int dim;
    };
    const Mask A = basis(a), B = basis(b), C = basis(c);
    const Red reds[6] = {
        {sub_max, sub_max | A, a},
        {A, A | B, b},
        {e1 | A | B, e1 | A | B | C, c},
        {e1, e1 | B, b},
        {sub_max | B, sub_max | B | C, c},
        {B | C, A | B | C, a},
    };
    for (const Red& r : reds) assert_red_flippable(preflip, r.u, r.w, r.dim);

    std::vector<Mask> out(std::uint64_t{1} << (d + 3));
    for (Vertex v = 0; v < out.size(); ++v) out[v] = preflip(v);
    for (const Red& r : reds) {
        out[r.u] ^= basis(r.dim);
        out[r.w] ^= basis(r.dim);
    }
    return DenseOrientation(d + 3, std::move(out));
}

GadgetLayout build_layout(const QbfInstance& inst) {
    GadgetLayout layout;
    int m = int(inst.quantifiers.size());
    layout.block_lo.assign(m, 0);
    layout.block_hi.assign(m, 0);
    int lo = 4;
    for (int k = m - 1; k >= 0; --k) {  // innermost quantifier owns the lowest block
        int size = inst.quantifiers[k] == Quantifier::Forall ? 2 : 3;
        layout.block_lo[k] = lo;
        layout.block_hi[k] = lo + size - 1;
        lo += size;
    }
    layout.total_dim = lo - 1;
    return layout;
}

Mask succinct_outmap(const QbfInstance& inst, const GadgetLayout& layout, Vertex v) {
    Mask out = 0;
    std::vector<int> assign(inst.num_vars, -1);
    int m = int(inst.quantifiers.size());
    for (int k = 0; k < m; ++k) {  // outermost level first
        int lo = layout.block_lo[k];
        int d = lo - 1;  // dimension of this level's sub-blocks
        Mask fm = full_mask(d);
        Vertex low = v & fm;
        if (inst.quantifiers[k] == Quantifier::Forall) {
            int a = lo, b = lo + 1;
            bool ba = bit(v, a), bb = bit(v, b);
            bool red_a = (low == fm) && !bb;
            bool red_b = (low == 0) && ba;
            if (ba ^ red_a) out |= basis(a);
            if (bb ^ red_b) out |= basis(b);
            if (!ba && bb) return out | low;  // uniform block: done
            assign[k] = (ba && bb) ? 1 : 0;   // T block iff (1,1); F otherwise
        } else {
            int a = lo, b = lo + 1, c = lo + 2;
            bool ba = bit(v, a), bb = bit(v, b), bc = bit(v, c);
            const Vertex e1 = 1;
            bool red_a = (low == fm && !bb && !bc) || (low == 0 && bb && bc);
            bool red_b = (low == 0 && ba && !bc) || (low == e1 && !ba && !bc);
            bool red_c = (low == e1 && ba && bb) || (low == fm && !ba && bb);
            if (ba ^ red_a) out |= basis(a);
            if (bb ^ red_b) out |= basis(b);
            if (bc ^ red_c) out |= basis(c);
            if ((ba == bb && bb == bc) || (bb && !bc))
                return out | relay_outmap(d, low);  // relay block: done
            if (ba && !bb && !bc)
                assign[k] = 0;  // F block
            else if (!ba && bb && bc)
                assign[k] = 1;  // T block
            else
                return out | low;  // uniform block: done
        }
    }
    Vertex low3 = v & 7u;
    bool truth = eval_cnf(inst, assign);
    return out | base_gadget(truth).outmap(low3);
}

namespace {

DenseOrientation build_dense(const QbfInstance& inst, std::vector<int>& assign, std::size_t k) {
    if (k == inst.quantifiers.size()) return base_gadget(eval_cnf(inst, assign));
    assign[k] = 0;
    DenseOrientation f = build_dense(inst, assign, k + 1);
    assign[k] = 1;
    DenseOrientation t = build_dense(inst, assign, k + 1);
    assign[k] = -1;
    if (inst.quantifiers[k] == Quantifier::Forall) return synth_forall(f, t);
    return synth_exists(f, t);
}

}  // namespace

DenseOrientation materialize_reduction(const QbfInstance& inst) {
    GadgetLayout layout = build_layout(inst);
    if (layout.total_dim > N_MAX)
        throw ResourceError("instance needs dimension " + std::to_string(layout.total_dim) +
                            ", beyond the dense cap");
    std::vector<int> assign(inst.num_vars, -1);
    return build_dense(inst, assign, 0);
}

ReductionOutput reduce_to_2ip(const QbfInstance& inst) {
    GadgetLayout layout = build_layout(inst);
    int n = layout.total_dim;
    auto shared = std::make_shared<std::pair<QbfInstance, GadgetLayout>>(inst, layout);
    OracleOrientation oracle(n, [shared](Vertex v) {
        return succinct_outmap(shared->first, shared->second, v);
    });
    Edge e{0, 1};
    Edge ep{full_mask(n) ^ 1u, 1};
    return ReductionOutput{std::move(oracle), e, ep};
}

}  // namespace uso
