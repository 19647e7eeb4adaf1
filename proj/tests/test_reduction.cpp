#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "uso/constructions.hpp"
#include "uso/phases.hpp"
#include "uso/reduction.hpp"

using namespace uso;

namespace {

const std::string kExistsX = "p cnf 1 1\ne 1 0\n1 0\n";
const std::string kForallX = "p cnf 1 1\na 1 0\n1 0\n";
const std::string kForallExists = "p cnf 2 2\na 1 0\ne 2 0\n1 2 0\n-1 -2 0\n";

void check_same(const Orientation& a, const Orientation& b) {
    REQUIRE(a.dim() == b.dim());
    for (Vertex v = 0; v < a.vertex_count(); ++v) CHECK(a.outmap(v) == b.outmap(v));
}

}  // namespace

TEST_CASE("QDIMACS parsing") {
    QbfInstance i1 = parse_qbf(kExistsX);
    CHECK(i1.num_vars == 1);
    REQUIRE(i1.quantifiers.size() == 1);
    CHECK(i1.quantifiers[0] == Quantifier::Exists);
    CHECK(i1.clauses == std::vector<Clause>{{1}});

    QbfInstance i3 = parse_qbf(kForallExists);
    CHECK(i3.num_vars == 2);
    CHECK(i3.quantifiers ==
          std::vector<Quantifier>{Quantifier::Forall, Quantifier::Exists});
    CHECK(i3.clauses == std::vector<Clause>{{1, 2}, {-1, -2}});

    // Comments are skipped; line numbers in errors count every line.
    QbfInstance ic = parse_qbf("c hello\np cnf 1 1\na 1 0\n1 0\n");
    CHECK(ic.quantifiers[0] == Quantifier::Forall);

    CHECK_THROWS_AS((void)parse_qbf(""), ParseError);
    CHECK_THROWS_AS((void)parse_qbf("p cnf 1 1\n1 0\n"), ParseError);           // free variable
    CHECK_THROWS_AS((void)parse_qbf("p cnf 2 1\ne 2 0\ne 1 0\n1 0\n"), ParseError);
    CHECK_THROWS_AS((void)parse_qbf("p cnf 1 2\ne 1 0\n1 0\n"), ParseError);    // clause count
    CHECK_THROWS_AS((void)parse_qbf("p cnf 1 1\ne 1 0\n2 0\n"), ParseError);    // out of range
    try {
        (void)parse_qbf("p cnf 1 1\ne 1 0\nbogus 0\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("brute-force evaluation") {
    CHECK(eval_qbf(parse_qbf(kExistsX)));
    CHECK_FALSE(eval_qbf(parse_qbf(kForallX)));
    CHECK(eval_qbf(parse_qbf(kForallExists)));
    CHECK_FALSE(eval_qbf(parse_qbf("p cnf 2 2\na 1 0\na 2 0\n1 2 0\n-1 -2 0\n")));
    CHECK(eval_qbf(parse_qbf("p cnf 2 2\ne 1 0\ne 2 0\n1 2 0\n-1 -2 0\n")));
}

TEST_CASE("base gadgets") {
    check_same(base_gadget(false), uniform(3));
    DenseOrientation t = base_gadget(true);
    std::vector<Mask> out;
    for (Vertex v = 0; v < 8; ++v) out.push_back(t.outmap(v));
    CHECK(out == std::vector<Mask>{0, 3, 6, 1, 4, 5, 2, 7});
    check_same(t, search_true_base_gadget());
    for (bool truth : {false, true}) {
        DenseOrientation g = base_gadget(truth);
        check_gadget_invariants(g);
        // Extreme 1-edges in phase exactly for the true gadget.
        CHECK(in_phase(g, Edge{0, 1}, Edge{6, 1}) == truth);
    }
}

TEST_CASE("relay blocks") {
    for (int d = 3; d <= 6; ++d) {
        DenseOrientation r = relay(d);
        check_gadget_invariants(r);
        CHECK(in_phase(r, Edge{0, 1}, Edge{full_mask(d) ^ 1, 1}));
        for (Vertex v = 0; v < r.vertex_count(); ++v)
            CHECK(r.outmap(v) == relay_outmap(d, v));
    }
}

TEST_CASE("quantifier gadget synthesis realizes AND / OR semantics") {
    for (bool ft : {false, true})
        for (bool tt : {false, true}) {
            DenseOrientation f = base_gadget(ft), t = base_gadget(tt);
            DenseOrientation all = synth_forall(f, t);
            DenseOrientation any = synth_exists(f, t);
            check_gadget_invariants(all);
            check_gadget_invariants(any);
            CHECK(all.dim() == 5);
            CHECK(any.dim() == 6);
            CHECK(in_phase(all, Edge{0, 1}, Edge{full_mask(5) ^ 1, 1}) == (ft && tt));
            CHECK(in_phase(any, Edge{0, 1}, Edge{full_mask(6) ^ 1, 1}) == (ft || tt));
        }
    CHECK_THROWS_AS((void)synth_forall(base_gadget(true), relay(4)), GadgetError);
    // Violates the source-at-maximum invariant.
    CHECK_THROWS_AS((void)synth_exists(schurr(3), schurr(3)), GadgetError);
}

TEST_CASE("dimension layout") {
    CHECK(build_layout(parse_qbf(kForallX)).total_dim == 5);
    CHECK(build_layout(parse_qbf(kExistsX)).total_dim == 6);
    GadgetLayout l = build_layout(parse_qbf(kForallExists));
    CHECK(l.total_dim == 8);
    REQUIRE(l.block_lo.size() == 2);
    // Innermost quantifier (index 1, exists) owns the lowest block.
    CHECK(l.block_lo[1] == 4);
    CHECK(l.block_hi[1] == 6);
    CHECK(l.block_lo[0] == 7);
    CHECK(l.block_hi[0] == 8);
}

TEST_CASE("succinct evaluator matches the dense construction pointwise") {
    for (const std::string& text : {kExistsX, kForallX, kForallExists}) {
        QbfInstance inst = parse_qbf(text);
        GadgetLayout layout = build_layout(inst);
        DenseOrientation dense = materialize_reduction(inst);
        REQUIRE(dense.dim() == layout.total_dim);
        for (Vertex v = 0; v < dense.vertex_count(); ++v)
            CHECK(dense.outmap(v) == succinct_outmap(inst, layout, v));
        check_gadget_invariants(dense);
    }
}

TEST_CASE("end-to-end reduction decides the worked sentences") {
    struct Case {
        std::string text;
        bool truth;
    };
    for (const Case& c : {Case{kExistsX, true}, Case{kForallX, false},
                          Case{kForallExists, true}}) {
        QbfInstance inst = parse_qbf(c.text);
        ReductionOutput out = reduce_to_2ip(inst);
        int n = out.oracle.dim();
        CHECK(out.e == Edge{0, 1});
        CHECK(out.ep == Edge{full_mask(n) ^ 1, 1});
        CHECK(eval_qbf(inst) == c.truth);
        CHECK(in_phase(materialize_reduction(inst), out.e, out.ep) == c.truth);
        CHECK(in_phase_bfs(out.oracle, out.e, out.ep, std::uint64_t{1} << 30) == c.truth);
    }
}
