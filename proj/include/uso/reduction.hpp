#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uso/cube.hpp"
#include "uso/orientation.hpp"

// The QBF -> two-edges-in-phase reduction: QBF ingestion and
// brute-force evaluation, base/forall/exists gadget synthesis, the
// polynomial-time succinct outmap evaluator, and the end-to-end
// driver producing the designated antipodal 1-edge pair.

namespace uso {

enum class Quantifier { Forall, Exists };

using Clause = std::vector<int>;  // signed 1-based variable indices

struct QbfInstance {
    int num_vars = 0;
    std::vector<Quantifier> quantifiers;  // outermost first, one per variable
    std::vector<Clause> clauses;
};

// Cube-dimension blocks per recursion level: the base gadget owns
// dimensions 1..3; each quantifier level owns the next 2 (forall) or
// 3 (exists) dimensions, the outermost quantifier owning the highest.
struct GadgetLayout {
    int total_dim = 3;
    // block_lo[k] / block_hi[k]: dimensions owned by quantifier k
    // (0-based index into QbfInstance::quantifiers, outermost first).
    std::vector<int> block_lo;
    std::vector<int> block_hi;
};

struct ReductionOutput {
    OracleOrientation oracle;
    Edge e;   // 1-edge at the minimum vertex
    Edge ep;  // 1-edge at the maximum vertex
};

// QDIMACS subset: optional 'c' comment lines, one 'p cnf <vars>
// <clauses>' header, quantifier lines 'a|e <vars...> 0' declaring
// variables 1..num_vars in order (outermost first, every variable
// quantified), then 0-terminated clauses.
QbfInstance parse_qbf(const std::string& text);

// Recursive semantics: forall = AND of both branches, exists = OR,
// base = CNF evaluation.
bool eval_qbf(const QbfInstance& inst);

// 3-dimensional starting blocks: false = uniform USO; true = a fixed
// orientation whose min/max 1-edges are in phase, chosen as the
// lexicographically minimal 3-dimensional USO that is acyclic, combed
// down in dimension 1, has its sink at the minimum and source at the
// maximum vertex.
DenseOrientation base_gadget(bool truth);

// Relay block used inside the exists gadget: a d-dimensional
// orientation satisfying the five level invariants whose extreme
// 1-edges are in phase.  For d = 3 it is the true base gadget; for
// d > 3 two copies of the (d-1)-relay are stacked in the new top
// dimension, combed down, and the top edge above vertex e1 is
// flipped, which chains the copies' distinguished phases together.
Mask relay_outmap(int d, Vertex v);
DenseOrientation relay(int d);

// Quantifier gadgets: F encodes the sub-sentence with the bound
// variable false, T with it true; both must satisfy the five level
// invariants (USO, acyclic, combed down in dimension 1, sink at the
// minimum, source at the maximum vertex).  Red-edge flippability in
// the combed product is asserted during synthesis.
DenseOrientation synth_forall(const Orientation& f, const Orientation& t);
DenseOrientation synth_exists(const Orientation& f, const Orientation& t);

// Throws GadgetError unless o satisfies the five level invariants.
void check_gadget_invariants(const Orientation& o);

GadgetLayout build_layout(const QbfInstance& inst);

// One outmap evaluation in time polynomial in the instance size;
// pointwise equal to the dense synth_forall/synth_exists recursion.
Mask succinct_outmap(const QbfInstance& inst, const GadgetLayout& layout, Vertex v);

// Dense reference construction (total_dim <= N_MAX only).
DenseOrientation materialize_reduction(const QbfInstance& inst);

ReductionOutput reduce_to_2ip(const QbfInstance& inst);

// Development-time search that produced the frozen true-gadget
// constant; retained so tests can re-derive and pin it.
DenseOrientation search_true_base_gadget();

}  // namespace uso
