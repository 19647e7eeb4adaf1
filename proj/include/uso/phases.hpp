#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uso/cube.hpp"
#include "uso/orientation.hpp"
#include "uso/recognition.hpp"

// Phase structure of a USO: direct-in-phaseness certificates, phase
// partitions (naive all-pairs and fast per-face algorithms),
// flippability, the two-edges-in-phase decision, phase connectedness
// in the neighborhood graph, hypervertices and matching flips.

namespace uso {

// Vertices v, w certifying that the i-edges at v and w are in direct
// phase: i in v^w, outmaps equal on (v^w)\{i}, different at i.
struct DirectPhaseCertificate {
    Vertex v = 0;
    Vertex w = 0;
    int i = 1;
};

// Per dimension i, a partition of the 2^(n-1) canonical i-edges into
// phases.  Classes are identified by their representative, the
// minimal base vertex in the class.
class PhasePartition {
public:
    explicit PhasePartition(int n);

    int dim() const { return n_; }

    // Union the classes of the i-edges at bases a and b.
    void unite(int i, Vertex a, Vertex b);

    // Representative (minimal base) of the class containing e.
    Vertex find(const Edge& e) const;

    bool same_class(const Edge& e, const Edge& f) const;

    std::uint64_t class_count(int i) const;
    std::uint64_t total_class_count() const;

    // Members of e's class, sorted by base.
    std::vector<Edge> class_members(const Edge& e) const;

    // All classes of dimension i, ordered by representative; each
    // class sorted by base.
    std::vector<std::vector<Edge>> classes(int i) const;

    friend bool operator==(const PhasePartition& a, const PhasePartition& b);

private:
    int n_;
    // parent_[i-1][base] for canonical bases of dimension i; mutable
    // for path compression.
    mutable std::vector<std::vector<Vertex>> parent_;
    std::vector<std::vector<std::uint32_t>> size_;
    Vertex root(int i, Vertex a) const;
};

// Render a partition in the .phz text format: per dimension a line
// "dim <i> classes <k>" followed by one line per class of
// space-separated "<base-bits>:<i>" edges.
std::string store_phases(const PhasePartition& p);

// With D = (v^w) & (O(v)^O(w)), the pair
// certifies iff popcount(D) = 1; the certified dimension is D's bit.
std::optional<DirectPhaseCertificate> certificate_from_pair(const Orientation& o, Vertex v,
                                                            Vertex w);

// True iff one of the two opposing endpoint pairs of e, e' certifies.
bool in_direct_phase(const Orientation& o, const Edge& e, const Edge& ep);

// All-pairs transitive closure; Theta(4^n) pair tests.
PhasePartition compute_phases_naive(const Orientation& o, std::uint64_t* pair_checks = nullptr);

// Per-face min/max certificate sweep; at most 3^n pair tests, equal
// partition to the naive algorithm.  `jobs` > 1 parallelizes the
// sweep; the result is identical.
PhasePartition compute_phases_fast(const Orientation& o, std::uint64_t* pair_checks = nullptr,
                                   int jobs = 1);

// Singleton phase: endpoints agree on every dimension except e.dim.
bool is_flippable(const Orientation& o, const Edge& e);

// The 2IP decision via the fast dense partition.
bool in_phase(const Orientation& o, const Edge& e, const Edge& ep);

// The 2IP decision for oracle orientations: breadth-first search over
// the direct-in-phase relation, discovering partners by scanning
// candidate vertices.  The budget bounds scanned vertex pairs.
bool in_phase_bfs(const Orientation& o, const Edge& e, const Edge& ep,
                  std::uint64_t budget = std::uint64_t{1} << 22);

// S must lie in a single dimension; true iff S is a union of classes.
bool is_union_of_phases(const Orientation& o, const EdgeSet& s);

// Whether the subgraph of N_i induced by the class of `member` is
// connected.
bool phase_connected_in_Ni(const PhasePartition& p, const Edge& member);

// Every non-spanned dimension of f is uniformly oriented across f.
bool is_hypervertex(const Orientation& o, const Face& f);

// Flip a matching that is a union of phases; validates both premises
// and asserts the flipped orientation against the fast USO check.
DenseOrientation flip_matching_checked(const Orientation& o, const EdgeSet& h);

}  // namespace uso
