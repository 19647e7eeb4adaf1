#pragma once

#include <cstdint>
#include <optional>

#include "uso/cube.hpp"
#include "uso/orientation.hpp"

// USO / PUSO recognition: brute-force sink counting, the all-pairs
// check and the 3^n min/max-per-face check.

namespace uso {

// A failed recognition check: the offending face and vertex pair.
struct UsoWitness {
    Face face;
    Vertex v = 0;
    Vertex w = 0;
};

// Number of sinks of the subgraph induced by face f.
std::uint64_t count_sinks(const Orientation& o, const Face& f);

// All-pairs check: (v^w) & (O(v)^O(w)) != 0 for all distinct v, w.
bool is_uso_naive(const Orientation& o, std::uint64_t* pair_checks = nullptr);

// Min/max-per-face check, at most 3^n vertex-pair comparisons
// (0-dimensional faces are skipped).  On failure the witness, if
// requested, is the first violating face in enumeration order.
// `jobs` > 1 splits the face sweep across threads; output identical.
bool is_uso_fast(const Orientation& o, UsoWitness* witness = nullptr,
                 std::uint64_t* pair_checks = nullptr, int jobs = 1);

// Pseudo USO: no unique global sink but every proper face has one.
bool is_puso(const Orientation& o);

}  // namespace uso
