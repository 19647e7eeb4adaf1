#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "uso/cube.hpp"
#include "uso/orientation.hpp"
#include "uso/phases.hpp"

// Generators and transformations: uniform and Schurr orientations,
// hypervertex replacement, partial swap, exhaustive small-dimension
// enumeration and the phase-flip Markov chain sampler.

namespace uso {

// O(v) = v; every edge flippable.
DenseOrientation uniform(int n);

// Closed form: O(v)_i = v_i xor v_{i+1} for i < n, O(v)_n = v_n.
Mask schurr_outmap(int n, Vertex v);
DenseOrientation schurr(int n);

// Replace the interior of a hypervertex face by another USO of the
// same dimension (spanned-dimension outmaps from `inner`, everything
// else unchanged).
DenseOrientation replace_hypervertex(const Orientation& o, const Face& f,
                                     const Orientation& inner);

// Swap the facet subgraphs induced by the endpoints of all upward
// j-edges; preserves the USO property and the j-phase partition.
DenseOrientation partial_swap(const Orientation& o, int j);

// Every USO of Q_n (n <= 3) exactly once, lexicographic in the stored
// outmap array.  Counts: 2, 12, 744.
void enumerate_usos(int n, const std::function<void(const DenseOrientation&)>& fn);
std::uint64_t count_usos(int n);

using Rng = std::mt19937_64;

// One chain step: uniform dimension i, each class of the i-phase
// partition flipped independently with probability 1/2.
DenseOrientation markov_step(const DenseOrientation& o, Rng& rng);

// `steps` chain steps from uniform(n) with a seeded generator.
DenseOrientation sample_uniform(int n, std::uint64_t steps, std::uint64_t seed);

}  // namespace uso
