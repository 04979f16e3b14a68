// equivalence.hpp — Discrete role-equivalence machinery.
//
// Four nested notions of "same role", finest to coarsest:
//   structural   — identical neighbor sets
//   automorphic  — some adjacency-preserving permutation maps one to the other
//   exact/equitable — same count of neighbors in every class (counted spectra)
//   regular      — same set of neighbor classes (binary spectra)
// Refinement computes the two spectrum-based partitions; a brute-force search
// over automorphisms provides ground-truth orbits for small graphs.
#pragma once

#include "rolesim/graph.hpp"
#include "rolesim/partition.hpp"
#include "rolesim/similarity_matrix.hpp"

namespace rolesim {

enum class SpectrumMode {
    Counted,  // multiset of neighbor classes — splits to the coarsest equitable partition
    Binary,   // set of neighbor classes — regular-equivalence refinement
};

// Group nodes by identical (sorted) neighbor sets.
Partition structural_classes(const Graph& g);

// Iteratively split classes whose members disagree on their neighbor spectrum
// until stable. Output refines the seed; from the all-one seed, Counted mode
// yields the coarsest equitable partition.
Partition refine_partition(const Graph& g, const Partition& seed, SpectrumMode mode);

// True iff every same-class pair has identical counted spectra.
bool is_equitable(const Graph& g, const Partition& p);

// True iff every same-class pair has identical binary spectra.
bool is_regular(const Graph& g, const Partition& p);

inline constexpr int kDefaultOrbitCap = 10;

// Enumerate all automorphisms by backtracking (candidates restricted to nodes
// with matching degree and neighbor-degree multiset) and return the orbit
// partition. Factorial in the worst case: throws std::invalid_argument when
// n > cap, pointing at the refinement-based necessary conditions instead; a
// warning is printed when running beyond n = 14 with a raised cap.
Partition automorphism_orbits_bruteforce(const Graph& g, int cap = kDefaultOrbitCap);

// 1.0 for same-class pairs, 0.0 otherwise. The indicator of any partition
// that respects orbits is itself an admissible metric, which the axiom
// checker verifies in tests.
SimilarityMatrix indicator_matrix(const Partition& p);

}  // namespace rolesim
