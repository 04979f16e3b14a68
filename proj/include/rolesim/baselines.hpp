// baselines.hpp — SimRank-family similarity measures for comparison.
//
// All three share the same skeleton: identity initialization (diagonal 1,
// everything else 0), synchronous iteration with a (1-decay) multiplier, and
// the convention that a pair with an empty neighborhood on either side scores
// 0. They intentionally do not confirm automorphic equivalence — that failure
// is what the role-similarity measure exists to fix — and the tests pin the
// classic counterexamples (a single edge, two nodes sharing all neighbors).
#pragma once

#include "rolesim/graph.hpp"
#include "rolesim/rolesim.hpp"
#include "rolesim/similarity_matrix.hpp"

namespace rolesim {

struct BaselineConfig {
    double decay = 0.1;  // multiplier on the neighbor average is (1 - decay)
    double rel_tol = 0.01;
    int max_iters = 100;
    bool absolute_tol = false;
    int threads = 0;
    int dense_cap = kDefaultDenseCap;
};

// SR(u,v) = (1-decay) / (|N(u)||N(v)|) * sum over N(u)×N(v) of SR(x,y).
SimilarityMatrix simrank(const Graph& g, const BaselineConfig& cfg,
                         IterationReport* report = nullptr);

// Common-neighbor evidence: sum_{i=1..|N(u) ∩ N(v)|} 2^-i = 1 - 2^-k.
double evidence(const Graph& g, int u, int v);

// SimRank update scaled by evidence(u,v) each round, clamped to [0,1];
// diagonal stays pinned at 1.
SimilarityMatrix simrank_pp(const Graph& g, const BaselineConfig& cfg,
                            IterationReport* report = nullptr);

// First-meeting variant: with J = |N(u) ∩ N(v)| / |N(u) ∪ N(v)|,
//
//   sim(u,v) = (1-decay) * [ J
//       + sum_{x in N(u)\N(v), y in N(v)} sim(x,y) / (|N(u) ∪ N(v)| |N(v)|)
//       + sum_{x in N(v)\N(u), y in N(u)} sim(x,y) / (|N(u) ∪ N(v)| |N(u)|) ].
SimilarityMatrix psimrank(const Graph& g, const BaselineConfig& cfg,
                          IterationReport* report = nullptr);

}  // namespace rolesim
