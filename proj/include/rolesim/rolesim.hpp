// rolesim.hpp — Role-similarity fixed point over neighbor matchings.
//
// Each round scores a pair (u,v) as
//
//     score = (1-beta) * w(M) / max(|N(u)|, |N(v)|) + beta
//
// where w(M) is the configured matching's weight over the previous round's
// scores between N(u) and N(v). beta in (0,1) is both a decay factor and a
// score floor. Iteration proceeds from an admissible initialization until the
// largest per-cell change is small enough.
#pragma once

#include <vector>

#include "rolesim/graph.hpp"
#include "rolesim/matching.hpp"
#include "rolesim/similarity_matrix.hpp"

namespace rolesim {

enum class InitScheme {
    AllOne,        // every pair starts at 1
    DegreeBinary,  // 1 iff equal degrees, else 0
    DegreeRatio,   // (1-beta) * min(deg)/max(deg) + beta
};

struct RoleSimConfig {
    double beta = 0.1;
    InitScheme init = InitScheme::DegreeRatio;
    MatchMode matching = MatchMode::Greedy;
    double rel_tol = 0.01;      // stop when max |new-old|/max(old,eps) drops below
    int max_iters = 100;
    bool absolute_tol = false;  // reinterpret rel_tol as a bound on max |new-old|
    int threads = 0;            // 0 = resolve from environment / hardware
    int dense_cap = kDefaultDenseCap;
};

struct IterationReport {
    int iterations = 0;
    std::vector<double> deltas;  // per-iteration max absolute cell change
    bool converged = false;
};

// Affine rescale of a ratio in [0,1] onto [beta, 1]. Ratio 1 lands bitwise on
// 1.0 ((1-beta)+beta rounds exactly for every beta), so fixed points stay
// pinned at 1; the clamp only guards out-of-range inputs. Every score this
// project produces funnels through here, which keeps "one ALL-1 sweep ==
// degree-ratio init" a bitwise identity.
inline double score_from_ratio(double beta, double ratio) {
    double s = (1.0 - beta) * ratio + beta;
    if (s > 1.0) s = 1.0;
    if (s < 0.0) s = 0.0;
    return s;
}

// Matching-based Jaccard between sets of the given sizes: weight / (|A|+|B|-|M|).
// Both sets empty is defined as 1 (nothing distinguishes two empty
// neighborhoods). Requires |M| <= min(|A|,|B|) and weight <= |M|.
double generalized_jaccard(int size_a, int size_b, double match_weight, int match_size);

SimilarityMatrix initialize(const Graph& g, InitScheme scheme, double beta);

// One cell of the update, reading only `prev`. Degenerate cases: u==v -> 1;
// both isolated -> 1; exactly one isolated -> beta.
double pair_update(const Graph& g, const SimilarityMatrix& prev, int u, int v,
                   double beta, MatchMode mode);

// Full iteration to convergence (or max_iters). Deterministic for a given
// (graph, config) regardless of thread count.
SimilarityMatrix compute_rolesim(const Graph& g, const RoleSimConfig& cfg,
                                 IterationReport* report = nullptr);

}  // namespace rolesim
