// eval.hpp — Evaluation harness: axiom checking, rankings, correlation, top-k.
//
// The five axioms a role-similarity metric must satisfy, as checked here:
//   P1 range     — every score in [0,1]
//   P2 symmetry  — score(u,v) = score(v,u)
//   P3 automorphism confirmation — equivalent nodes score exactly 1
//   P4 transitive similarity     — a≡b, c≡d  =>  score(a,c) = score(b,d)
//   P5 triangle inequality       — d = 1 - score obeys d(a,c) <= d(a,b)+d(b,c)
#pragma once

#include <cstddef>
#include <tuple>
#include <vector>

#include "rolesim/iceberg.hpp"
#include "rolesim/partition.hpp"
#include "rolesim/similarity_matrix.hpp"

namespace rolesim {

struct AxiomReport {
    double p1_violation = 0.0;
    double p2_violation = 0.0;
    double p3_violation = 0.0;
    double p4_violation = 0.0;
    double p5_violation = 0.0;
    bool p1_pass = false;
    bool p2_pass = false;
    bool p3_pass = false;
    bool p4_pass = false;
    bool p5_pass = false;
    bool p5_checked = false;  // false when n exceeded the triple-loop bound

    // All axioms that were actually checked pass.
    bool all_pass() const {
        return p1_pass && p2_pass && p3_pass && p4_pass && (!p5_checked || p5_pass);
    }
};

// Cubic triple enumeration for P5 is enforced only up to this many nodes;
// beyond it P5 is skipped and flagged.
inline constexpr int kTriangleCheckMaxNodes = 200;

// Check the axioms of `m` against an equivalence partition. When `classes` is
// null, classes are derived from the matrix itself: nodes whose pairwise score
// is within tol of 1 are grouped (union-find), which is exactly the transitive
// consequence P3/P4 impose on score-1 pairs.
AxiomReport check_axioms(const SimilarityMatrix& m, const Partition* classes, double tol);

// rank[i] = (average ascending rank of scores[i] among ties) / count, in (0,1].
std::vector<double> percentile_ranks(const std::vector<double>& scores);

// Product-moment correlation. Throws std::invalid_argument on length mismatch,
// empty input, or zero variance.
double pearson(const std::vector<double>& x, const std::vector<double>& y);

struct BlockRankReport {
    double overall = 0.0;                // mean percentile over all within-block pairs
    std::vector<double> per_block;       // indexed by block id; NaN when < 2 members
    std::size_t within_pairs = 0;
};

// Percentile-rank every off-diagonal pair score, then average the ranks of
// pairs whose endpoints share a block.
BlockRankReport within_block_avg_rank(const SimilarityMatrix& m, const Partition& blocks);

struct ScoredPair {
    int u = 0;
    int v = 0;
    double score = 0.0;
};

// Best k pairs: score descending, ties by (u,v) ascending. k larger than the
// number of pairs returns them all.
std::vector<ScoredPair> topk_pairs(const SimilarityMatrix& m, std::size_t k);
std::vector<ScoredPair> topk_pairs(const IcebergTable& table, std::size_t k);

}  // namespace rolesim
