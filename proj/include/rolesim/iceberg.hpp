// iceberg.hpp — Threshold-pruned role similarity without the full matrix.
//
// Finds the pairs whose score can reach a threshold theta and iterates only on
// those, keeping them in a hash table. Candidate seeding applies three pruning
// rules driven by the normalized threshold theta' = (theta-beta)/(1-beta):
//
//   Rule 1: deg(v) <  theta' * deg(u)                        -> score < theta
//   Rule 2: seed matching weight w(M) < theta' * deg(u)      -> score < theta
//   Rule 3: cheap upper bound on w(M) from the smallest neighbor degrees,
//           short-circuiting Rule 2's matching computation.
//
// Seed matchings run over degree-ratio weights, which equal the first
// iteration from an all-one start; since that iteration only ever decreases
// scores (and exact matching weight is monotone in the grid), no pair whose
// converged ALL-1 score reaches theta is pruned. That guarantee is relative to
// the ALL-1/degree-ratio iteration with exact matching; it is not claimed for
// arbitrary initializations.
#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rolesim/graph.hpp"
#include "rolesim/matching.hpp"
#include "rolesim/rolesim.hpp"

namespace rolesim {

struct IcebergConfig {
    double theta = 0.9;   // must satisfy beta < theta <= 1
    double beta = 0.1;
    double alpha = 0.5;   // estimate weight for pairs missing from the table
    MatchMode matching = MatchMode::Greedy;
    double rel_tol = 0.01;
    int max_iters = 100;
    bool absolute_tol = false;
    int threads = 0;
};

// Throws std::invalid_argument unless beta < theta <= 1 and 0 <= alpha <= 1.
void validate_iceberg_config(const IcebergConfig& cfg);

inline double theta_prime(double theta, double beta) {
    return (theta - beta) / (1.0 - beta);
}

// Degree-ratio ceiling on any converged score: (1-beta)*min/max + beta
// (1 when both degrees are 0).
double theta_upper_bound(int deg_u, int deg_v, double beta);

// Stand-in score for a pair absent from the table:
// alpha*(1-beta)*min/max + beta. alpha interpolates between the floor beta
// (alpha=0) and theta_upper_bound (alpha=1).
double estimate_noncandidate(int deg_u, int deg_v, double alpha, double beta);

// Candidate pairs keyed canonically (min(u,v), max(u,v)); no diagonal entries.
// Entries are kept sorted by (u,v); the map gives O(1) score lookup.
class IcebergTable {
public:
    void insert(int u, int v, double score);
    void finalize();  // sort entries, build the lookup index

    std::size_t size() const { return pairs_.size(); }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    const std::vector<double>& scores() const { return scores_; }
    std::vector<double>& scores() { return scores_; }

    // nullptr when the pair is not stored. u==v is the caller's business.
    const double* lookup(int u, int v) const;

    static std::uint64_t key(int u, int v) {
        if (u > v) { const int t = u; u = v; v = t; }
        return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
    }

private:
    std::vector<std::pair<int, int>> pairs_;
    std::vector<double> scores_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
};

// Seeding only (Rules 1-3 over the degree-sorted candidate windows).
IcebergTable seed_candidates(const Graph& g, const IcebergConfig& cfg);

// Seeding plus iteration restricted to table entries; absent neighbor pairs
// contribute estimate_noncandidate. Final scores lie in [beta, 1].
IcebergTable compute_iceberg(const Graph& g, const IcebergConfig& cfg,
                             IterationReport* report = nullptr);

}  // namespace rolesim
