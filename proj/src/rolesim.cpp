// rolesim.cpp — RoleSim scores: init schemes, one-pair update, fixed-point loop.
#include "rolesim/rolesim.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dense_iteration.hpp"
#include "rolesim/matching.hpp"
#include "rolesim/parallel.hpp"

namespace rolesim {

double generalized_jaccard(int size_a, int size_b, double match_weight, int match_size) {
    if (size_a < 0 || size_b < 0) throw std::invalid_argument("generalized_jaccard: negative set size");
    if (size_a == 0 && size_b == 0) return 1.0;  // two empty sets are identical
    const int denom = size_a + size_b - match_size;
    if (denom <= 0) throw std::invalid_argument("generalized_jaccard: matching larger than the sets");
    return match_weight / denom;
}

static void validate_beta(double beta) {
    if (!(beta > 0.0 && beta < 1.0))
        throw std::invalid_argument("beta must lie in (0, 1), got " + std::to_string(beta));
}

SimilarityMatrix initialize(const Graph& g, InitScheme scheme, double beta) {
    validate_beta(beta);
    const int n = g.num_nodes();
    if (scheme == InitScheme::AllOne) return SimilarityMatrix(n, 1.0);

    SimilarityMatrix m(n, 0.0);
    for (int u = 0; u < n; ++u) {
        const int du = g.degree(u);
        for (int v = u + 1; v < n; ++v) {
            const int dv = g.degree(v);
            if (scheme == InitScheme::DegreeBinary) {
                m.set(u, v, du == dv ? 1.0 : 0.0);
            } else {
                // Degree ratio. Must produce bitwise the same value as one
                // all-ones sweep of pair_update, so the ratio is formed with
                // the identical min/max division used there.
                const int lo = du < dv ? du : dv;
                const int hi = du < dv ? dv : du;
                const double ratio = hi == 0 ? 1.0 : static_cast<double>(lo) / static_cast<double>(hi);
                m.set(u, v, score_from_ratio(beta, ratio));
            }
        }
    }
    return m;
}

double pair_update(const Graph& g, const SimilarityMatrix& prev, int u, int v, double beta,
                   MatchMode mode) {
    if (u == v) return 1.0;
    const int du = g.degree(u);
    const int dv = g.degree(v);
    if (du == 0 && dv == 0) return 1.0;   // identical (empty) neighborhoods
    if (du == 0 || dv == 0) return beta;  // matching is empty; only the floor survives

    const auto& nu = g.neighbors(u);
    const auto& nv = g.neighbors(v);
    WeightGrid grid(du, dv);
    for (int i = 0; i < du; ++i)
        for (int j = 0; j < dv; ++j) grid.at(i, j) = prev.at(nu[i], nv[j]);

    const MatchResult match = run_matching(grid, mode);
    const double ratio =
        generalized_jaccard(du, dv, match.weight, static_cast<int>(match.pairs.size()));
    return score_from_ratio(beta, ratio);
}

SimilarityMatrix compute_rolesim(const Graph& g, const RoleSimConfig& cfg,
                                 IterationReport* report) {
    validate_beta(cfg.beta);
    if (!(cfg.rel_tol > 0.0)) throw std::invalid_argument("rel_tol must be positive");
    if (cfg.max_iters < 1) throw std::invalid_argument("max_iters must be at least 1");
    ensure_dense_capacity(g.num_nodes(), cfg.dense_cap);

    detail::IterationPolicy policy;
    policy.tol = cfg.rel_tol;
    policy.absolute = cfg.absolute_tol;
    policy.max_iters = cfg.max_iters;
    policy.threads = cfg.threads;

    const double beta = cfg.beta;
    const MatchMode mode = cfg.matching;
    return detail::iterate_dense(
        g.num_nodes(), initialize(g, cfg.init, beta), policy, report,
        [&g, beta, mode](const SimilarityMatrix& prev, int u, int v) {
            return pair_update(g, prev, u, v, beta, mode);
        });
}

}  // namespace rolesim
