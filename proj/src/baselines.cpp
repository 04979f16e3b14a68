// baselines.cpp — SimRank, SimRank with evidence weighting, and PSimRank.
//
// All three share the decay convention used by the role measure: the
// multiplier in front of each update is (1 - decay), identity initialization,
// and a pair with an isolated endpoint scores zero.
#include "rolesim/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "dense_iteration.hpp"

namespace rolesim {

namespace {

void validate(const BaselineConfig& cfg) {
    if (!(cfg.decay > 0.0 && cfg.decay < 1.0))
        throw std::invalid_argument("decay must lie in (0, 1), got " + std::to_string(cfg.decay));
    if (!(cfg.rel_tol > 0.0)) throw std::invalid_argument("rel_tol must be positive");
    if (cfg.max_iters < 1) throw std::invalid_argument("max_iters must be at least 1");
}

detail::IterationPolicy policy_of(const BaselineConfig& cfg) {
    detail::IterationPolicy policy;
    policy.tol = cfg.rel_tol;
    policy.absolute = cfg.absolute_tol;
    policy.max_iters = cfg.max_iters;
    policy.threads = cfg.threads;
    return policy;
}

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

// Sum of prev(x, y) over x in xs, y in ys; prev(x, x) counts as 1.
double cross_sum(const SimilarityMatrix& prev, const std::vector<int>& xs,
                 const std::vector<int>& ys) {
    double total = 0.0;
    for (int x : xs)
        for (int y : ys) total += prev.at(x, y);
    return total;
}

int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
    int count = 0;
    auto it_a = a.begin();
    auto it_b = b.begin();
    while (it_a != a.end() && it_b != b.end()) {
        if (*it_a < *it_b) {
            ++it_a;
        } else if (*it_b < *it_a) {
            ++it_b;
        } else {
            ++count;
            ++it_a;
            ++it_b;
        }
    }
    return count;
}

}  // namespace

SimilarityMatrix simrank(const Graph& g, const BaselineConfig& cfg, IterationReport* report) {
    validate(cfg);
    ensure_dense_capacity(g.num_nodes(), cfg.dense_cap);
    const double factor = 1.0 - cfg.decay;
    return detail::iterate_dense(
        g.num_nodes(), SimilarityMatrix(g.num_nodes(), 0.0), policy_of(cfg), report,
        [&g, factor](const SimilarityMatrix& prev, int u, int v) {
            const int du = g.degree(u);
            const int dv = g.degree(v);
            if (du == 0 || dv == 0) return 0.0;
            const double total = cross_sum(prev, g.neighbors(u), g.neighbors(v));
            return clamp01(factor * total / (static_cast<double>(du) * dv));
        });
}

double evidence(const Graph& g, int u, int v) {
    const int common = intersection_size(g.neighbors(u), g.neighbors(v));
    return 1.0 - std::ldexp(1.0, -common);  // 1 - 2^-common
}

SimilarityMatrix simrank_pp(const Graph& g, const BaselineConfig& cfg, IterationReport* report) {
    validate(cfg);
    const int n = g.num_nodes();
    ensure_dense_capacity(n, cfg.dense_cap);

    // Evidence depends only on the graph; compute it once up front.
    SimilarityMatrix ev(n, 0.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) ev.set(u, v, evidence(g, u, v));

    const double factor = 1.0 - cfg.decay;
    return detail::iterate_dense(
        n, SimilarityMatrix(n, 0.0), policy_of(cfg), report,
        [&g, &ev, factor](const SimilarityMatrix& prev, int u, int v) {
            const int du = g.degree(u);
            const int dv = g.degree(v);
            if (du == 0 || dv == 0) return 0.0;
            const double total = cross_sum(prev, g.neighbors(u), g.neighbors(v));
            return clamp01(ev.at(u, v) * factor * total / (static_cast<double>(du) * dv));
        });
}

SimilarityMatrix psimrank(const Graph& g, const BaselineConfig& cfg, IterationReport* report) {
    validate(cfg);
    ensure_dense_capacity(g.num_nodes(), cfg.dense_cap);
    const double factor = 1.0 - cfg.decay;
    return detail::iterate_dense(
        g.num_nodes(), SimilarityMatrix(g.num_nodes(), 0.0), policy_of(cfg), report,
        [&g, factor](const SimilarityMatrix& prev, int u, int v) {
            const int du = g.degree(u);
            const int dv = g.degree(v);
            if (du == 0 || dv == 0) return 0.0;
            const auto& nu = g.neighbors(u);
            const auto& nv = g.neighbors(v);
            const int common = intersection_size(nu, nv);
            const double uni = du + dv - common;

            // Neighbors of u outside N(v), paired against all of N(v); and
            // the mirror term. Coupled-walk weighting collapses to 1/union.
            double only_u = 0.0;
            for (int x : nu)
                if (!std::binary_search(nv.begin(), nv.end(), x))
                    for (int y : nv) only_u += prev.at(x, y);
            double only_v = 0.0;
            for (int y : nv)
                if (!std::binary_search(nu.begin(), nu.end(), y))
                    for (int x : nu) only_v += prev.at(x, y);

            const double meet = common / uni;
            const double value = meet + only_u / (uni * dv) + only_v / (uni * du);
            return clamp01(factor * value);
        });
}

}  // namespace rolesim
