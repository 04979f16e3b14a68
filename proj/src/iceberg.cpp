// iceberg.cpp — Candidate seeding (Rules 1-3) and table-restricted iteration.
#include "rolesim/iceberg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "dense_iteration.hpp"
#include "rolesim/parallel.hpp"

namespace rolesim {

void validate_iceberg_config(const IcebergConfig& cfg) {
    if (!(cfg.beta > 0.0 && cfg.beta < 1.0))
        throw std::invalid_argument("beta must lie in (0, 1), got " + std::to_string(cfg.beta));
    if (!(cfg.theta > cfg.beta))
        throw std::invalid_argument("theta must exceed beta: every score is at least beta, so "
                                    "theta <= beta keeps all pairs and prunes nothing");
    if (!(cfg.theta <= 1.0))
        throw std::invalid_argument("theta must be at most 1, got " + std::to_string(cfg.theta));
    if (!(cfg.alpha >= 0.0 && cfg.alpha <= 1.0))
        throw std::invalid_argument("alpha must lie in [0, 1], got " + std::to_string(cfg.alpha));
    if (!(cfg.rel_tol > 0.0)) throw std::invalid_argument("rel_tol must be positive");
    if (cfg.max_iters < 1) throw std::invalid_argument("max_iters must be at least 1");
}

namespace {

// Shared ratio convention: both degrees zero reads as identical neighborhoods.
double degree_ratio(int deg_u, int deg_v) {
    const int lo = deg_u < deg_v ? deg_u : deg_v;
    const int hi = deg_u < deg_v ? deg_v : deg_u;
    return hi == 0 ? 1.0 : static_cast<double>(lo) / static_cast<double>(hi);
}

}  // namespace

double theta_upper_bound(int deg_u, int deg_v, double beta) {
    return score_from_ratio(beta, degree_ratio(deg_u, deg_v));
}

double estimate_noncandidate(int deg_u, int deg_v, double alpha, double beta) {
    const double score = alpha * (1.0 - beta) * degree_ratio(deg_u, deg_v) + beta;
    return std::min(1.0, std::max(0.0, score));
}

void IcebergTable::insert(int u, int v, double score) {
    if (u > v) std::swap(u, v);
    pairs_.emplace_back(u, v);
    scores_.push_back(score);
}

void IcebergTable::finalize() {
    std::vector<std::size_t> by_pair(pairs_.size());
    std::iota(by_pair.begin(), by_pair.end(), std::size_t{0});
    std::sort(by_pair.begin(), by_pair.end(),
              [this](std::size_t a, std::size_t b) { return pairs_[a] < pairs_[b]; });

    std::vector<std::pair<int, int>> sorted_pairs(pairs_.size());
    std::vector<double> sorted_scores(scores_.size());
    for (std::size_t slot = 0; slot < by_pair.size(); ++slot) {
        sorted_pairs[slot] = pairs_[by_pair[slot]];
        sorted_scores[slot] = scores_[by_pair[slot]];
    }
    pairs_ = std::move(sorted_pairs);
    scores_ = std::move(sorted_scores);

    index_.clear();
    index_.reserve(pairs_.size());
    for (std::size_t slot = 0; slot < pairs_.size(); ++slot)
        index_.emplace(key(pairs_[slot].first, pairs_[slot].second), slot);
}

const double* IcebergTable::lookup(int u, int v) const {
    const auto it = index_.find(key(u, v));
    return it == index_.end() ? nullptr : &scores_[it->second];
}

IcebergTable seed_candidates(const Graph& g, const IcebergConfig& cfg) {
    validate_iceberg_config(cfg);
    const int n = g.num_nodes();
    const double tp = theta_prime(cfg.theta, cfg.beta);
    const double beta = cfg.beta;

    // Nodes by (degree, id). A pair is examined once, at its canonical
    // endpoint u: the later of the two in this order, i.e. the higher-degree
    // endpoint (larger id on ties). The window below u then holds exactly the
    // partners passing Rule 1: theta' * deg(u) <= deg(v) <= deg(u).
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&g](int a, int b) {
        const int da = g.degree(a), db = g.degree(b);
        return da != db ? da < db : a < b;
    });
    std::vector<int> order_deg(n);
    for (int pos = 0; pos < n; ++pos) order_deg[pos] = g.degree(order[pos]);

    const int threads = resolve_threads(cfg.threads);
    struct Hit {
        int u, v;
        double score;
    };
    std::vector<std::vector<Hit>> found(std::max(threads, 1));

    parallel_chunks(static_cast<std::size_t>(n), threads,
                    [&](int chunk, std::size_t begin, std::size_t end) {
        std::vector<Hit>& hits = found[chunk];
        for (std::size_t pu = begin; pu < end; ++pu) {
            const int u = order[pu];
            const int du = order_deg[pu];

            if (du == 0) {
                // Isolated pairs score exactly 1; every earlier position is
                // another isolated node.
                for (std::size_t pv = 0; pv < pu; ++pv) hits.push_back({order[pv], u, 1.0});
                continue;
            }

            const double floor_deg = tp * du;
            const auto lo = std::lower_bound(order_deg.begin(), order_deg.begin() + pu,
                                             floor_deg,
                                             [](int deg, double bound) { return deg < bound; });
            const int du1 = g.neighbor_degrees(u).front();  // smallest neighbor degree

            for (auto it = lo; it != order_deg.begin() + pu; ++it) {
                const std::size_t pv = static_cast<std::size_t>(it - order_deg.begin());
                const int v = order[pv];
                const int dv = order_deg[pv];
                const auto& v_degs = g.neighbor_degrees(v);

                // Rule 3: if v's smallest neighbor degree is the weaker one,
                // its matched weight is at most the degree-ratio score m11,
                // every other matched cell is at most 1, and the matching has
                // exactly deg(v) pairs. Skip when even that ceiling misses.
                const int dv1 = v_degs.front();
                if (dv1 <= du1) {
                    const double m11 = score_from_ratio(beta, degree_ratio(du1, dv1));
                    if (dv - 1 + m11 < floor_deg) continue;
                }

                // Rule 2: matching over degree-ratio weights, the pair's
                // score ceiling after one iteration from an all-one start.
                const auto& u_degs = g.neighbor_degrees(u);
                WeightGrid grid(du, dv);
                for (int i = 0; i < du; ++i)
                    for (int j = 0; j < dv; ++j)
                        grid.at(i, j) = score_from_ratio(beta, degree_ratio(u_degs[i], v_degs[j]));
                const double weight = run_matching(grid, cfg.matching).weight;
                if (weight < floor_deg) continue;

                hits.push_back({std::min(u, v), std::max(u, v),
                                score_from_ratio(beta, weight / du)});
            }
        }
    });

    IcebergTable table;
    for (const auto& chunk_hits : found)
        for (const Hit& hit : chunk_hits) table.insert(hit.u, hit.v, hit.score);
    table.finalize();
    return table;
}

namespace {

double iceberg_pair_update(const Graph& g, const IcebergTable& table, int u, int v,
                           const IcebergConfig& cfg) {
    const int du = g.degree(u);
    const int dv = g.degree(v);
    if (du == 0 && dv == 0) return 1.0;
    if (du == 0 || dv == 0) return cfg.beta;

    const auto& nu = g.neighbors(u);
    const auto& nv = g.neighbors(v);
    WeightGrid grid(du, dv);
    for (int i = 0; i < du; ++i) {
        for (int j = 0; j < dv; ++j) {
            const int x = nu[i];
            const int y = nv[j];
            if (x == y) {
                grid.at(i, j) = 1.0;
            } else if (const double* stored = table.lookup(x, y)) {
                grid.at(i, j) = *stored;
            } else {
                grid.at(i, j) = estimate_noncandidate(g.degree(x), g.degree(y), cfg.alpha,
                                                      cfg.beta);
            }
        }
    }
    const MatchResult match = run_matching(grid, cfg.matching);
    const double ratio =
        generalized_jaccard(du, dv, match.weight, static_cast<int>(match.pairs.size()));
    return score_from_ratio(cfg.beta, ratio);
}

}  // namespace

IcebergTable compute_iceberg(const Graph& g, const IcebergConfig& cfg, IterationReport* report) {
    IcebergTable table = seed_candidates(g, cfg);
    const auto& pairs = table.pairs();
    const std::size_t total = pairs.size();
    const int threads = resolve_threads(cfg.threads);

    std::vector<double> next(total);
    IterationReport local;
    while (local.iterations < cfg.max_iters && !local.converged) {
        std::vector<double> max_abs(std::max(threads, 1), 0.0);
        std::vector<double> max_rel(std::max(threads, 1), 0.0);
        parallel_chunks(total, threads, [&](int chunk, std::size_t begin, std::size_t end) {
            double worst_abs = 0.0, worst_rel = 0.0;
            for (std::size_t i = begin; i < end; ++i) {
                const double fresh = iceberg_pair_update(g, table, pairs[i].first,
                                                         pairs[i].second, cfg);
                next[i] = fresh;
                const double old = table.scores()[i];
                const double diff = std::fabs(fresh - old);
                if (diff > worst_abs) worst_abs = diff;
                const double rel = diff / std::max(std::fabs(old), detail::kConvergenceEps);
                if (rel > worst_rel) worst_rel = rel;
            }
            max_abs[chunk] = worst_abs;
            max_rel[chunk] = worst_rel;
        });
        const double delta_abs = total ? *std::max_element(max_abs.begin(), max_abs.end()) : 0.0;
        const double delta_rel = total ? *std::max_element(max_rel.begin(), max_rel.end()) : 0.0;

        std::swap(table.scores(), next);
        ++local.iterations;
        local.deltas.push_back(delta_abs);
        local.converged = cfg.absolute_tol ? (delta_abs < cfg.rel_tol) : (delta_rel < cfg.rel_tol);
    }

    if (report) *report = std::move(local);
    return table;
}

}  // namespace rolesim
