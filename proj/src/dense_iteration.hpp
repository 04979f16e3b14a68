// dense_iteration.hpp — Shared fixed-point driver for dense similarity measures.
//
// Internal to the library. Runs synchronous iterations: every cell of the next
// matrix is computed from an immutable previous snapshot, in parallel over
// contiguous pair-index chunks. Per-chunk delta maxima are reduced in chunk
// order, so results are bitwise independent of the worker count.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "rolesim/parallel.hpp"
#include "rolesim/rolesim.hpp"
#include "rolesim/similarity_matrix.hpp"

namespace rolesim {
namespace detail {

// Relative change of a cell is measured against max(|old|, kConvergenceEps)
// so cells starting at zero do not divide by zero.
inline constexpr double kConvergenceEps = 1e-12;

struct IterationPolicy {
    double tol = 0.01;
    bool absolute = false;
    int max_iters = 100;
    int threads = 0;
};

// cell(prev, u, v) -> new score. Returns the converged (or capped) matrix.
template <class CellFn>
SimilarityMatrix iterate_dense(int n, SimilarityMatrix init, const IterationPolicy& policy,
                               IterationReport* report, CellFn&& cell) {
    SimilarityMatrix prev = std::move(init);
    SimilarityMatrix next(n);
    const std::size_t total = pair_count(n);
    const int threads = resolve_threads(policy.threads);

    IterationReport local;
    while (local.iterations < policy.max_iters && !local.converged) {
        std::vector<double> max_abs(std::max(threads, 1), 0.0);
        std::vector<double> max_rel(std::max(threads, 1), 0.0);
        parallel_chunks(total, threads, [&](int chunk, std::size_t begin, std::size_t end) {
            int u, v;
            if (begin < end) pair_from_index(n, begin, u, v);
            const double* prev_cells = prev.data().data();
            double* next_cells = next.data().data();
            double worst_abs = 0.0, worst_rel = 0.0;
            for (std::size_t i = begin; i < end; ++i) {
                const double fresh = cell(prev, u, v);
                next_cells[i] = fresh;
                const double diff = std::fabs(fresh - prev_cells[i]);
                if (diff > worst_abs) worst_abs = diff;
                const double rel = diff / std::max(std::fabs(prev_cells[i]), kConvergenceEps);
                if (rel > worst_rel) worst_rel = rel;
                if (++v == n) {
                    ++u;
                    v = u + 1;
                }
            }
            max_abs[chunk] = worst_abs;
            max_rel[chunk] = worst_rel;
        });
        const double delta_abs = total ? *std::max_element(max_abs.begin(), max_abs.end()) : 0.0;
        const double delta_rel = total ? *std::max_element(max_rel.begin(), max_rel.end()) : 0.0;

        std::swap(prev, next);
        ++local.iterations;
        local.deltas.push_back(delta_abs);
        local.converged = policy.absolute ? (delta_abs < policy.tol) : (delta_rel < policy.tol);
    }

    if (report) *report = std::move(local);
    return prev;
}

}  // namespace detail
}  // namespace rolesim
