// matching.hpp — Weighted bipartite matching between two neighbor sets.
//
// The kernel of every role-similarity update: given the grid of previous-round
// scores between N(u) and N(v), find a heavy matching. Two solvers share one
// result type: an exact Hungarian solver and a greedy 1/2-approximation. Both
// always return a matching of full cardinality min(rows, cols), so the
// generalized Jaccard denominator |A|+|B|-|M| collapses to max(|A|,|B|).
#pragma once

#include <utility>
#include <vector>

namespace rolesim {

// Dense row-major grid of scores in [0,1]; rows/cols may be 0.
struct WeightGrid {
    int rows = 0;
    int cols = 0;
    std::vector<double> weights;  // rows * cols entries

    WeightGrid() = default;
    WeightGrid(int r, int c, double fill = 0.0)
        : rows(r), cols(c), weights(static_cast<std::size_t>(r) * c, fill) {}

    double at(int r, int c) const { return weights[static_cast<std::size_t>(r) * cols + c]; }
    double& at(int r, int c) { return weights[static_cast<std::size_t>(r) * cols + c]; }
};

struct MatchResult {
    double weight = 0.0;
    std::vector<std::pair<int, int>> pairs;  // (row, col), sorted by row
};

// Maximum-total-weight matching of cardinality min(rows, cols).
// Hungarian / shortest-augmenting-path; deterministic.
MatchResult exact_matching(const WeightGrid& grid);

// Repeatedly takes the heaviest unblocked cell — ties broken by smaller row,
// then smaller column — until min(rows, cols) pairs are chosen. O(y log y) in
// the cell count y. Guaranteed within a factor 2 of the optimum.
MatchResult greedy_matching(const WeightGrid& grid);

enum class MatchMode { Exact, Greedy };

inline MatchResult run_matching(const WeightGrid& grid, MatchMode mode) {
    return mode == MatchMode::Exact ? exact_matching(grid) : greedy_matching(grid);
}

}  // namespace rolesim
