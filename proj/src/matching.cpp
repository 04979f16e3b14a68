#include "rolesim/matching.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace rolesim {
namespace {

// Shortest-augmenting-path assignment on an r x c grid with r <= c,
// minimizing cost. Returns col_of_row. Deterministic: strict comparisons,
// fixed scan order.
std::vector<int> assign_min_cost(int r, int c, const std::vector<double>& cost) {
    constexpr double kInf = std::numeric_limits<double>::infinity();
    // 1-based potentials/links; p[j] = row matched to column j (0 = free).
    std::vector<double> u(r + 1, 0.0), v(c + 1, 0.0), minv(c + 1, 0.0);
    std::vector<int> p(c + 1, 0), way(c + 1, 0);
    std::vector<char> used(c + 1, 0);

    for (int i = 1; i <= r; ++i) {
        p[0] = i;
        int j0 = 0;
        std::fill(minv.begin(), minv.end(), kInf);
        std::fill(used.begin(), used.end(), 0);
        do {
            used[j0] = 1;
            const int i0 = p[j0];
            double delta = kInf;
            int j1 = -1;
            for (int j = 1; j <= c; ++j) {
                if (used[j]) continue;
                const double cur = cost[static_cast<std::size_t>(i0 - 1) * c + (j - 1)] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= c; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        // Unwind the augmenting path.
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    std::vector<int> col_of_row(r, -1);
    for (int j = 1; j <= c; ++j) {
        if (p[j] != 0) col_of_row[p[j] - 1] = j - 1;
    }
    return col_of_row;
}

}  // namespace

MatchResult exact_matching(const WeightGrid& grid) {
    MatchResult result;
    const int r = grid.rows, c = grid.cols;
    if (r == 0 || c == 0) return result;

    // Orient so rows <= cols, maximize by negating weights.
    const bool transposed = r > c;
    const int rr = transposed ? c : r;
    const int cc = transposed ? r : c;
    std::vector<double> cost(static_cast<std::size_t>(rr) * cc);
    for (int i = 0; i < rr; ++i) {
        for (int j = 0; j < cc; ++j) {
            const double w = transposed ? grid.at(j, i) : grid.at(i, j);
            cost[static_cast<std::size_t>(i) * cc + j] = -w;
        }
    }

    const std::vector<int> col_of_row = assign_min_cost(rr, cc, cost);
    result.pairs.reserve(rr);
    for (int i = 0; i < rr; ++i) {
        const int j = col_of_row[i];
        if (transposed) {
            result.pairs.emplace_back(j, i);
        } else {
            result.pairs.emplace_back(i, j);
        }
    }
    std::sort(result.pairs.begin(), result.pairs.end());
    for (const auto& [row, col] : result.pairs) result.weight += grid.at(row, col);
    return result;
}

MatchResult greedy_matching(const WeightGrid& grid) {
    MatchResult result;
    const int r = grid.rows, c = grid.cols;
    if (r == 0 || c == 0) return result;

    // Sort every cell heaviest-first (ties: smaller row, then smaller column),
    // then sweep once, skipping blocked rows/columns.
    std::vector<std::uint32_t> cells(grid.weights.size());
    for (std::uint32_t i = 0; i < cells.size(); ++i) cells[i] = i;
    std::sort(cells.begin(), cells.end(), [&](std::uint32_t a, std::uint32_t b) {
        const double wa = grid.weights[a], wb = grid.weights[b];
        if (wa != wb) return wa > wb;
        return a < b;  // row-major index order == (row, col) lexicographic
    });

    std::vector<char> row_used(r, 0), col_used(c, 0);
    const int want = std::min(r, c);
    for (std::uint32_t idx : cells) {
        const int row = static_cast<int>(idx / c);
        const int col = static_cast<int>(idx % c);
        if (row_used[row] || col_used[col]) continue;
        row_used[row] = 1;
        col_used[col] = 1;
        result.pairs.emplace_back(row, col);
        if (static_cast<int>(result.pairs.size()) == want) break;
    }
    std::sort(result.pairs.begin(), result.pairs.end());
    for (const auto& [row, col] : result.pairs) result.weight += grid.at(row, col);
    return result;
}

}  // namespace rolesim
