#include "rolesim/similarity_matrix.hpp"

#include <stdexcept>
#include <string>

namespace rolesim {

void pair_from_index(int n, std::size_t idx, int& u, int& v) {
    // Pairs with first coordinate < u occupy offset(u) = u*n - u*(u+1)/2 slots;
    // binary-search the largest u with offset(u) <= idx.
    int lo = 0, hi = n - 1;
    while (lo < hi) {
        const int mid = (lo + hi + 1) / 2;
        const std::size_t mm = static_cast<std::size_t>(mid);
        const std::size_t offset = mm * n - mm * (mm + 1) / 2;
        if (offset <= idx) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    u = lo;
    const std::size_t uu = static_cast<std::size_t>(u);
    const std::size_t offset = uu * n - uu * (uu + 1) / 2;
    v = u + 1 + static_cast<int>(idx - offset);
}

void ensure_dense_capacity(int n, int cap) {
    if (n > cap) {
        throw std::runtime_error(
            "dense similarity matrix refused: n=" + std::to_string(n) + " exceeds cap " +
            std::to_string(cap) +
            " (~" + std::to_string(pair_count(n) * sizeof(double) / (1024 * 1024)) +
            " MiB); use the iceberg command for large graphs, or raise --dense-cap");
    }
}

}  // namespace rolesim
