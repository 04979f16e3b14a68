// similarity_matrix.hpp — Dense symmetric score matrix with pinned unit diagonal.
//
// Only the strict upper triangle is stored (row-major), halving memory and
// making symmetry structural rather than maintained. The diagonal reads as 1
// and cannot be written: every measure in this project scores a node against
// itself as 1 by definition.
#pragma once

#include <cstddef>
#include <vector>

namespace rolesim {

inline std::size_t pair_count(int n) {
    return static_cast<std::size_t>(n) * (n - 1) / 2;
}

// Index of unordered pair (u,v), u < v, in row-major strict-upper order:
// (0,1), (0,2), ..., (0,n-1), (1,2), ...
inline std::size_t pair_index(int n, int u, int v) {
    const std::size_t uu = static_cast<std::size_t>(u);
    return uu * n - uu * (uu + 1) / 2 + (v - u - 1);
}

// Inverse of pair_index. Used to locate the start of a work chunk; iterate
// incrementally from there.
void pair_from_index(int n, std::size_t idx, int& u, int& v);

class SimilarityMatrix {
public:
    SimilarityMatrix() = default;
    explicit SimilarityMatrix(int n, double fill = 0.0)
        : n_(n), tri_(pair_count(n), fill) {}

    int size() const { return n_; }

    double at(int u, int v) const {
        if (u == v) return 1.0;
        if (u > v) { const int t = u; u = v; v = t; }
        return tri_[pair_index(n_, u, v)];
    }

    void set(int u, int v, double score) {
        if (u > v) { const int t = u; u = v; v = t; }
        tri_[pair_index(n_, u, v)] = score;
    }

    // Strict upper triangle, row-major; pair_index addresses into it.
    std::vector<double>& data() { return tri_; }
    const std::vector<double>& data() const { return tri_; }

    bool operator==(const SimilarityMatrix& o) const {
        return n_ == o.n_ && tri_ == o.tri_;
    }

private:
    int n_ = 0;
    std::vector<double> tri_;
};

// Guard for dense allocations: throws std::runtime_error directing the caller
// to the iceberg path when n exceeds the cap.
void ensure_dense_capacity(int n, int cap);

inline constexpr int kDefaultDenseCap = 30000;

}  // namespace rolesim
