// eval.cpp — Axiom checks, percentile ranks, correlation, block ranks, top-k.
#include "rolesim/eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace rolesim {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

// Group nodes whose pairwise score is within tol of 1. P3 and P4 force score-1
// pairs to behave transitively, so the union-find closure is the natural class
// structure to test a bare matrix against.
Partition classes_from_scores(const SimilarityMatrix& m, double tol) {
    const int n = m.size();
    UnionFind uf(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (m.at(u, v) >= 1.0 - tol) uf.unite(u, v);
    Partition p;
    p.labels.resize(n);
    for (int v = 0; v < n; ++v) p.labels[v] = uf.find(v);
    std::vector<int> remap(n, -1);
    int next_class = 0;
    for (int v = 0; v < n; ++v) {
        if (remap[p.labels[v]] == -1) remap[p.labels[v]] = next_class++;
        p.labels[v] = remap[p.labels[v]];
    }
    p.k = next_class;
    return p;
}

}  // namespace

AxiomReport check_axioms(const SimilarityMatrix& m, const Partition* classes, double tol) {
    const int n = m.size();
    AxiomReport report;

    // P1: range. The triangular store holds every off-diagonal score once.
    for (const double s : m.data()) {
        report.p1_violation = std::max(report.p1_violation, s - 1.0);
        report.p1_violation = std::max(report.p1_violation, -s);
    }
    report.p1_violation = std::max(report.p1_violation, 0.0);
    report.p1_pass = report.p1_violation <= tol;

    // P2: symmetry holds structurally — at(u,v) and at(v,u) read the same cell.
    report.p2_violation = 0.0;
    report.p2_pass = true;

    Partition p = classes ? normalize(*classes) : classes_from_scores(m, tol);
    if (static_cast<int>(p.labels.size()) != n)
        throw std::invalid_argument("check_axioms: partition size does not match the matrix");

    // P3: same-class pairs score 1. P4: the score between two classes does not
    // depend on the chosen representatives, so per class pair max==min.
    std::map<std::pair<int, int>, std::pair<double, double>> cross;  // -> (min, max)
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const double s = m.at(u, v);
            const int cu = p.labels[u];
            const int cv = p.labels[v];
            if (cu == cv) report.p3_violation = std::max(report.p3_violation, std::fabs(1.0 - s));
            const auto key = std::minmax(cu, cv);
            const auto [it, fresh] = cross.emplace(key, std::make_pair(s, s));
            if (!fresh) {
                it->second.first = std::min(it->second.first, s);
                it->second.second = std::max(it->second.second, s);
            }
        }
    }
    for (const auto& [key, extremes] : cross)
        report.p4_violation = std::max(report.p4_violation, extremes.second - extremes.first);
    report.p3_pass = report.p3_violation <= tol;
    report.p4_pass = report.p4_violation <= tol;

    // P5: triangle inequality on d = 1 - s, cubic in n.
    if (n <= kTriangleCheckMaxNodes) {
        report.p5_checked = true;
        for (int a = 0; a < n; ++a) {
            for (int c = a + 1; c < n; ++c) {
                const double d_ac = 1.0 - m.at(a, c);
                for (int b = 0; b < n; ++b) {
                    if (b == a || b == c) continue;
                    const double detour = (1.0 - m.at(a, b)) + (1.0 - m.at(b, c));
                    report.p5_violation = std::max(report.p5_violation, d_ac - detour);
                }
            }
        }
        report.p5_pass = report.p5_violation <= tol;
    }
    return report;
}

std::vector<double> percentile_ranks(const std::vector<double>& scores) {
    if (scores.empty()) throw std::invalid_argument("percentile_ranks: no scores");
    const std::size_t n = scores.size();
    std::vector<std::size_t> by_score(n);
    std::iota(by_score.begin(), by_score.end(), std::size_t{0});
    std::sort(by_score.begin(), by_score.end(), [&scores](std::size_t a, std::size_t b) {
        return scores[a] != scores[b] ? scores[a] < scores[b] : a < b;
    });

    std::vector<double> ranks(n);
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && scores[by_score[j]] == scores[by_score[i]]) ++j;
        // Ties share the average of their 1-based positions.
        const double shared = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        for (std::size_t t = i; t < j; ++t) ranks[by_score[t]] = shared / static_cast<double>(n);
        i = j;
    }
    return ranks;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("pearson: length mismatch");
    if (x.empty()) throw std::invalid_argument("pearson: empty input");
    const double n = static_cast<double>(x.size());
    const double mean_x = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double mean_y = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mean_x;
        const double dy = y[i] - mean_y;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw std::invalid_argument("pearson: zero variance input");
    return sxy / std::sqrt(sxx * syy);
}

BlockRankReport within_block_avg_rank(const SimilarityMatrix& m, const Partition& blocks) {
    const int n = m.size();
    if (static_cast<int>(blocks.labels.size()) != n)
        throw std::invalid_argument("within_block_avg_rank: partition size does not match");

    const std::vector<double> ranks = percentile_ranks(m.data());

    BlockRankReport report;
    report.per_block.assign(blocks.k, std::numeric_limits<double>::quiet_NaN());
    std::vector<double> sums(blocks.k, 0.0);
    std::vector<std::size_t> counts(blocks.k, 0);
    double total = 0.0;

    std::size_t i = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, ++i) {
            if (blocks.labels[u] != blocks.labels[v]) continue;
            const int b = blocks.labels[u];
            sums[b] += ranks[i];
            ++counts[b];
            total += ranks[i];
            ++report.within_pairs;
        }
    }
    for (int b = 0; b < blocks.k; ++b)
        if (counts[b] > 0) report.per_block[b] = sums[b] / static_cast<double>(counts[b]);
    report.overall = report.within_pairs
                         ? total / static_cast<double>(report.within_pairs)
                         : 0.0;
    return report;
}

namespace {

bool better(const ScoredPair& a, const ScoredPair& b) {
    if (a.score != b.score) return a.score > b.score;
    return std::make_pair(a.u, a.v) < std::make_pair(b.u, b.v);
}

// Stream candidates through a bounded worst-at-front heap.
class TopK {
public:
    explicit TopK(std::size_t k) : k_(k) {}

    void offer(const ScoredPair& candidate) {
        if (k_ == 0) return;
        if (kept_.size() < k_) {
            kept_.push_back(candidate);
            std::push_heap(kept_.begin(), kept_.end(), better);
        } else if (better(candidate, kept_.front())) {
            std::pop_heap(kept_.begin(), kept_.end(), better);
            kept_.back() = candidate;
            std::push_heap(kept_.begin(), kept_.end(), better);
        }
    }

    std::vector<ScoredPair> take() {
        std::sort(kept_.begin(), kept_.end(), better);
        return std::move(kept_);
    }

private:
    std::size_t k_;
    std::vector<ScoredPair> kept_;
};

}  // namespace

std::vector<ScoredPair> topk_pairs(const SimilarityMatrix& m, std::size_t k) {
    const int n = m.size();
    TopK top(k);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) top.offer({u, v, m.at(u, v)});
    return top.take();
}

std::vector<ScoredPair> topk_pairs(const IcebergTable& table, std::size_t k) {
    TopK top(k);
    for (std::size_t i = 0; i < table.size(); ++i)
        top.offer({table.pairs()[i].first, table.pairs()[i].second, table.scores()[i]});
    return top.take();
}

}  // namespace rolesim
