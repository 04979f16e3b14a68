#include "rolesim/graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace rolesim {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    Graph g;
    g.adj_.assign(n, {});
    for (auto& e : edges) {
        if (e.first == e.second) continue;
        if (e.first > e.second) std::swap(e.first, e.second);
        if (e.first < 0 || e.second >= n) throw std::invalid_argument("edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (const auto& [u, v] : edges) {
        if (u == v) continue;
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
        ++g.num_edges_;
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());

    g.nbr_degs_.assign(n, {});
    for (int u = 0; u < n; ++u) {
        g.nbr_degs_[u].reserve(g.adj_[u].size());
        for (int v : g.adj_[u]) g.nbr_degs_[u].push_back(g.degree(v));
        std::sort(g.nbr_degs_[u].begin(), g.nbr_degs_[u].end());
    }

    g.labels_.resize(n);
    for (int u = 0; u < n; ++u) g.labels_[u] = u;
    return g;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

void Graph::set_labels(std::vector<std::int64_t> labels) {
    if (static_cast<int>(labels.size()) != num_nodes()) {
        throw std::invalid_argument("label vector size does not match node count");
    }
    labels_ = std::move(labels);
}

void Graph::check_invariants() const {
    std::size_t directed = 0;
    for (int u = 0; u < num_nodes(); ++u) {
        const auto& nbrs = adj_[u];
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            const int v = nbrs[i];
            if (v == u) throw std::logic_error("self-loop stored in adjacency");
            if (v < 0 || v >= num_nodes()) throw std::logic_error("neighbor id out of range");
            if (i > 0 && nbrs[i - 1] >= v) throw std::logic_error("adjacency not sorted/unique");
            if (!has_edge(v, u)) throw std::logic_error("asymmetric adjacency");
        }
        directed += nbrs.size();

        std::vector<int> degs;
        degs.reserve(nbrs.size());
        for (int v : nbrs) degs.push_back(degree(v));
        std::sort(degs.begin(), degs.end());
        if (degs != nbr_degs_[u]) throw std::logic_error("stale neighbor-degree list");
    }
    if (directed != 2 * num_edges_) throw std::logic_error("edge count mismatch");
}

// --- Edge-list parsing ------------------------------------------------------

Graph parse_edge_list(std::istream& in, ParseStats* stats) {
    std::vector<std::pair<std::int64_t, std::int64_t>> raw;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::int64_t a = 0, b = 0;
        if (!(ls >> a >> b) || a < 0 || b < 0) {
            throw std::runtime_error("edge list line " + std::to_string(line_no) +
                                     ": expected two nonnegative integer labels, got \"" + line + "\"");
        }
        std::string rest;
        if (ls >> rest) {
            throw std::runtime_error("edge list line " + std::to_string(line_no) +
                                     ": trailing content \"" + rest + "\"");
        }
        raw.emplace_back(a, b);
    }
    if (raw.empty()) throw std::runtime_error("edge list contains no edges");

    // Compact ids in ascending label order: line order never changes the graph.
    std::vector<std::int64_t> labels;
    labels.reserve(raw.size() * 2);
    for (const auto& [a, b] : raw) {
        labels.push_back(a);
        labels.push_back(b);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    auto id_of = [&](std::int64_t label) {
        return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), label) -
                                labels.begin());
    };

    ParseStats local;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(raw.size());
    for (const auto& [a, b] : raw) {
        if (a == b) {
            ++local.self_loops;
            continue;
        }
        int u = id_of(a), v = id_of(b);
        if (u > v) std::swap(u, v);
        edges.emplace_back(u, v);
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (edges[i] == edges[i - 1]) ++local.duplicate_edges;
    }
    if (stats) *stats = local;

    Graph g = Graph::from_edges(static_cast<int>(labels.size()), std::move(edges));
    g.set_labels(std::move(labels));
    return g;
}

Graph load_edge_list(const std::string& path, ParseStats* stats) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list: " + path);
    return parse_edge_list(in, stats);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    const auto& labels = g.labels();
    for (int u = 0; u < g.num_nodes(); ++u) {
        for (int v : g.neighbors(u)) {
            if (v > u) out << labels[u] << ' ' << labels[v] << '\n';
        }
    }
}

void write_id_map(const Graph& g, std::ostream& out) {
    out << "label,id\n";
    const auto& labels = g.labels();
    for (int u = 0; u < g.num_nodes(); ++u) out << labels[u] << ',' << u << '\n';
}

void save_edge_list(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write edge list: " + path);
    write_edge_list(g, out);
    std::ofstream ids(path + ".ids.csv");
    if (!ids) throw std::runtime_error("cannot write id map: " + path + ".ids.csv");
    write_id_map(g, ids);
}

// --- Generators -------------------------------------------------------------

Graph generate_block_model(const BlockSpec& spec, Partition* planted) {
    const int k = static_cast<int>(spec.sizes.size());
    if (k == 0) throw std::invalid_argument("block model needs at least one block");
    if (static_cast<int>(spec.probs.size()) != k) {
        throw std::invalid_argument("probability matrix must be k x k");
    }
    for (int i = 0; i < k; ++i) {
        if (static_cast<int>(spec.probs[i].size()) != k) {
            throw std::invalid_argument("probability matrix must be k x k");
        }
        for (int j = 0; j < k; ++j) {
            const double p = spec.probs[i][j];
            if (p < 0.0 || p > 1.0) throw std::invalid_argument("link probability outside [0,1]");
            if (spec.probs[i][j] != spec.probs[j][i]) {
                throw std::invalid_argument("probability matrix must be symmetric");
            }
        }
    }

    int n = 0;
    std::vector<int> block_of;
    for (int i = 0; i < k; ++i) {
        if (spec.sizes[i] <= 0) throw std::invalid_argument("block sizes must be positive");
        n += spec.sizes[i];
        block_of.insert(block_of.end(), spec.sizes[i], i);
    }

    Rng rng(spec.seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            // One draw per pair in a fixed order keeps the output a pure
            // function of the seed.
            if (rng.uniform() < spec.probs[block_of[u]][block_of[v]]) edges.emplace_back(u, v);
        }
    }

    if (planted) {
        planted->labels = block_of;
        planted->k = k;
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph generate_scale_free(int n, int m, std::uint64_t seed) {
    if (m < 1) throw std::invalid_argument("scale-free generator needs m >= 1");
    if (n <= m) throw std::invalid_argument("scale-free generator needs n > m");

    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    // Each edge contributes both endpoints; sampling an element uniformly from
    // this list is degree-proportional selection.
    std::vector<int> endpoints;

    const int seed_size = std::min(m + 1, n);
    for (int u = 0; u < seed_size; ++u) {
        for (int v = u + 1; v < seed_size; ++v) {
            edges.emplace_back(u, v);
            endpoints.push_back(u);
            endpoints.push_back(v);
        }
    }

    std::vector<int> chosen;
    for (int u = seed_size; u < n; ++u) {
        chosen.clear();
        while (static_cast<int>(chosen.size()) < m) {
            const int t = endpoints[rng.below(endpoints.size())];
            if (std::find(chosen.begin(), chosen.end(), t) == chosen.end()) chosen.push_back(t);
        }
        for (int t : chosen) {
            edges.emplace_back(t, u);
            endpoints.push_back(t);
            endpoints.push_back(u);
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

// --- K-shell ----------------------------------------------------------------

std::vector<int> k_shell_decomposition(const Graph& g) {
    const int n = g.num_nodes();
    std::vector<int> deg(n), core(n, 0);
    int max_deg = 0;
    for (int u = 0; u < n; ++u) {
        deg[u] = g.degree(u);
        max_deg = std::max(max_deg, deg[u]);
    }

    // Bucket sort nodes by residual degree, then peel in ascending order,
    // moving neighbors down a bucket as their residual degree drops.
    std::vector<int> bucket_start(max_deg + 2, 0);
    for (int u = 0; u < n; ++u) ++bucket_start[deg[u] + 1];
    for (int d = 1; d <= max_deg + 1; ++d) bucket_start[d] += bucket_start[d - 1];

    std::vector<int> order(n), pos(n);
    {
        std::vector<int> fill(bucket_start.begin(), bucket_start.end() - 1);
        for (int u = 0; u < n; ++u) {
            pos[u] = fill[deg[u]]++;
            order[pos[u]] = u;
        }
    }

    for (int i = 0; i < n; ++i) {
        const int u = order[i];
        core[u] = deg[u];
        for (int v : g.neighbors(u)) {
            if (deg[v] > deg[u]) {
                // Swap v with the first node of its bucket, then shrink the bucket.
                const int dv = deg[v];
                const int head_pos = bucket_start[dv];
                const int head = order[head_pos];
                if (head != v) {
                    std::swap(order[pos[v]], order[head_pos]);
                    std::swap(pos[v], pos[head]);
                }
                ++bucket_start[dv];
                --deg[v];
            }
        }
    }
    return core;
}

}  // namespace rolesim
