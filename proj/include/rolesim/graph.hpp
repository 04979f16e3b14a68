// graph.hpp — Undirected simple graph: construction, parsing, generators, k-shell.
//
// Nodes carry compact ids 0..n-1. Adjacency lists are sorted by neighbor id and a
// per-node list of neighbor degrees (ascending) is precomputed; the threshold
// pruning rules need both. A Graph is immutable once built and safe for
// concurrent reads.
#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "rolesim/partition.hpp"
#include "rolesim/rng.hpp"

namespace rolesim {

class Graph {
public:
    Graph() = default;

    // Build from an edge list over compact ids. Self-loops and duplicates are
    // dropped silently here (the parser counts them before calling this).
    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

    int num_nodes() const { return static_cast<int>(adj_.size()); }
    std::size_t num_edges() const { return num_edges_; }

    int degree(int u) const { return static_cast<int>(adj_[u].size()); }
    const std::vector<int>& neighbors(int u) const { return adj_[u]; }

    // Degrees of u's neighbors, sorted ascending.
    const std::vector<int>& neighbor_degrees(int u) const { return nbr_degs_[u]; }

    bool has_edge(int u, int v) const;

    // Original node labels (identity for generated graphs, parsed labels for
    // graphs read from edge lists). labels()[compact_id] = original label.
    const std::vector<std::int64_t>& labels() const { return labels_; }
    void set_labels(std::vector<std::int64_t> labels);

    // Throws std::logic_error if any structural invariant (sorted adjacency,
    // symmetry, no self-loops, no duplicates) is broken. Used by tests and
    // asserted on generator output.
    void check_invariants() const;

private:
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> nbr_degs_;
    std::vector<std::int64_t> labels_;
    std::size_t num_edges_ = 0;
};

// --- Edge-list format -------------------------------------------------------
//
// One edge per line: two whitespace-separated nonnegative integer labels.
// Lines starting with '#' and blank lines are ignored. Labels are compacted to
// 0..n-1 in ascending label order (line-order independent), so serialize→parse
// round-trips to an identical graph.

struct ParseStats {
    std::size_t duplicate_edges = 0;
    std::size_t self_loops = 0;
};

// Throws std::runtime_error on malformed lines (message carries the line
// number) and on input containing no edges.
Graph parse_edge_list(std::istream& in, ParseStats* stats = nullptr);
Graph load_edge_list(const std::string& path, ParseStats* stats = nullptr);

// Writes "label_u label_v" per edge, ascending. save_edge_list additionally
// writes a sidecar "<path>.ids.csv" mapping original label -> compact id.
void write_edge_list(const Graph& g, std::ostream& out);
void write_id_map(const Graph& g, std::ostream& out);
void save_edge_list(const Graph& g, const std::string& path);

// --- Generators -------------------------------------------------------------

// Planted block model: node u in block i and v in block j are linked
// independently with probability probs[i][j]. probs must be symmetric k×k.
struct BlockSpec {
    std::vector<int> sizes;
    std::vector<std::vector<double>> probs;
    std::uint64_t seed = 0;
};

// Deterministic for a given spec. Returns the graph and, optionally, the
// planted block partition.
Graph generate_block_model(const BlockSpec& spec, Partition* planted = nullptr);

// Preferential attachment: start from a clique on m+1 nodes, then each new
// node attaches to m distinct existing nodes chosen proportionally to degree.
// Requires n > m >= 1. Deterministic for a given seed.
Graph generate_scale_free(int n, int m, std::uint64_t seed);

// --- K-shell ----------------------------------------------------------------

// Core number of every node: the largest k such that the node survives
// iterative removal of nodes with residual degree < k. Bucket peeling, O(|E|).
std::vector<int> k_shell_decomposition(const Graph& g);

}  // namespace rolesim
