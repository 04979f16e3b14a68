// equivalence.cpp — Structural classes, spectrum refinement, brute-force orbits.
#include "rolesim/equivalence.hpp"

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace rolesim {

namespace {

// Neighbor spectrum of one node under the current labels. Counted mode keeps
// a sorted (class, count) run-length list; Binary mode a sorted unique set.
// Both are flattened to ints so signatures can be map keys.
std::vector<int> spectrum(const Graph& g, const std::vector<int>& labels, int node,
                          SpectrumMode mode) {
    std::vector<int> classes;
    classes.reserve(g.neighbors(node).size());
    for (int w : g.neighbors(node)) classes.push_back(labels[w]);
    std::sort(classes.begin(), classes.end());

    std::vector<int> sig;
    for (std::size_t i = 0; i < classes.size();) {
        std::size_t j = i;
        while (j < classes.size() && classes[j] == classes[i]) ++j;
        sig.push_back(classes[i]);
        if (mode == SpectrumMode::Counted) sig.push_back(static_cast<int>(j - i));
        i = j;
    }
    return sig;
}

}  // namespace

Partition structural_classes(const Graph& g) {
    const int n = g.num_nodes();
    std::map<std::vector<int>, int> seen;
    Partition p;
    p.labels.resize(n);
    for (int v = 0; v < n; ++v) {
        const auto [it, inserted] = seen.emplace(g.neighbors(v), static_cast<int>(seen.size()));
        p.labels[v] = it->second;
        (void)inserted;
    }
    p.k = static_cast<int>(seen.size());
    return normalize(p);
}

Partition refine_partition(const Graph& g, const Partition& seed, SpectrumMode mode) {
    const int n = g.num_nodes();
    if (static_cast<int>(seed.labels.size()) != n)
        throw std::invalid_argument("refine_partition: seed size does not match the graph");

    Partition cur = normalize(seed);
    for (int round = 0; round < n + 1; ++round) {
        // Split each class by the members' spectra. Keying on (class, spectrum)
        // can only subdivide, so the result always refines the seed.
        std::map<std::vector<int>, int> seen;
        Partition next;
        next.labels.resize(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> sig = spectrum(g, cur.labels, v, mode);
            sig.insert(sig.begin(), cur.labels[v]);
            const auto it = seen.emplace(std::move(sig), static_cast<int>(seen.size())).first;
            next.labels[v] = it->second;
        }
        next.k = static_cast<int>(seen.size());
        next = normalize(next);
        if (next == cur) break;
        cur = std::move(next);
    }
    return cur;
}

bool is_equitable(const Graph& g, const Partition& p) {
    const int n = g.num_nodes();
    if (static_cast<int>(p.labels.size()) != n)
        throw std::invalid_argument("is_equitable: partition size does not match the graph");
    std::vector<std::vector<int>> reference(p.k);
    std::vector<bool> have(p.k, false);
    for (int v = 0; v < n; ++v) {
        std::vector<int> sig = spectrum(g, p.labels, v, SpectrumMode::Counted);
        const int c = p.labels[v];
        if (!have[c]) {
            reference[c] = std::move(sig);
            have[c] = true;
        } else if (sig != reference[c]) {
            return false;
        }
    }
    return true;
}

bool is_regular(const Graph& g, const Partition& p) {
    const int n = g.num_nodes();
    if (static_cast<int>(p.labels.size()) != n)
        throw std::invalid_argument("is_regular: partition size does not match the graph");
    std::vector<std::vector<int>> reference(p.k);
    std::vector<bool> have(p.k, false);
    for (int v = 0; v < n; ++v) {
        std::vector<int> sig = spectrum(g, p.labels, v, SpectrumMode::Binary);
        const int c = p.labels[v];
        if (!have[c]) {
            reference[c] = std::move(sig);
            have[c] = true;
        } else if (sig != reference[c]) {
            return false;
        }
    }
    return true;
}

namespace {

struct OrbitSearch {
    int n = 0;
    std::vector<std::uint64_t> adj;              // adjacency bitmask per node
    std::vector<std::vector<int>> candidates;    // image candidates per node
    std::vector<int> order;                      // assignment order
    std::vector<int> image;                      // partial permutation, -1 = unset
    std::uint64_t used = 0;                      // images already taken
    std::vector<int> parent;                     // union-find over orbits

    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }

    void search(std::size_t pos) {
        if (pos == order.size()) {
            for (int v = 0; v < n; ++v) unite(v, image[v]);
            return;
        }
        const int v = order[pos];
        for (int c : candidates[v]) {
            if (used & (std::uint64_t{1} << c)) continue;
            // The image must preserve adjacency against everything mapped so far.
            bool ok = true;
            for (std::size_t prior = 0; prior < pos && ok; ++prior) {
                const int w = order[prior];
                const bool edge = (adj[v] >> w) & 1;
                const bool mapped_edge = (adj[c] >> image[w]) & 1;
                ok = edge == mapped_edge;
            }
            if (!ok) continue;
            image[v] = c;
            used |= std::uint64_t{1} << c;
            search(pos + 1);
            used &= ~(std::uint64_t{1} << c);
            image[v] = -1;
        }
    }
};

}  // namespace

Partition automorphism_orbits_bruteforce(const Graph& g, int cap) {
    const int n = g.num_nodes();
    if (n > cap)
        throw std::invalid_argument(
            "orbit enumeration is factorial in the node count; n=" + std::to_string(n) +
            " exceeds the cap of " + std::to_string(cap) +
            " (raise the cap for small graphs, or use refine_partition for a "
            "necessary-condition partition that scales)");
    if (n > 62)
        throw std::invalid_argument("orbit enumeration supports at most 62 nodes");
    if (n > 14)
        std::cerr << "warning: enumerating automorphisms of " << n
                  << " nodes may take a very long time\n";

    OrbitSearch s;
    s.n = n;
    s.adj.assign(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) s.adj[v] |= std::uint64_t{1} << w;

    // Candidate images must share degree and neighbor-degree multiset; both
    // are automorphism invariants, and they prune most of the factorial tree.
    s.candidates.resize(n);
    for (int v = 0; v < n; ++v)
        for (int c = 0; c < n; ++c)
            if (g.degree(v) == g.degree(c) && g.neighbor_degrees(v) == g.neighbor_degrees(c))
                s.candidates[v].push_back(c);

    // Assign the most constrained nodes first.
    s.order.resize(n);
    std::iota(s.order.begin(), s.order.end(), 0);
    std::sort(s.order.begin(), s.order.end(), [&s](int a, int b) {
        const std::size_t ca = s.candidates[a].size(), cb = s.candidates[b].size();
        return ca != cb ? ca < cb : a < b;
    });

    s.image.assign(n, -1);
    s.parent.resize(n);
    std::iota(s.parent.begin(), s.parent.end(), 0);
    s.search(0);

    Partition p;
    p.labels.resize(n);
    for (int v = 0; v < n; ++v) p.labels[v] = s.find(v);
    std::vector<int> remap(n, -1);
    int next_class = 0;
    for (int v = 0; v < n; ++v) {
        if (remap[p.labels[v]] == -1) remap[p.labels[v]] = next_class++;
        p.labels[v] = remap[p.labels[v]];
    }
    p.k = next_class;
    return p;
}

SimilarityMatrix indicator_matrix(const Partition& p) {
    const int n = static_cast<int>(p.labels.size());
    SimilarityMatrix m(n, 0.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (p.labels[u] == p.labels[v]) m.set(u, v, 1.0);
    return m;
}

}  // namespace rolesim
