// fixtures.hpp — Shared test graphs and partition helpers.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rolesim/graph.hpp"
#include "rolesim/partition.hpp"
#include "rolesim/rng.hpp"

namespace fixtures {

// Three-household family graph: the adults S1/J1/L1 are siblings (a triangle),
// each married to S2/J2/L2; each couple's children connect to both parents —
// two Smith kids, two Jones kids, three Lee kids. 13 nodes, 20 edges.
inline constexpr int kS1 = 0, kJ1 = 1, kL1 = 2;
inline constexpr int kS2 = 3, kJ2 = 4, kL2 = 5;
inline constexpr int kS3 = 6, kS4 = 7, kJ3 = 8, kJ4 = 9;
inline constexpr int kL3 = 10, kL4 = 11, kL5 = 12;

inline rolesim::Graph family_graph() {
    return rolesim::Graph::from_edges(
        13, {
                {kS1, kJ1}, {kS1, kL1}, {kJ1, kL1},              // sibling triangle
                {kS1, kS2}, {kJ1, kJ2}, {kL1, kL2},              // spouses
                {kS1, kS3}, {kS2, kS3}, {kS1, kS4}, {kS2, kS4},  // Smith children
                {kJ1, kJ3}, {kJ2, kJ3}, {kJ1, kJ4}, {kJ2, kJ4},  // Jones children
                {kL1, kL3}, {kL2, kL3}, {kL1, kL4}, {kL2, kL4},  // Lee children
                {kL1, kL5}, {kL2, kL5},
            });
}

// The eleven unordered orbit pairs of the family graph: {S1,J1}, {S2,J2},
// the four interchangeable Smith/Jones children, and the three Lee children.
inline std::vector<std::pair<int, int>> family_orbit_pairs() {
    return {{kS1, kJ1}, {kS2, kJ2}, {kS3, kS4}, {kS3, kJ3}, {kS3, kJ4}, {kS4, kJ3},
            {kS4, kJ4}, {kJ3, kJ4}, {kL3, kL4}, {kL3, kL5}, {kL4, kL5}};
}

// Build a partition from explicit groups; nodes not listed become singletons.
inline rolesim::Partition classes_of(int n, const std::vector<std::vector<int>>& groups) {
    rolesim::Partition p;
    p.labels.assign(n, -1);
    int next = 0;
    for (const auto& group : groups) {
        for (const int v : group) {
            if (p.labels[v] != -1) throw std::logic_error("classes_of: node listed twice");
            p.labels[v] = next;
        }
        ++next;
    }
    for (int v = 0; v < n; ++v)
        if (p.labels[v] == -1) p.labels[v] = next++;
    p.k = next;
    return rolesim::normalize(p);
}

inline rolesim::Partition family_orbits() {
    return classes_of(13, {{kS1, kJ1}, {kS2, kJ2}, {kS3, kS4, kJ3, kJ4}, {kL3, kL4, kL5}});
}

inline rolesim::Partition family_structural() {
    return classes_of(13, {{kS3, kS4}, {kJ3, kJ4}, {kL3, kL4, kL5}});
}

inline rolesim::Partition family_regular() {
    return classes_of(13, {{kS1, kJ1, kL1}, {kS2, kJ2, kL2}, {kS3, kS4, kJ3, kJ4, kL3, kL4, kL5}});
}

inline rolesim::Graph path3() { return rolesim::Graph::from_edges(3, {{0, 1}, {1, 2}}); }

inline rolesim::Graph k2() { return rolesim::Graph::from_edges(2, {{0, 1}}); }

inline rolesim::Graph triangle() { return rolesim::Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}}); }

inline rolesim::Graph cycle4() {
    return rolesim::Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

// Hub 0 with three leaves.
inline rolesim::Graph star4() { return rolesim::Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}}); }

// Nodes 0 and 1 share three exclusive common neighbors 2, 3, 4.
inline rolesim::Graph shared_neighbors() {
    return rolesim::Graph::from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
}

// Erdos-Renyi G(n, p); may contain isolated nodes.
inline rolesim::Graph random_graph(int n, double p, std::uint64_t seed) {
    rolesim::Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.uniform() < p) edges.emplace_back(u, v);
    return rolesim::Graph::from_edges(n, std::move(edges));
}

}  // namespace fixtures
