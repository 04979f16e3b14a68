// partition.hpp — Node partition into equivalence classes.
//
// Shared by the generators (planted blocks), the equivalence machinery
// (structural classes, refinements, orbits) and the evaluation harness.
#pragma once

#include <cstddef>
#include <vector>

namespace rolesim {

// labels[v] is the class id of node v; class ids are 0..k-1, each non-empty.
struct Partition {
    std::vector<int> labels;
    int k = 0;

    int size() const { return static_cast<int>(labels.size()); }

    bool operator==(const Partition& o) const { return k == o.k && labels == o.labels; }
};

// Single class containing every node.
Partition all_one_partition(int n);

// Every node its own class.
Partition singleton_partition(int n);

// Canonical form: classes renumbered in order of their smallest member, so two
// partitions of the same node set are equal iff they group nodes identically.
Partition normalize(const Partition& p);

// True iff every class of `fine` is contained in a single class of `coarse`.
bool refines(const Partition& fine, const Partition& coarse);

// Class sizes indexed by class id.
std::vector<int> class_sizes(const Partition& p);

}  // namespace rolesim
