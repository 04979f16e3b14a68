#include "rolesim/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace rolesim {

Partition all_one_partition(int n) {
    Partition p;
    p.labels.assign(n, 0);
    p.k = n > 0 ? 1 : 0;
    return p;
}

Partition singleton_partition(int n) {
    Partition p;
    p.labels.resize(n);
    for (int v = 0; v < n; ++v) p.labels[v] = v;
    p.k = n;
    return p;
}

Partition normalize(const Partition& p) {
    Partition out;
    out.labels.assign(p.labels.size(), -1);
    std::vector<int> remap(p.k, -1);
    int next = 0;
    for (std::size_t v = 0; v < p.labels.size(); ++v) {
        const int c = p.labels[v];
        if (c < 0 || c >= p.k) throw std::invalid_argument("partition has out-of-range class id");
        if (remap[c] == -1) remap[c] = next++;
        out.labels[v] = remap[c];
    }
    out.k = next;
    return out;
}

bool refines(const Partition& fine, const Partition& coarse) {
    if (fine.labels.size() != coarse.labels.size()) return false;
    // Each fine class must land in exactly one coarse class.
    std::vector<int> image(fine.k, -1);
    for (std::size_t v = 0; v < fine.labels.size(); ++v) {
        int& img = image[fine.labels[v]];
        if (img == -1) {
            img = coarse.labels[v];
        } else if (img != coarse.labels[v]) {
            return false;
        }
    }
    return true;
}

std::vector<int> class_sizes(const Partition& p) {
    std::vector<int> sizes(p.k, 0);
    for (int c : p.labels) ++sizes[c];
    return sizes;
}

}  // namespace rolesim
