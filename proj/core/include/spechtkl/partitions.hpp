#pragma once

#include <vector>

#include "spechtkl/errors.hpp"

namespace skl {

// Composition of n: ordered list of positive parts.
using Composition = std::vector<int>;
// Partition: weakly decreasing composition.
using Partition = std::vector<int>;

inline int comp_sum(const Composition& c) {
    int s = 0;
    for (int p : c) s += p;
    return s;
}

inline bool is_composition_of(const Composition& c, int n) {
    if (c.empty()) return n == 0;
    for (int p : c)
        if (p <= 0) return false;
    return comp_sum(c) == n;
}

inline bool is_partition(const Composition& c) {
    for (size_t i = 0; i + 1 < c.size(); ++i)
        if (c[i] < c[i + 1]) return false;
    return c.empty() || c.back() > 0;
}

// All compositions of n, lexicographically by part sequence.
std::vector<Composition> compositions_of(int n);

// All partitions of n, in reverse lexicographic order ((n) first, (1^n) last).
std::vector<Partition> partitions_of(int n);

}  // namespace skl
