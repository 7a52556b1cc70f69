#pragma once

#include <utility>
#include <vector>

#include "spechtkl/partitions.hpp"
#include "spechtkl/permutation.hpp"

namespace skl {

struct StandardTableau {
    std::vector<std::vector<int>> rows;

    Partition shape() const;
    bool operator==(const StandardTableau& o) const { return rows == o.rows; }
    bool operator!=(const StandardTableau& o) const { return rows != o.rows; }
    bool operator<(const StandardTableau& o) const { return rows < o.rows; }
};

// Transpose of the Young diagram.
Partition conjugate(const Partition& lambda);

// Parts sorted weakly decreasing.
Partition sort_to_partition(const Composition& mu);

// Number of standard Young tableaux of the shape, by the hook length formula.
long long syt_count(const Partition& lambda);

// Row-insertion Robinson-Schensted: insert w(1),...,w(n) left to right.
// Returns (insertion tableau P, recording tableau Q).
std::pair<StandardTableau, StandardTableau> rsk(const Permutation& w);

// Irreducible character value chi^lambda at the given cycle type, by the
// Murnaghan-Nakayama border-strip recursion.
long long mn_character(const Partition& lambda, const Partition& cycle_type);

}  // namespace skl
