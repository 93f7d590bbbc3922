#pragma once

#include "charpoly/rational.hpp"

#include <utility>
#include <vector>

namespace charpoly {

// An integer partition: weakly decreasing positive parts, e.g. {3,1,1}.
// The empty vector is the unique partition of 0.
using Partition = std::vector<int>;

// A permutation of {0,...,n-1} as the vector of images.
using Perm = std::vector<int>;

// All partitions of n in reverse-lexicographic order:
// (n), (n-1,1), ..., (1,...,1).  n=4 -> (4),(3,1),(2,2),(2,1,1),(1^4).
std::vector<Partition> partitions_of(int n);

// Partitions of n whose parts are all <= max_part, same order.
std::vector<Partition> partitions_of_max_part(int n, int max_part);

inline int partition_weight(const Partition& p) {
    int s = 0;
    for (int x : p) s += x;
    return s;
}

inline int partition_length(const Partition& p) { return static_cast<int>(p.size()); }

bool is_valid_partition(const Partition& p);

// z_lambda = prod_i i^{m_i} m_i!  (m_i = multiplicity of part i);
// the centralizer order of a permutation of cycle type lambda.
Int z_of(const Partition& p);

// (distinct part, multiplicity) pairs, parts in decreasing order.
std::vector<std::pair<int, int>> part_multiplicities(const Partition& p);

Partition conjugate(const Partition& p);

// Cycle type of a permutation (vector of images of 0..n-1), as a partition.
Partition cycle_type(const Perm& sigma);

Perm perm_identity(int n);
Perm perm_compose(const Perm& a, const Perm& b);  // (a*b)(i) = a[b[i]]
Perm perm_inverse(const Perm& a);

}  // namespace charpoly
