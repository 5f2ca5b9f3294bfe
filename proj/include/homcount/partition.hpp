#pragma once

#include <string>
#include <vector>

#include "homcount/numeric.hpp"

namespace homcount {

// Cycle type / Young diagram: weakly decreasing positive parts.
struct Partition {
    std::vector<int> parts;

    int n() const {
        int s = 0;
        for (int p : parts) s += p;
        return s;
    }

    bool operator==(const Partition& rhs) const { return parts == rhs.parts; }
    bool operator<(const Partition& rhs) const { return parts < rhs.parts; }

    std::string to_string() const;  // "(3,1)"
};

// All partitions of n in reverse lexicographic order, the canonical order for
// every character-table row and column in this library: (n) first, (1^n) last.
std::vector<Partition> partitions(int n);

// Index of mu in partitions(mu.n()) order.
int partition_index(const std::vector<Partition>& list, const Partition& mu);

// z_mu = prod over part sizes i of i^{m_i} * m_i!; the centralizer order of a
// permutation of cycle type mu.
Int z_factor(const Partition& mu);

// n!/z_mu, the size of the conjugacy class with cycle type mu.
Int symmetric_class_size(const Partition& mu);

// Cycle type of x^m for x of cycle type mu: an l-cycle contributes gcd(l,|m|)
// cycles of length l/gcd(l,|m|); m = 0 lands on the identity type.
Partition power_cycle_type(const Partition& mu, long long m);

Partition conjugate_partition(const Partition& lambda);

// Cycle type of a permutation given as an image table (entry i = image of i).
Partition permutation_cycle_type(const std::vector<int>& images);

}  // namespace homcount
