#pragma once

#include "simplotope/rational.hpp"

#include <compare>
#include <vector>

namespace spt {

/// Tuple of non-negative integers indexing Bernstein coefficients.
using MultiIndex = std::vector<int>;

/// One MultiIndex per factor of a product domain; block i has nu_i + 1 entries
/// and sums to the block degree when attached to a coefficient net.
struct BlockedIndex {
  std::vector<MultiIndex> blocks;

  auto operator<=>(const BlockedIndex&) const = default;

  MultiIndex flattened() const;
  int norm() const;
};

int norm(const MultiIndex& k);

/// k + e_j
MultiIndex bump(const MultiIndex& k, std::size_t j);

Integer factorial(int n);

/// k! = k_0! k_1! ... k_n!
Integer factorial(const MultiIndex& k);

Integer binomial(int n, int k);

/// All length-`slots` multi-indices of 1-norm `degree`, in descending
/// lexicographic order: (d,0,...,0) first, (0,...,0,d) last.
std::vector<MultiIndex> enumerate_indices(int slots, int degree);

/// Cartesian product of per-block enumerations; the first block varies slowest.
/// Block i has nu[i] + 1 slots and norm delta[i].
std::vector<BlockedIndex> enumerate_blocked(const std::vector<int>& nu,
                                            const std::vector<int>& delta);

/// d!/k!, defined for |k| = d. Integer-valued; returned as an exact rational so
/// it composes directly with coefficient arithmetic.
Rational multinomial(int degree, const MultiIndex& k);

/// Splits a flat index into blocks of the given slot counts.
BlockedIndex reblock(const MultiIndex& flat, const std::vector<int>& slots_per_block);

}  // namespace spt
