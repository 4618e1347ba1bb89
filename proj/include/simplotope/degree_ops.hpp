#pragma once

#include "simplotope/multiindex.hpp"
#include "simplotope/rational.hpp"

#include <map>
#include <stdexcept>

namespace spt {

/// Weight of source index `from` in the degree-raised coefficient at `to`,
/// where |to| = |from| + amount:  (d!/(d+amount)!) * to!/(to-from... )
/// Exposed for reuse by the symbolic condition assembly.
Rational raising_weight(const MultiIndex& to, const MultiIndex& mu, int degree_from, int amount);

/// Degree raising: expresses the coefficients of the same polynomial written
/// at degree `degree + amount` as combinations of the degree-`degree` ones.
/// Value-type generic; missing keys are treated as zero.
template <class V>
std::map<MultiIndex, V> raise_degree(const std::map<MultiIndex, V>& coeffs, int slots, int degree,
                                     int amount) {
  if (amount < 0) throw std::invalid_argument("raise_degree: negative amount");
  if (amount == 0) return coeffs;
  std::map<MultiIndex, V> out;
  for (const auto& target : enumerate_indices(slots, degree + amount)) {
    V acc{};
    bool any = false;
    for (const auto& mu : enumerate_indices(slots, amount)) {
      MultiIndex source(target.size());
      bool valid = true;
      for (std::size_t j = 0; j < target.size(); ++j) {
        source[j] = target[j] - mu[j];
        if (source[j] < 0) valid = false;
      }
      if (!valid) continue;
      auto it = coeffs.find(source);
      if (it == coeffs.end()) continue;
      acc += it->second * raising_weight(target, mu, degree, amount);
      any = true;
    }
    if (any) out[target] = std::move(acc);
  }
  return out;
}

/// One term weight of the degree-lowering expansion (pivot slot fixed, its
/// sigma entry zero). degree_out is the lowered degree d, the input lives at
/// d + amount.
Rational lowering_weight(const MultiIndex& kappa, const MultiIndex& sigma, int t, int degree_out,
                         int amount, int pivot);

/// Degree lowering: expresses the degree-`degree_out` coefficients of a
/// polynomial through its coefficients at degree `degree_out + amount`. Left
/// inverse of raise_degree; on inputs that are not raisings of anything it
/// yields the pivot-dependent linear extension.
template <class V>
std::map<MultiIndex, V> lower_degree(const std::map<MultiIndex, V>& coeffs, int slots,
                                     int degree_out, int amount, int pivot = 0) {
  if (amount < 0) throw std::invalid_argument("lower_degree: negative amount");
  if (pivot < 0 || pivot >= slots) throw std::invalid_argument("lower_degree: pivot out of range");
  if (amount == 0) return coeffs;
  std::map<MultiIndex, V> out;
  for (const auto& kappa : enumerate_indices(slots, degree_out)) {
    V acc{};
    bool any = false;
    const int t_max = degree_out - kappa[pivot];
    for (int t = 0; t <= t_max; ++t) {
      for (const auto& sigma_small : enumerate_indices(std::max(slots - 1, 1), t)) {
        MultiIndex sigma(slots, 0);
        if (slots == 1) {
          if (t != 0) continue;
        } else {
          std::size_t pos = 0;
          for (int j = 0; j < slots; ++j)
            if (j != pivot) sigma[j] = sigma_small[pos++];
        }
        MultiIndex source = kappa;
        bool valid = true;
        for (int j = 0; j < slots; ++j) {
          source[j] += (j == pivot) ? (t + amount) : -sigma[j];
          if (source[j] < 0) valid = false;
        }
        if (!valid) continue;
        auto it = coeffs.find(source);
        if (it == coeffs.end()) continue;
        acc += it->second * lowering_weight(kappa, sigma, t, degree_out, amount, pivot);
        any = true;
      }
    }
    if (any) out[kappa] = std::move(acc);
  }
  return out;
}

namespace detail {

template <class V, class Op>
std::map<BlockedIndex, V> per_block(const std::map<BlockedIndex, V>& coeffs, std::size_t block,
                                    Op&& op) {
  // Group on the other blocks, transform the selected block's sub-map.
  std::map<BlockedIndex, std::map<MultiIndex, V>> groups;
  for (const auto& [key, value] : coeffs) {
    BlockedIndex rest = key;
    rest.blocks[block].clear();
    groups[rest][key.blocks[block]] = value;
  }
  std::map<BlockedIndex, V> out;
  for (auto& [rest, sub] : groups) {
    for (auto& [part, value] : op(sub)) {
      BlockedIndex key = rest;
      key.blocks[block] = part;
      out[std::move(key)] = std::move(value);
    }
  }
  return out;
}

}  // namespace detail

/// Degree raising within one block of a product-domain coefficient map.
template <class V>
std::map<BlockedIndex, V> raise_block_degree(const std::map<BlockedIndex, V>& coeffs,
                                             std::size_t block, int block_slots, int block_degree,
                                             int amount) {
  return detail::per_block(coeffs, block, [&](const std::map<MultiIndex, V>& sub) {
    return raise_degree(sub, block_slots, block_degree, amount);
  });
}

/// Degree lowering within one block.
template <class V>
std::map<BlockedIndex, V> lower_block_degree(const std::map<BlockedIndex, V>& coeffs,
                                             std::size_t block, int block_slots,
                                             int degree_out, int amount, int pivot = 0) {
  return detail::per_block(coeffs, block, [&](const std::map<MultiIndex, V>& sub) {
    return lower_degree(sub, block_slots, degree_out, amount, pivot);
  });
}

/// Convenience wrappers for complete numeric maps (shape read off the keys).

std::map<MultiIndex, Rational> raise_degree(const std::map<MultiIndex, Rational>& coeffs,
                                            int amount);

std::map<MultiIndex, Rational> lower_degree(const std::map<MultiIndex, Rational>& coeffs,
                                            int amount, int pivot = 0);

/// Independent route: solves raise(x, amount) = coeffs by exact elimination.
/// Throws when the input is not the raising of any lower-degree map.
std::map<MultiIndex, Rational> lower_degree_by_solve(const std::map<MultiIndex, Rational>& coeffs,
                                                     int amount);

std::map<BlockedIndex, Rational> raise_block_degree(const std::map<BlockedIndex, Rational>& coeffs,
                                                    std::size_t block, int amount);

std::map<BlockedIndex, Rational> lower_block_degree(const std::map<BlockedIndex, Rational>& coeffs,
                                                    std::size_t block, int amount, int pivot = 0);

}  // namespace spt
