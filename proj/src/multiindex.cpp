#include "simplotope/multiindex.hpp"

#include <numeric>
#include <stdexcept>

namespace spt {

MultiIndex BlockedIndex::flattened() const {
  MultiIndex flat;
  for (const auto& b : blocks) flat.insert(flat.end(), b.begin(), b.end());
  return flat;
}

int BlockedIndex::norm() const {
  int s = 0;
  for (const auto& b : blocks) s += spt::norm(b);
  return s;
}

int norm(const MultiIndex& k) { return std::accumulate(k.begin(), k.end(), 0); }

MultiIndex bump(const MultiIndex& k, std::size_t j) {
  MultiIndex out = k;
  out.at(j) += 1;
  return out;
}

Integer factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative integer");
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Integer factorial(const MultiIndex& k) {
  Integer f = 1;
  for (int e : k) f *= factorial(e);
  return f;
}

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

std::vector<MultiIndex> enumerate_indices(int slots, int degree) {
  if (slots < 1) throw std::invalid_argument("enumerate_indices: slots must be >= 1");
  if (degree < 0) throw std::invalid_argument("enumerate_indices: negative degree");
  std::vector<MultiIndex> out;
  MultiIndex current(static_cast<std::size_t>(slots), 0);
  // Descending lexicographic: the leading slot takes the largest value first.
  auto recurse = [&](auto&& self, int slot, int remaining) -> void {
    if (slot == slots - 1) {
      current[slot] = remaining;
      out.push_back(current);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      current[slot] = v;
      self(self, slot + 1, remaining - v);
    }
  };
  recurse(recurse, 0, degree);
  return out;
}

std::vector<BlockedIndex> enumerate_blocked(const std::vector<int>& nu,
                                            const std::vector<int>& delta) {
  if (nu.size() != delta.size())
    throw std::invalid_argument("enumerate_blocked: nu and delta length mismatch");
  std::vector<std::vector<MultiIndex>> per_block;
  per_block.reserve(nu.size());
  for (std::size_t i = 0; i < nu.size(); ++i)
    per_block.push_back(enumerate_indices(nu[i] + 1, delta[i]));

  std::vector<BlockedIndex> out;
  BlockedIndex current;
  current.blocks.resize(nu.size());
  auto recurse = [&](auto&& self, std::size_t block) -> void {
    if (block == per_block.size()) {
      out.push_back(current);
      return;
    }
    for (const auto& k : per_block[block]) {
      current.blocks[block] = k;
      self(self, block + 1);
    }
  };
  recurse(recurse, 0);
  return out;
}

Rational multinomial(int degree, const MultiIndex& k) {
  for (int e : k)
    if (e < 0) throw std::invalid_argument("multinomial: negative index entry");
  if (norm(k) != degree)
    throw std::invalid_argument("multinomial: index norm does not match degree");
  return Rational(factorial(degree) / factorial(k));
}

BlockedIndex reblock(const MultiIndex& flat, const std::vector<int>& slots_per_block) {
  BlockedIndex out;
  std::size_t pos = 0;
  for (int slots : slots_per_block) {
    if (pos + slots > flat.size()) throw std::invalid_argument("reblock: slot counts exceed index length");
    out.blocks.emplace_back(flat.begin() + pos, flat.begin() + pos + slots);
    pos += slots;
  }
  if (pos != flat.size()) throw std::invalid_argument("reblock: slot counts do not cover index");
  return out;
}

}  // namespace spt
