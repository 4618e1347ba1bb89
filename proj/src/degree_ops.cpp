#include "simplotope/degree_ops.hpp"

#include "simplotope/linalg.hpp"

namespace spt {

Rational raising_weight(const MultiIndex& to, const MultiIndex& mu, int degree_from, int amount) {
  Integer num = 1;
  for (std::size_t j = 0; j < to.size(); ++j)
    num *= factorial(to[j]) / factorial(to[j] - mu[j]);
  return Rational(factorial(degree_from) * num, factorial(degree_from + amount));
}

Rational lowering_weight(const MultiIndex& kappa, const MultiIndex& sigma, int t, int degree_out,
                         int amount, int pivot) {
  // (-1)^t (t!/sigma!) C(amount-1+t, t) * (d+amount)!/(kappa+rho)! * kappa!/d!
  // with rho = -sigma except rho_pivot = t + amount.
  MultiIndex source = kappa;
  for (std::size_t j = 0; j < kappa.size(); ++j) source[j] -= sigma[j];
  source[pivot] += t + amount;
  Rational w(factorial(t), factorial(sigma));
  w *= Rational(factorial(amount - 1 + t), factorial(amount - 1) * factorial(t));
  w *= Rational(factorial(degree_out + amount), factorial(source));
  w *= Rational(factorial(kappa), factorial(degree_out));
  if (t % 2 == 1) w = -w;
  return w;
}

namespace {

int degree_of(const std::map<MultiIndex, Rational>& coeffs, const char* what) {
  if (coeffs.empty()) throw std::invalid_argument(std::string(what) + ": empty coefficient map");
  return norm(coeffs.begin()->first);
}

}  // namespace

std::map<MultiIndex, Rational> raise_degree(const std::map<MultiIndex, Rational>& coeffs,
                                            int amount) {
  const int slots = static_cast<int>(coeffs.begin()->first.size());
  return raise_degree(coeffs, slots, degree_of(coeffs, "raise_degree"), amount);
}

std::map<MultiIndex, Rational> lower_degree(const std::map<MultiIndex, Rational>& coeffs,
                                            int amount, int pivot) {
  const int slots = static_cast<int>(coeffs.begin()->first.size());
  return lower_degree(coeffs, slots, degree_of(coeffs, "lower_degree") - amount, amount, pivot);
}

std::map<MultiIndex, Rational> lower_degree_by_solve(const std::map<MultiIndex, Rational>& coeffs,
                                                     int amount) {
  if (amount == 0) return coeffs;
  const int slots = static_cast<int>(coeffs.begin()->first.size());
  const int high = degree_of(coeffs, "lower_degree_by_solve");
  const int low = high - amount;
  if (low < 0) throw std::invalid_argument("lower_degree_by_solve: amount exceeds degree");
  const auto high_keys = enumerate_indices(slots, high);
  const auto low_keys = enumerate_indices(slots, low);

  Matrix a(high_keys.size(), low_keys.size());
  Point b(high_keys.size());
  for (std::size_t r = 0; r < high_keys.size(); ++r) {
    for (std::size_t c = 0; c < low_keys.size(); ++c) {
      MultiIndex mu(high_keys[r].size());
      bool valid = true;
      for (std::size_t j = 0; j < mu.size(); ++j) {
        mu[j] = high_keys[r][j] - low_keys[c][j];
        if (mu[j] < 0) valid = false;
      }
      if (valid) a.at(r, c) = raising_weight(high_keys[r], mu, low, amount);
    }
    auto it = coeffs.find(high_keys[r]);
    b[r] = it == coeffs.end() ? Rational(0) : it->second;
  }
  auto solution = solve_unique(a, b);
  if (!solution)
    throw std::invalid_argument("lower_degree_by_solve: input is not a raised coefficient map");
  std::map<MultiIndex, Rational> out;
  for (std::size_t c = 0; c < low_keys.size(); ++c) out[low_keys[c]] = (*solution)[c];
  return out;
}

namespace {

std::pair<int, int> block_shape(const std::map<BlockedIndex, Rational>& coeffs, std::size_t block,
                                const char* what) {
  if (coeffs.empty()) throw std::invalid_argument(std::string(what) + ": empty coefficient map");
  const MultiIndex& part = coeffs.begin()->first.blocks.at(block);
  return {static_cast<int>(part.size()), norm(part)};
}

}  // namespace

std::map<BlockedIndex, Rational> raise_block_degree(const std::map<BlockedIndex, Rational>& coeffs,
                                                    std::size_t block, int amount) {
  auto [slots, degree] = block_shape(coeffs, block, "raise_block_degree");
  return raise_block_degree(coeffs, block, slots, degree, amount);
}

std::map<BlockedIndex, Rational> lower_block_degree(const std::map<BlockedIndex, Rational>& coeffs,
                                                    std::size_t block, int amount, int pivot) {
  auto [slots, degree] = block_shape(coeffs, block, "lower_block_degree");
  return lower_block_degree(coeffs, block, slots, degree - amount, amount, pivot);
}

}  // namespace spt
