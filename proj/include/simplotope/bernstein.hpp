#pragma once

#include "simplotope/geometry.hpp"
#include "simplotope/multiindex.hpp"
#include "simplotope/rational.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace spt {

/// B_k^d(b) = (d!/k!) b^k for |k| = d.
Rational basis_value(const MultiIndex& k, int degree, const Barycentric& b);

/// Product over blocks of basis_value; equals (delta!/k!) a^k.
Rational tensor_basis_value(const BlockedIndex& k, const std::vector<int>& delta,
                            const ProductCoords& a);

/// One De Casteljau contraction: out_k = sum_j weights_j in_{k+e_j}, lowering
/// the index norm by one. Works over any value type supporting v * Rational
/// and +=, so the same iteration drives numeric evaluation and symbolic
/// condition assembly. Keys whose value is identically zero may be absent.
template <class V>
std::map<MultiIndex, V> de_casteljau_step(const std::map<MultiIndex, V>& coeffs,
                                          const std::vector<Rational>& weights) {
  std::map<MultiIndex, V> out;
  for (const auto& [key, value] : coeffs) {
    if (key.size() != weights.size())
      throw std::invalid_argument("de_casteljau_step: weight length mismatch");
    for (std::size_t j = 0; j < weights.size(); ++j) {
      if (key[j] == 0 || weights[j] == 0) continue;
      MultiIndex smaller = key;
      smaller[j] -= 1;
      out[smaller] += value * weights[j];
    }
  }
  return out;
}

template <class V>
std::map<MultiIndex, V> de_casteljau(const std::map<MultiIndex, V>& coeffs,
                                     const std::vector<Rational>& weights, int iterations) {
  if (iterations < 0) throw std::invalid_argument("de_casteljau: negative iteration count");
  if (!coeffs.empty() && iterations > norm(coeffs.begin()->first))
    throw std::invalid_argument("de_casteljau: iteration count exceeds degree");
  auto current = coeffs;
  for (int r = 0; r < iterations; ++r) current = de_casteljau_step(current, weights);
  return current;
}

/// Contraction within one block of a blocked coefficient map.
template <class V>
std::map<BlockedIndex, V> block_contract(const std::map<BlockedIndex, V>& coeffs,
                                         std::size_t block, const std::vector<Rational>& weights) {
  std::map<BlockedIndex, V> out;
  for (const auto& [key, value] : coeffs) {
    const MultiIndex& part = key.blocks.at(block);
    if (part.size() != weights.size())
      throw std::invalid_argument("block_contract: weight length mismatch");
    for (std::size_t j = 0; j < weights.size(); ++j) {
      if (part[j] == 0 || weights[j] == 0) continue;
      BlockedIndex smaller = key;
      smaller.blocks[block][j] -= 1;
      out[smaller] += value * weights[j];
    }
  }
  return out;
}

struct SimplexPolynomial {
  Simplex simplex;
  int degree;
  std::map<MultiIndex, Rational> coefficients;

  SimplexPolynomial(Simplex s, int d, std::map<MultiIndex, Rational> c);
};

struct TensorPolynomial {
  Simplotope domain;
  std::vector<int> degrees;
  std::map<BlockedIndex, Rational> coefficients;

  TensorPolynomial(Simplotope dom, std::vector<int> delta, std::map<BlockedIndex, Rational> c);
};

Rational evaluate(const SimplexPolynomial& p, const Barycentric& b);
Rational evaluate(const TensorPolynomial& p, const ProductCoords& a);

/// Evaluation at an ambient point (coordinates resolved exactly first).
Rational evaluate_at(const SimplexPolynomial& p, const Point& x);
Rational evaluate_at(const TensorPolynomial& p, const Point& x);

/// Iterated directional derivative along the given ambient directions,
/// evaluated at x. Directions may repeat; an empty list evaluates the
/// polynomial. Throws when a direction cannot be decomposed over the domain's
/// factor direction spaces.
Rational derivative_value(const SimplexPolynomial& p, const std::vector<Point>& directions,
                          const Point& x);
Rational derivative_value(const TensorPolynomial& p, const std::vector<Point>& directions,
                          const Point& x);

/// r-th derivative along a single direction.
Rational directional_derivative(const SimplexPolynomial& p, const Point& u, int order,
                                const Point& x);
Rational directional_derivative(const TensorPolynomial& p, const Point& u, int order,
                                const Point& x);

struct SimplexNet {
  std::vector<std::pair<MultiIndex, Point>> entries;
};

struct TensorNet {
  std::vector<std::pair<BlockedIndex, Point>> entries;
};

/// Domain points q = sum_j (k_j/d) v_j; a degree-0 net sits at the first vertex.
SimplexNet domain_points(const Simplex& s, int degree);

/// Domain points q = base + sum_i sum_j (k_ij/delta_i) w_ij; factors of degree
/// 0 contribute only the base.
TensorNet domain_points(const Simplotope& p, const std::vector<int>& delta);

}  // namespace spt
