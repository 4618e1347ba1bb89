#include "simplotope/bernstein.hpp"

#include <algorithm>

namespace spt {

Rational basis_value(const MultiIndex& k, int degree, const Barycentric& b) {
  if (k.size() != b.size()) throw std::invalid_argument("basis_value: weight length mismatch");
  Rational value = multinomial(degree, k);
  for (std::size_t j = 0; j < k.size(); ++j)
    for (int e = 0; e < k[j]; ++e) value *= b[j];
  return value;
}

Rational tensor_basis_value(const BlockedIndex& k, const std::vector<int>& delta,
                            const ProductCoords& a) {
  if (k.blocks.size() != delta.size() || a.blocks.size() != delta.size())
    throw std::invalid_argument("tensor_basis_value: block count mismatch");
  Rational value = 1;
  for (std::size_t i = 0; i < delta.size(); ++i)
    value *= basis_value(k.blocks[i], delta[i], a.blocks[i]);
  return value;
}

namespace {

template <class Key>
void check_complete(const std::map<Key, Rational>& coeffs, const std::vector<Key>& expected,
                    const char* what) {
  if (coeffs.size() != expected.size())
    throw std::invalid_argument(std::string(what) + ": coefficient key set is incomplete");
  for (const auto& key : expected)
    if (!coeffs.count(key))
      throw std::invalid_argument(std::string(what) + ": missing coefficient key");
}

}  // namespace

SimplexPolynomial::SimplexPolynomial(Simplex s, int d, std::map<MultiIndex, Rational> c)
    : simplex(std::move(s)), degree(d), coefficients(std::move(c)) {
  if (degree < 0) throw std::invalid_argument("SimplexPolynomial: negative degree");
  check_complete(coefficients, enumerate_indices(simplex.dim() + 1, degree), "SimplexPolynomial");
}

TensorPolynomial::TensorPolynomial(Simplotope dom, std::vector<int> delta,
                                   std::map<BlockedIndex, Rational> c)
    : domain(std::move(dom)), degrees(std::move(delta)), coefficients(std::move(c)) {
  if (degrees.size() != domain.factor_count())
    throw std::invalid_argument("TensorPolynomial: one degree per factor required");
  for (int d : degrees)
    if (d < 0) throw std::invalid_argument("TensorPolynomial: negative degree");
  check_complete(coefficients, enumerate_blocked(domain.type(), degrees), "TensorPolynomial");
}

Rational evaluate(const SimplexPolynomial& p, const Barycentric& b) {
  Rational sum = 0;
  for (const auto& [k, c] : p.coefficients) sum += c * basis_value(k, p.degree, b);
  return sum;
}

Rational evaluate(const TensorPolynomial& p, const ProductCoords& a) {
  Rational sum = 0;
  for (const auto& [k, c] : p.coefficients) sum += c * tensor_basis_value(k, p.degrees, a);
  return sum;
}

Rational evaluate_at(const SimplexPolynomial& p, const Point& x) {
  return evaluate(p, barycentric(p.simplex, x));
}

Rational evaluate_at(const TensorPolynomial& p, const Point& x) {
  return evaluate(p, product_coordinates(p.domain, x));
}

namespace {

Rational derivative_recurse(const Simplex& simplex, const std::map<MultiIndex, Rational>& coeffs,
                            int degree, const std::vector<Point>& dirs, std::size_t next,
                            const Barycentric& b) {
  if (next == dirs.size()) {
    Rational sum = 0;
    for (const auto& [k, c] : coeffs) sum += c * basis_value(k, degree, b);
    return sum;
  }
  if (degree == 0) return 0;
  const DirectionWeights s = direction_coordinates(simplex, dirs[next]);
  const auto contracted = de_casteljau_step(coeffs, s);
  return Rational(degree) *
         derivative_recurse(simplex, contracted, degree - 1, dirs, next + 1, b);
}

/// Per-factor direction weights of an ambient vector, via the unique joint
/// decomposition over the factor direction spaces.
std::vector<DirectionWeights> factor_weights_of(const Simplotope& dom, const Point& u) {
  std::vector<Point> columns;
  for (const auto& f : dom.factors())
    for (const auto& e : f.edges) columns.push_back(e);
  std::vector<DirectionWeights> out;
  if (columns.empty()) {
    for (const auto& v : u)
      if (v != 0) throw std::invalid_argument("direction outside the factor spaces");
    for (std::size_t i = 0; i < dom.factor_count(); ++i) out.push_back({Rational(0)});
    return out;
  }
  auto sol = solve_unique(Matrix::from_columns(columns), u);
  if (!sol) throw std::invalid_argument("direction outside the factor spaces");
  std::size_t pos = 0;
  for (const auto& f : dom.factors()) {
    DirectionWeights s(static_cast<std::size_t>(f.dim()) + 1);
    Rational total = 0;
    for (int j = 1; j <= f.dim(); ++j) {
      s[j] = (*sol)[pos++];
      total += s[j];
    }
    s[0] = -total;
    out.push_back(std::move(s));
  }
  return out;
}

Rational tensor_derivative_recurse(const Simplotope& dom,
                                   const std::map<BlockedIndex, Rational>& coeffs,
                                   std::vector<int> degrees, const std::vector<Point>& dirs,
                                   std::size_t next, const ProductCoords& a) {
  if (next == dirs.size()) {
    Rational sum = 0;
    for (const auto& [k, c] : coeffs) sum += c * tensor_basis_value(k, degrees, a);
    return sum;
  }
  const auto weights = factor_weights_of(dom, dirs[next]);
  Rational total = 0;
  for (std::size_t i = 0; i < dom.factor_count(); ++i) {
    if (degrees[i] == 0) continue;
    bool zero = true;
    for (const auto& w : weights[i])
      if (w != 0) zero = false;
    if (zero) continue;
    auto contracted = block_contract(coeffs, i, weights[i]);
    auto reduced = degrees;
    reduced[i] -= 1;
    total += Rational(degrees[i]) *
             tensor_derivative_recurse(dom, contracted, reduced, dirs, next + 1, a);
  }
  return total;
}

}  // namespace

Rational derivative_value(const SimplexPolynomial& p, const std::vector<Point>& directions,
                          const Point& x) {
  return derivative_recurse(p.simplex, p.coefficients, p.degree, directions, 0,
                            barycentric(p.simplex, x));
}

Rational derivative_value(const TensorPolynomial& p, const std::vector<Point>& directions,
                          const Point& x) {
  return tensor_derivative_recurse(p.domain, p.coefficients, p.degrees, directions, 0,
                                   product_coordinates(p.domain, x));
}

Rational directional_derivative(const SimplexPolynomial& p, const Point& u, int order,
                                const Point& x) {
  return derivative_value(p, std::vector<Point>(order, u), x);
}

Rational directional_derivative(const TensorPolynomial& p, const Point& u, int order,
                                const Point& x) {
  return derivative_value(p, std::vector<Point>(order, u), x);
}

SimplexNet domain_points(const Simplex& s, int degree) {
  if (degree < 0) throw std::invalid_argument("domain_points: negative degree");
  SimplexNet net;
  for (const auto& k : enumerate_indices(s.dim() + 1, degree)) {
    Point q(s.ambient(), Rational(0));
    if (degree == 0) {
      q = s.vertex(0);
    } else {
      for (std::size_t j = 0; j < k.size(); ++j)
        for (std::size_t d = 0; d < q.size(); ++d)
          q[d] += Rational(k[j], degree) * s.vertex(j)[d];
    }
    net.entries.emplace_back(k, std::move(q));
  }
  return net;
}

TensorNet domain_points(const Simplotope& p, const std::vector<int>& delta) {
  if (delta.size() != p.factor_count())
    throw std::invalid_argument("domain_points: one degree per factor required");
  for (int d : delta)
    if (d < 0) throw std::invalid_argument("domain_points: negative degree");
  TensorNet net;
  for (const auto& k : enumerate_blocked(p.type(), delta)) {
    Point q = p.base();
    for (std::size_t i = 0; i < p.factor_count(); ++i) {
      if (delta[i] == 0) continue;
      const auto& edges = p.factor(i).edges;
      for (std::size_t j = 1; j < k.blocks[i].size(); ++j)
        for (std::size_t d = 0; d < q.size(); ++d)
          q[d] += Rational(k.blocks[i][j], delta[i]) * edges[j - 1][d];
    }
    net.entries.emplace_back(k, std::move(q));
  }
  return net;
}

}  // namespace spt
