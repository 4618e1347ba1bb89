#include "simplotope/verify.hpp"

#include "simplotope/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace spt {

MonomialMap monomial_add(const MonomialMap& a, const MonomialMap& b, const Rational& scale) {
  MonomialMap out = a;
  for (const auto& [e, c] : b) {
    out[e] += c * scale;
    if (out[e] == 0) out.erase(e);
  }
  return out;
}

MonomialMap monomial_multiply(const MonomialMap& a, const MonomialMap& b) {
  MonomialMap out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      MultiIndex e(ea.size());
      for (std::size_t d = 0; d < e.size(); ++d) e[d] = ea[d] + eb[d];
      out[e] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

MonomialMap monomial_power(const MonomialMap& a, int e) {
  if (e < 0) throw std::invalid_argument("monomial_power: negative exponent");
  if (a.empty()) return e == 0 ? MonomialMap{} : a;
  MonomialMap out{{MultiIndex(a.begin()->first.size(), 0), Rational(1)}};
  for (int i = 0; i < e; ++i) out = monomial_multiply(out, a);
  return out;
}

MonomialMap monomial_derivative(const MonomialMap& a, const Point& dir) {
  MonomialMap out;
  for (const auto& [e, c] : a)
    for (std::size_t d = 0; d < e.size(); ++d) {
      if (e[d] == 0 || dir[d] == 0) continue;
      MultiIndex lower = e;
      lower[d] -= 1;
      out[lower] += c * Rational(e[d]) * dir[d];
    }
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

Rational monomial_evaluate(const MonomialMap& a, const Point& x) {
  Rational sum = 0;
  for (const auto& [e, c] : a) {
    Rational term = c;
    for (std::size_t d = 0; d < e.size(); ++d)
      for (int i = 0; i < e[d]; ++i) term *= x[d];
    sum += term;
  }
  return sum;
}

namespace {

MonomialMap constant_map(std::size_t ambient, const Rational& c) {
  MonomialMap m;
  if (c != 0) m[MultiIndex(ambient, 0)] = c;
  return m;
}

/// b_j(x) as a monomial map: gradient row plus constant.
MonomialMap affine_map(const Point& grad, const Rational& constant) {
  MonomialMap m = constant_map(grad.size(), constant);
  for (std::size_t d = 0; d < grad.size(); ++d) {
    if (grad[d] == 0) continue;
    MultiIndex e(grad.size(), 0);
    e[d] = 1;
    m[e] += grad[d];
  }
  return m;
}

/// Rows of the inverse affine system: barycentric coordinates of a full-span
/// simplex as affine functions of position.
std::vector<MonomialMap> barycentric_forms(const Simplex& s) {
  const std::size_t n = s.ambient();
  if (static_cast<std::size_t>(s.dim()) != n)
    throw std::invalid_argument("expand_to_monomials: patch does not span its ambient space");
  // Solve [v_0..v_n; 1..1] B = I column by column; row j of the inverse gives
  // the affine form of b_j.
  Matrix a(n + 1, n + 1);
  for (std::size_t c = 0; c <= n; ++c) {
    for (std::size_t r = 0; r < n; ++r) a.at(r, c) = s.vertex(c)[r];
    a.at(n, c) = 1;
  }
  std::vector<std::vector<Rational>> inverse_cols;
  for (std::size_t c = 0; c <= n; ++c) {
    Point unit(n + 1, Rational(0));
    unit[c] = 1;
    auto col = solve_unique(a, unit);
    if (!col) throw std::invalid_argument("expand_to_monomials: degenerate simplex");
    inverse_cols.push_back(*col);
  }
  std::vector<MonomialMap> forms;
  for (std::size_t j = 0; j <= n; ++j) {
    Point grad(n);
    for (std::size_t d = 0; d < n; ++d) grad[d] = inverse_cols[d][j];
    forms.push_back(affine_map(grad, inverse_cols[n][j]));
  }
  return forms;
}

}  // namespace

MonomialMap expand_to_monomials(const SimplexPolynomial& p) {
  const auto forms = barycentric_forms(p.simplex);
  MonomialMap out;
  for (const auto& [k, c] : p.coefficients) {
    if (c == 0) continue;
    MonomialMap term = constant_map(p.simplex.ambient(), c * multinomial(p.degree, k));
    for (std::size_t j = 0; j < k.size(); ++j)
      term = monomial_multiply(term, monomial_power(forms[j], k[j]));
    out = monomial_add(out, term, Rational(1));
  }
  return out;
}

MonomialMap expand_to_monomials(const TensorPolynomial& p) {
  const std::size_t n = p.domain.ambient();
  if (static_cast<std::size_t>(p.domain.dim()) != n)
    throw std::invalid_argument("expand_to_monomials: patch does not span its ambient space");
  // Per-factor barycentric coordinates as affine functions: solve the joint
  // displacement system once per unit vector.
  std::vector<Point> columns;
  for (const auto& f : p.domain.factors())
    for (const auto& e : f.edges) columns.push_back(e);
  const Matrix w = Matrix::from_columns(columns);
  std::vector<Point> inverse_rows(columns.size(), Point(n));
  Point constants(columns.size());
  for (std::size_t d = 0; d < n; ++d) {
    Point unit(n, Rational(0));
    unit[d] = 1;
    auto col = solve_unique(w, unit);
    if (!col) throw std::invalid_argument("expand_to_monomials: degenerate factor system");
    for (std::size_t r = 0; r < columns.size(); ++r) inverse_rows[r][d] = (*col)[r];
  }
  for (std::size_t r = 0; r < columns.size(); ++r) {
    Rational c = 0;
    for (std::size_t d = 0; d < n; ++d) c += inverse_rows[r][d] * p.domain.base()[d];
    constants[r] = -c;
  }

  // Affine forms per factor slot (slot 0 = 1 - sum of the others).
  std::vector<std::vector<MonomialMap>> forms;
  std::size_t pos = 0;
  for (const auto& f : p.domain.factors()) {
    std::vector<MonomialMap> block;
    MonomialMap first = constant_map(n, Rational(1));
    for (int j = 1; j <= f.dim(); ++j) {
      MonomialMap aj = affine_map(inverse_rows[pos], constants[pos]);
      ++pos;
      first = monomial_add(first, aj, Rational(-1));
      block.push_back(std::move(aj));
    }
    block.insert(block.begin(), std::move(first));
    forms.push_back(std::move(block));
  }

  MonomialMap out;
  for (const auto& [k, c] : p.coefficients) {
    if (c == 0) continue;
    Rational weight = c;
    for (std::size_t i = 0; i < k.blocks.size(); ++i)
      weight *= multinomial(p.degrees[i], k.blocks[i]);
    MonomialMap term = constant_map(n, weight);
    for (std::size_t i = 0; i < k.blocks.size(); ++i)
      for (std::size_t j = 0; j < k.blocks[i].size(); ++j)
        term = monomial_multiply(term, monomial_power(forms[i][j], k.blocks[i][j]));
    out = monomial_add(out, term, Rational(1));
  }
  return out;
}

std::vector<Point> sample_facet_points(const Simplotope& facet, int count, std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("sample_facet_points: count must be >= 1");
  RationalRng rng(seed);
  std::vector<Point> out;
  for (int i = 0; i < count; ++i) {
    ProductCoords coords;
    for (const auto& f : facet.factors()) {
      Barycentric b(static_cast<std::size_t>(f.dim()) + 1);
      Rational total = 0;
      for (auto& w : b) {
        w = Rational(1 + static_cast<int>(rng.next_raw() % 97));
        total += w;
      }
      for (auto& w : b) w /= total;
      coords.blocks.push_back(std::move(b));
    }
    out.push_back(point_at(facet, coords));
  }
  return out;
}

TensorPolynomial as_product(const SimplexPolynomial& p) {
  Factor f;
  for (int j = 1; j <= p.simplex.dim(); ++j) {
    Point e = p.simplex.vertex(j);
    for (std::size_t d = 0; d < e.size(); ++d) e[d] -= p.simplex.vertex(0)[d];
    f.edges.push_back(std::move(e));
  }
  Simplotope domain(p.simplex.vertex(0), {std::move(f)});
  std::map<BlockedIndex, Rational> coeffs;
  for (const auto& [k, c] : p.coefficients) coeffs[BlockedIndex{{k}}] = c;
  return TensorPolynomial(std::move(domain), {p.degree}, std::move(coeffs));
}

ConditionedCoefficients instantiate_conditioned(const ConditionSet& cs, std::uint64_t seed) {
  if (cs.patches.size() != 2)
    throw std::invalid_argument("instantiate_conditioned: two patches required");
  const int left_rank = cs.swapped ? 1 : 0;
  const int right_rank = 1 - left_rank;
  RationalRng rng(seed);

  ConditionedCoefficients out;
  const auto left_keys = enumerate_blocked(cs.patches[left_rank].type,
                                           cs.patches[left_rank].degrees);
  for (const auto& key : left_keys) out.by_rank[left_rank][key] = rng.next();

  const auto right_keys = enumerate_blocked(cs.patches[right_rank].type,
                                            cs.patches[right_rank].degrees);
  std::map<BlockedIndex, std::size_t> column_of;
  for (std::size_t c = 0; c < right_keys.size(); ++c) column_of[right_keys[c]] = c;

  Matrix system(cs.conditions.size(), right_keys.size());
  Point rhs(cs.conditions.size(), Rational(0));
  for (std::size_t r = 0; r < cs.conditions.size(); ++r) {
    for (const auto& term : cs.conditions[r].terms) {
      if (term.ref.patch == right_rank) {
        system.at(r, column_of.at(term.ref.index)) += term.weight;
      } else {
        rhs[r] -= term.weight * out.by_rank[left_rank].at(term.ref.index);
      }
    }
  }
  Point free_values(right_keys.size());
  for (auto& v : free_values) v = rng.next();
  auto solution = solve_general(system, rhs, free_values);
  if (!solution)
    throw std::runtime_error("instantiate_conditioned: condition system is inconsistent");
  for (std::size_t c = 0; c < right_keys.size(); ++c)
    out.by_rank[right_rank][right_keys[c]] = solution->solution[c];
  for (std::size_t c : solution->pivot_columns)
    out.constrained.push_back(CoefficientRef{right_rank, right_keys[c]});
  return out;
}

namespace {

Rational abs_rational(const Rational& r) { return r < 0 ? Rational(-r) : r; }

/// All direction exponent tuples (transversal power first) of total order
/// 1..max_order.
std::vector<std::vector<int>> direction_exponents(std::size_t dir_count, int max_order) {
  std::vector<std::vector<int>> out;
  for (int total = 1; total <= max_order; ++total)
    for (const auto& e : enumerate_indices(static_cast<int>(dir_count), total))
      out.push_back(e);
  return out;
}

}  // namespace

VerificationReport check_conditions(const TensorPolynomial& first, const TensorPolynomial& second,
                                    const ConditionSet& cs, int samples, std::uint64_t seed) {
  VerificationReport report;
  report.pair = cs.patches.size() == 2 ? cs.patches[0].id + "|" + cs.patches[1].id : "";
  report.order = cs.order;
  report.sample_count = samples;
  report.condition_residual = 0;
  report.max_discrepancy = 0;

  const TensorPolynomial* by_rank[2] = {&first, &second};

  // Exact residual of every condition.
  for (const auto& condition : cs.conditions) {
    Rational residual = 0;
    for (const auto& term : condition.terms) {
      const auto& coeffs = by_rank[term.ref.patch]->coefficients;
      auto it = coeffs.find(term.ref.index);
      if (it == coeffs.end())
        throw std::invalid_argument("check_conditions: condition references a missing coefficient");
      residual += term.weight * it->second;
    }
    if (residual != 0) {
      report.condition_residual = std::max(report.condition_residual, abs_rational(residual));
      report.failures.push_back(
          VerificationFailure{"condition", {}, {}, residual, Rational(0)});
    }
  }
  report.conditions_satisfied = report.condition_residual == 0;

  if (!cs.facet) throw std::invalid_argument("check_conditions: condition set carries no facet");
  const Simplotope& facet = *cs.facet;

  std::vector<Point> directions{cs.direction};
  for (const auto& f : facet.factors())
    for (const auto& e : f.edges) directions.push_back(e);

  const MonomialMap mono_first = expand_to_monomials(first);
  const MonomialMap mono_second = expand_to_monomials(second);

  const auto points = sample_facet_points(facet, samples, seed);
  bool derivatives_match = true;
  bool oracle_consistent = true;

  for (const auto& exponents : direction_exponents(directions.size(), std::max(cs.order, 0))) {
    std::vector<Point> dirs;
    for (std::size_t d = 0; d < directions.size(); ++d)
      for (int i = 0; i < exponents[d]; ++i) dirs.push_back(directions[d]);
    MonomialMap da = mono_first, db = mono_second;
    for (const auto& dir : dirs) {
      da = monomial_derivative(da, dir);
      db = monomial_derivative(db, dir);
    }
    for (const auto& x : points) {
      const Rational va = derivative_value(first, dirs, x);
      const Rational vb = derivative_value(second, dirs, x);
      const Rational ma = monomial_evaluate(da, x);
      const Rational mb = monomial_evaluate(db, x);
      if (va != ma || vb != mb) {
        oracle_consistent = false;
        report.failures.push_back(
            VerificationFailure{"oracle", x, exponents, va - ma, vb - mb});
      }
      if (va != vb) {
        derivatives_match = false;
        report.max_discrepancy = std::max(report.max_discrepancy, abs_rational(va - vb));
        report.failures.push_back(VerificationFailure{"derivative", x, exponents, va, vb});
      }
    }
  }
  // Order zero: plain value matching at the samples.
  for (const auto& x : points) {
    const Rational va = evaluate_at(first, x);
    const Rational vb = evaluate_at(second, x);
    if (va != vb) {
      derivatives_match = false;
      report.max_discrepancy = std::max(report.max_discrepancy, abs_rational(va - vb));
      report.failures.push_back(
          VerificationFailure{"derivative", x, std::vector<int>(directions.size(), 0), va, vb});
    }
  }

  report.pass = report.conditions_satisfied && derivatives_match && oracle_consistent;
  return report;
}

bool nullspace_equivalent(const ConditionSet& a, const ConditionSet& b) {
  if (a.patches.size() != b.patches.size())
    throw std::invalid_argument("nullspace_equivalent: patch count mismatch");
  for (std::size_t i = 0; i < a.patches.size(); ++i)
    if (a.patches[i].type != b.patches[i].type || a.patches[i].degrees != b.patches[i].degrees)
      throw std::invalid_argument("nullspace_equivalent: coefficient vectors differ");

  std::map<std::pair<int, BlockedIndex>, std::size_t> column_of;
  std::size_t columns = 0;
  for (std::size_t i = 0; i < a.patches.size(); ++i)
    for (const auto& key : enumerate_blocked(a.patches[i].type, a.patches[i].degrees))
      column_of[{static_cast<int>(i), key}] = columns++;

  auto build = [&](const ConditionSet& cs) {
    Matrix m(cs.conditions.size(), columns);
    for (std::size_t r = 0; r < cs.conditions.size(); ++r)
      for (const auto& term : cs.conditions[r].terms)
        m.at(r, column_of.at({term.ref.patch, term.ref.index})) += term.weight;
    return m;
  };
  return row_spaces_equal(build(a), build(b));
}

}  // namespace spt
