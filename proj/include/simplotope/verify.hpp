#pragma once

#include "simplotope/bernstein.hpp"
#include "simplotope/continuity.hpp"

#include <map>
#include <string>
#include <vector>

namespace spt {

/// Exact multivariate polynomial in the ambient coordinates: exponent tuple to
/// coefficient. Independent evaluation route for the verification oracle.
using MonomialMap = std::map<MultiIndex, Rational>;

MonomialMap monomial_add(const MonomialMap& a, const MonomialMap& b, const Rational& scale);
MonomialMap monomial_multiply(const MonomialMap& a, const MonomialMap& b);
MonomialMap monomial_power(const MonomialMap& a, int e);
MonomialMap monomial_derivative(const MonomialMap& a, const Point& dir);
Rational monomial_evaluate(const MonomialMap& a, const Point& x);

/// Expands the patch into ambient monomials by substituting the barycentric
/// coordinates as affine functions of position. Requires the patch to span its
/// ambient space; throws otherwise.
MonomialMap expand_to_monomials(const SimplexPolynomial& p);
MonomialMap expand_to_monomials(const TensorPolynomial& p);

/// Deterministic strictly interior rational points of the facet.
std::vector<Point> sample_facet_points(const Simplotope& facet, int count, std::uint64_t seed);

/// A simplex patch as a single-factor product patch (same coefficient keys,
/// wrapped in one block).
TensorPolynomial as_product(const SimplexPolynomial& p);

/// Random coefficients on the condition set's left patch, right patch solved
/// from the conditions (free right coefficients random). Throws when the
/// system is inconsistent.
struct ConditionedCoefficients {
  std::map<BlockedIndex, Rational> by_rank[2];
  std::vector<CoefficientRef> constrained;  // solved right-patch coefficients
};
ConditionedCoefficients instantiate_conditioned(const ConditionSet& cs, std::uint64_t seed);

struct VerificationFailure {
  std::string kind;  // "condition", "derivative" or "oracle"
  Point point;
  std::vector<int> direction_powers;  // transversal power, then one per tangent
  Rational left_value, right_value;
};

struct VerificationReport {
  std::string pair;
  int order = 0;
  int sample_count = 0;
  bool conditions_satisfied = false;
  Rational condition_residual;  // max |residual| over all conditions
  Rational max_discrepancy;     // max |left - right| over all derivative checks
  bool pass = false;
  std::vector<VerificationFailure> failures;
};

/// Checks that the two patches satisfy the conditions exactly, then compares
/// all derivatives up to the set's order (transversal direction mixed with
/// every facet tangent) at interior facet samples, through both the De
/// Casteljau route and the monomial oracle. Everything is exact; pass means
/// every discrepancy is identically zero.
VerificationReport check_conditions(const TensorPolynomial& first, const TensorPolynomial& second,
                                    const ConditionSet& cs, int samples, std::uint64_t seed);

/// True when the two stacked homogeneous systems have identical row spaces
/// over the shared coefficient vector. Throws when the sets are not over the
/// same pair of canonical nets.
bool nullspace_equivalent(const ConditionSet& a, const ConditionSet& b);

}  // namespace spt
