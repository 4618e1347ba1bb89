#pragma once

#include "simplotope/bernstein.hpp"
#include "simplotope/circumscribe.hpp"
#include "simplotope/geometry.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace spt {

/// One B-coefficient of one patch, indexed over the patch's own factors.
struct CoefficientRef {
  int patch = 0;  // rank in the caller's patch order
  BlockedIndex index;

  auto operator<=>(const CoefficientRef&) const = default;
};

/// Sparse linear combination of coefficient references.
struct LinearForm {
  std::map<CoefficientRef, Rational> terms;

  LinearForm& operator+=(const LinearForm& o) {
    for (const auto& [ref, w] : o.terms) terms[ref] += w;
    return *this;
  }
  LinearForm operator*(const Rational& w) const {
    LinearForm out;
    if (w == 0) return out;
    for (const auto& [ref, t] : terms) out.terms.emplace(ref, t * w);
    return out;
  }
  LinearForm operator-(const LinearForm& o) const {
    LinearForm out = *this;
    for (const auto& [ref, w] : o.terms) out.terms[ref] -= w;
    return out;
  }
  void prune() {
    for (auto it = terms.begin(); it != terms.end();)
      it = (it->second == 0) ? terms.erase(it) : std::next(it);
  }
};

struct ConditionTerm {
  CoefficientRef ref;
  Rational weight;
};

/// One homogeneous equation sum w * c = 0. Terms are ordered patch-first,
/// then by descending lexicographic index; the first weight is +1.
struct LinearCondition {
  std::vector<ConditionTerm> terms;
  int rho = 0;            // derivative order this row enforces
  bool completion = false;  // block-degree consistency row (right patch only)
};

/// Makes a normalized condition out of a linear form; nullopt when the form is
/// identically zero.
std::optional<LinearCondition> normalize_condition(const LinearForm& form, int rho,
                                                   bool completion);

struct PatchMeta {
  std::string id;
  std::vector<int> type;
  std::vector<int> degrees;
};

struct ConditionSet {
  int order = 0;
  Point direction;  // ambient transversal direction used
  std::vector<LinearCondition> conditions;
  std::vector<PatchMeta> patches;  // rank order matches CoefficientRef::patch
  bool equal_oof_dims = false;
  bool has_completion_rows = false;
  bool swapped = false;                  // caller's first patch plays "right"
  std::optional<Simplotope> facet;       // shared facet, for sampling
};

struct PatchInput {
  Simplotope shape;
  std::vector<int> degrees;
  std::string id;
};

/// Continuity conditions of orders 0..order between two simplex patches of
/// equal degree sharing a facet, along the transversal direction u. Vertices
/// are re-ordered internally; emitted references use the callers' labels
/// (single-block indices).
ConditionSet simplex_conditions(const Simplex& left, const Simplex& right, int degree, int order,
                                const Point& u);

/// Transversal direction for a cospatial pair: the last edge of the left
/// out-of-facet factor when it lies in the right out-of-facet span, otherwise
/// the lexicographically smallest canonical basis vector of the span
/// intersection. Throws when the pair is not out-of-facet cospatial.
Point choose_transversal_direction(const SharedFacet& info);

/// Mixed-grid continuity conditions of orders 0..order between two
/// facet-sharing product patches of positionally equal degrees, derived on
/// the circumscribed simplices and re-expressed over both canonical nets.
/// When the left out-of-facet factor has dimension >= 2, block-degree
/// consistency rows over the right patch are appended per order; without them
/// the re-expressed system constrains only a projection of the matching
/// requirement.
ConditionSet mixed_conditions(const PatchInput& first, const PatchInput& second, int order);

/// Same, with a caller-chosen direction (must be transversal and lie in both
/// out-of-facet spans).
ConditionSet mixed_conditions(const PatchInput& first, const PatchInput& second, int order,
                              const Point& u);

/// Column keys and sparse rows of the stacked homogeneous system over several
/// patches. Rows follow adjacency order, then derivative order, then facet
/// index order; columns follow patch order, then the canonical enumeration.
struct SmoothnessSystem {
  std::vector<std::pair<std::string, BlockedIndex>> columns;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
  std::vector<ConditionSet> pair_sets;
};

SmoothnessSystem assemble_smoothness_system(const std::vector<PatchInput>& patches,
                                            const std::vector<std::pair<std::size_t, std::size_t>>& adjacencies,
                                            int order);

}  // namespace spt
