#pragma once

#include "simplotope/linalg.hpp"
#include "simplotope/multiindex.hpp"
#include "simplotope/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace spt {

/// Barycentric weights with respect to a vertex set; entries sum to 1.
using Barycentric = std::vector<Rational>;

/// Directional weights; entries sum to 0.
using DirectionWeights = std::vector<Rational>;

/// Per-factor barycentric weights on a product domain.
struct ProductCoords {
  std::vector<Barycentric> blocks;
};

/// Convex hull of affinely independent vertices. The ambient dimension may
/// exceed the simplex dimension (facets, embedded factors).
class Simplex {
 public:
  explicit Simplex(std::vector<Point> vertices);

  int dim() const { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t ambient() const { return vertices_.empty() ? 0 : vertices_[0].size(); }
  const std::vector<Point>& vertices() const { return vertices_; }
  const Point& vertex(std::size_t j) const { return vertices_.at(j); }

  /// Edge directions v_j - v_0, j = 1..dim.
  std::vector<Point> edge_directions() const;

 private:
  std::vector<Point> vertices_;
};

/// One factor of a product domain, stored as displacement vectors from the
/// factor's first vertex. A factor of dimension 0 has no displacements.
struct Factor {
  std::vector<Point> edges;

  int dim() const { return static_cast<int>(edges.size()); }
};

/// Product of simplices sharing one base point: the point set
///   base + conv{0, e_1..} + conv{0, f_1..} + ...
/// Factor direction spaces are jointly linearly independent.
class Simplotope {
 public:
  Simplotope(Point base, std::vector<Factor> factors);

  const Point& base() const { return base_; }
  const std::vector<Factor>& factors() const { return factors_; }
  const Factor& factor(std::size_t i) const { return factors_.at(i); }
  std::size_t factor_count() const { return factors_.size(); }

  /// Type vector: per-factor dimensions.
  std::vector<int> type() const;
  int dim() const;
  std::size_t ambient() const { return base_.size(); }

  /// The vertex selected by one slot index per factor (slot 0 = factor base).
  Point vertex(const std::vector<int>& selector) const;

  /// All vertices, ordered by selector (first factor slowest).
  std::vector<Point> vertices() const;
  std::vector<std::vector<int>> vertex_selectors() const;

  /// The factor as a simplex rooted at the simplotope base (for coordinate
  /// computations; the absolute position is immaterial for directions).
  Simplex factor_simplex(std::size_t i) const;

 private:
  Point base_;
  std::vector<Factor> factors_;
};

/// Exact barycentric coordinates of a point in the affine hull of the simplex.
/// Throws when the point lies outside the hull.
Barycentric barycentric(const Simplex& s, const Point& p);

/// Weights summing to zero with sum_j s_j v_j = u; throws when u is not in the
/// direction space of the simplex.
DirectionWeights direction_coordinates(const Simplex& s, const Point& u);

/// Weights of u over factor i's vertex slots (sums to 0); throws when u is not
/// in the factor's direction space.
DirectionWeights factor_direction_weights(const Simplotope& p, std::size_t i, const Point& u);

/// Per-factor barycentric coordinates of a point in the simplotope's affine
/// hull (unique by joint independence of factor spaces).
ProductCoords product_coordinates(const Simplotope& p, const Point& x);

Point point_at(const Simplotope& p, const ProductCoords& coords);

/// The facet obtained by dropping the last vertex of factor i (eps_i = 1).
Simplotope facet_of(const Simplotope& p, const MultiIndex& eps);

/// The facet obtained by dropping vertex slot `drop` of factor `block`.
Simplotope facet_dropping(const Simplotope& p, std::size_t block, int drop);

/// Where a normalized factor came from: an original factor (with its slot
/// re-ordering) or a padding point inserted during alignment.
struct FactorOrigin {
  int original_factor = -1;     // -1: padded zero-dimensional factor
  std::vector<int> slot_map;    // normalized slot -> original slot
  bool padded() const { return original_factor < 0; }
};

struct NormalizedPatch {
  Simplotope shape;                  // base anchored at a shared facet vertex
  std::vector<FactorOrigin> origin;  // one entry per normalized factor
};

/// Facet-sharing pair re-indexed so that the left out-of-facet factor comes
/// first, the right one last, shared factors aligned positionally, both sides
/// padded to a common factor count.
struct NormalizedPair {
  NormalizedPatch left, right;
  bool swapped = false;  // true when the caller's first patch plays "right"
  Simplotope facet() const;
  int oof_dim_left() const { return left.shape.factor(0).dim(); }
  int oof_dim_right() const { return right.shape.factors().back().dim(); }
};

struct SharedFacet {
  MultiIndex eps_left, eps_right;  // over the callers' original factors
  std::size_t oof_block_left = 0, oof_block_right = 0;
  int dropped_slot_left = 0, dropped_slot_right = 0;
  /// Facet vertices as original selectors, left paired with right.
  std::vector<std::pair<std::vector<int>, std::vector<int>>> vertex_pairs;
  NormalizedPair normalized;
};

/// Searches all facet pairs for an exact match with compatible product
/// structure. Returns nullopt when the patches do not share a facet (or no
/// positional alignment of their factors exists). Throws on ambient mismatch.
std::optional<SharedFacet> detect_shared_facet(const Simplotope& p, const Simplotope& q);

/// True when the out-of-facet factor spans of the two patches intersect in a
/// nonzero direction. Any such direction is automatically transversal to the
/// shared facet (factor spaces within each patch are jointly independent), so
/// this is the exact rank rendering of the transversal-direction requirement.
bool is_oof_cospatial(const SharedFacet& info);

/// Canonical basis (reduced echelon rows) of the intersection of the two
/// out-of-facet factor spans.
std::vector<Point> oof_span_intersection(const SharedFacet& info);

}  // namespace spt
