#include "simplotope/geometry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace spt {

namespace {

Point sub(const Point& a, const Point& b) {
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Point add(const Point& a, const Point& b) {
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

bool lex_less(const Point& a, const Point& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

/// Augmented affine system [v_0 .. v_n ; 1 .. 1] x = [rhs ; sum].
std::optional<Point> solve_affine(const std::vector<Point>& vertices, const Point& rhs,
                                  const Rational& sum) {
  const std::size_t ambient = vertices.empty() ? 0 : vertices[0].size();
  Matrix a(ambient + 1, vertices.size());
  for (std::size_t c = 0; c < vertices.size(); ++c) {
    for (std::size_t r = 0; r < ambient; ++r) a.at(r, c) = vertices[c][r];
    a.at(ambient, c) = 1;
  }
  Point b = rhs;
  b.push_back(sum);
  return solve_unique(a, b);
}

}  // namespace

Simplex::Simplex(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw std::invalid_argument("simplex needs at least one vertex");
  for (const auto& v : vertices_)
    if (v.size() != vertices_[0].size())
      throw std::invalid_argument("simplex vertices have mixed ambient dimensions");
  if (span_rank(edge_directions()) != static_cast<std::size_t>(dim()))
    throw std::invalid_argument("simplex vertices are affinely dependent");
}

std::vector<Point> Simplex::edge_directions() const {
  std::vector<Point> dirs;
  for (std::size_t j = 1; j < vertices_.size(); ++j) dirs.push_back(sub(vertices_[j], vertices_[0]));
  return dirs;
}

Simplotope::Simplotope(Point base, std::vector<Factor> factors)
    : base_(std::move(base)), factors_(std::move(factors)) {
  std::vector<Point> all_edges;
  for (const auto& f : factors_)
    for (const auto& e : f.edges) {
      if (e.size() != base_.size())
        throw std::invalid_argument("factor displacement has wrong ambient dimension");
      all_edges.push_back(e);
    }
  if (span_rank(all_edges) != all_edges.size())
    throw std::invalid_argument("factor direction spaces are not jointly independent");
}

std::vector<int> Simplotope::type() const {
  std::vector<int> nu;
  for (const auto& f : factors_) nu.push_back(f.dim());
  return nu;
}

int Simplotope::dim() const {
  int d = 0;
  for (const auto& f : factors_) d += f.dim();
  return d;
}

Point Simplotope::vertex(const std::vector<int>& selector) const {
  if (selector.size() != factors_.size())
    throw std::invalid_argument("vertex selector length mismatch");
  Point v = base_;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const int j = selector[i];
    if (j < 0 || j > factors_[i].dim()) throw std::invalid_argument("vertex selector out of range");
    if (j > 0) v = add(v, factors_[i].edges[j - 1]);
  }
  return v;
}

std::vector<std::vector<int>> Simplotope::vertex_selectors() const {
  std::vector<std::vector<int>> out;
  std::vector<int> current(factors_.size(), 0);
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == factors_.size()) {
      out.push_back(current);
      return;
    }
    for (int j = 0; j <= factors_[i].dim(); ++j) {
      current[i] = j;
      self(self, i + 1);
    }
  };
  recurse(recurse, 0);
  return out;
}

std::vector<Point> Simplotope::vertices() const {
  std::vector<Point> out;
  for (const auto& sel : vertex_selectors()) out.push_back(vertex(sel));
  return out;
}

Simplex Simplotope::factor_simplex(std::size_t i) const {
  std::vector<Point> verts{base_};
  for (const auto& e : factors_.at(i).edges) verts.push_back(add(base_, e));
  return Simplex(std::move(verts));
}

Barycentric barycentric(const Simplex& s, const Point& p) {
  if (p.size() != s.ambient()) throw std::invalid_argument("barycentric: ambient mismatch");
  auto sol = solve_affine(s.vertices(), p, Rational(1));
  if (!sol) throw std::invalid_argument("barycentric: point outside the affine hull");
  return *sol;
}

DirectionWeights direction_coordinates(const Simplex& s, const Point& u) {
  if (u.size() != s.ambient()) throw std::invalid_argument("direction_coordinates: ambient mismatch");
  auto sol = solve_affine(s.vertices(), u, Rational(0));
  if (!sol) throw std::invalid_argument("direction_coordinates: vector outside the direction space");
  return *sol;
}

DirectionWeights factor_direction_weights(const Simplotope& p, std::size_t i, const Point& u) {
  return direction_coordinates(p.factor_simplex(i), u);
}

ProductCoords product_coordinates(const Simplotope& p, const Point& x) {
  // One column per displacement vector; the solution splits x - base into the
  // unique per-factor combination.
  std::vector<Point> columns;
  for (const auto& f : p.factors())
    for (const auto& e : f.edges) columns.push_back(e);
  ProductCoords out;
  if (columns.empty()) {
    if (x != p.base()) throw std::invalid_argument("product_coordinates: point off the degenerate hull");
    for (std::size_t i = 0; i < p.factor_count(); ++i) out.blocks.push_back({Rational(1)});
    return out;
  }
  auto sol = solve_unique(Matrix::from_columns(columns), sub(x, p.base()));
  if (!sol) throw std::invalid_argument("product_coordinates: point outside the affine hull");
  std::size_t pos = 0;
  for (const auto& f : p.factors()) {
    Barycentric b(static_cast<std::size_t>(f.dim()) + 1);
    Rational rest = 0;
    for (int j = 0; j < f.dim(); ++j) {
      b[j + 1] = (*sol)[pos++];
      rest += b[j + 1];
    }
    b[0] = Rational(1) - rest;
    out.blocks.push_back(std::move(b));
  }
  return out;
}

Point point_at(const Simplotope& p, const ProductCoords& coords) {
  if (coords.blocks.size() != p.factor_count())
    throw std::invalid_argument("point_at: block count mismatch");
  Point x = p.base();
  for (std::size_t i = 0; i < p.factor_count(); ++i) {
    const auto& f = p.factor(i);
    const auto& b = coords.blocks[i];
    if (static_cast<int>(b.size()) != f.dim() + 1)
      throw std::invalid_argument("point_at: weight length mismatch");
    for (int j = 1; j <= f.dim(); ++j)
      for (std::size_t d = 0; d < x.size(); ++d) x[d] += b[j] * f.edges[j - 1][d];
  }
  return x;
}

Simplotope facet_dropping(const Simplotope& p, std::size_t block, int drop) {
  const Factor& f = p.factor(block);
  if (f.dim() < 1) throw std::invalid_argument("facet of a zero-dimensional factor");
  if (drop < 0 || drop > f.dim()) throw std::invalid_argument("dropped slot out of range");
  Point base = p.base();
  Factor reduced;
  if (drop == 0) {
    base = add(base, f.edges[0]);
    for (int j = 2; j <= f.dim(); ++j) reduced.edges.push_back(sub(f.edges[j - 1], f.edges[0]));
  } else {
    for (int j = 1; j <= f.dim(); ++j)
      if (j != drop) reduced.edges.push_back(f.edges[j - 1]);
  }
  std::vector<Factor> factors = p.factors();
  factors[block] = std::move(reduced);
  return Simplotope(std::move(base), std::move(factors));
}

Simplotope facet_of(const Simplotope& p, const MultiIndex& eps) {
  if (eps.size() != p.factor_count() || norm(eps) != 1)
    throw std::invalid_argument("facet_of: eps must select exactly one factor");
  for (std::size_t i = 0; i < eps.size(); ++i)
    if (eps[i] == 1) return facet_dropping(p, i, p.factor(i).dim());
  throw std::invalid_argument("facet_of: eps has no unit entry");
}

Simplotope NormalizedPair::facet() const {
  MultiIndex eps(left.shape.factor_count(), 0);
  eps[0] = 1;
  return facet_of(left.shape, eps);
}

namespace {

/// Factor shape modulo translation: anchored at its lexicographically smallest
/// vertex, remaining displacements sorted. `shift` is the anchoring offset.
struct CanonFactor {
  std::vector<Point> edges;
  Point shift;

  bool operator==(const CanonFactor& o) const { return edges == o.edges; }
};

CanonFactor canonical_factor(const Factor& f, std::size_t ambient) {
  std::vector<Point> verts{Point(ambient, Rational(0))};
  for (const auto& e : f.edges) verts.push_back(e);
  std::size_t min_at = 0;
  for (std::size_t j = 1; j < verts.size(); ++j)
    if (lex_less(verts[j], verts[min_at])) min_at = j;
  CanonFactor out;
  out.shift = verts[min_at];
  for (std::size_t j = 0; j < verts.size(); ++j)
    if (j != min_at) out.edges.push_back(sub(verts[j], verts[min_at]));
  std::sort(out.edges.begin(), out.edges.end(), lex_less);
  return out;
}

Point canonical_base(const Simplotope& s) {
  Point base = s.base();
  for (const auto& f : s.factors()) base = add(base, canonical_factor(f, s.ambient()).shift);
  return base;
}

bool canon_factor_lt(const CanonFactor& a, const CanonFactor& b) {
  return std::lexicographical_compare(a.edges.begin(), a.edges.end(), b.edges.begin(),
                                      b.edges.end(), lex_less);
}

Factor reduced_factor(const Factor& f, int drop) {
  Factor out;
  if (drop == 0) {
    for (int j = 2; j <= f.dim(); ++j) out.edges.push_back(sub(f.edges[j - 1], f.edges[0]));
  } else {
    for (int j = 1; j <= f.dim(); ++j)
      if (j != drop) out.edges.push_back(f.edges[j - 1]);
  }
  return out;
}

struct RestEntry {
  std::size_t original;
  CanonFactor canon;
};

struct AlignmentInput {
  const Simplotope* patch;
  std::size_t oof_block;
  int dropped;
};

/// Builds the normalized factor list for one side. `middle` holds the original
/// factor index per middle position (-1 for padding).
struct SideLayout {
  std::size_t oof_block;
  int dropped;
  std::vector<int> middles;     // original factor indices, -1 = pad
  int end_block = -1;           // original factor matched to the other side's
                                // reduced oof factor, -1 = pad
};

NormalizedPatch build_side(const Simplotope& patch, const SideLayout& layout, bool oof_first,
                           const Point& anchor_vertex) {
  // Per-factor slot of the anchor vertex.
  std::vector<int> anchor_slots;
  {
    ProductCoords c = product_coordinates(patch, anchor_vertex);
    for (const auto& b : c.blocks) {
      int slot = -1;
      for (std::size_t j = 0; j < b.size(); ++j)
        if (b[j] == 1) slot = static_cast<int>(j);
      if (slot < 0) throw std::logic_error("anchor is not a vertex of the patch");
      anchor_slots.push_back(slot);
    }
  }

  auto anchored = [&](std::size_t fi, bool move_drop_last) {
    const Factor& f = patch.factor(fi);
    const int anchor = anchor_slots[fi];
    std::vector<Point> verts{Point(patch.ambient(), Rational(0))};
    for (const auto& e : f.edges) verts.push_back(e);
    struct SlotEdge {
      Point edge;
      int slot;
    };
    std::vector<SlotEdge> rest;
    for (int j = 0; j <= f.dim(); ++j) {
      if (j == anchor) continue;
      if (move_drop_last && j == layout.dropped) continue;
      rest.push_back({sub(verts[j], verts[anchor]), j});
    }
    std::sort(rest.begin(), rest.end(),
              [](const SlotEdge& a, const SlotEdge& b) { return lex_less(a.edge, b.edge); });
    if (move_drop_last) rest.push_back({sub(verts[layout.dropped], verts[anchor]), layout.dropped});
    Factor nf;
    FactorOrigin origin;
    origin.original_factor = static_cast<int>(fi);
    origin.slot_map.push_back(anchor);
    for (const auto& se : rest) {
      nf.edges.push_back(se.edge);
      origin.slot_map.push_back(se.slot);
    }
    return std::pair<Factor, FactorOrigin>{std::move(nf), std::move(origin)};
  };

  std::vector<Factor> factors;
  std::vector<FactorOrigin> origins;
  auto push = [&](int original, bool move_drop_last) {
    if (original < 0) {
      factors.push_back(Factor{});
      origins.push_back(FactorOrigin{});
      return;
    }
    auto [f, o] = anchored(static_cast<std::size_t>(original), move_drop_last);
    factors.push_back(std::move(f));
    origins.push_back(std::move(o));
  };

  if (oof_first) push(static_cast<int>(layout.oof_block), true);
  else push(layout.end_block, false);
  for (int m : layout.middles) push(m, false);
  if (oof_first) push(layout.end_block, false);
  else push(static_cast<int>(layout.oof_block), true);

  NormalizedPatch out{Simplotope(anchor_vertex, std::move(factors)), std::move(origins)};
  return out;
}

std::optional<NormalizedPair> align_pair(const Simplotope& left, const AlignmentInput& li,
                                         const Simplotope& right, const AlignmentInput& ri) {
  const std::size_t ambient = left.ambient();

  const CanonFactor reduced_left =
      canonical_factor(reduced_factor(left.factor(li.oof_block), li.dropped), ambient);
  const CanonFactor reduced_right =
      canonical_factor(reduced_factor(right.factor(ri.oof_block), ri.dropped), ambient);

  std::vector<RestEntry> rest_left, rest_right;
  for (std::size_t i = 0; i < left.factor_count(); ++i)
    if (i != li.oof_block) rest_left.push_back({i, canonical_factor(left.factor(i), ambient)});
  for (std::size_t i = 0; i < right.factor_count(); ++i)
    if (i != ri.oof_block) rest_right.push_back({i, canonical_factor(right.factor(i), ambient)});

  // Pure-simplex pair: both single-factor and the reduced factors coincide.
  const bool pure = rest_left.empty() && rest_right.empty();
  if (pure && !(reduced_left == reduced_right)) return std::nullopt;

  int right_head = -1, left_tail = -1;  // indices into rest_right / rest_left
  if (!pure) {
    if (reduced_left.edges.empty()) {
      // Reduced to a point: match a real zero-dimensional factor if present.
      for (std::size_t k = 0; k < rest_right.size(); ++k)
        if (rest_right[k].canon.edges.empty() && right_head < 0) right_head = static_cast<int>(k);
    } else {
      for (std::size_t k = 0; k < rest_right.size(); ++k)
        if (rest_right[k].canon == reduced_left) right_head = static_cast<int>(k);
      if (right_head < 0) return std::nullopt;
    }
    if (reduced_right.edges.empty()) {
      for (std::size_t k = 0; k < rest_left.size(); ++k)
        if (rest_left[k].canon.edges.empty() && left_tail < 0) left_tail = static_cast<int>(k);
    } else {
      for (std::size_t k = 0; k < rest_left.size(); ++k)
        if (rest_left[k].canon == reduced_right) left_tail = static_cast<int>(k);
      if (left_tail < 0) return std::nullopt;
    }
  }

  // Middle factors: positive-dimensional ones must match one-to-one.
  std::vector<RestEntry> mid_left, mid_right;
  for (std::size_t k = 0; k < rest_left.size(); ++k)
    if (static_cast<int>(k) != left_tail) mid_left.push_back(rest_left[k]);
  for (std::size_t k = 0; k < rest_right.size(); ++k)
    if (static_cast<int>(k) != right_head) mid_right.push_back(rest_right[k]);

  auto split = [](std::vector<RestEntry>& v) {
    std::vector<RestEntry> pos, zero;
    for (auto& e : v)
      (e.canon.edges.empty() ? zero : pos).push_back(e);
    std::sort(pos.begin(), pos.end(),
              [](const RestEntry& a, const RestEntry& b) { return canon_factor_lt(a.canon, b.canon); });
    return std::pair{pos, zero};
  };
  auto [pos_left, zero_left] = split(mid_left);
  auto [pos_right, zero_right] = split(mid_right);
  if (pos_left.size() != pos_right.size()) return std::nullopt;
  for (std::size_t k = 0; k < pos_left.size(); ++k)
    if (!(pos_left[k].canon == pos_right[k].canon)) return std::nullopt;

  // Geometric coincidence of the two facets.
  const Simplotope facet_left = facet_dropping(left, li.oof_block, li.dropped);
  const Simplotope facet_right = facet_dropping(right, ri.oof_block, ri.dropped);
  if (canonical_base(facet_left) != canonical_base(facet_right)) return std::nullopt;

  // Anchor both sides at the lexicographically smallest shared facet vertex.
  const auto facet_verts = facet_left.vertices();
  Point anchor = facet_verts[0];
  for (const auto& v : facet_verts)
    if (lex_less(v, anchor)) anchor = v;

  SideLayout llay, rlay;
  llay.oof_block = li.oof_block;
  llay.dropped = li.dropped;
  rlay.oof_block = ri.oof_block;
  rlay.dropped = ri.dropped;
  llay.end_block = left_tail < 0 ? -1 : static_cast<int>(rest_left[left_tail].original);
  rlay.end_block = right_head < 0 ? -1 : static_cast<int>(rest_right[right_head].original);
  // The right side's head factor plays position 1; reuse end_block storage.
  const std::size_t zero_mid = std::max(zero_left.size(), zero_right.size());
  for (std::size_t k = 0; k < pos_left.size(); ++k) {
    llay.middles.push_back(static_cast<int>(pos_left[k].original));
    rlay.middles.push_back(static_cast<int>(pos_right[k].original));
  }
  for (std::size_t k = 0; k < zero_mid; ++k) {
    llay.middles.push_back(k < zero_left.size() ? static_cast<int>(zero_left[k].original) : -1);
    rlay.middles.push_back(k < zero_right.size() ? static_cast<int>(zero_right[k].original) : -1);
  }

  NormalizedPair pair;
  if (pure) {
    // Single-factor normal form: no padding, the factor is both first and last.
    SideLayout l2 = llay, r2 = rlay;
    l2.middles.clear();
    r2.middles.clear();
    NormalizedPatch lp = build_side(left, l2, true, anchor);
    NormalizedPatch rp = build_side(right, r2, true, anchor);
    lp.shape = Simplotope(anchor, {lp.shape.factor(0)});
    lp.origin.resize(1);
    rp.shape = Simplotope(anchor, {rp.shape.factor(0)});
    rp.origin.resize(1);
    pair.left = std::move(lp);
    pair.right = std::move(rp);
  } else {
    pair.left = build_side(left, llay, true, anchor);
    pair.right = build_side(right, rlay, false, anchor);
  }

  // Shared factors must coincide exactly after anchoring.
  const std::size_t count = pair.left.shape.factor_count();
  for (std::size_t k = 0; k < count; ++k) {
    const auto& lf = pair.left.shape.factor(k).edges;
    const auto& rf = pair.right.shape.factor(k).edges;
    if (pure) {
      if (std::vector<Point>(lf.begin(), lf.end() - 1) !=
          std::vector<Point>(rf.begin(), rf.end() - 1))
        return std::nullopt;
      continue;
    }
    if (k == 0) {
      if (std::vector<Point>(lf.begin(), lf.end() - 1) != rf) return std::nullopt;
    } else if (k + 1 == count) {
      if (lf != std::vector<Point>(rf.begin(), rf.end() - 1)) return std::nullopt;
    } else {
      if (lf != rf) return std::nullopt;
    }
  }
  return pair;
}

}  // namespace

std::optional<SharedFacet> detect_shared_facet(const Simplotope& p, const Simplotope& q) {
  if (p.ambient() != q.ambient())
    throw std::invalid_argument("detect_shared_facet: ambient dimension mismatch");
  if (p.dim() != q.dim()) return std::nullopt;

  for (std::size_t i0 = 0; i0 < p.factor_count(); ++i0) {
    if (p.factor(i0).dim() < 1) continue;
    for (int j0 = 0; j0 <= p.factor(i0).dim(); ++j0) {
      for (std::size_t i1 = 0; i1 < q.factor_count(); ++i1) {
        if (q.factor(i1).dim() < 1) continue;
        for (int j1 = 0; j1 <= q.factor(i1).dim(); ++j1) {
          const bool swap = p.factor(i0).dim() > q.factor(i1).dim();
          const AlignmentInput pi{&p, i0, j0}, qi{&q, i1, j1};
          const auto& li = swap ? qi : pi;
          const auto& ri = swap ? pi : qi;
          auto aligned = align_pair(*li.patch, li, *ri.patch, ri);
          if (!aligned) continue;
          aligned->swapped = swap;

          SharedFacet info;
          info.eps_left = MultiIndex(p.factor_count(), 0);
          info.eps_left[i0] = 1;
          info.eps_right = MultiIndex(q.factor_count(), 0);
          info.eps_right[i1] = 1;
          info.oof_block_left = i0;
          info.oof_block_right = i1;
          info.dropped_slot_left = j0;
          info.dropped_slot_right = j1;

          // Facet vertex bijection in the callers' original selectors.
          std::map<Point, std::vector<int>> right_by_point;
          for (const auto& sel : q.vertex_selectors())
            if (sel[i1] != j1) right_by_point[q.vertex(sel)] = sel;
          for (const auto& sel : p.vertex_selectors()) {
            if (sel[i0] == j0) continue;
            const Point v = p.vertex(sel);
            auto it = right_by_point.find(v);
            if (it == right_by_point.end())
              throw std::logic_error("aligned facets disagree on a vertex");
            info.vertex_pairs.emplace_back(sel, it->second);
          }
          info.normalized = std::move(*aligned);
          return info;
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<Point> oof_span_intersection(const SharedFacet& info) {
  const auto& pair = info.normalized;
  const auto& u = pair.left.shape.factor(0).edges;
  const auto& v = pair.right.shape.factors().back().edges;
  return span_intersection(u, v);
}

bool is_oof_cospatial(const SharedFacet& info) { return !oof_span_intersection(info).empty(); }

}  // namespace spt
