#include "simplotope/continuity.hpp"

#include "simplotope/degree_ops.hpp"

#include <algorithm>
#include <stdexcept>

namespace spt {

namespace {

template <class K>
LinearForm at_or_zero(const std::map<K, LinearForm>& m, const K& key) {
  auto it = m.find(key);
  return it == m.end() ? LinearForm{} : it->second;
}

Point primitive_direction(const Point& v) {
  Integer common_den = 1;
  for (const auto& r : v)
    common_den = boost::multiprecision::lcm(common_den, boost::multiprecision::denominator(r));
  std::vector<Integer> nums;
  Integer g = 0;
  for (const auto& r : v) {
    Integer n = boost::multiprecision::numerator(r * Rational(common_den));
    g = boost::multiprecision::gcd(g, n);
    nums.push_back(std::move(n));
  }
  if (g == 0) return v;
  int sign = 0;
  for (const auto& n : nums)
    if (n != 0) {
      sign = n < 0 ? -1 : 1;
      break;
    }
  Point out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(nums[i] * sign / g);
  return out;
}

}  // namespace

std::optional<LinearCondition> normalize_condition(const LinearForm& form, int rho,
                                                   bool completion) {
  std::vector<ConditionTerm> terms;
  for (const auto& [ref, w] : form.terms)
    if (w != 0) terms.push_back({ref, w});
  if (terms.empty()) return std::nullopt;
  std::sort(terms.begin(), terms.end(), [](const ConditionTerm& a, const ConditionTerm& b) {
    if (a.ref.patch != b.ref.patch) return a.ref.patch < b.ref.patch;
    return b.ref.index < a.ref.index;  // descending lexicographic within a patch
  });
  const Rational lead = terms[0].weight;
  for (auto& t : terms) t.weight /= lead;
  LinearCondition out;
  out.terms = std::move(terms);
  out.rho = rho;
  out.completion = completion;
  return out;
}

ConditionSet simplex_conditions(const Simplex& left, const Simplex& right, int degree, int order,
                                const Point& u) {
  const int n = left.dim();
  if (right.dim() != n) throw std::invalid_argument("simplex_conditions: dimension mismatch");
  if (degree < 0) throw std::invalid_argument("simplex_conditions: negative degree");
  if (order < 0 || order > degree)
    throw std::invalid_argument("simplex_conditions: order must lie in [0, degree]");

  // Pair up the shared vertices; exactly one vertex per side stays unmatched.
  std::vector<int> left_to_right(n + 1, -1);
  std::vector<bool> right_used(n + 1, false);
  int left_oof = -1;
  for (int j = 0; j <= n; ++j) {
    for (int k = 0; k <= n; ++k) {
      if (right_used[k]) continue;
      if (left.vertex(j) == right.vertex(k)) {
        left_to_right[j] = k;
        right_used[k] = true;
        break;
      }
    }
    if (left_to_right[j] < 0) {
      if (left_oof >= 0) throw std::invalid_argument("simplex_conditions: no shared facet");
      left_oof = j;
    }
  }
  int right_oof = -1;
  for (int k = 0; k <= n; ++k)
    if (!right_used[k]) right_oof = k;
  if (left_oof < 0 || right_oof < 0)
    throw std::invalid_argument("simplex_conditions: simplices coincide, no out-of-facet vertex");

  const DirectionWeights s = direction_coordinates(left, u);
  const DirectionWeights st = direction_coordinates(right, u);
  if (s[left_oof] == 0)
    throw std::invalid_argument("simplex_conditions: direction is parallel to the shared facet");

  // Work in permuted slots: out-of-facet first on the left, last on the right,
  // shared slots aligned pairwise.
  std::vector<int> left_perm{left_oof};
  for (int j = 0; j <= n; ++j)
    if (j != left_oof) left_perm.push_back(j);
  std::vector<int> right_perm;
  for (int i = 1; i <= n; ++i) right_perm.push_back(left_to_right[left_perm[i]]);
  right_perm.push_back(right_oof);

  std::vector<Rational> s_p(n + 1), st_p(n + 1);
  for (int i = 0; i <= n; ++i) {
    s_p[i] = s[left_perm[i]];
    st_p[i] = st[right_perm[i]];
  }

  auto seed = [&](int patch, const std::vector<int>& perm) {
    std::map<MultiIndex, LinearForm> out;
    for (const auto& k : enumerate_indices(n + 1, degree)) {
      MultiIndex original(n + 1);
      for (int i = 0; i <= n; ++i) original[perm[i]] = k[i];
      LinearForm form;
      form.terms[CoefficientRef{patch, BlockedIndex{{original}}}] = 1;
      out[k] = std::move(form);
    }
    return out;
  };
  const auto left_seed = seed(0, left_perm);
  const auto right_seed = seed(1, right_perm);

  ConditionSet cs;
  cs.order = order;
  cs.direction = u;
  cs.patches.push_back(PatchMeta{"left", {n}, {degree}});
  cs.patches.push_back(PatchMeta{"right", {n}, {degree}});
  {
    const Point base = left.vertex(left_perm[1]);
    Factor f;
    for (int i = 2; i <= n; ++i) {
      Point e = left.vertex(left_perm[i]);
      for (std::size_t d = 0; d < e.size(); ++d) e[d] -= base[d];
      f.edges.push_back(std::move(e));
    }
    cs.facet = Simplotope(base, {std::move(f)});
  }

  auto lmap = left_seed;
  auto rmap = right_seed;
  for (int rho = 0; rho <= order; ++rho) {
    if (rho > 0) {
      lmap = de_casteljau_step(lmap, s_p);
      rmap = de_casteljau_step(rmap, st_p);
    }
    for (const auto& kf : enumerate_indices(n, degree - rho)) {
      MultiIndex lkey{0};
      lkey.insert(lkey.end(), kf.begin(), kf.end());
      MultiIndex rkey = kf;
      rkey.push_back(0);
      LinearForm row = at_or_zero(lmap, lkey) - at_or_zero(rmap, rkey);
      if (auto c = normalize_condition(row, rho, false)) cs.conditions.push_back(std::move(*c));
    }
  }
  return cs;
}

Point choose_transversal_direction(const SharedFacet& info) {
  if (!is_oof_cospatial(info))
    throw std::invalid_argument("patches are not out-of-facet cospatial");
  const auto& np = info.normalized;
  const auto& oof_edges = np.left.shape.factor(0).edges;
  const std::size_t nu1 = oof_edges.size();
  Point preferred = oof_edges[nu1 - 1];
  if (nu1 >= 2)
    for (std::size_t d = 0; d < preferred.size(); ++d) preferred[d] -= oof_edges[nu1 - 2][d];
  if (in_span(np.right.shape.factors().back().edges, preferred)) return preferred;
  const auto basis = oof_span_intersection(info);
  Point best = basis.front();
  for (const auto& b : basis)
    if (b < best) best = b;
  return primitive_direction(best);
}

namespace {

/// Normalized-label blocked index -> the caller's own blocked index.
BlockedIndex to_original(const NormalizedPatch& patch, const BlockedIndex& key,
                         std::size_t original_factors) {
  BlockedIndex out;
  out.blocks.resize(original_factors);
  for (std::size_t k = 0; k < patch.origin.size(); ++k) {
    const FactorOrigin& o = patch.origin[k];
    if (o.padded()) continue;
    MultiIndex part(o.slot_map.size());
    for (std::size_t j = 0; j < o.slot_map.size(); ++j) part[o.slot_map[j]] = key.blocks[k][j];
    out.blocks[o.original_factor] = std::move(part);
  }
  return out;
}

std::vector<int> facet_slot_counts(const NormalizedPair& np) {
  std::vector<int> slots;
  const std::size_t l = np.left.shape.factor_count();
  for (std::size_t k = 0; k < l; ++k) {
    int s = np.left.shape.factor(k).dim() + 1;
    if (k == 0 && l > 1) s -= 1;  // out-of-facet slot removed
    slots.push_back(s);
  }
  if (l == 1) slots[0] -= 1;
  return slots;
}

MultiIndex left_flat_key(const NormalizedPair& np, const BlockedIndex& g) {
  const std::size_t l = np.left.shape.factor_count();
  MultiIndex flat;
  for (std::size_t k = 0; k < l; ++k) {
    flat.insert(flat.end(), g.blocks[k].begin(), g.blocks[k].end());
    if (k == 0) flat.push_back(0);  // out-of-facet slot of the left patch
  }
  return flat;
}

MultiIndex right_flat_key(const NormalizedPair& np, const BlockedIndex& g) {
  const std::size_t l = np.left.shape.factor_count();
  MultiIndex flat;
  for (std::size_t k = 0; k < l; ++k)
    flat.insert(flat.end(), g.blocks[k].begin(), g.blocks[k].end());
  flat.push_back(0);  // out-of-facet slot of the right patch
  return flat;
}

}  // namespace

ConditionSet mixed_conditions(const PatchInput& first, const PatchInput& second, int order,
                              const Point& u_in) {
  if (first.degrees.size() != first.shape.factor_count() ||
      second.degrees.size() != second.shape.factor_count())
    throw std::invalid_argument("mixed_conditions: one degree per factor required");
  auto detected = detect_shared_facet(first.shape, second.shape);
  if (!detected)
    throw std::invalid_argument("patches '" + first.id + "' and '" + second.id +
                                "' do not share a facet");
  const SharedFacet& info = *detected;
  if (!is_oof_cospatial(info))
    throw std::invalid_argument("patches '" + first.id + "' and '" + second.id +
                                "' are not out-of-facet cospatial");
  const NormalizedPair& np = info.normalized;
  const PatchInput& uleft = np.swapped ? second : first;
  const PatchInput& uright = np.swapped ? first : second;
  const int left_rank = np.swapped ? 1 : 0;
  const int right_rank = 1 - left_rank;

  const std::size_t l = np.left.shape.factor_count();
  std::vector<int> delta(l, -1);
  for (std::size_t k = 0; k < l; ++k) {
    const int ld =
        np.left.origin[k].padded() ? -1 : uleft.degrees.at(np.left.origin[k].original_factor);
    const int rd =
        np.right.origin[k].padded() ? -1 : uright.degrees.at(np.right.origin[k].original_factor);
    if (ld >= 0 && rd >= 0 && ld != rd)
      throw std::invalid_argument("patches '" + first.id + "' and '" + second.id +
                                  "' have mismatched degrees on an aligned factor");
    delta[k] = ld >= 0 ? ld : rd;
    if (delta[k] < 0) delta[k] = 0;
  }
  const int d1 = delta[0];
  const int dl = delta[l - 1];
  const int nu1 = np.left.shape.factor(0).dim();
  if (order < 0) throw std::invalid_argument("mixed_conditions: negative order");
  if (order > d1 || order > dl)
    throw std::invalid_argument("mixed_conditions: order exceeds an out-of-facet block degree");

  const Point u = u_in;
  bool u_zero = true;
  for (const auto& c : u)
    if (c != 0) u_zero = false;
  if (u_zero) throw std::invalid_argument("mixed_conditions: zero transversal direction");
  const DirectionWeights s_left = factor_direction_weights(np.left.shape, 0, u);
  const DirectionWeights s_right = factor_direction_weights(np.right.shape, l - 1, u);

  const CircumscribedPair circ = circumscribed_pair(np);
  const std::size_t flat_slots = static_cast<std::size_t>(circ.left.dim()) + 1;

  std::vector<Rational> s_left_flat(flat_slots, Rational(0));
  for (int j = 0; j <= nu1; ++j) s_left_flat[circ.left.flat_slot(0, j)] = s_left[j];
  std::vector<Rational> s_right_flat(flat_slots, Rational(0));
  for (int j = 0; j <= np.right.shape.factor(l - 1).dim(); ++j)
    s_right_flat[circ.right.flat_slot(l - 1, j)] = s_right[j];

  // Identity seeds over the two canonical nets, labeled with caller indices.
  std::map<MultiIndex, LinearForm> left_seed;
  for (const auto& key : enumerate_blocked(np.left.shape.type(), delta)) {
    LinearForm form;
    form.terms[CoefficientRef{left_rank,
                              to_original(np.left, key, uleft.shape.factor_count())}] = 1;
    left_seed[key.flattened()] = std::move(form);
  }
  std::map<BlockedIndex, LinearForm> right_basis;
  for (const auto& key : enumerate_blocked(np.right.shape.type(), delta)) {
    LinearForm form;
    form.terms[CoefficientRef{right_rank,
                              to_original(np.right, key, uright.shape.factor_count())}] = 1;
    right_basis[key] = std::move(form);
  }

  ConditionSet cs;
  cs.order = order;
  cs.direction = u;
  cs.patches.push_back(PatchMeta{first.id, first.shape.type(), first.degrees});
  cs.patches.push_back(PatchMeta{second.id, second.shape.type(), second.degrees});
  cs.swapped = np.swapped;
  cs.equal_oof_dims = (nu1 == np.right.shape.factor(l - 1).dim());
  cs.facet = np.facet();

  const std::vector<int> face_slots = facet_slot_counts(np);
  std::vector<int> face_nu(face_slots.size());
  for (std::size_t k = 0; k < face_slots.size(); ++k) face_nu[k] = face_slots[k] - 1;

  auto face_degrees = [&](int drop_first, int drop_last) {
    std::vector<int> fd = delta;
    fd[0] -= drop_first;
    fd[l - 1] -= drop_last;
    return fd;
  };

  // Plain canonical right seeds, used by the consistency rows.
  std::map<MultiIndex, LinearForm> right_seed_plain;
  for (const auto& [key, form] : right_basis) right_seed_plain[key.flattened()] = form;

  for (int rho = 0; rho <= order; ++rho) {
    // Left side of the theorem rows.
    const auto lmap = de_casteljau(left_seed, s_left_flat, rho);

    // Right side: references live on the degree-redistributed net; express
    // them over the canonical net (raising in the last block is exact, the
    // first-block lowering is the printed operator, pivot slot 0).
    std::map<MultiIndex, LinearForm> right_sub_flat;
    if (l == 1 || rho == 0) {
      right_sub_flat = right_seed_plain;
    } else {
      auto raised = raise_block_degree(right_basis, l - 1,
                                       np.right.shape.factor(l - 1).dim() + 1, dl, rho);
      auto lowered = lower_block_degree(raised, 0, nu1, d1 - rho, rho, 0);
      for (const auto& [key, form] : lowered) right_sub_flat[key.flattened()] = form;
    }
    const auto rmap = de_casteljau(right_sub_flat, s_right_flat, rho);

    for (const auto& g : enumerate_blocked(face_nu, face_degrees(rho, 0))) {
      LinearForm row =
          at_or_zero(lmap, left_flat_key(np, g)) - at_or_zero(rmap, right_flat_key(np, g));
      if (auto c = normalize_condition(row, rho, false)) cs.conditions.push_back(std::move(*c));
    }

    // Degree-consistency rows: the right side's raised derivative net must be
    // a raising of a lower first-block degree. Trivial when the left
    // out-of-facet factor is an edge; required beyond that.
    if (rho >= 1 && l >= 2 && nu1 >= 2) {
      const auto rplain = de_casteljau(right_seed_plain, s_right_flat, rho);
      std::map<BlockedIndex, LinearForm> f;
      for (const auto& h : enumerate_blocked(face_nu, face_degrees(0, rho)))
        f[h] = at_or_zero(rplain, right_flat_key(np, h));
      auto x = raise_block_degree(f, l - 1, face_slots[l - 1], dl - rho, rho);
      auto y = lower_block_degree(x, 0, face_slots[0], d1 - rho, rho, 0);
      auto z = raise_block_degree(y, 0, face_slots[0], d1 - rho, rho);
      bool any = false;
      for (const auto& g : enumerate_blocked(face_nu, face_degrees(0, 0))) {
        LinearForm row = at_or_zero(x, g) - at_or_zero(z, g);
        if (auto c = normalize_condition(row, rho, true)) {
          cs.conditions.push_back(std::move(*c));
          any = true;
        }
      }
      if (any) cs.has_completion_rows = true;
    }
  }
  return cs;
}

ConditionSet mixed_conditions(const PatchInput& first, const PatchInput& second, int order) {
  auto detected = detect_shared_facet(first.shape, second.shape);
  if (!detected)
    throw std::invalid_argument("patches '" + first.id + "' and '" + second.id +
                                "' do not share a facet");
  return mixed_conditions(first, second, order, choose_transversal_direction(*detected));
}

SmoothnessSystem assemble_smoothness_system(
    const std::vector<PatchInput>& patches,
    const std::vector<std::pair<std::size_t, std::size_t>>& adjacencies, int order) {
  SmoothnessSystem out;
  std::map<std::pair<std::size_t, BlockedIndex>, std::size_t> column_of;
  for (std::size_t p = 0; p < patches.size(); ++p) {
    if (patches[p].degrees.size() != patches[p].shape.factor_count())
      throw std::invalid_argument("assemble_smoothness_system: one degree per factor required");
    for (const auto& key : enumerate_blocked(patches[p].shape.type(), patches[p].degrees)) {
      column_of[{p, key}] = out.columns.size();
      out.columns.emplace_back(patches[p].id, key);
    }
  }
  for (const auto& [a, b] : adjacencies) {
    ConditionSet cs = mixed_conditions(patches.at(a), patches.at(b), order);
    for (const auto& condition : cs.conditions) {
      std::vector<std::pair<std::size_t, Rational>> row;
      for (const auto& term : condition.terms) {
        const std::size_t patch_index = term.ref.patch == 0 ? a : b;
        auto it = column_of.find({patch_index, term.ref.index});
        if (it == column_of.end())
          throw std::logic_error("assemble_smoothness_system: reference outside the canonical net");
        row.emplace_back(it->second, term.weight);
      }
      out.rows.push_back(std::move(row));
    }
    out.pair_sets.push_back(std::move(cs));
  }
  return out;
}

}  // namespace spt
