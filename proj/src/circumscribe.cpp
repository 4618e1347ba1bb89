#include "simplotope/circumscribe.hpp"

#include <stdexcept>

namespace spt {

namespace {

/// Vertex (i, j) of a circumscribed frame: [base + l * w_ij ; aux_i].
std::vector<Point> frame_vertices(const Simplotope& source, const std::vector<Point>& aux) {
  const std::size_t l = source.factor_count();
  const std::size_t aux_dim = l > 0 ? aux[0].size() : 0;
  const Rational scale(static_cast<int>(l));
  std::vector<Point> verts;
  for (std::size_t i = 0; i < l; ++i) {
    const Factor& f = source.factor(i);
    for (int j = 0; j <= f.dim(); ++j) {
      Point v = source.base();
      if (j > 0)
        for (std::size_t d = 0; d < v.size(); ++d) v[d] += scale * f.edges[j - 1][d];
      v.insert(v.end(), aux[i].begin(), aux[i].end());
      if (v.size() != source.ambient() + aux_dim) throw std::logic_error("frame vertex size");
      verts.push_back(std::move(v));
    }
  }
  return verts;
}

CircumscribedSimplex build(const Simplotope& source, std::vector<Point> aux) {
  CircumscribedSimplex out{Simplex(frame_vertices(source, aux)),
                           {},
                           std::vector<Rational>(source.factor_count(),
                                                 Rational(1, static_cast<int>(source.factor_count()))),
                           source,
                           std::move(aux)};
  for (const auto& f : source.factors()) out.partition.push_back(f.dim() + 1);
  return out;
}

}  // namespace

std::size_t CircumscribedSimplex::flat_slot(std::size_t block, int slot) const {
  std::size_t offset = 0;
  for (std::size_t i = 0; i < block; ++i) offset += partition[i];
  return offset + slot;
}

Point CircumscribedSimplex::slice_aux_offset(const std::vector<Rational>& a) const {
  const std::size_t aux_dim = aux.empty() ? 0 : aux[0].size();
  Point offset(aux_dim, Rational(0));
  for (std::size_t i = 0; i < aux.size(); ++i)
    for (std::size_t d = 0; d < aux_dim; ++d) offset[d] += a[i] * aux[i][d];
  return offset;
}

Point CircumscribedSimplex::pull_back(const Point& x, const std::vector<Rational>& a) const {
  if (a.size() != block_count()) throw std::invalid_argument("pull_back: weight count mismatch");
  const std::size_t n = source.ambient();
  if (x.size() != n + (aux.empty() ? 0 : aux[0].size()))
    throw std::invalid_argument("pull_back: point dimension mismatch");
  const Point expected = slice_aux_offset(a);
  for (std::size_t d = 0; d < expected.size(); ++d)
    if (x[n + d] != expected[d])
      throw std::invalid_argument("pull_back: point is not on the requested slice");

  // Decompose x - base over the factor direction spaces, then undo the
  // per-block scaling l * alpha_i.
  std::vector<Point> columns;
  for (const auto& f : source.factors())
    for (const auto& e : f.edges) columns.push_back(e);
  Point y(n);
  for (std::size_t d = 0; d < n; ++d) y[d] = x[d] - source.base()[d];
  Point result = source.base();
  if (columns.empty()) return result;
  auto sol = solve_unique(Matrix::from_columns(columns), y);
  if (!sol) throw std::invalid_argument("pull_back: point outside the source affine hull");
  const Rational l(static_cast<int>(block_count()));
  std::size_t pos = 0;
  for (std::size_t i = 0; i < block_count(); ++i) {
    const Factor& f = source.factor(i);
    for (int j = 0; j < f.dim(); ++j) {
      const Rational& coeff = (*sol)[pos++];
      if (coeff == 0) continue;
      if (a[i] == 0)
        throw std::invalid_argument("pull_back: nonzero component in a zero-weight block");
      const Rational scaled = coeff / (l * a[i]);
      for (std::size_t d = 0; d < n; ++d) result[d] += scaled * f.edges[j][d];
    }
  }
  return result;
}

std::vector<Point> CircumscribedSimplex::slice_vertices(const std::vector<Rational>& a) const {
  std::vector<Point> out;
  std::vector<int> selector(block_count(), 0);
  auto recurse = [&](auto&& self, std::size_t block) -> void {
    if (block == block_count()) {
      Point x(simplex.ambient(), Rational(0));
      for (std::size_t i = 0; i < block_count(); ++i) {
        const Point& v = simplex.vertex(flat_slot(i, selector[i]));
        for (std::size_t d = 0; d < x.size(); ++d) x[d] += a[i] * v[d];
      }
      out.push_back(pull_back(x, a));
      return;
    }
    for (int j = 0; j < partition[block]; ++j) {
      selector[block] = j;
      self(self, block + 1);
    }
  };
  recurse(recurse, 0);
  return out;
}

CircumscribedSimplex standard_circumscribed(const Simplotope& p) {
  const std::size_t l = p.factor_count();
  if (l == 0) throw std::invalid_argument("standard_circumscribed: empty simplotope");
  std::vector<Point> aux(l, Point(l - 1, Rational(0)));
  for (std::size_t i = 0; i + 1 < l; ++i) aux[i][i] = 1;
  for (std::size_t d = 0; d + 1 < l; ++d) aux[l - 1][d] = -1;
  return build(p, std::move(aux));
}

CircumscribedPair circumscribed_pair(const NormalizedPair& pair) {
  const std::size_t l = pair.left.shape.factor_count();
  if (l != pair.right.shape.factor_count())
    throw std::invalid_argument("circumscribed_pair: factor count mismatch");
  std::vector<Point> aux(l, Point(l - 1, Rational(0)));
  for (std::size_t i = 0; i + 1 < l; ++i) aux[i][i] = 1;  // last block tagged zero

  CircumscribedPair out{build(pair.left.shape, aux), build(pair.right.shape, aux), {}, 0, 0};

  const int nu1 = pair.left.shape.factor(0).dim();
  out.oof_slot_left = out.left.flat_slot(0, nu1);
  out.oof_slot_right = out.right.flat_slot(l - 1, pair.right.shape.factor(l - 1).dim());

  for (std::size_t i = 0; i < l; ++i) {
    const int left_dim = pair.left.shape.factor(i).dim();
    const int right_dim = pair.right.shape.factor(i).dim();
    int shared;  // largest slot present in both blocks
    if (l == 1) {
      if (right_dim != left_dim)
        throw std::invalid_argument("circumscribed_pair: pair is not in normal form");
      shared = left_dim - 1;
    } else if (i == 0) {
      if (right_dim != left_dim - 1)
        throw std::invalid_argument("circumscribed_pair: pair is not in normal form");
      shared = left_dim - 1;
    } else if (i + 1 == l) {
      if (right_dim != left_dim + 1)
        throw std::invalid_argument("circumscribed_pair: pair is not in normal form");
      shared = left_dim;
    } else {
      if (right_dim != left_dim)
        throw std::invalid_argument("circumscribed_pair: pair is not in normal form");
      shared = left_dim;
    }
    for (int j = 0; j <= shared; ++j) {
      const std::size_t ls = out.left.flat_slot(i, j);
      const std::size_t rs = out.right.flat_slot(i, j);
      if (out.left.simplex.vertex(ls) != out.right.simplex.vertex(rs))
        throw std::logic_error("circumscribed_pair: shared vertex mismatch");
      out.shared_slots.emplace_back(ls, rs);
    }
  }
  if (out.shared_slots.size() != static_cast<std::size_t>(out.left.dim()))
    throw std::logic_error("circumscribed_pair: shared facet slot count mismatch");
  return out;
}

TensorNet extract_net(const CircumscribedSimplex& c, const SimplexNet& net,
                      const std::vector<int>& delta) {
  if (delta.size() != c.block_count())
    throw std::invalid_argument("extract_net: one degree per block required");
  int total = 0;
  for (int d : delta) {
    if (d < 0) throw std::invalid_argument("extract_net: negative degree");
    total += d;
  }
  if (!net.entries.empty() && norm(net.entries.front().first) != total)
    throw std::invalid_argument("extract_net: net degree does not match |delta|");

  std::vector<Rational> a(delta.size());
  for (std::size_t i = 0; i < delta.size(); ++i) a[i] = Rational(delta[i], total == 0 ? 1 : total);

  TensorNet out;
  for (const auto& [flat, point] : net.entries) {
    BlockedIndex blocked = reblock(flat, c.partition);
    bool keep = true;
    for (std::size_t i = 0; i < delta.size(); ++i)
      if (norm(blocked.blocks[i]) != delta[i]) keep = false;
    if (!keep) continue;
    out.entries.emplace_back(std::move(blocked), c.pull_back(point, a));
  }
  return out;
}

}  // namespace spt
