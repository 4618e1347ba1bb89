#pragma once

#include "simplotope/bernstein.hpp"
#include "simplotope/geometry.hpp"

#include <utility>
#include <vector>

namespace spt {

/// A simplex of dimension source.dim() + l - 1 whose intersection with the
/// per-block weight hyperplanes { sum_j b_ij = alpha_i } reproduces the source
/// simplotope. Vertices are ordered partition-block by partition-block; vertex
/// (i, j) is [base + l * w_ij ; aux_i] with a per-block auxiliary tag aux_i in
/// the l-1 extra dimensions.
struct CircumscribedSimplex {
  Simplex simplex;
  std::vector<int> partition;        // slots per block (nu_i + 1)
  std::vector<Rational> alpha;       // positive, sums to 1
  Simplotope source;
  std::vector<Point> aux;            // per-block auxiliary tag, length l-1 each

  std::size_t block_count() const { return partition.size(); }
  int dim() const { return simplex.dim(); }

  /// Flat vertex slot of (block, slot-within-block).
  std::size_t flat_slot(std::size_t block, int slot) const;

  /// Auxiliary coordinates shared by every point of the weight-`a` slice.
  Point slice_aux_offset(const std::vector<Rational>& a) const;

  /// Maps a point of the weight-`a` slice back to the source frame, undoing
  /// the per-block scaling. Throws when the point is off that slice.
  Point pull_back(const Point& x, const std::vector<Rational>& a) const;

  /// Vertices of the weight-`a` slice, mapped back to the source frame.
  /// With the stored alpha this recovers exactly the source vertex set.
  std::vector<Point> slice_vertices(const std::vector<Rational>& a) const;
};

/// The standard construction: block i of l gets auxiliary tag e_i, the last
/// block gets -1, all weights 1/l. A single-factor source is returned as is.
CircumscribedSimplex standard_circumscribed(const Simplotope& p);

/// Circumscribed simplices of a facet-sharing pair over one coordinate frame,
/// built so that all facet vertices coincide exactly and only the two
/// out-of-facet vertices differ. Auxiliary tags are e_i for blocks before the
/// last and zero for the last block, so the sources sit at a constant
/// auxiliary offset, removed by pull_back.
struct CircumscribedPair {
  CircumscribedSimplex left, right;
  /// Flat slot pairs of coinciding vertices; exactly m of them (the shared
  /// facet of the two m-simplices).
  std::vector<std::pair<std::size_t, std::size_t>> shared_slots;
  std::size_t oof_slot_left = 0, oof_slot_right = 0;
};

CircumscribedPair circumscribed_pair(const NormalizedPair& pair);

/// Selects from the total-degree net of the circumscribed simplex the entries
/// whose per-block norms match delta, re-blocks their indices, and pulls the
/// domain points back to the source frame at weights delta_i/|delta|.
TensorNet extract_net(const CircumscribedSimplex& c, const SimplexNet& net,
                      const std::vector<int>& delta);

}  // namespace spt
