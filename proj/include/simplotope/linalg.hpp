#pragma once

#include "simplotope/rational.hpp"

#include <optional>
#include <vector>

namespace spt {

/// Dense exact-rational matrix, row major. Sized for desk-scale elimination;
/// everything here is exact, there is no pivoting for numerical stability,
/// only for nonzero pivots.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix from_columns(const std::vector<Point>& columns);
  static Matrix from_rows(const std::vector<Point>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Point row(std::size_t r) const;

  void append_row(const Point& values);

  /// In-place reduced row echelon form; returns the pivot column of each
  /// nonzero row, in order.
  std::vector<std::size_t> reduce();

  std::size_t rank() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

/// Unique solution of A x = b where A's columns are independent and the system
/// is consistent; nullopt when inconsistent. Throws when columns are dependent.
std::optional<Point> solve_unique(const Matrix& a, const Point& b);

/// Basis of the nullspace of A, each vector of length A.cols().
std::vector<Point> nullspace(const Matrix& a);

/// Basis of span(u_1..u_p) ∩ span(v_1..v_q), canonical (reduced echelon rows).
std::vector<Point> span_intersection(const std::vector<Point>& u, const std::vector<Point>& v);

std::size_t span_rank(const std::vector<Point>& vectors);

/// True when `vec` lies in span(basis).
bool in_span(const std::vector<Point>& basis, const Point& vec);

/// True when the row spaces of the two matrices coincide (mutual containment).
bool row_spaces_equal(const Matrix& a, const Matrix& b);

/// General consistent solve: returns one solution of A x = b with the free
/// variables taken from `free_values` (indexed by column), plus the list of
/// pivot (determined) columns. nullopt when inconsistent.
struct GeneralSolution {
  Point solution;
  std::vector<std::size_t> pivot_columns;
};
std::optional<GeneralSolution> solve_general(const Matrix& a, const Point& b,
                                             const Point& free_values);

}  // namespace spt
