#include "simplotope/linalg.hpp"

#include <stdexcept>

namespace spt {

Matrix Matrix::from_columns(const std::vector<Point>& columns) {
  if (columns.empty()) return Matrix(0, 0);
  Matrix m(columns[0].size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != m.rows_) throw std::invalid_argument("ragged column set");
    for (std::size_t r = 0; r < m.rows_; ++r) m.at(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<Point>& rows) {
  if (rows.empty()) return Matrix(0, 0);
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged row set");
    for (std::size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Point Matrix::row(std::size_t r) const {
  return Point(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

void Matrix::append_row(const Point& values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw std::invalid_argument("append_row: width mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

std::vector<std::size_t> Matrix::reduce() {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < cols_ && lead_row < rows_; ++col) {
    std::size_t pivot = lead_row;
    while (pivot < rows_ && at(pivot, col) == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != lead_row)
      for (std::size_t c = 0; c < cols_; ++c) std::swap(at(pivot, c), at(lead_row, c));
    const Rational scale = at(lead_row, col);
    for (std::size_t c = col; c < cols_; ++c) at(lead_row, c) /= scale;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == lead_row || at(r, col) == 0) continue;
      const Rational factor = at(r, col);
      for (std::size_t c = col; c < cols_; ++c) at(r, c) -= factor * at(lead_row, c);
    }
    pivots.push_back(col);
    ++lead_row;
  }
  return pivots;
}

std::size_t Matrix::rank() const {
  Matrix copy = *this;
  return copy.reduce().size();
}

std::optional<Point> solve_unique(const Matrix& a, const Point& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_unique: size mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[r];
  }
  const auto pivots = aug.reduce();
  for (std::size_t p : pivots)
    if (p == a.cols()) return std::nullopt;  // inconsistent row 0...0 | 1
  if (pivots.size() != a.cols())
    throw std::invalid_argument("solve_unique: columns are linearly dependent");
  Point x(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, a.cols());
  return x;
}

std::optional<GeneralSolution> solve_general(const Matrix& a, const Point& b,
                                             const Point& free_values) {
  if (b.size() != a.rows() || free_values.size() != a.cols())
    throw std::invalid_argument("solve_general: size mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[r];
  }
  const auto pivots = aug.reduce();
  for (std::size_t p : pivots)
    if (p == a.cols()) return std::nullopt;

  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  GeneralSolution out;
  out.solution = Point(a.cols());
  out.pivot_columns = pivots;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) out.solution[c] = free_values[c];
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    Rational value = aug.at(i, a.cols());
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!is_pivot[c] && aug.at(i, c) != 0) value -= aug.at(i, c) * out.solution[c];
    out.solution[pivots[i]] = value;
  }
  return out;
}

std::vector<Point> nullspace(const Matrix& a) {
  Matrix red = a;
  const auto pivots = red.reduce();
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<Point> basis;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (is_pivot[c]) continue;
    Point v(a.cols());
    v[c] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red.at(i, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t span_rank(const std::vector<Point>& vectors) {
  if (vectors.empty()) return 0;
  return Matrix::from_rows(vectors).rank();
}

bool in_span(const std::vector<Point>& basis, const Point& vec) {
  bool zero = true;
  for (const auto& v : vec)
    if (v != 0) zero = false;
  if (zero) return true;
  if (basis.empty()) return false;
  auto rows = basis;
  const std::size_t base_rank = span_rank(rows);
  rows.push_back(vec);
  return span_rank(rows) == base_rank;
}

std::vector<Point> span_intersection(const std::vector<Point>& u, const std::vector<Point>& v) {
  if (u.empty() || v.empty()) return {};
  const std::size_t dim = u[0].size();
  // Columns [U | -V]; nullspace coordinates give x with U x_u = V x_v.
  std::vector<Point> columns;
  columns.reserve(u.size() + v.size());
  for (const auto& c : u) columns.push_back(c);
  for (const auto& c : v) {
    Point neg(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) neg[i] = -c[i];
    columns.push_back(neg);
  }
  const Matrix system = Matrix::from_columns(columns);
  std::vector<Point> raw;
  for (const auto& n : nullspace(system)) {
    Point w(dim, Rational(0));
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t d = 0; d < dim; ++d) w[d] += n[i] * u[i][d];
    raw.push_back(std::move(w));
  }
  if (raw.empty()) return {};
  // Canonicalize: reduced echelon rows, zero rows dropped.
  Matrix m = Matrix::from_rows(raw);
  const auto pivots = m.reduce();
  std::vector<Point> basis;
  for (std::size_t i = 0; i < pivots.size(); ++i) basis.push_back(m.row(i));
  return basis;
}

bool row_spaces_equal(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("row_spaces_equal: column count mismatch");
  Matrix ra = a, rb = b;
  const std::size_t rank_a = ra.reduce().size();
  const std::size_t rank_b = rb.reduce().size();
  if (rank_a != rank_b) return false;
  Matrix stacked = a;
  for (std::size_t r = 0; r < b.rows(); ++r) stacked.append_row(b.row(r));
  return stacked.rank() == rank_a;
}

}  // namespace spt
