#include "sgf/linalg.hpp"

#include <cassert>

#include "sgf/errors.hpp"

namespace sgf {

namespace {

// Row echelon with full pivot-by-first-nonzero, in place. Returns the pivot
// column of each eliminated row.
std::vector<std::size_t> eliminate(RatMatrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t sel = row;
    while (sel < rows && m[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[row]);
    Rat inv = m[row][col];
    for (std::size_t c = col; c < cols; ++c) m[row][c] /= inv;
    for (std::size_t rr = 0; rr < rows; ++rr) {
      if (rr == row || m[rr][col] == 0) continue;
      Rat f = m[rr][col];
      for (std::size_t c = col; c < cols; ++c) m[rr][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

SolveResult solve_exact(const RatMatrix& a, const std::vector<Rat>& b) {
  const std::size_t rows = a.size();
  if (rows != b.size())
    throw DimensionMismatchError("matrix and right-hand side disagree");
  const std::size_t cols = rows ? a[0].size() : 0;
  for (const auto& r : a)
    if (r.size() != cols) throw DimensionMismatchError("ragged matrix");

  RatMatrix aug(rows, std::vector<Rat>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  auto pivots = eliminate(aug);

  SolveResult out;
  // A pivot in the augmented column means 0 = nonzero somewhere.
  if (!pivots.empty() && pivots.back() == cols) {
    out.status = SolveStatus::Inconsistent;
    return out;
  }
  for (std::size_t i = pivots.size(); i < rows; ++i)
    if (aug[i][cols] != 0) {
      out.status = SolveStatus::Inconsistent;
      return out;
    }
  if (pivots.size() < cols) {
    out.status = SolveStatus::Underdetermined;
    return out;
  }
  out.status = SolveStatus::Unique;
  out.solution.assign(cols, Rat(0));
  for (std::size_t i = 0; i < pivots.size(); ++i)
    out.solution[pivots[i]] = aug[i][cols];
  return out;
}

std::size_t matrix_rank(const RatMatrix& a) {
  RatMatrix m = a;
  return eliminate(m).size();
}

std::optional<RatMatrix> matrix_inverse(const RatMatrix& a) {
  const std::size_t n = a.size();
  for (const auto& r : a)
    if (r.size() != n) throw DimensionMismatchError("inverse of a non-square");
  RatMatrix aug(n, std::vector<Rat>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = Rat(1);
  }
  auto pivots = eliminate(aug);
  if (pivots.size() < n || pivots.back() >= n) return std::nullopt;
  RatMatrix inv(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

}  // namespace sgf
