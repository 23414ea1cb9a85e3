#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "tpscaffold/rational.hpp"

namespace tpscaffold {

/// A 1-based grid position.
struct Cell {
  std::size_t row = 0;
  std::size_t col = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::ostream& operator<<(std::ostream& os, const Cell& c);

/// Dense m x n matrix of exact rationals, indexed from 1 like the
/// mathematics it implements. Both dimensions are positive.
class Matrix {
 public:
  /// Zero matrix. Throws PreconditionError if a dimension is zero.
  Matrix(std::size_t rows, std::size_t cols);

  /// Row-major literal, e.g. Matrix{{8, Rational(7, 2), 1}, {1, Rational(1, 2), 1}}.
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  /// Unchecked 1-based access.
  Rational& operator()(std::size_t i, std::size_t j) { return data_[(i - 1) * cols_ + (j - 1)]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[(i - 1) * cols_ + (j - 1)];
  }
  const Rational& operator()(Cell c) const { return (*this)(c.row, c.col); }

  /// Checked 1-based access; throws PreconditionError when out of range.
  const Rational& at(std::size_t i, std::size_t j) const;

  std::vector<Rational> row(std::size_t i) const;
  std::vector<Rational> column(std::size_t j) const;

  /// True when every entry is strictly positive.
  bool is_positive() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

/// Strictly increasing, nonempty list of 1-based indices.
class IndexSet {
 public:
  /// Throws PreconditionError unless nonempty, strictly increasing and >= 1.
  IndexSet(std::vector<std::size_t> indices);  // NOLINT(google-explicit-constructor)
  IndexSet(std::initializer_list<std::size_t> indices);

  /// {first, first + 1, ..., last}.
  static IndexSet range(std::size_t first, std::size_t last);

  std::size_t size() const noexcept { return indices_.size(); }
  std::size_t front() const { return indices_.front(); }
  std::size_t back() const { return indices_.back(); }
  std::size_t operator[](std::size_t k) const { return indices_[k]; }
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }
  std::span<const std::size_t> view() const noexcept { return indices_; }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<std::size_t> indices_;
};

std::ostream& operator<<(std::ostream& os, const IndexSet& s);

/// All k-element subsets of {1..n} in lexicographic order.
std::vector<IndexSet> index_subsets(std::size_t n, std::size_t k);

Matrix submatrix(const Matrix& a, const IndexSet& rows, const IndexSet& cols);

/// Contiguous-submatrix shorthands. With k = min(m - i, n - j):
///   leading_contiguous   A[{i..i+k}, {j..j+k}]
///   trailing_contiguous  A[{i-k..i}, {j-k..j}]            (k = min(i-1, j-1))
///   leading_with_prefix  A[{i0, i..i+k}, {j0, j..j+k}]     (i0 < i, j0 < j)
///   trailing_with_suffix A[{i-k..i, i0}, {j-k..j, j0}]     (i0 > i, j0 > j, k = min(i-1, j-1))
Matrix leading_contiguous(const Matrix& a, std::size_t i, std::size_t j);
Matrix trailing_contiguous(const Matrix& a, std::size_t i, std::size_t j);
Matrix leading_with_prefix(const Matrix& a, std::size_t i0, std::size_t i, std::size_t j0,
                           std::size_t j);
Matrix trailing_with_suffix(const Matrix& a, std::size_t i, std::size_t i0, std::size_t j,
                            std::size_t j0);

/// det A[I, J] by fraction-free elimination over the integers.
Rational minor(const Matrix& a, const IndexSet& rows, const IndexSet& cols);

/// Determinant of a square matrix.
Rational determinant(const Matrix& a);

/// Determinant of A restricted to explicit row and column lists. Empty lists
/// give 1; lists must have equal length and be in range.
Rational minor_of(const Matrix& a, std::span<const std::size_t> rows,
                  std::span<const std::size_t> cols);

// Minor forms that tolerate an empty contiguous part. The contiguous block
// {i..} is empty when i = 0 or i exceeds the dimension, and an empty minor is 1.

/// det A[{i..}, {j..}].
Rational leading_minor(const Matrix& a, std::size_t i, std::size_t j);
/// det A[{i0, i..}, {j0, j..}].
Rational leading_prefix_minor(const Matrix& a, std::size_t i0, std::size_t i, std::size_t j0,
                              std::size_t j);
/// det A[{..i, i0}, {..j, j0}].
Rational trailing_suffix_minor(const Matrix& a, std::size_t i, std::size_t i0, std::size_t j,
                               std::size_t j0);

Matrix transpose(const Matrix& a);

/// Reflection across the anti-diagonal: result(i, j) = a(m + 1 - j, n + 1 - i).
Matrix anti_transpose(const Matrix& a);

/// Rotation by a half turn: result(i, j) = a(m + 1 - i, n + 1 - j).
Matrix rotate_half_turn(const Matrix& a);

/// Rows first..last (inclusive) as a new matrix.
Matrix row_block(const Matrix& a, std::size_t first, std::size_t last);
/// Columns first..last (inclusive) as a new matrix.
Matrix column_block(const Matrix& a, std::size_t first, std::size_t last);

/// Copy of `a` with `line` inserted as a new row so that it becomes row `position`.
Matrix with_row_inserted(const Matrix& a, std::size_t position, std::span<const Rational> line);
Matrix with_column_inserted(const Matrix& a, std::size_t position, std::span<const Rational> line);
Matrix without_row(const Matrix& a, std::size_t i);
Matrix without_column(const Matrix& a, std::size_t j);

}  // namespace tpscaffold
