#include "tpscaffold/matrix.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "tpscaffold/errors.hpp"

namespace tpscaffold {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

std::vector<std::size_t> run(std::size_t first, std::size_t count) {
  std::vector<std::size_t> out(count);
  for (std::size_t t = 0; t < count; ++t) out[t] = first + t;
  return out;
}

// Length of the contiguous run starting at `start` in a dimension of size
// `dim`, capped so the paired run fits too. Zero when either start is 0 or
// past the end.
std::size_t leading_run_length(std::size_t i, std::size_t m, std::size_t j, std::size_t n) {
  if (i == 0 || j == 0 || i > m || j > n) return 0;
  return std::min(m - i, n - j) + 1;
}

std::size_t trailing_run_length(std::size_t i, std::size_t m, std::size_t j, std::size_t n) {
  if (i == 0 || j == 0 || i > m || j > n) return 0;
  return std::min(i, j);
}

// Fraction-free Gaussian elimination (Bareiss) on an integer matrix.
mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> a) {
  const std::size_t k = a.size();
  if (k == 0) return 1;
  int sign = 1;
  mpz_class previous = 1;
  for (std::size_t p = 0; p + 1 < k; ++p) {
    if (a[p][p] == 0) {
      std::size_t swap_row = p + 1;
      while (swap_row < k && a[swap_row][p] == 0) ++swap_row;
      if (swap_row == k) return 0;
      std::swap(a[p], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t r = p + 1; r < k; ++r) {
      for (std::size_t c = p + 1; c < k; ++c) {
        a[r][c] = (a[r][c] * a[p][p] - a[r][p] * a[p][c]);
        mpz_divexact(a[r][c].get_mpz_t(), a[r][c].get_mpz_t(), previous.get_mpz_t());
      }
    }
    previous = a[p][p];
  }
  return sign * a[k - 1][k - 1];
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const Cell& c) {
  return os << '(' << c.row << ',' << c.col << ')';
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
  require(rows > 0 && cols > 0, "matrix dimensions must be positive");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : Matrix(from_rows(std::vector<std::vector<Rational>>(rows.begin(), rows.end()))) {}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  require(!rows.empty() && !rows.front().empty(), "matrix dimensions must be positive");
  Matrix out(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == out.cols_, "ragged matrix rows");
    std::copy(rows[i].begin(), rows[i].end(), out.data_.begin() + i * out.cols_);
  }
  return out;
}

const Rational& Matrix::at(std::size_t i, std::size_t j) const {
  require(i >= 1 && i <= rows_ && j >= 1 && j <= cols_,
          "index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range for " +
              std::to_string(rows_) + "x" + std::to_string(cols_) + " matrix");
  return (*this)(i, j);
}

std::vector<Rational> Matrix::row(std::size_t i) const {
  require(i >= 1 && i <= rows_, "row index out of range");
  return {data_.begin() + (i - 1) * cols_, data_.begin() + i * cols_};
}

std::vector<Rational> Matrix::column(std::size_t j) const {
  require(j >= 1 && j <= cols_, "column index out of range");
  std::vector<Rational> out;
  out.reserve(rows_);
  for (std::size_t i = 1; i <= rows_; ++i) out.push_back((*this)(i, j));
  return out;
}

bool Matrix::is_positive() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_positive(); });
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    os << (i > 1 ? ", [" : "[");
    for (std::size_t j = 1; j <= m.cols(); ++j) os << (j > 1 ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

IndexSet::IndexSet(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  require(!indices_.empty(), "index set must be nonempty");
  require(indices_.front() >= 1, "indices are 1-based");
  for (std::size_t t = 1; t < indices_.size(); ++t) {
    require(indices_[t - 1] < indices_[t], "index set must be strictly increasing");
  }
}

IndexSet::IndexSet(std::initializer_list<std::size_t> indices)
    : IndexSet(std::vector<std::size_t>(indices)) {}

IndexSet IndexSet::range(std::size_t first, std::size_t last) {
  require(first >= 1 && first <= last, "empty index range");
  return IndexSet(run(first, last - first + 1));
}

std::ostream& operator<<(std::ostream& os, const IndexSet& s) {
  os << '{';
  for (std::size_t t = 0; t < s.size(); ++t) os << (t ? "," : "") << s[t];
  return os << '}';
}

std::vector<IndexSet> index_subsets(std::size_t n, std::size_t k) {
  std::vector<IndexSet> out;
  if (k == 0 || k > n) return out;
  std::vector<std::size_t> pick = run(1, k);
  while (true) {
    out.emplace_back(pick);
    std::size_t t = k;
    while (t > 0 && pick[t - 1] == n - k + t) --t;
    if (t == 0) break;
    ++pick[t - 1];
    for (std::size_t u = t; u < k; ++u) pick[u] = pick[u - 1] + 1;
  }
  return out;
}

Matrix submatrix(const Matrix& a, const IndexSet& rows, const IndexSet& cols) {
  require(rows.back() <= a.rows(), "row index out of range");
  require(cols.back() <= a.cols(), "column index out of range");
  Matrix out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) out(r + 1, c + 1) = a(rows[r], cols[c]);
  }
  return out;
}

Matrix leading_contiguous(const Matrix& a, std::size_t i, std::size_t j) {
  require(i >= 1 && i <= a.rows() && j >= 1 && j <= a.cols(), "index out of range");
  const std::size_t len = leading_run_length(i, a.rows(), j, a.cols());
  return submatrix(a, IndexSet(run(i, len)), IndexSet(run(j, len)));
}

Matrix trailing_contiguous(const Matrix& a, std::size_t i, std::size_t j) {
  require(i >= 1 && i <= a.rows() && j >= 1 && j <= a.cols(), "index out of range");
  const std::size_t len = trailing_run_length(i, a.rows(), j, a.cols());
  return submatrix(a, IndexSet(run(i + 1 - len, len)), IndexSet(run(j + 1 - len, len)));
}

Matrix leading_with_prefix(const Matrix& a, std::size_t i0, std::size_t i, std::size_t j0,
                           std::size_t j) {
  require(i0 >= 1 && j0 >= 1 && i <= a.rows() && j <= a.cols(), "index out of range");
  require(i0 < i && j0 < j, "prefix indices must precede the contiguous block");
  const std::size_t len = leading_run_length(i, a.rows(), j, a.cols());
  std::vector<std::size_t> rows{i0};
  std::vector<std::size_t> cols{j0};
  for (std::size_t t = 0; t < len; ++t) {
    rows.push_back(i + t);
    cols.push_back(j + t);
  }
  return submatrix(a, IndexSet(rows), IndexSet(cols));
}

Matrix trailing_with_suffix(const Matrix& a, std::size_t i, std::size_t i0, std::size_t j,
                            std::size_t j0) {
  require(i >= 1 && j >= 1 && i0 <= a.rows() && j0 <= a.cols(), "index out of range");
  require(i0 > i && j0 > j, "suffix indices must follow the contiguous block");
  const std::size_t len = trailing_run_length(i, a.rows(), j, a.cols());
  std::vector<std::size_t> rows = run(i + 1 - len, len);
  std::vector<std::size_t> cols = run(j + 1 - len, len);
  rows.push_back(i0);
  cols.push_back(j0);
  return submatrix(a, IndexSet(rows), IndexSet(cols));
}

Rational minor_of(const Matrix& a, std::span<const std::size_t> rows,
                  std::span<const std::size_t> cols) {
  require(rows.size() == cols.size(), "minor needs |I| = |J|");
  const std::size_t k = rows.size();
  if (k == 0) return 1;
  for (std::size_t t = 0; t < k; ++t) {
    require(rows[t] >= 1 && rows[t] <= a.rows(), "row index out of range");
    require(cols[t] >= 1 && cols[t] <= a.cols(), "column index out of range");
  }

  // Scale every row by the lcm of its denominators; the determinant of the
  // scaled integer matrix divided by the product of the scales is exact.
  std::vector<std::vector<mpz_class>> ints(k, std::vector<mpz_class>(k));
  mpz_class scale_product = 1;
  for (std::size_t r = 0; r < k; ++r) {
    mpz_class lcm = 1;
    for (std::size_t c = 0; c < k; ++c) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a(rows[r], cols[c]).get().get_den_mpz_t());
    }
    for (std::size_t c = 0; c < k; ++c) {
      const mpq_class& x = a(rows[r], cols[c]).get();
      ints[r][c] = x.get_num() * (lcm / x.get_den());
    }
    scale_product *= lcm;
  }
  return Rational(bareiss_determinant(std::move(ints)), scale_product);
}

Rational minor(const Matrix& a, const IndexSet& rows, const IndexSet& cols) {
  require(rows.size() == cols.size(), "minor needs |I| = |J|");
  require(rows.back() <= a.rows(), "row index out of range");
  require(cols.back() <= a.cols(), "column index out of range");
  return minor_of(a, rows.view(), cols.view());
}

Rational determinant(const Matrix& a) {
  require(a.rows() == a.cols(), "determinant of a non-square matrix");
  const auto idx = run(1, a.rows());
  return minor_of(a, idx, idx);
}

Rational leading_minor(const Matrix& a, std::size_t i, std::size_t j) {
  const std::size_t len = leading_run_length(i, a.rows(), j, a.cols());
  return minor_of(a, run(i, len), run(j, len));
}

Rational leading_prefix_minor(const Matrix& a, std::size_t i0, std::size_t i, std::size_t j0,
                              std::size_t j) {
  const std::size_t len = leading_run_length(i, a.rows(), j, a.cols());
  std::vector<std::size_t> rows{i0};
  std::vector<std::size_t> cols{j0};
  for (std::size_t t = 0; t < len; ++t) {
    rows.push_back(i + t);
    cols.push_back(j + t);
  }
  return minor_of(a, rows, cols);
}

Rational trailing_suffix_minor(const Matrix& a, std::size_t i, std::size_t i0, std::size_t j,
                               std::size_t j0) {
  const std::size_t len = trailing_run_length(i, a.rows(), j, a.cols());
  std::vector<std::size_t> rows = run(i + 1 - len, len);
  std::vector<std::size_t> cols = run(j + 1 - len, len);
  rows.push_back(i0);
  cols.push_back(j0);
  return minor_of(a, rows, cols);
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    for (std::size_t j = 1; j <= a.cols(); ++j) out(j, i) = a(i, j);
  }
  return out;
}

Matrix anti_transpose(const Matrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  Matrix out(n, m);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) out(i, j) = a(m + 1 - j, n + 1 - i);
  }
  return out;
}

Matrix rotate_half_turn(const Matrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  Matrix out(m, n);
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) out(i, j) = a(m + 1 - i, n + 1 - j);
  }
  return out;
}

Matrix row_block(const Matrix& a, std::size_t first, std::size_t last) {
  require(first >= 1 && first <= last && last <= a.rows(), "row block out of range");
  return submatrix(a, IndexSet::range(first, last), IndexSet::range(1, a.cols()));
}

Matrix column_block(const Matrix& a, std::size_t first, std::size_t last) {
  require(first >= 1 && first <= last && last <= a.cols(), "column block out of range");
  return submatrix(a, IndexSet::range(1, a.rows()), IndexSet::range(first, last));
}

Matrix with_row_inserted(const Matrix& a, std::size_t position, std::span<const Rational> line) {
  require(line.size() == a.cols(), "inserted row has the wrong length");
  require(position >= 1 && position <= a.rows() + 1, "row insertion position out of range");
  Matrix out(a.rows() + 1, a.cols());
  for (std::size_t i = 1; i <= out.rows(); ++i) {
    for (std::size_t j = 1; j <= a.cols(); ++j) {
      if (i < position) {
        out(i, j) = a(i, j);
      } else if (i == position) {
        out(i, j) = line[j - 1];
      } else {
        out(i, j) = a(i - 1, j);
      }
    }
  }
  return out;
}

Matrix with_column_inserted(const Matrix& a, std::size_t position,
                            std::span<const Rational> line) {
  return transpose(with_row_inserted(transpose(a), position, line));
}

Matrix without_row(const Matrix& a, std::size_t i) {
  require(a.rows() > 1 && i >= 1 && i <= a.rows(), "cannot delete that row");
  std::vector<std::size_t> keep;
  for (std::size_t r = 1; r <= a.rows(); ++r) {
    if (r != i) keep.push_back(r);
  }
  return submatrix(a, IndexSet(keep), IndexSet::range(1, a.cols()));
}

Matrix without_column(const Matrix& a, std::size_t j) {
  return transpose(without_row(transpose(a), j));
}

}  // namespace tpscaffold
