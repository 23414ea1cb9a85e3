#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "tpscaffold/matrix.hpp"

namespace tpscaffold {

enum class BorderSide { Above, Below, Left, Right };

std::string_view to_string(BorderSide side);

/// The scaffolding line added next to a TP matrix.
///
/// Above and Left extend the Gamma scaffolding (a new first row or column);
/// Below and Right extend the Le scaffolding (a new last row or column).
/// Values run left to right for rows and top to bottom for columns.
class BorderParams {
 public:
  /// Throws PreconditionError unless nonempty and strictly positive.
  BorderParams(BorderSide side, std::vector<Rational> values);

  BorderSide side() const noexcept { return side_; }
  const std::vector<Rational>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

  friend bool operator==(const BorderParams&, const BorderParams&) = default;

 private:
  BorderSide side_;
  std::vector<Rational> values_;
};

/// Coefficient of r_l in the new top entry x_{0j}:
/// det X[{1,2..},{j,l+1..}] / det X[{1,2..},{l,l+1..}], for j <= l <= n.
Rational border_above_coeff(const Matrix& x, std::size_t j, std::size_t l);

/// Coefficient of q_i in the new bottom entry x_{m+1,j}:
/// det X[{..m-1,m},{..i-1,j}] / det X[{..m-1,m},{..i-1,i}], for i <= j.
Rational border_below_coeff(const Matrix& x, std::size_t i, std::size_t j);

/// New top row from the minor-ratio coefficients (the closed form of the
/// scaffolding construction used by border_above).
std::vector<Rational> border_above_row_by_minors(const Matrix& x, const std::vector<Rational>& r);
std::vector<Rational> border_below_row_by_minors(const Matrix& x, const std::vector<Rational>& q);

/// (m+1) x n TP matrix with X in rows 2..m+1: stacks `r` above the Gamma
/// scaffolding of X and takes path sums. Side of `r` must be Above.
Matrix border_above(const Matrix& x, const BorderParams& r);
/// (m+1) x n TP matrix with X in rows 1..m, via the Le scaffolding.
Matrix border_below(const Matrix& x, const BorderParams& q);
/// m x (n+1) TP matrix with X in columns 2..n+1, via the Gamma scaffolding.
Matrix border_left(const Matrix& x, const BorderParams& c);
/// m x (n+1) TP matrix with X in columns 1..n, via the Le scaffolding.
Matrix border_right(const Matrix& x, const BorderParams& c);

/// Dispatches on params.side().
Matrix border(const Matrix& x, const BorderParams& params);

/// The scaffolding line of a bordered TP matrix: first row (Above) or first
/// column (Left) of its Gamma scaffolding, last row (Below) or last column
/// (Right) of its Le scaffolding.
BorderParams recover_border_params(const Matrix& bordered, BorderSide side);

}  // namespace tpscaffold
