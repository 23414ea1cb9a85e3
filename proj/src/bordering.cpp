#include "tpscaffold/bordering.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "tpscaffold/cauchon.hpp"
#include "tpscaffold/errors.hpp"
#include "tpscaffold/scaffold_graph.hpp"
#include "tpscaffold/total_positivity.hpp"

namespace tpscaffold {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

void require_side(const BorderParams& p, BorderSide side, std::size_t length) {
  require(p.side() == side, "border parameters are for side " + std::string(to_string(p.side())) +
                                ", expected " + std::string(to_string(side)));
  require(p.size() == length, "border parameters have length " + std::to_string(p.size()) +
                                  ", expected " + std::to_string(length));
}

Rational ratio(const Rational& num, const Rational& den) {
  if (den.is_zero()) throw NotTotallyPositiveError("vanishing minor in border coefficient");
  return num / den;
}

}  // namespace

std::string_view to_string(BorderSide side) {
  switch (side) {
    case BorderSide::Above:
      return "above";
    case BorderSide::Below:
      return "below";
    case BorderSide::Left:
      return "left";
    case BorderSide::Right:
      return "right";
  }
  return "?";
}

BorderParams::BorderParams(BorderSide side, std::vector<Rational> values)
    : side_(side), values_(std::move(values)) {
  require(!values_.empty(), "border parameters must be nonempty");
  for (std::size_t t = 0; t < values_.size(); ++t) {
    require(values_[t].is_positive(),
            "border parameter " + std::to_string(t + 1) + " is not strictly positive");
  }
}

Rational border_above_coeff(const Matrix& x, std::size_t j, std::size_t l) {
  require(j >= 1 && j <= l && l <= x.cols(), "need 1 <= j <= l <= n");
  return ratio(leading_prefix_minor(x, 1, 2, j, l + 1), leading_prefix_minor(x, 1, 2, l, l + 1));
}

Rational border_below_coeff(const Matrix& x, std::size_t i, std::size_t j) {
  require(i >= 1 && i <= j && j <= x.cols(), "need 1 <= i <= j <= n");
  const std::size_t m = x.rows();
  return ratio(trailing_suffix_minor(x, m - 1, m, i - 1, j),
               trailing_suffix_minor(x, m - 1, m, i - 1, i));
}

std::vector<Rational> border_above_row_by_minors(const Matrix& x, const std::vector<Rational>& r) {
  require(r.size() == x.cols(), "parameter length must equal the column count");
  std::vector<Rational> row(x.cols());
  for (std::size_t j = 1; j <= x.cols(); ++j) {
    for (std::size_t l = j; l <= x.cols(); ++l) row[j - 1] += border_above_coeff(x, j, l) * r[l - 1];
  }
  return row;
}

std::vector<Rational> border_below_row_by_minors(const Matrix& x, const std::vector<Rational>& q) {
  require(q.size() == x.cols(), "parameter length must equal the column count");
  std::vector<Rational> row(x.cols());
  for (std::size_t j = 1; j <= x.cols(); ++j) {
    for (std::size_t i = 1; i <= j; ++i) row[j - 1] += border_below_coeff(x, i, j) * q[i - 1];
  }
  return row;
}

Matrix border_above(const Matrix& x, const BorderParams& r) {
  require_side(r, BorderSide::Above, x.cols());
  require_totally_positive(x, "matrix to border");
  const Matrix t = with_row_inserted(gamma_scaffold(x), 1, r.values());
  return x_of_t(t, Orientation::Gamma);
}

Matrix border_below(const Matrix& x, const BorderParams& q) {
  require_side(q, BorderSide::Below, x.cols());
  require_totally_positive(x, "matrix to border");
  const Matrix t = with_row_inserted(le_scaffold(x), x.rows() + 1, q.values());
  return x_of_t(t, Orientation::Le);
}

Matrix border_left(const Matrix& x, const BorderParams& c) {
  require_side(c, BorderSide::Left, x.rows());
  require_totally_positive(x, "matrix to border");
  const Matrix t = with_column_inserted(gamma_scaffold(x), 1, c.values());
  return x_of_t(t, Orientation::Gamma);
}

Matrix border_right(const Matrix& x, const BorderParams& c) {
  require_side(c, BorderSide::Right, x.rows());
  require_totally_positive(x, "matrix to border");
  const Matrix t = with_column_inserted(le_scaffold(x), x.cols() + 1, c.values());
  return x_of_t(t, Orientation::Le);
}

Matrix border(const Matrix& x, const BorderParams& params) {
  switch (params.side()) {
    case BorderSide::Above:
      return border_above(x, params);
    case BorderSide::Below:
      return border_below(x, params);
    case BorderSide::Left:
      return border_left(x, params);
    case BorderSide::Right:
      return border_right(x, params);
  }
  throw PreconditionError("unknown border side");
}

BorderParams recover_border_params(const Matrix& bordered, BorderSide side) {
  require_totally_positive(bordered, "bordered matrix");
  switch (side) {
    case BorderSide::Above:
      return {side, gamma_scaffold(bordered).row(1)};
    case BorderSide::Left:
      return {side, gamma_scaffold(bordered).column(1)};
    case BorderSide::Below:
      return {side, le_scaffold(bordered).row(bordered.rows())};
    case BorderSide::Right:
      return {side, le_scaffold(bordered).column(bordered.cols())};
  }
  throw PreconditionError("unknown border side");
}

}  // namespace tpscaffold
