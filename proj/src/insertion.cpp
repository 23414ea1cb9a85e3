#include "tpscaffold/insertion.hpp"

#include <sstream>
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

void require_position(const Matrix& x, std::size_t k) {
  require(k >= 1 && k < x.rows(), "insertion position k=" + std::to_string(k) +
                                       " must satisfy 1 <= k <= m-1 (m=" +
                                       std::to_string(x.rows()) + ")");
}

Rational ratio(const Rational& num, const Rational& den) {
  if (den.is_zero()) throw NotTotallyPositiveError("vanishing minor in insertion coefficient");
  return num / den;
}

// Coefficient of the i-th parameter in the j-th entry of a row bordered
// beneath rows 1..k of `x` (i <= j).
Rational below_coeff(const Matrix& x, std::size_t k, std::size_t i, std::size_t j) {
  return ratio(trailing_suffix_minor(x, k - 1, k, i - 1, j),
               trailing_suffix_minor(x, k - 1, k, i - 1, i));
}

// Coefficient of r_l in the j-th entry of a row bordered above rows k+1..m
// of `x` (j <= l).
Rational above_coeff(const Matrix& x, std::size_t k, std::size_t j, std::size_t l) {
  return ratio(leading_prefix_minor(x, k + 1, k + 2, j, l + 1),
               leading_prefix_minor(x, k + 1, k + 2, l, l + 1));
}

std::vector<Rational> multiply(const Matrix& a, const std::vector<Rational>& v) {
  std::vector<Rational> out(a.rows());
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    for (std::size_t j = 1; j <= a.cols(); ++j) {
      if (!a(i, j).is_zero()) out[i - 1] += a(i, j) * v[j - 1];
    }
  }
  return out;
}

}  // namespace

Matrix hat_matrix(const Matrix& x, std::size_t k) {
  require_position(x, k);
  require_totally_positive(x, "matrix");
  return x_of_t(row_block(gamma_scaffold(x), 1, k), Orientation::Gamma);
}

Matrix hat_matrix_from_trace(const Matrix& x, std::size_t k) {
  require_position(x, k);
  require_totally_positive(x, "matrix");
  const CauchonTrace trace = cauchon_trace(x, StepOrder::ReverseLex);
  return row_block(trace.before_step({k + 1, 1}), 1, k);
}

InsertionSystem build_insertion_system(const Matrix& x, std::size_t k) {
  require_position(x, k);
  require_totally_positive(x, "matrix");
  const std::size_t n = x.cols();
  InsertionSystem sys{n, k, Matrix(n, n), Matrix(n, n), Matrix(n, n), hat_matrix(x, k)};
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t l = j; l <= n; ++l) sys.a_r(j, l) = above_coeff(x, k, j, l);
    for (std::size_t i = 1; i <= j; ++i) {
      sys.a_q(j, i) = below_coeff(x, k, i, j);
      sys.b_s(j, i) = below_coeff(sys.hat_x, k, i, j);
    }
  }
  return sys;
}

std::pair<std::vector<Rational>, std::vector<Rational>> substitute(const InsertionSystem& sys,
                                                                   const std::vector<Rational>& s) {
  require(s.size() == sys.n, "s has the wrong length");
  std::vector<Rational> r = multiply(sys.b_s, s);
  const std::vector<Rational> rhs = multiply(sys.a_r, r);
  std::vector<Rational> q(sys.n);
  for (std::size_t j = 1; j <= sys.n; ++j) {
    Rational v = rhs[j - 1];
    for (std::size_t i = 1; i < j; ++i) v -= sys.a_q(j, i) * q[i - 1];
    q[j - 1] = v / sys.a_q(j, j);
  }
  return {std::move(r), std::move(q)};
}

InsertionSolution solve_strongly_positive(const InsertionSystem& sys) {
  const std::size_t n = sys.n;
  std::vector<Rational> s(n, Rational(1));
  s[n - 1] = 0;
  InsertionSolution sol;
  sol.alpha = substitute(sys, s).second;

  std::vector<Rational> unit(n, Rational(0));
  unit[n - 1] = 1;
  sol.beta = substitute(sys, unit).second;

  Rational s_n = 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (!sol.beta[j].is_positive()) {
      std::ostringstream os;
      os << "coefficient of s_n in q_" << (j + 1) << " is " << sol.beta[j]
         << ", expected positive; input is not totally positive or the system is inconsistent";
      throw Error(os.str());
    }
    if (sol.alpha[j].sign() <= 0) {
      const Rational needed = ceil((Rational(1) - sol.alpha[j]) / sol.beta[j]);
      if (needed > s_n) s_n = needed;
    }
  }
  s[n - 1] = s_n;
  auto [r, q] = substitute(sys, s);
  sol.inserted_row = inserted_row(sys, r);
  sol.r = std::move(r);
  sol.q = std::move(q);
  sol.s = std::move(s);
  return sol;
}

SolutionVerdict verify_solution(const InsertionSystem& sys, const InsertionCandidate& cand) {
  require(cand.r.size() == sys.n && cand.q.size() == sys.n && cand.s.size() == sys.n,
          "candidate vectors must all have length " + std::to_string(sys.n));
  const std::pair<const char*, const std::vector<Rational>*> parts[] = {
      {"r", &cand.r}, {"q", &cand.q}, {"s", &cand.s}};
  for (const auto& [name, values] : parts) {
    for (std::size_t j = 0; j < sys.n; ++j) {
      if (!(*values)[j].is_positive()) {
        return {false, std::string(name) + "_" + std::to_string(j + 1) + " = " +
                           (*values)[j].str() + " is not strictly positive"};
      }
    }
  }
  const auto lhs = multiply(sys.a_r, cand.r);
  const auto rhs = multiply(sys.a_q, cand.q);
  for (std::size_t j = 0; j < sys.n; ++j) {
    if (lhs[j] != rhs[j]) {
      return {false, "equation " + std::to_string(j + 1) + " of the first set fails: " +
                         lhs[j].str() + " != " + rhs[j].str()};
    }
  }
  const auto r_from_s = multiply(sys.b_s, cand.s);
  for (std::size_t j = 0; j < sys.n; ++j) {
    if (cand.r[j] != r_from_s[j]) {
      return {false, "equation " + std::to_string(j + 1) + " of the second set fails: r_" +
                         std::to_string(j + 1) + " = " + cand.r[j].str() +
                         " != " + r_from_s[j].str()};
    }
  }
  return {};
}

std::vector<Rational> inserted_row(const InsertionSystem& sys, const std::vector<Rational>& r) {
  require(r.size() == sys.n, "r has the wrong length");
  return multiply(sys.a_r, r);
}

Matrix insert_row(const Matrix& x, std::size_t k,
                  const std::optional<InsertionCandidate>& candidate) {
  const InsertionSystem sys = build_insertion_system(x, k);
  std::vector<Rational> r;
  if (candidate) {
    const SolutionVerdict v = verify_solution(sys, *candidate);
    if (!v) throw PreconditionError("invalid insertion witness: " + v.violation);
    r = candidate->r;
  } else {
    r = solve_strongly_positive(sys).r;
  }
  return with_row_inserted(x, k + 1, inserted_row(sys, r));
}

Matrix insert_column(const Matrix& x, std::size_t k,
                     const std::optional<InsertionCandidate>& candidate) {
  return transpose(insert_row(transpose(x), k, candidate));
}

InsertionCandidate recover_insertion_witness(const Matrix& inserted, std::size_t k) {
  require(inserted.rows() >= 3 && k >= 1 && k + 1 < inserted.rows(),
          "inserted row must lie strictly between two original rows");
  require_totally_positive(inserted, "matrix with inserted row");
  const std::size_t m1 = inserted.rows();
  InsertionCandidate out;
  out.r = gamma_scaffold(row_block(inserted, k + 1, m1)).row(1);
  out.q = le_scaffold(row_block(inserted, 1, k + 1)).row(k + 1);
  const Matrix hat = hat_matrix(without_row(inserted, k + 1), k);
  out.s = le_scaffold(with_row_inserted(hat, k + 1, out.r)).row(k + 1);
  return out;
}

}  // namespace tpscaffold
