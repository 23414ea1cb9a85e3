#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tpscaffold/matrix.hpp"

namespace tpscaffold {

/// Linear system whose strongly positive solutions (r, q, s) are exactly the
/// rows that can be inserted between rows k and k+1 of a TP matrix X.
///
///   A_r r = A_q q    (first set: the new row seen from below and from above)
///   r = B_s s        (second set: r borders the hat matrix from below)
///
/// A_r is unit upper triangular and built from rows k+1..m of X; A_q is unit
/// lower triangular and built from rows 1..k; B_s is unit lower triangular
/// and built from the hat matrix. Indices into the coefficient matrices are
/// 1-based: a_r(j, l) multiplies r_l in equation j.
struct InsertionSystem {
  std::size_t n = 0;
  std::size_t k = 0;
  Matrix a_r;
  Matrix a_q;
  Matrix b_s;
  Matrix hat_x;
};

struct InsertionCandidate {
  std::vector<Rational> r;
  std::vector<Rational> q;
  std::vector<Rational> s;
};

struct InsertionSolution {
  std::vector<Rational> r;
  std::vector<Rational> q;
  std::vector<Rational> s;
  std::vector<Rational> inserted_row;
  /// q_j = alpha_j + beta_j * s_n with s_1 = ... = s_{n-1} = 1.
  std::vector<Rational> alpha;
  std::vector<Rational> beta;
};

/// The TP matrix whose Gamma scaffolding is the first k rows of the Gamma
/// scaffolding of X.
Matrix hat_matrix(const Matrix& x, std::size_t k);

/// The same matrix read off the Cauchon trace: first k rows of X^{(k+1,1)}.
Matrix hat_matrix_from_trace(const Matrix& x, std::size_t k);

InsertionSystem build_insertion_system(const Matrix& x, std::size_t k);

/// Forward substitution of s = (s_1, ..., s_n) through both equation sets.
/// Returns (r, q). No positivity requirement on s.
std::pair<std::vector<Rational>, std::vector<Rational>> substitute(const InsertionSystem& sys,
                                                                   const std::vector<Rational>& s);

/// Constructive strongly positive solution: s_1 = ... = s_{n-1} = 1 and the
/// smallest integer s_n >= 1 making every q_j >= 1 where q_j is not already
/// positive at s_n = 0. Throws Error if some beta_j <= 0.
InsertionSolution solve_strongly_positive(const InsertionSystem& sys);

struct SolutionVerdict {
  bool ok = true;
  std::string violation;
  explicit operator bool() const noexcept { return ok; }
};

/// Exact check of strict positivity and of all 2n equations. Throws
/// PreconditionError on length mismatch.
SolutionVerdict verify_solution(const InsertionSystem& sys, const InsertionCandidate& cand);

/// Common value of each equation of the first set, i.e. the inserted row.
std::vector<Rational> inserted_row(const InsertionSystem& sys, const std::vector<Rational>& r);

/// X with a new row between rows k and k+1. Uses `candidate` when given (it
/// must verify), otherwise solve_strongly_positive.
Matrix insert_row(const Matrix& x, std::size_t k,
                  const std::optional<InsertionCandidate>& candidate = std::nullopt);

/// Column version through the transpose.
Matrix insert_column(const Matrix& x, std::size_t k,
                     const std::optional<InsertionCandidate>& candidate = std::nullopt);

/// Re-derives (r, q, s) from a TP matrix that already has a row inserted at
/// position k+1: r from the Gamma scaffolding of rows k+1.., q from the Le
/// scaffolding of rows ..k+1, s from the Le scaffolding of [hat; r].
InsertionCandidate recover_insertion_witness(const Matrix& inserted, std::size_t k);

}  // namespace tpscaffold
