#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tpscaffold/matrix.hpp"

namespace tpscaffold {

/// Order in which the deleting-derivation steps visit the grid.
///
/// ReverseLex (Gamma scaffolding): (m,n), (m,n-1), ..., (m,1), (m-1,n), ...
///   A step at (i,j) updates entries with k < i and l < j.
/// ColMajor (Le scaffolding): (1,1), (2,1), ..., (m,1), (1,2), ...
///   A step at (i,j) updates entries with k > i and l > j.
enum class StepOrder { ReverseLex, ColMajor };

/// Positions of an m x n grid in step order.
std::vector<Cell> step_sequence(std::size_t m, std::size_t n, StepOrder order);

/// True when the step at `pivot` changes anything (it has entries to update).
bool is_effective_step(Cell pivot, std::size_t m, std::size_t n, StepOrder order);

struct TraceEntry {
  /// Step that produced `matrix`; empty for the input matrix.
  std::optional<Cell> pivot;
  /// Grid position whose step comes next, i.e. the superscript under which
  /// the intermediate matrix is usually written. Empty once every step ran.
  std::optional<Cell> label;
  Matrix matrix;
};

/// The input followed by the result of every effective step. Skipped steps
/// leave the matrix unchanged and are not recorded.
struct CauchonTrace {
  StepOrder order;
  std::vector<TraceEntry> entries;

  const Matrix& input() const { return entries.front().matrix; }
  const Matrix& output() const { return entries.back().matrix; }

  /// The intermediate matrix in force just before the step at `position`.
  const Matrix& before_step(Cell position) const;
};

/// Runs every step, recording intermediates. Throws ZeroPivotError when a
/// pivot vanishes; negative entries are recorded without complaint.
CauchonTrace cauchon_trace(const Matrix& x, StepOrder order);

/// Gamma scaffolding of a TP matrix: T with x_of_t(T, Gamma) = X. Throws
/// ZeroPivotError or NotTotallyPositiveError when the output is not positive.
Matrix gamma_scaffold(const Matrix& x);

/// Le scaffolding of a TP matrix: T with x_of_t(T, Le) = X.
Matrix le_scaffold(const Matrix& x);

/// det X[{i..},{j..}] / det X[{i+1..},{j+1..}], the (i,j) entry of the Gamma
/// scaffolding expressed through minors of X.
Rational scaffold_entry_formula(const Matrix& x, std::size_t i, std::size_t j);

struct PartialTpVerdict {
  bool ok = true;
  /// Human-readable description of the first violation.
  std::string violation;
  /// Trace entry at which it occurred.
  std::size_t entry = 0;
};

/// Checks every recorded intermediate: all entries positive and, when
/// min(m, n) <= kPartialTpMinorLimit, every minor whose positions are all
/// still awaiting their step (the label and everything after it) is positive.
PartialTpVerdict partial_tp_check(const CauchonTrace& trace);

inline constexpr std::size_t kPartialTpMinorLimit = 5;

}  // namespace tpscaffold
