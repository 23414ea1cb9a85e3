#include "tpscaffold/cauchon.hpp"

#include <algorithm>
#include <sstream>

#include "tpscaffold/errors.hpp"

namespace tpscaffold {

namespace {

std::size_t position_rank(Cell c, std::size_t m, std::size_t n, StepOrder order) {
  if (order == StepOrder::ReverseLex) return (m - c.row) * n + (n - c.col);
  return (c.col - 1) * m + (c.row - 1);
}

// One deleting-derivation step, in place.
void apply_step(Matrix& x, Cell pivot, StepOrder order) {
  const Rational& p = x(pivot);
  if (p.is_zero()) throw ZeroPivotError(pivot.row, pivot.col);
  const Rational inv = p.inverse();
  const std::size_t i = pivot.row;
  const std::size_t j = pivot.col;
  if (order == StepOrder::ReverseLex) {
    for (std::size_t k = 1; k < i; ++k) {
      const Rational factor = x(k, j) * inv;
      for (std::size_t l = 1; l < j; ++l) x(k, l) -= factor * x(i, l);
    }
  } else {
    for (std::size_t k = i + 1; k <= x.rows(); ++k) {
      const Rational factor = x(k, j) * inv;
      for (std::size_t l = j + 1; l <= x.cols(); ++l) x(k, l) -= factor * x(i, l);
    }
  }
}

Matrix scaffold(const Matrix& x, StepOrder order) {
  Matrix t = x;
  for (const Cell& pivot : step_sequence(x.rows(), x.cols(), order)) {
    if (is_effective_step(pivot, x.rows(), x.cols(), order)) apply_step(t, pivot, order);
  }
  for (std::size_t i = 1; i <= t.rows(); ++i) {
    for (std::size_t j = 1; j <= t.cols(); ++j) {
      if (!t(i, j).is_positive()) {
        std::ostringstream os;
        os << "scaffolding entry (" << i << "," << j << ") = " << t(i, j)
           << " is not positive: matrix is not totally positive";
        throw NotTotallyPositiveError(os.str());
      }
    }
  }
  return t;
}

}  // namespace

std::vector<Cell> step_sequence(std::size_t m, std::size_t n, StepOrder order) {
  std::vector<Cell> out;
  out.reserve(m * n);
  if (order == StepOrder::ReverseLex) {
    for (std::size_t i = m; i >= 1; --i) {
      for (std::size_t j = n; j >= 1; --j) out.push_back({i, j});
    }
  } else {
    for (std::size_t j = 1; j <= n; ++j) {
      for (std::size_t i = 1; i <= m; ++i) out.push_back({i, j});
    }
  }
  return out;
}

bool is_effective_step(Cell pivot, std::size_t m, std::size_t n, StepOrder order) {
  if (order == StepOrder::ReverseLex) return pivot.row > 1 && pivot.col > 1;
  return pivot.row < m && pivot.col < n;
}

const Matrix& CauchonTrace::before_step(Cell position) const {
  const Matrix& x = input();
  const std::size_t m = x.rows();
  const std::size_t n = x.cols();
  if (position.row < 1 || position.row > m || position.col < 1 || position.col > n) {
    throw PreconditionError("trace position out of range");
  }
  const std::size_t target = position_rank(position, m, n, order);
  const Matrix* current = &x;
  for (const TraceEntry& e : entries) {
    if (e.pivot && position_rank(*e.pivot, m, n, order) < target) current = &e.matrix;
  }
  return *current;
}

CauchonTrace cauchon_trace(const Matrix& x, StepOrder order) {
  const std::size_t m = x.rows();
  const std::size_t n = x.cols();
  const auto sequence = step_sequence(m, n, order);
  CauchonTrace trace{order, {}};
  trace.entries.push_back({std::nullopt, sequence.front(), x});
  Matrix current = x;
  for (std::size_t s = 0; s < sequence.size(); ++s) {
    if (!is_effective_step(sequence[s], m, n, order)) continue;
    apply_step(current, sequence[s], order);
    std::optional<Cell> next;
    if (s + 1 < sequence.size()) next = sequence[s + 1];
    trace.entries.push_back({sequence[s], next, current});
  }
  return trace;
}

Matrix gamma_scaffold(const Matrix& x) { return scaffold(x, StepOrder::ReverseLex); }

Matrix le_scaffold(const Matrix& x) { return scaffold(x, StepOrder::ColMajor); }

Rational scaffold_entry_formula(const Matrix& x, std::size_t i, std::size_t j) {
  if (i < 1 || i > x.rows() || j < 1 || j > x.cols()) {
    throw PreconditionError("scaffold entry position out of range");
  }
  const Rational denominator = leading_minor(x, i + 1, j + 1);
  if (denominator.is_zero()) {
    throw NotTotallyPositiveError("contiguous minor below (" + std::to_string(i) + "," +
                                  std::to_string(j) + ") vanishes");
  }
  return leading_minor(x, i, j) / denominator;
}

PartialTpVerdict partial_tp_check(const CauchonTrace& trace) {
  const std::size_t m = trace.input().rows();
  const std::size_t n = trace.input().cols();
  const bool check_minors = std::min(m, n) <= kPartialTpMinorLimit;

  for (std::size_t e = 0; e < trace.entries.size(); ++e) {
    const TraceEntry& entry = trace.entries[e];
    const Matrix& x = entry.matrix;
    for (std::size_t i = 1; i <= m; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        if (!x(i, j).is_positive()) {
          std::ostringstream os;
          os << "entry (" << i << "," << j << ") = " << x(i, j) << " is not positive";
          return {false, os.str(), e};
        }
      }
    }
    if (!check_minors || !entry.label) continue;

    const std::size_t first_pending = position_rank(*entry.label, m, n, trace.order);
    auto pending = [&](std::size_t i, std::size_t j) {
      return position_rank({i, j}, m, n, trace.order) >= first_pending;
    };
    for (std::size_t k = 2; k <= std::min(m, n); ++k) {
      for (const IndexSet& rows : index_subsets(m, k)) {
        for (const IndexSet& cols : index_subsets(n, k)) {
          bool inside = true;
          for (std::size_t r : rows) {
            for (std::size_t c : cols) inside = inside && pending(r, c);
          }
          if (!inside) continue;
          const Rational d = minor(x, rows, cols);
          if (!d.is_positive()) {
            std::ostringstream os;
            os << "minor " << rows << "x" << cols << " = " << d << " is not positive";
            return {false, os.str(), e};
          }
        }
      }
    }
  }
  return {};
}

}  // namespace tpscaffold
