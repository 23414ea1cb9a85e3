#include "tpscaffold/total_positivity.hpp"

#include <algorithm>

#include "tpscaffold/cauchon.hpp"
#include "tpscaffold/errors.hpp"
#include "tpscaffold/scaffold_graph.hpp"

namespace tpscaffold {

namespace {

TpVerdict exhaustive(const Matrix& a) {
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    const auto row_sets = index_subsets(a.rows(), k);
    const auto col_sets = index_subsets(a.cols(), k);
    for (const IndexSet& rows : row_sets) {
      for (const IndexSet& cols : col_sets) {
        Rational d = minor(a, rows, cols);
        if (!d.is_positive()) return {false, TpWitness{rows, cols, std::move(d)}, {}};
      }
    }
  }
  return {};
}

// Cauchon steps are invertible while pivots are nonzero, so a positive T
// whose path-sum matrix reproduces the input certifies total positivity.
TpVerdict fast(const Matrix& a) {
  std::string reason;
  try {
    const Matrix t = gamma_scaffold(a);
    if (x_of_t(t, Orientation::Gamma) == a) return {};
    reason = "reconstruction X(T) differs from the input";
  } catch (const NotTotallyPositiveError& e) {
    reason = e.what();
  }
  TpVerdict verdict{false, std::nullopt, reason};
  if (std::min(a.rows(), a.cols()) <= kExhaustiveTpLimit) verdict.witness = exhaustive(a).witness;
  return verdict;
}

}  // namespace

TpVerdict is_totally_positive(const Matrix& a, TpCheckMode mode, bool force) {
  if (mode == TpCheckMode::Fast) return fast(a);
  if (std::min(a.rows(), a.cols()) > kExhaustiveTpLimit && !force) {
    throw PreconditionError("exhaustive TP check refuses min(m,n) > " +
                            std::to_string(kExhaustiveTpLimit) + " without force");
  }
  return exhaustive(a);
}

void require_totally_positive(const Matrix& a, const std::string& what) {
  const TpVerdict v = fast(a);
  if (!v) throw NotTotallyPositiveError(what + " is not totally positive (" + v.reason + ")");
}

}  // namespace tpscaffold
