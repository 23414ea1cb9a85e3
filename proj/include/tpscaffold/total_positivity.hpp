#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "tpscaffold/matrix.hpp"

namespace tpscaffold {

enum class TpCheckMode {
  /// Enumerate every square minor; refuses min(m, n) > kExhaustiveTpLimit
  /// unless forced.
  Exhaustive,
  /// Run Gamma-Cauchon, require a positive output T and X(T) equal to the input.
  Fast,
};

inline constexpr std::size_t kExhaustiveTpLimit = 8;

struct TpWitness {
  IndexSet rows;
  IndexSet cols;
  Rational value;
};

struct TpVerdict {
  bool totally_positive = true;
  /// First non-positive minor in (size, rows, cols) lexicographic order.
  /// Fast mode fills it by a follow-up exhaustive search when the matrix is
  /// small enough.
  std::optional<TpWitness> witness;
  /// Why a fast-mode check failed.
  std::string reason;

  explicit operator bool() const noexcept { return totally_positive; }
};

/// Total positivity verdict. Throws PreconditionError in exhaustive mode when
/// min(m, n) > kExhaustiveTpLimit and `force` is false.
TpVerdict is_totally_positive(const Matrix& a, TpCheckMode mode = TpCheckMode::Exhaustive,
                              bool force = false);

/// Throws NotTotallyPositiveError (naming `what`) unless `a` passes the fast check.
void require_totally_positive(const Matrix& a, const std::string& what);

}  // namespace tpscaffold
