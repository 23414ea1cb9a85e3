#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tpscaffold/matrix.hpp"

namespace tpscaffold {

/// Parses the plain-text matrix format:
///
///   m n
///   a11 a12 ... a1n
///   ...
///   am1 ... amn
///
/// Tokens are integers "p" or rationals "p/q" with q > 0, separated by
/// whitespace. Blank lines and lines starting with '#' are ignored. Throws
/// ParseError with the offending line and column.
Matrix parse_matrix(std::string_view text);

/// Canonical text form; parse_matrix(format_matrix(a)) == a.
std::string format_matrix(const Matrix& a);

/// JSON mirror: {"rows": m, "cols": n, "entries": [[...], ...]} where each
/// entry is an integer or a "p/q" string.
Matrix parse_matrix_json(std::string_view text);
std::string format_matrix_json(const Matrix& a);

/// Space-separated canonical rationals.
std::string format_vector(const std::vector<Rational>& v);

}  // namespace tpscaffold
