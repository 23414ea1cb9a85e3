#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tpscaffold/matrix.hpp"
#include "tpscaffold/rational.hpp"

namespace tpscaffold {

/// Which scaffolding grid a weight matrix lives on.
///
/// Gamma: row vertices sit to the right, column vertices below; horizontal
/// edges run right to left, vertical edges top to bottom.
/// Le: the half-turn rotation of Gamma; row vertices to the left, column
/// vertices above, edges run left to right and bottom to top.
enum class Orientation { Gamma, Le };

std::string_view to_string(Orientation o);

/// A directed path from row vertex `start` to column vertex `end`, stored as
/// the grid vertices where it turns. Even positions (0, 2, ...) are the
/// turns from a horizontal into a vertical edge; odd positions are turns
/// from vertical back to horizontal. The sequence therefore has odd length,
/// starts in row `start` and ends in column `end`.
struct Path {
  std::size_t start = 0;
  std::size_t end = 0;
  std::vector<Cell> turns;

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

/// The l-th path joins the l-th row vertex of I to the l-th column vertex of J.
struct PathSystem {
  std::vector<Path> paths;

  friend bool operator==(const PathSystem&, const PathSystem&) = default;
};

/// Enumeration refuses to produce more than this many paths.
inline constexpr std::size_t kMaxEnumeratedPaths = 1'000'000;

/// Vertex-weighted scaffolding graph. Edges are implied by the orientation
/// and the dimensions and are never stored.
class ScaffoldGraph {
 public:
  /// Throws PreconditionError unless every weight is strictly positive.
  ScaffoldGraph(Matrix weights, Orientation orientation);

  Orientation orientation() const noexcept { return orientation_; }
  std::size_t rows() const noexcept { return weights_.rows(); }
  std::size_t cols() const noexcept { return weights_.cols(); }
  const Matrix& weights() const noexcept { return weights_; }
  const Rational& weight(Cell c) const { return weights_(c); }

  /// Throws PreconditionError if `p` is not a path of this graph.
  void validate(const Path& p) const;

  /// Internal vertices visited by `p`, in travel order.
  std::vector<Cell> vertices(const Path& p) const;

 private:
  Matrix weights_;
  Orientation orientation_;
};

ScaffoldGraph build_graph(const Matrix& weights, Orientation o);

/// Product of the weights at turns into a vertical edge divided by the
/// product of the weights at turns back to horizontal.
Rational path_weight(const ScaffoldGraph& g, const Path& p);

/// The single-turn path from row vertex i to column vertex j.
Path primary_path(const ScaffoldGraph& g, std::size_t i, std::size_t j);

/// Number of paths from row vertex i to column vertex j.
mpz_class count_paths(const ScaffoldGraph& g, std::size_t i, std::size_t j);

/// Every path from row vertex i to column vertex j, sorted by turn sequence.
std::vector<Path> enumerate_paths(const ScaffoldGraph& g, std::size_t i, std::size_t j);

/// Gamma paths i -> j whose first turn lies in a column <= bound.
std::vector<Path> enumerate_paths_bounded(const ScaffoldGraph& g, std::size_t i, std::size_t j,
                                          std::size_t bound);

/// The path-sum matrix X(T): entry (i, j) sums w(P) over all paths i -> j.
Matrix x_of_t(const Matrix& weights, Orientation o);

/// Every vertex-disjoint path system from I to J, in lexicographic order of
/// the path tuples. Row, column and internal vertices all count.
std::vector<PathSystem> enumerate_vertex_disjoint_systems(const ScaffoldGraph& g,
                                                          const IndexSet& rows,
                                                          const IndexSet& cols);

bool is_vertex_disjoint(const ScaffoldGraph& g, const PathSystem& system);

Rational system_weight(const ScaffoldGraph& g, const PathSystem& system);

/// det X(T)[I, J] as a sum over vertex-disjoint path systems.
Rational lgv_minor(const ScaffoldGraph& g, const IndexSet& rows, const IndexSet& cols);

/// Sum of w(P) over the Gamma paths i -> j with first turn in a column <= bound,
/// computed by enumeration.
Rational blocked_path_sum(const Matrix& weights, std::size_t i, std::size_t j, std::size_t bound);

/// The same blocked sum from minors of X = X(T):
/// det X[{i, i+1..}, {j, bound+1..}] / det X[{i+1..}, {bound+1..}].
Rational blocked_minor_ratio(const Matrix& x, std::size_t i, std::size_t j, std::size_t bound);

/// Graphviz rendering. Internal vertices are labelled by weight, row and
/// column vertices by index. Output is deterministic.
std::string to_dot(const ScaffoldGraph& g);

}  // namespace tpscaffold
