#include "tpscaffold/scaffold_graph.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "tpscaffold/errors.hpp"

namespace tpscaffold {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

mpz_class binomial(std::size_t n, std::size_t k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

// Direction conventions of the two orientations. Gamma paths enter row i at
// column n and travel left, then down towards row m. Le paths enter at
// column 1 and travel right, then up towards row 1.
struct Geometry {
  std::ptrdiff_t row_step;  // direction of vertical travel
  std::ptrdiff_t col_step;  // direction of horizontal travel
  std::size_t entry_col;    // first internal vertex of every row
  std::size_t exit_row;     // last internal vertex of every column
};

Geometry geometry(const ScaffoldGraph& g) {
  if (g.orientation() == Orientation::Gamma) return {+1, -1, g.cols(), g.rows()};
  return {-1, +1, 1, 1};
}

// Signed distance travelled from `from` to `to` in direction `step`.
std::ptrdiff_t advance(std::size_t from, std::size_t to, std::ptrdiff_t step) {
  return (static_cast<std::ptrdiff_t>(to) - static_cast<std::ptrdiff_t>(from)) * step;
}

class PathEnumerator {
 public:
  PathEnumerator(const ScaffoldGraph& g, std::size_t start, std::size_t end)
      : g_(g), geo_(geometry(g)), start_(start), end_(end) {}

  std::vector<Path> run() {
    std::vector<Cell> turns;
    // Columns still available for a turn lie strictly between `end_` and the
    // previous turn column; a virtual column just outside the grid starts it.
    const std::size_t outside = geo_.col_step < 0 ? g_.cols() + 1 : 0;
    descend(start_, outside, turns);
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  void descend(std::size_t row, std::size_t limit_col, std::vector<Cell>& turns) {
    turns.push_back({row, end_});
    out_.push_back(Path{start_, end_, turns});
    turns.pop_back();

    // Candidate turn columns c with end_ < c < limit_col (Gamma), or
    // limit_col < c < end_ (Le); candidate rows strictly further along.
    for (std::size_t c = 1; c <= g_.cols(); ++c) {
      if (advance(c, end_, geo_.col_step) <= 0 || advance(limit_col, c, geo_.col_step) <= 0) {
        continue;
      }
      for (std::size_t r = 1; r <= g_.rows(); ++r) {
        if (advance(row, r, geo_.row_step) <= 0) continue;
        turns.push_back({row, c});
        turns.push_back({r, c});
        descend(r, c, turns);
        turns.pop_back();
        turns.pop_back();
      }
    }
  }

  const ScaffoldGraph& g_;
  Geometry geo_;
  std::size_t start_;
  std::size_t end_;
  std::vector<Path> out_;
};

void require_row_col(const ScaffoldGraph& g, std::size_t i, std::size_t j) {
  require(i >= 1 && i <= g.rows(), "row vertex " + std::to_string(i) + " out of range");
  require(j >= 1 && j <= g.cols(), "column vertex " + std::to_string(j) + " out of range");
}

void require_positive(const Matrix& weights) {
  for (std::size_t i = 1; i <= weights.rows(); ++i) {
    for (std::size_t j = 1; j <= weights.cols(); ++j) {
      if (!weights(i, j).is_positive()) {
        throw PreconditionError("scaffolding weight at (" + std::to_string(i) + "," +
                                std::to_string(j) + ") is not positive");
      }
    }
  }
}

class DisjointSearch {
 public:
  DisjointSearch(const ScaffoldGraph& g, const IndexSet& rows, const IndexSet& cols)
      : g_(g), used_(g.rows() * g.cols(), false) {
    for (std::size_t l = 0; l < rows.size(); ++l) {
      candidates_.push_back(enumerate_paths(g, rows[l], cols[l]));
    }
  }

  std::vector<PathSystem> run() {
    PathSystem current;
    extend(0, current);
    return std::move(out_);
  }

 private:
  void extend(std::size_t slot, PathSystem& current) {
    if (slot == candidates_.size()) {
      out_.push_back(current);
      return;
    }
    for (const Path& p : candidates_[slot]) {
      const auto cells = g_.vertices(p);
      const bool clash = std::any_of(cells.begin(), cells.end(),
                                     [&](const Cell& c) { return used_[index(c)]; });
      if (clash) continue;
      for (const Cell& c : cells) used_[index(c)] = true;
      current.paths.push_back(p);
      extend(slot + 1, current);
      current.paths.pop_back();
      for (const Cell& c : cells) used_[index(c)] = false;
    }
  }

  std::size_t index(const Cell& c) const { return (c.row - 1) * g_.cols() + (c.col - 1); }

  const ScaffoldGraph& g_;
  std::vector<std::vector<Path>> candidates_;
  std::vector<bool> used_;
  std::vector<PathSystem> out_;
};

}  // namespace

std::string_view to_string(Orientation o) { return o == Orientation::Gamma ? "gamma" : "le"; }

ScaffoldGraph::ScaffoldGraph(Matrix weights, Orientation orientation)
    : weights_(std::move(weights)), orientation_(orientation) {
  require_positive(weights_);
}

void ScaffoldGraph::validate(const Path& p) const {
  require_row_col(*this, p.start, p.end);
  const auto& t = p.turns;
  require(!t.empty() && t.size() % 2 == 1, "turn sequence must have odd length");
  require(t.front().row == p.start, "first turn must lie in the start row");
  require(t.back().col == p.end, "last turn must lie in the end column");
  const Geometry geo = geometry(*this);
  for (const Cell& c : t) {
    require(c.row >= 1 && c.row <= rows() && c.col >= 1 && c.col <= cols(),
            "turn outside the grid");
  }
  for (std::size_t k = 0; k + 1 < t.size(); ++k) {
    if (k % 2 == 0) {
      require(t[k].col == t[k + 1].col && advance(t[k].row, t[k + 1].row, geo.row_step) > 0,
              "turn sequence does not move along a column");
    } else {
      require(t[k].row == t[k + 1].row && advance(t[k].col, t[k + 1].col, geo.col_step) > 0,
              "turn sequence does not move along a row");
    }
  }
}

std::vector<Cell> ScaffoldGraph::vertices(const Path& p) const {
  const Geometry geo = geometry(*this);
  std::vector<Cell> out;
  Cell at{p.start, geo.entry_col};
  out.push_back(at);
  auto walk_to = [&](const Cell& target) {
    while (at != target) {
      if (at.row == target.row) {
        at.col = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(at.col) + geo.col_step);
      } else {
        at.row = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(at.row) + geo.row_step);
      }
      out.push_back(at);
    }
  };
  for (const Cell& turn : p.turns) walk_to(turn);
  walk_to({geo.exit_row, p.end});
  return out;
}

ScaffoldGraph build_graph(const Matrix& weights, Orientation o) { return {weights, o}; }

Rational path_weight(const ScaffoldGraph& g, const Path& p) {
  g.validate(p);
  Rational w = 1;
  for (std::size_t k = 0; k < p.turns.size(); ++k) {
    if (k % 2 == 0) {
      w *= g.weight(p.turns[k]);
    } else {
      w /= g.weight(p.turns[k]);
    }
  }
  return w;
}

Path primary_path(const ScaffoldGraph& g, std::size_t i, std::size_t j) {
  require_row_col(g, i, j);
  return Path{i, j, {Cell{i, j}}};
}

mpz_class count_paths(const ScaffoldGraph& g, std::size_t i, std::size_t j) {
  require_row_col(g, i, j);
  if (g.orientation() == Orientation::Gamma) {
    return binomial((g.rows() - i) + (g.cols() - j), g.rows() - i);
  }
  return binomial((i - 1) + (j - 1), i - 1);
}

std::vector<Path> enumerate_paths(const ScaffoldGraph& g, std::size_t i, std::size_t j) {
  require(count_paths(g, i, j) <= kMaxEnumeratedPaths,
          "path enumeration would exceed " + std::to_string(kMaxEnumeratedPaths) + " paths");
  return PathEnumerator(g, i, j).run();
}

std::vector<Path> enumerate_paths_bounded(const ScaffoldGraph& g, std::size_t i, std::size_t j,
                                          std::size_t bound) {
  require(g.orientation() == Orientation::Gamma, "bounded enumeration is defined for Gamma graphs");
  require(j <= bound && bound <= g.cols(), "bound must satisfy j <= bound <= n");
  auto paths = enumerate_paths(g, i, j);
  std::erase_if(paths, [&](const Path& p) { return p.turns.front().col > bound; });
  return paths;
}

namespace {

// Path sums by dynamic programming over the equivalent edge-weighted grid:
// vertical edges weigh 1, the edge from row vertex i into (i,n) weighs t(i,n)
// and the edge (i,l) -> (i,l-1) weighs t(i,l-1) / t(i,l). Edge products
// telescope to the vertex weight of every path.
Matrix gamma_path_sums(const Matrix& t) {
  const std::size_t m = t.rows();
  const std::size_t n = t.cols();
  Matrix x(m, n);
  // reach(a, b): total weight from internal vertex (a,b) to the current column vertex.
  std::vector<Rational> reach(m * n);
  auto at = [&](std::size_t a, std::size_t b) -> Rational& { return reach[(a - 1) * n + (b - 1)]; };
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t a = m; a >= 1; --a) {
      for (std::size_t b = 1; b <= n; ++b) {
        Rational r = a < m ? at(a + 1, b) : Rational(b == j ? 1 : 0);
        if (b > 1) r += t(a, b - 1) / t(a, b) * at(a, b - 1);
        at(a, b) = std::move(r);
      }
    }
    for (std::size_t i = 1; i <= m; ++i) x(i, j) = t(i, n) * at(i, n);
  }
  return x;
}

}  // namespace

Matrix x_of_t(const Matrix& weights, Orientation o) {
  require_positive(weights);
  if (o == Orientation::Gamma) return gamma_path_sums(weights);
  // The Le grid is the half-turn rotation of the Gamma grid.
  return rotate_half_turn(gamma_path_sums(rotate_half_turn(weights)));
}

std::vector<PathSystem> enumerate_vertex_disjoint_systems(const ScaffoldGraph& g,
                                                          const IndexSet& rows,
                                                          const IndexSet& cols) {
  require(rows.size() == cols.size(), "path systems need |I| = |J|");
  require(rows.back() <= g.rows() && cols.back() <= g.cols(), "index set out of range");
  return DisjointSearch(g, rows, cols).run();
}

bool is_vertex_disjoint(const ScaffoldGraph& g, const PathSystem& system) {
  std::vector<bool> used(g.rows() * g.cols(), false);
  std::vector<std::size_t> starts;
  std::vector<std::size_t> ends;
  for (const Path& p : system.paths) {
    if (std::find(starts.begin(), starts.end(), p.start) != starts.end()) return false;
    if (std::find(ends.begin(), ends.end(), p.end) != ends.end()) return false;
    starts.push_back(p.start);
    ends.push_back(p.end);
    for (const Cell& c : g.vertices(p)) {
      const std::size_t k = (c.row - 1) * g.cols() + (c.col - 1);
      if (used[k]) return false;
      used[k] = true;
    }
  }
  return true;
}

Rational system_weight(const ScaffoldGraph& g, const PathSystem& system) {
  Rational w = 1;
  for (const Path& p : system.paths) w *= path_weight(g, p);
  return w;
}

Rational lgv_minor(const ScaffoldGraph& g, const IndexSet& rows, const IndexSet& cols) {
  Rational sum = 0;
  for (const PathSystem& s : enumerate_vertex_disjoint_systems(g, rows, cols)) {
    sum += system_weight(g, s);
  }
  return sum;
}

Rational blocked_path_sum(const Matrix& weights, std::size_t i, std::size_t j, std::size_t bound) {
  const ScaffoldGraph g(weights, Orientation::Gamma);
  Rational sum = 0;
  for (const Path& p : enumerate_paths_bounded(g, i, j, bound)) sum += path_weight(g, p);
  return sum;
}

Rational blocked_minor_ratio(const Matrix& x, std::size_t i, std::size_t j, std::size_t bound) {
  require(i >= 1 && i <= x.rows(), "row vertex out of range");
  require(j >= 1 && j <= bound && bound <= x.cols(), "need 1 <= j <= bound <= n");
  const Rational denominator = leading_minor(x, i + 1, bound + 1);
  if (denominator.is_zero()) throw NotTotallyPositiveError("vanishing contiguous minor");
  return leading_prefix_minor(x, i, i + 1, j, bound + 1) / denominator;
}

std::string to_dot(const ScaffoldGraph& g) {
  const std::size_t m = g.rows();
  const std::size_t n = g.cols();
  const bool gamma = g.orientation() == Orientation::Gamma;
  auto cell = [](std::size_t i, std::size_t j) {
    return "\"v" + std::to_string(i) + "_" + std::to_string(j) + "\"";
  };
  auto row = [](std::size_t i) { return "\"r" + std::to_string(i) + "\""; };
  auto col = [](std::size_t j) { return "\"c" + std::to_string(j) + "\""; };

  std::ostringstream os;
  os << "digraph scaffold_" << to_string(g.orientation()) << "_" << m << "x" << n << " {\n";
  os << "  node [shape=circle];\n";
  for (std::size_t i = 1; i <= m; ++i) {
    os << "  " << row(i) << " [label=\"" << i << "\", shape=box];\n";
  }
  for (std::size_t j = 1; j <= n; ++j) {
    os << "  " << col(j) << " [label=\"" << j << "\", shape=box];\n";
  }
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      os << "  " << cell(i, j) << " [label=\"" << g.weights()(i, j) << "\", pos=\"" << j << ","
         << (m + 1 - i) << "!\"];\n";
    }
  }
  for (std::size_t i = 1; i <= m; ++i) {
    os << "  " << row(i) << " -> " << cell(i, gamma ? n : 1) << ";\n";
    for (std::size_t j = 1; j < n; ++j) {
      if (gamma) {
        os << "  " << cell(i, j + 1) << " -> " << cell(i, j) << ";\n";
      } else {
        os << "  " << cell(i, j) << " -> " << cell(i, j + 1) << ";\n";
      }
    }
  }
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t i = 1; i < m; ++i) {
      if (gamma) {
        os << "  " << cell(i, j) << " -> " << cell(i + 1, j) << ";\n";
      } else {
        os << "  " << cell(i + 1, j) << " -> " << cell(i, j) << ";\n";
      }
    }
    os << "  " << cell(gamma ? m : 1, j) << " -> " << col(j) << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace tpscaffold
