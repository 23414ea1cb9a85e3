#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "../test_support.hpp"
#include "tpscaffold/cauchon.hpp"
#include "tpscaffold/errors.hpp"
#include "tpscaffold/scaffold_graph.hpp"
#include "tpscaffold/total_positivity.hpp"

using namespace tpscaffold;
using tpscaffold::testing::q;

namespace {

const Matrix kWeights{{1, 3, 1}, {1, q(1, 2), 1}};
const Matrix kLeWeights{{8, q(7, 2), 1}, {1, q(1, 16), q(6, 7)}};
const Matrix kOnes3{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}};

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("graph construction rejects non-positive weights") {
  CHECK_THROWS_AS(build_graph(Matrix{{1, 0}}, Orientation::Gamma), PreconditionError);
  CHECK_THROWS_AS(build_graph(Matrix{{1, -1}}, Orientation::Le), PreconditionError);
}

TEST_CASE("path weight alternates turn weights") {
  testing::Generator gen(21);
  const Matrix t = gen.positive_matrix(3, 3);
  const ScaffoldGraph g = build_graph(t, Orientation::Gamma);
  const Path p{1, 1, {{1, 3}, {2, 3}, {2, 2}, {3, 2}, {3, 1}}};
  CHECK(path_weight(g, p) == t(1, 3) / t(2, 3) * t(2, 2) / t(3, 2) * t(3, 1));
  CHECK_THROWS_AS(path_weight(g, Path{1, 1, {{1, 3}, {1, 2}}}), PreconditionError);
}

TEST_CASE("primary paths") {
  const ScaffoldGraph g = build_graph(kWeights, Orientation::Gamma);
  const Path p = primary_path(g, 1, 1);
  CHECK(p.turns == std::vector<Cell>{{1, 1}});
  CHECK(path_weight(g, p) == 1);
  for (std::size_t j = 1; j <= 3; ++j) {
    CHECK(primary_path(g, 2, j).turns == std::vector<Cell>{{2, j}});
    CHECK(enumerate_paths(g, 2, j).size() == 1);
  }
  const ScaffoldGraph le = build_graph(kLeWeights, Orientation::Le);
  CHECK(path_weight(le, primary_path(le, 2, 3)) == q(6, 7));
}

TEST_CASE("path enumeration") {
  const ScaffoldGraph g = build_graph(kWeights, Orientation::Gamma);
  CHECK(enumerate_paths(g, 1, 1).size() == 3);
  CHECK(count_paths(g, 1, 1) == 3);
  const ScaffoldGraph g3 = build_graph(kOnes3, Orientation::Gamma);
  CHECK(enumerate_paths(g3, 1, 1).size() == 6);

  testing::Generator gen(22);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix t = gen.positive_matrix(gen.size(1, 4), gen.size(1, 4));
    for (Orientation o : {Orientation::Gamma, Orientation::Le}) {
      const ScaffoldGraph h = build_graph(t, o);
      for (std::size_t i = 1; i <= t.rows(); ++i) {
        for (std::size_t j = 1; j <= t.cols(); ++j) {
          const auto paths = enumerate_paths(h, i, j);
          CHECK(paths.size() == count_paths(h, i, j).get_ui());
          CHECK(std::is_sorted(paths.begin(), paths.end()));
          CHECK(std::set<Path>(paths.begin(), paths.end()).size() == paths.size());
          for (const Path& p : paths) CHECK_NOTHROW(h.validate(p));
        }
      }
    }
  }
}

TEST_CASE("Le paths of the worked example") {
  const ScaffoldGraph le = build_graph(kLeWeights, Orientation::Le);
  std::multiset<Rational> weights;
  for (const Path& p : enumerate_paths(le, 2, 3)) weights.insert(path_weight(le, p));
  CHECK(weights.count(q(6, 7)) == 1);
  CHECK(weights.count(q(1, 56)) == 1);
  Rational total = 0;
  for (const Rational& w : weights) total += w;
  CHECK(total == 1);
}

TEST_CASE("bounded enumeration") {
  const ScaffoldGraph g = build_graph(kWeights, Orientation::Gamma);
  CHECK(enumerate_paths_bounded(g, 1, 1, 3) == enumerate_paths(g, 1, 1));
  const auto one = enumerate_paths_bounded(g, 1, 1, 1);
  REQUIRE(one.size() == 1);
  CHECK(one.front() == primary_path(g, 1, 1));
  const ScaffoldGraph g3 = build_graph(kOnes3, Orientation::Gamma);
  CHECK(enumerate_paths_bounded(g3, 1, 1, 2).size() == 3);
}

TEST_CASE("path sum matrix") {
  CHECK(x_of_t(kWeights, Orientation::Gamma) == Matrix{{8, q(7, 2), 1}, {1, q(1, 2), 1}});
  CHECK(x_of_t(Matrix{{2, 1, 1}, {1, 1, 1}}, Orientation::Gamma) == Matrix{{4, 2, 1}, {1, 1, 1}});
  CHECK(x_of_t(kLeWeights, Orientation::Le) == Matrix{{8, q(7, 2), 1}, {1, q(1, 2), 1}});
  CHECK(x_of_t(kOnes3, Orientation::Gamma) == Matrix{{6, 3, 1}, {3, 2, 1}, {1, 1, 1}});
  CHECK(x_of_t(Matrix{{5}}, Orientation::Le) == Matrix{{5}});
}

TEST_CASE("dynamic programme matches path enumeration") {
  testing::Generator gen(23);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix t = gen.positive_matrix(gen.size(1, 4), gen.size(1, 4));
    CHECK(x_of_t(t, Orientation::Gamma) == testing::path_sum_oracle(t, Orientation::Gamma));
    CHECK(x_of_t(t, Orientation::Le) == testing::path_sum_oracle(t, Orientation::Le));
  }
}

TEST_CASE("vertex-disjoint systems") {
  const ScaffoldGraph g = build_graph(kOnes3, Orientation::Gamma);
  CHECK(enumerate_vertex_disjoint_systems(g, {1, 2}, {1, 2}).size() == 3);
  CHECK(enumerate_vertex_disjoint_systems(g, {1, 2}, {1, 3}).size() == 3);
  CHECK(enumerate_vertex_disjoint_systems(g, {2, 3}, {2, 3}).size() == 1);
  CHECK(lgv_minor(g, {1, 2}, {1, 2}) == 3);
  CHECK(lgv_minor(g, {1, 2, 3}, {1, 2, 3}) == 1);
  for (const PathSystem& s : enumerate_vertex_disjoint_systems(g, {1, 2}, {1, 3})) {
    CHECK(is_vertex_disjoint(g, s));
  }
  const PathSystem crossing{{Path{1, 2, {{1, 3}, {2, 3}, {2, 2}}}, primary_path(g, 2, 3)}};
  CHECK_FALSE(is_vertex_disjoint(g, crossing));
}

TEST_CASE("contiguous minors are products of diagonal weights") {
  testing::Generator gen(24);
  const Matrix t = gen.positive_matrix(3, 4);
  const ScaffoldGraph g = build_graph(t, Orientation::Gamma);
  const auto systems = enumerate_vertex_disjoint_systems(g, {1, 2, 3}, {2, 3, 4});
  REQUIRE(systems.size() == 1);
  CHECK(lgv_minor(g, {1, 2, 3}, {2, 3, 4}) == t(1, 2) * t(2, 3) * t(3, 4));
  CHECK(lgv_minor(g, {2}, {3}) == x_of_t(t, Orientation::Gamma)(2, 3));
}

TEST_CASE("blocked path sums") {
  CHECK(blocked_path_sum(kWeights, 1, 1, 1) == 1);
  const Matrix x = x_of_t(kWeights, Orientation::Gamma);
  CHECK(blocked_minor_ratio(x, 1, 1, 1) == 1);
  testing::Generator gen(25);
  const Matrix t = gen.positive_matrix(3, 3);
  for (std::size_t j = 1; j <= 3; ++j) {
    for (std::size_t l = j; l <= 3; ++l) CHECK(blocked_path_sum(t, 3, j, l) == t(3, j));
  }
}

TEST_CASE("dot export") {
  const std::string dot = to_dot(build_graph(kWeights, Orientation::Gamma));
  CHECK(dot.rfind("digraph scaffold_gamma_2x3 {", 0) == 0);
  CHECK(count_of(dot, "[label=") == 11);
  CHECK(count_of(dot, " -> ") == 12);
  CHECK(dot == to_dot(build_graph(kWeights, Orientation::Gamma)));

  const std::string single = to_dot(build_graph(Matrix{{5}}, Orientation::Gamma));
  CHECK(count_of(single, "[label=") == 3);
  CHECK(count_of(single, " -> ") == 2);

  const std::string le = to_dot(build_graph(kLeWeights, Orientation::Le));
  CHECK(le.rfind("digraph scaffold_le_2x3 {", 0) == 0);
  CHECK(count_of(le, " -> ") == 12);
  CHECK(le.find("\"v2_3\" [label=\"6/7\"") != std::string::npos);
}

TEST_CASE("bounded enumeration filters on the first turn") {
  testing::Generator gen(26);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix t = gen.positive_matrix(gen.size(1, 4), gen.size(1, 4));
    const ScaffoldGraph g = build_graph(t, Orientation::Gamma);
    for (std::size_t i = 1; i <= t.rows(); ++i) {
      for (std::size_t j = 1; j <= t.cols(); ++j) {
        const auto all = enumerate_paths(g, i, j);
        std::size_t partitioned = 0;
        for (std::size_t l = j; l <= t.cols(); ++l) {
          std::vector<Path> expected;
          for (const Path& p : all) {
            if (p.turns.front().col <= l) expected.push_back(p);
            if (p.turns.front().col == l) ++partitioned;
          }
          CHECK(enumerate_paths_bounded(g, i, j, l) == expected);
        }
        CHECK(partitioned == all.size());
      }
    }
  }
}

TEST_CASE("path counts match between orientations") {
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t n = 1; n <= 4; ++n) {
      Matrix ones(m, n);
      for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t j = 1; j <= n; ++j) ones(i, j) = 1;
      }
      const ScaffoldGraph gamma = build_graph(ones, Orientation::Gamma);
      const ScaffoldGraph le = build_graph(ones, Orientation::Le);
      for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
          CHECK(count_paths(gamma, i, j) == count_paths(le, m + 1 - i, n + 1 - j));
        }
      }
    }
  }
}

TEST_CASE("path sum matrices are totally positive") {
  testing::Generator gen(27);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix t = gen.positive_matrix(gen.size(1, 4), gen.size(1, 4));
    CHECK(is_totally_positive(x_of_t(t, Orientation::Gamma)));
    CHECK(is_totally_positive(x_of_t(t, Orientation::Le)));
  }
}
