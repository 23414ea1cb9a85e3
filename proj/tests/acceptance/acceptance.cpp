// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "../test_support.hpp"
#include "tpscaffold/bordering.hpp"
#include "tpscaffold/cauchon.hpp"
#include "tpscaffold/cli.hpp"
#include "tpscaffold/insertion.hpp"
#include "tpscaffold/total_positivity.hpp"

using namespace tpscaffold;
using tpscaffold::testing::q;

namespace {

// Collects the first few failures of one criterion.
class Report {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_.size() < 5) failures_.push_back(what);
    ++failed_;
  }

  bool ok() const { return failed_ == 0; }
  std::size_t checks() const { return checks_; }

  std::string summary() const {
    std::ostringstream os;
    os << checks_ << " checks";
    if (failed_) {
      os << ", " << failed_ << " failed";
      for (const auto& f : failures_) os << "\n      " << f;
    }
    return os.str();
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

template <typename T>
std::string show(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

const Matrix kPathSums{{8, q(7, 2), 1}, {1, q(1, 2), 1}};
const Matrix kOnesPaths{{6, 3, 1}, {3, 2, 1}, {1, 1, 1}};

void worked_examples(Report& r) {
  r.expect(x_of_t(Matrix{{1, 3, 1}, {1, q(1, 2), 1}}, Orientation::Gamma) == kPathSums,
           "(a) path sums of the first worked example");

  const CauchonTrace trace = cauchon_trace(kPathSums, StepOrder::ReverseLex);
  bool passes = false;
  for (const auto& e : trace.entries) passes |= e.matrix == Matrix{{7, 3, 1}, {1, q(1, 2), 1}};
  r.expect(passes, "(b) trace passes through [[7,3,1],[1,1/2,1]]");
  r.expect(trace.output() == Matrix{{1, 3, 1}, {1, q(1, 2), 1}}, "(b) trace ends at T");

  r.expect(le_scaffold(kPathSums) == Matrix{{8, q(7, 2), 1}, {1, q(1, 16), q(6, 7)}},
           "(c) Le scaffolding");

  const Matrix bordered = border_above(Matrix{{4, 2, 1}, {1, 1, 1}}, BorderParams(BorderSide::Above, {1, 2, 2}));
  r.expect(bordered == Matrix{{15, 6, 2}, {4, 2, 1}, {1, 1, 1}}, "(d) border above");
  r.expect(bordered(1, 1) == 15, "(d) x01 = 15");

  const InsertionSystem sys = build_insertion_system(kOnesPaths, 2);
  r.expect(sys.a_r == Matrix{{1, 1, 1}, {0, 1, 1}, {0, 0, 1}}, "(e) left side of the first set");
  r.expect(sys.a_q == Matrix{{1, 0, 0}, {q(2, 3), 1, 0}, {q(1, 3), 1, 1}},
           "(e) right side of the first set");
  r.expect(sys.b_s == Matrix{{1, 0, 0}, {1, 1, 0}, {1, 2, 1}}, "(e) second set");
  const InsertionCandidate witness{{1, 2, 6}, {9, 2, 1}, {1, 1, 3}};
  r.expect(bool(verify_solution(sys, witness)), "(e) published witness verifies");
  const Matrix inserted = insert_row(kOnesPaths, 2, witness);
  r.expect(inserted == Matrix{{6, 3, 1}, {3, 2, 1}, {9, 8, 6}, {1, 1, 1}}, "(e) inserted matrix");
  r.expect(bool(is_totally_positive(inserted)), "(e) inserted matrix is TP");
}

void lgv_equivalence(Report& r) {
  testing::Generator gen(2001);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix t = gen.positive_matrix(gen.size(2, 4), gen.size(2, 4));
    const ScaffoldGraph g = build_graph(t, Orientation::Gamma);
    const Matrix x = x_of_t(t, Orientation::Gamma);
    for (std::size_t s = 1; s <= std::min(t.rows(), t.cols()); ++s) {
      for (const IndexSet& rows : index_subsets(t.rows(), s)) {
        for (const IndexSet& cols : index_subsets(t.cols(), s)) {
          const Rational lgv = lgv_minor(g, rows, cols);
          const Rational elim = minor(x, rows, cols);
          const Rational oracle = testing::laplace_minor(x, rows, cols);
          r.expect(lgv == elim && elim == oracle,
                   "T=" + show(t) + " rows " + show(rows) + " cols " + show(cols));
        }
      }
    }
  }
}

void scaffold_round_trips(Report& r) {
  testing::Generator gen(3001);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = gen.size(1, 5);
    const std::size_t n = gen.size(1, 5);
    const Matrix t = gen.positive_matrix(m, n);
    r.expect(gamma_scaffold(x_of_t(t, Orientation::Gamma)) == t, "gamma(X(T)) = T, T=" + show(t));
    r.expect(le_scaffold(x_of_t(t, Orientation::Le)) == t, "le(X(T)) = T, T=" + show(t));

    const Matrix x = x_of_t(gen.positive_matrix(m, n), trial % 2 ? Orientation::Le : Orientation::Gamma);
    r.expect(x_of_t(gamma_scaffold(x), Orientation::Gamma) == x, "X(gamma(X)) = X, X=" + show(x));
    r.expect(x_of_t(le_scaffold(x), Orientation::Le) == x, "X(le(X)) = X, X=" + show(x));
    r.expect(le_scaffold(x) == anti_transpose(gamma_scaffold(anti_transpose(x))),
             "anti-transpose duality, X=" + show(x));
  }
}

void trace_positivity(Report& r) {
  testing::Generator gen(4001);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix x = gen.tp_matrix(gen.size(1, 5), gen.size(1, 5));
    for (StepOrder order : {StepOrder::ReverseLex, StepOrder::ColMajor}) {
      const CauchonTrace trace = cauchon_trace(x, order);
      for (const TraceEntry& e : trace.entries) {
        r.expect(e.matrix.is_positive(), "non-positive intermediate for X=" + show(x));
      }
      const PartialTpVerdict v = partial_tp_check(trace);
      r.expect(v.ok, "partial TP check for X=" + show(x) + ": " + v.violation);
    }
  }
}

void blocked_sums(Report& r) {
  testing::Generator gen(5001);
  for (int trial = 0; trial < 40; ++trial) {
    const Matrix t = gen.positive_matrix(gen.size(1, 4), gen.size(1, 4));
    const Matrix x = x_of_t(t, Orientation::Gamma);
    const Matrix scaffold = gamma_scaffold(x);
    for (std::size_t i = 1; i <= t.rows(); ++i) {
      for (std::size_t j = 1; j <= t.cols(); ++j) {
        for (std::size_t l = j; l <= t.cols(); ++l) {
          r.expect(blocked_path_sum(t, i, j, l) == blocked_minor_ratio(x, i, j, l),
                   "T=" + show(t) + " at " + show(Cell{i, j}) + " bound " + std::to_string(l));
        }
        r.expect(blocked_path_sum(t, i, j, j) == scaffold_entry_formula(x, i, j) &&
                     scaffold_entry_formula(x, i, j) == scaffold(i, j),
                 "entry formula at " + show(Cell{i, j}) + " for T=" + show(t));
      }
    }
  }
}

void insertion_soundness(Report& r) {
  testing::Generator gen(6001);
  for (int trial = 0; trial < 60; ++trial) {
    const Matrix x = gen.tp_matrix(trial % 2 ? 4 : 3, 3);
    for (std::size_t k = 1; k < x.rows(); ++k) {
      const std::string where = "X=" + show(x) + " k=" + std::to_string(k);
      const InsertionSystem sys = build_insertion_system(x, k);
      const InsertionSolution sol = solve_strongly_positive(sys);
      const SolutionVerdict v = verify_solution(sys, {sol.r, sol.q, sol.s});
      r.expect(bool(v), "solution rejected, " + where + ": " + v.violation);
      const Matrix out = with_row_inserted(x, k + 1, sol.inserted_row);
      r.expect(out == insert_row(x, k), "insert_row disagrees with the solver, " + where);
      r.expect(bool(is_totally_positive(out)), "inserted matrix not TP, " + where);

      std::vector<Rational> s(x.cols(), Rational(0));
      s.back() = x(k + 1, x.cols());
      const auto qv = substitute(sys, s).second;
      r.expect(qv == le_scaffold(row_block(x, 1, k + 1)).row(k + 1), "beta identity, " + where);
    }
  }
}

void bordering_round_trips(Report& r) {
  testing::Generator gen(7001);
  for (int trial = 0; trial < 40; ++trial) {
    const Matrix x = gen.tp_matrix(gen.size(1, 4), gen.size(1, 4));
    for (BorderSide side : {BorderSide::Above, BorderSide::Below, BorderSide::Left, BorderSide::Right}) {
      const bool horizontal = side == BorderSide::Above || side == BorderSide::Below;
      const BorderParams p(side, gen.positive_vector(horizontal ? x.cols() : x.rows()));
      const Matrix out = border(x, p);
      const std::string where = std::string(to_string(side)) + " of X=" + show(x);
      r.expect(recover_border_params(out, side) == p, "parameters not recovered, " + where);
      r.expect(bool(is_totally_positive(out)), "bordered matrix not TP, " + where);
    }
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void cli_golden(Report& r) {
  const std::string dir = TPSCAFFOLD_GOLDEN_DIR;
  const auto in = [&](const std::string& name) { return dir + "/inputs/" + name; };
  struct Case {
    std::vector<std::string> args;
    std::string expected;
  };
  const std::vector<Case> workflows = {
      {{"reconstruct", "--gamma", in("t_2x3.txt")}, "reconstruct_gamma.txt"},
      {{"scaffold", "--gamma", "--trace", in("x_2x3.txt")}, "scaffold_gamma_trace.txt"},
      {{"scaffold", "--le", in("x_2x3.txt")}, "scaffold_le.txt"},
      {{"border", "--side", "above", "--params", in("r_border.txt"), in("x_border.txt")},
       "border_above.txt"},
      {{"insert-row", "--after", "2", "--witness", in("witness.txt"), in("x_ones3.txt")},
       "insert_row.txt"},
  };
  for (const Case& c : workflows) {
    std::ostringstream out, err;
    const int code = cli::run(c.args, out, err);
    const std::string expected = slurp(dir + "/expected/" + c.expected);
    r.expect(code == 0 && !expected.empty() && out.str() == expected, "golden " + c.expected);
  }

  const std::vector<std::pair<std::vector<std::string>, int>> failures = {
      {{"check", in("bad_row.txt")}, cli::kMalformedInput},
      {{"check", in("zero_den.txt")}, cli::kMalformedInput},
      {{"check", in("no_such_file.txt")}, cli::kMalformedInput},
      {{"check", in("not_tp.txt")}, cli::kNotTotallyPositive},
      {{"scaffold", "--gamma", in("not_tp.txt")}, cli::kPreconditionFailure},
      {{"scaffold", in("x_2x3.txt")}, cli::kUsage},
      {{"bogus"}, cli::kUsage},
  };
  for (const auto& [args, want] : failures) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    r.expect(code == want, args.front() + " " + args.back() + " exited " + std::to_string(code) +
                               ", expected " + std::to_string(want));
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Report&)>>> criteria = {
      {"worked examples reproduced exactly", worked_examples},
      {"LGV minors = elimination minors = cofactor oracle", lgv_equivalence},
      {"scaffolding round trips and duality", scaffold_round_trips},
      {"Cauchon intermediates positive and partially TP", trace_positivity},
      {"blocked path sums = minor ratios", blocked_sums},
      {"insertion soundness", insertion_soundness},
      {"bordering round trips", bordering_round_trips},
      {"CLI golden files and exit codes", cli_golden},
  };
  int failed = 0;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    Report report;
    try {
      criteria[c].second(report);
    } catch (const std::exception& e) {
      report.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << (c + 1) << ": " << (report.ok() ? "PASS" : "FAIL") << "  "
              << criteria[c].first << " (" << report.summary() << ")" << std::endl;
    if (!report.ok()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
