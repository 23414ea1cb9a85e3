#include "tpscaffold/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "tpscaffold/bordering.hpp"
#include "tpscaffold/cauchon.hpp"
#include "tpscaffold/errors.hpp"
#include "tpscaffold/insertion.hpp"
#include "tpscaffold/matrix_io.hpp"
#include "tpscaffold/scaffold_graph.hpp"
#include "tpscaffold/total_positivity.hpp"

namespace tpscaffold::cli {

namespace {

/// Input file missing, unreadable or malformed.
class InputError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string input;
  std::string output;
  bool json = false;

  bool gamma = false;
  bool le = false;
  bool trace = false;

  std::string mode = "exhaustive";
  bool force = false;

  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;

  std::size_t after = 0;
  std::string witness;
  bool verbose = false;

  std::string side;
  std::string params;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Matrix load_matrix(const std::string& path, bool json) {
  const std::string text = read_file(path);
  try {
    return json ? parse_matrix_json(text) : parse_matrix(text);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string render(const Matrix& m, bool json) { return json ? format_matrix_json(m) : format_matrix(m); }

void emit(const Options& opt, const std::string& text, std::ostream& out) {
  if (opt.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.output, std::ios::binary);
  if (!file) throw InputError("cannot write '" + opt.output + "'");
  file << text;
}

Orientation orientation_of(const Options& opt) {
  if (opt.gamma == opt.le) throw CLI::ValidationError("exactly one of --gamma or --le is required");
  return opt.gamma ? Orientation::Gamma : Orientation::Le;
}

std::string trace_text(const CauchonTrace& trace, bool json) {
  std::ostringstream os;
  for (const TraceEntry& e : trace.entries) {
    if (!e.pivot) {
      os << "# input";
    } else {
      os << "# step " << *e.pivot;
    }
    if (e.label) os << " -> X^" << *e.label;
    os << '\n' << render(e.matrix, json);
  }
  return os.str();
}

std::vector<Rational> as_vector(const Matrix& m, const std::string& what) {
  if (m.rows() == 1) return m.row(1);
  if (m.cols() == 1) return m.column(1);
  throw PreconditionError(what + " must be a single row or column");
}

InsertionCandidate load_witness(const std::string& path, bool json) {
  const Matrix w = load_matrix(path, json);
  if (w.rows() != 3) throw PreconditionError("witness file must hold 3 rows: r, q, s");
  return {w.row(1), w.row(2), w.row(3)};
}

BorderSide side_of(const std::string& name) {
  static const std::map<std::string, BorderSide> sides = {{"above", BorderSide::Above},
                                                          {"below", BorderSide::Below},
                                                          {"left", BorderSide::Left},
                                                          {"right", BorderSide::Right}};
  return sides.at(name);
}

int do_check(const Options& opt, std::ostream& out) {
  const Matrix x = load_matrix(opt.input, opt.json);
  const auto mode = opt.mode == "fast" ? TpCheckMode::Fast : TpCheckMode::Exhaustive;
  const TpVerdict v = is_totally_positive(x, mode, opt.force);
  std::ostringstream os;
  if (v) {
    os << "TP\n";
  } else if (v.witness) {
    os << "NOT TP: minor rows " << v.witness->rows << " cols " << v.witness->cols << " = "
       << v.witness->value << '\n';
  } else {
    os << "NOT TP: " << v.reason << '\n';
  }
  emit(opt, os.str(), out);
  return v ? kSuccess : kNotTotallyPositive;
}

int do_scaffold(const Options& opt, std::ostream& out) {
  const Orientation o = orientation_of(opt);
  const Matrix x = load_matrix(opt.input, opt.json);
  if (opt.trace) {
    const auto order = o == Orientation::Gamma ? StepOrder::ReverseLex : StepOrder::ColMajor;
    const CauchonTrace trace = cauchon_trace(x, order);
    // Same failure conditions as the plain scaffold.
    const Matrix t = o == Orientation::Gamma ? gamma_scaffold(x) : le_scaffold(x);
    (void)t;
    emit(opt, trace_text(trace, opt.json), out);
    return kSuccess;
  }
  const Matrix t = o == Orientation::Gamma ? gamma_scaffold(x) : le_scaffold(x);
  emit(opt, render(t, opt.json), out);
  return kSuccess;
}

int do_reconstruct(const Options& opt, std::ostream& out) {
  const Orientation o = orientation_of(opt);
  const Matrix t = load_matrix(opt.input, opt.json);
  emit(opt, render(x_of_t(t, o), opt.json), out);
  return kSuccess;
}

int do_minor(const Options& opt, std::ostream& out) {
  const Matrix x = load_matrix(opt.input, opt.json);
  std::vector<std::size_t> rows = opt.rows;
  std::vector<std::size_t> cols = opt.cols;
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  emit(opt, minor(x, IndexSet(rows), IndexSet(cols)).str() + "\n", out);
  return kSuccess;
}

int do_insert(const Options& opt, bool column, std::ostream& out, std::ostream& err) {
  const Matrix x = load_matrix(opt.input, opt.json);
  std::optional<InsertionCandidate> witness;
  if (!opt.witness.empty()) witness = load_witness(opt.witness, opt.json);

  const Matrix base = column ? transpose(x) : x;
  const InsertionSystem sys = build_insertion_system(base, opt.after);
  InsertionCandidate used;
  if (witness) {
    const SolutionVerdict v = verify_solution(sys, *witness);
    if (!v) throw PreconditionError("invalid insertion witness: " + v.violation);
    used = *witness;
  } else {
    const InsertionSolution sol = solve_strongly_positive(sys);
    used = {sol.r, sol.q, sol.s};
  }
  Matrix result = with_row_inserted(base, opt.after + 1, inserted_row(sys, used.r));
  if (column) result = transpose(result);
  emit(opt, render(result, opt.json), out);
  if (opt.verbose) {
    err << "r: " << format_vector(used.r) << '\n'
        << "q: " << format_vector(used.q) << '\n'
        << "s: " << format_vector(used.s) << '\n';
  }
  return kSuccess;
}

int do_border(const Options& opt, std::ostream& out) {
  const Matrix x = load_matrix(opt.input, opt.json);
  const BorderSide side = side_of(opt.side);
  const BorderParams params(side, as_vector(load_matrix(opt.params, opt.json), "border parameters"));
  emit(opt, render(border(x, params), opt.json), out);
  return kSuccess;
}

int do_graph_dot(const Options& opt, std::ostream& out) {
  const Orientation o = orientation_of(opt);
  const Matrix t = load_matrix(opt.input, opt.json);
  emit(opt, to_dot(build_graph(t, o)), out);
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Scaffolding toolkit for totally positive matrices", "tpscaf"};
  app.require_subcommand(1);
  app.add_flag("--json", opt.json, "Read and write matrices in the JSON mirror format");

  auto input = [&](CLI::App* sub, const char* what) {
    sub->add_option("input", opt.input, what)->required();
    sub->add_option("-o,--output", opt.output, "Write the result here instead of stdout");
  };
  auto orientation = [&](CLI::App* sub) {
    auto* g = sub->add_flag("--gamma", opt.gamma, "Gamma scaffolding");
    auto* l = sub->add_flag("--le", opt.le, "Le scaffolding");
    g->excludes(l);
  };

  auto* check = app.add_subcommand("check", "Decide total positivity");
  input(check, "Matrix file");
  check->add_option("--mode", opt.mode, "exhaustive (all minors) or fast (Cauchon + reconstruction)")
      ->check(CLI::IsMember({"exhaustive", "fast"}));
  check->add_flag("--force", opt.force, "Allow exhaustive checks when min(m,n) > 8");

  auto* scaffold = app.add_subcommand("scaffold", "Compute the Gamma or Le scaffolding");
  input(scaffold, "TP matrix file");
  orientation(scaffold);
  scaffold->add_flag("--trace", opt.trace, "Write every intermediate matrix of Cauchon's algorithm");

  auto* reconstruct = app.add_subcommand("reconstruct", "Path-sum matrix X(T) of a positive T");
  input(reconstruct, "Scaffolding file");
  orientation(reconstruct);

  auto* minor_cmd = app.add_subcommand("minor", "Exact minor det A[I,J]");
  input(minor_cmd, "Matrix file");
  minor_cmd->add_option("--rows", opt.rows, "Row indices, comma separated")
      ->required()
      ->delimiter(',');
  minor_cmd->add_option("--cols", opt.cols, "Column indices, comma separated")
      ->required()
      ->delimiter(',');

  auto insert = [&](const char* name, const char* what) {
    auto* sub = app.add_subcommand(name, what);
    input(sub, "TP matrix file");
    sub->add_option("--after", opt.after, "Insert between lines k and k+1")->required();
    sub->add_option("--witness", opt.witness, "3-row matrix file holding r, q, s");
    sub->add_flag("-v,--verbose", opt.verbose, "Print the (r, q, s) witness to stderr");
    return sub;
  };
  auto* insert_row_cmd = insert("insert-row", "Insert a row keeping total positivity");
  auto* insert_col_cmd = insert("insert-col", "Insert a column keeping total positivity");

  auto* border_cmd = app.add_subcommand("border", "Add a line outside a TP matrix");
  input(border_cmd, "TP matrix file");
  border_cmd->add_option("--side", opt.side, "above, below, left or right")
      ->required()
      ->check(CLI::IsMember({"above", "below", "left", "right"}));
  border_cmd->add_option("--params", opt.params, "Row or column matrix file of positive values")
      ->required();

  auto* dot = app.add_subcommand("graph-dot", "Graphviz DOT of a scaffolding graph");
  input(dot, "Scaffolding (weight) file");
  orientation(dot);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (app.got_subcommand(check)) return do_check(opt, out);
    if (app.got_subcommand(scaffold)) return do_scaffold(opt, out);
    if (app.got_subcommand(reconstruct)) return do_reconstruct(opt, out);
    if (app.got_subcommand(minor_cmd)) return do_minor(opt, out);
    if (app.got_subcommand(insert_row_cmd)) return do_insert(opt, false, out, err);
    if (app.got_subcommand(insert_col_cmd)) return do_insert(opt, true, out, err);
    if (app.got_subcommand(border_cmd)) return do_border(opt, out);
    if (app.got_subcommand(dot)) return do_graph_dot(opt, out);
    return kUsage;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    err << "malformed input: " << e.what() << '\n';
    return kMalformedInput;
  } catch (const Error& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kPreconditionFailure;
  } catch (const std::domain_error& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kPreconditionFailure;
  }
}

}  // namespace tpscaffold::cli
