#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "tpscaffold/bordering.hpp"
#include "tpscaffold/cauchon.hpp"
#include "tpscaffold/errors.hpp"
#include "tpscaffold/insertion.hpp"
#include "tpscaffold/matrix_io.hpp"
#include "tpscaffold/scaffold_graph.hpp"
#include "tpscaffold/total_positivity.hpp"

namespace py = pybind11;
using namespace tpscaffold;

// Rationals cross the boundary as canonical "p/q" strings; the Python layer
// turns them into fractions.Fraction.
using Rows = std::vector<std::vector<std::string>>;

namespace {

Matrix to_matrix(const Rows& rows) {
  std::vector<std::vector<Rational>> data;
  for (const auto& row : rows) {
    std::vector<Rational> line;
    for (const auto& s : row) line.push_back(Rational::parse(s));
    data.push_back(std::move(line));
  }
  return Matrix::from_rows(data);
}

Rows to_rows(const Matrix& m) {
  Rows out(m.rows());
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    for (std::size_t j = 1; j <= m.cols(); ++j) out[i - 1].push_back(m(i, j).str());
  }
  return out;
}

std::vector<Rational> to_vector(const std::vector<std::string>& v) {
  std::vector<Rational> out;
  for (const auto& s : v) out.push_back(Rational::parse(s));
  return out;
}

std::vector<std::string> to_strings(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

Orientation orientation(const std::string& name) {
  if (name == "gamma") return Orientation::Gamma;
  if (name == "le") return Orientation::Le;
  throw py::value_error("orientation must be 'gamma' or 'le'");
}

BorderSide side(const std::string& name) {
  for (BorderSide s : {BorderSide::Above, BorderSide::Below, BorderSide::Left, BorderSide::Right}) {
    if (to_string(s) == name) return s;
  }
  throw py::value_error("side must be one of above, below, left, right");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact scaffolding toolkit for totally positive matrices";

  auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  auto precondition = py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());
  py::register_exception<NotTotallyPositiveError>(m, "NotTotallyPositiveError", precondition.ptr());
  py::register_exception<ParseError>(m, "ParseError", error.ptr());

  m.def("x_of_t", [](const Rows& t, const std::string& o) {
    return to_rows(x_of_t(to_matrix(t), orientation(o)));
  }, py::arg("t"), py::arg("orientation") = "gamma");

  m.def("gamma_scaffold", [](const Rows& x) { return to_rows(gamma_scaffold(to_matrix(x))); });
  m.def("le_scaffold", [](const Rows& x) { return to_rows(le_scaffold(to_matrix(x))); });

  m.def("cauchon_trace", [](const Rows& x, const std::string& o) {
    const CauchonTrace trace =
        cauchon_trace(to_matrix(x), orientation(o) == Orientation::Gamma ? StepOrder::ReverseLex
                                                                        : StepOrder::ColMajor);
    std::vector<Rows> out;
    for (const auto& e : trace.entries) out.push_back(to_rows(e.matrix));
    return out;
  }, py::arg("x"), py::arg("orientation") = "gamma");

  m.def("minor", [](const Rows& x, std::vector<std::size_t> rows, std::vector<std::size_t> cols) {
    return minor(to_matrix(x), IndexSet(std::move(rows)), IndexSet(std::move(cols))).str();
  });

  m.def("lgv_minor", [](const Rows& t, std::vector<std::size_t> rows, std::vector<std::size_t> cols,
                        const std::string& o) {
    return lgv_minor(build_graph(to_matrix(t), orientation(o)), IndexSet(std::move(rows)),
                     IndexSet(std::move(cols))).str();
  }, py::arg("t"), py::arg("rows"), py::arg("cols"), py::arg("orientation") = "gamma");

  m.def("is_totally_positive", [](const Rows& x, bool fast) {
    const TpVerdict v =
        is_totally_positive(to_matrix(x), fast ? TpCheckMode::Fast : TpCheckMode::Exhaustive);
    return v.totally_positive;
  }, py::arg("x"), py::arg("fast") = false);

  m.def("border", [](const Rows& x, const std::string& s, const std::vector<std::string>& params) {
    return to_rows(border(to_matrix(x), BorderParams(side(s), to_vector(params))));
  });

  m.def("recover_border_params", [](const Rows& x, const std::string& s) {
    return to_strings(recover_border_params(to_matrix(x), side(s)).values());
  });

  m.def("solve_insertion", [](const Rows& x, std::size_t k) {
    const InsertionSolution sol = solve_strongly_positive(build_insertion_system(to_matrix(x), k));
    py::dict out;
    out["r"] = to_strings(sol.r);
    out["q"] = to_strings(sol.q);
    out["s"] = to_strings(sol.s);
    out["row"] = to_strings(sol.inserted_row);
    out["alpha"] = to_strings(sol.alpha);
    out["beta"] = to_strings(sol.beta);
    return out;
  });

  m.def("insert_row", [](const Rows& x, std::size_t k, std::optional<Rows> witness) {
    std::optional<InsertionCandidate> cand;
    if (witness) {
      const Matrix w = to_matrix(*witness);
      if (w.rows() != 3) throw py::value_error("witness must hold three rows: r, q, s");
      cand = InsertionCandidate{w.row(1), w.row(2), w.row(3)};
    }
    return to_rows(insert_row(to_matrix(x), k, cand));
  }, py::arg("x"), py::arg("k"), py::arg("witness") = py::none());

  m.def("insert_column", [](const Rows& x, std::size_t k) {
    return to_rows(insert_column(to_matrix(x), k));
  });

  m.def("to_dot", [](const Rows& t, const std::string& o) {
    return to_dot(build_graph(to_matrix(t), orientation(o)));
  }, py::arg("t"), py::arg("orientation") = "gamma");

  m.def("parse_matrix", [](const std::string& text) { return to_rows(parse_matrix(text)); });
  m.def("format_matrix", [](const Rows& x) { return format_matrix(to_matrix(x)); });
}
