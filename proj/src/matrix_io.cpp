#include "tpscaffold/matrix_io.hpp"

#include "json.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "tpscaffold/errors.hpp"

namespace tpscaffold {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> split(std::string_view line) {
  std::vector<Token> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    const std::size_t begin = pos;
    while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos > begin) out.push_back({line.substr(begin, pos - begin), begin + 1});
  }
  return out;
}

Rational parse_entry(const Token& tok, std::size_t line) {
  try {
    return Rational::parse(tok.text);
  } catch (const std::domain_error&) {
    throw ParseError(line, tok.column, "zero denominator in '" + std::string(tok.text) + "'");
  } catch (const std::invalid_argument&) {
    throw ParseError(line, tok.column, "malformed number '" + std::string(tok.text) + "'");
  }
}

std::size_t parse_dimension(const Token& tok, std::size_t line) {
  const Rational v = parse_entry(tok, line);
  if (!v.is_integer() || !v.is_positive() || !v.get().get_num().fits_ulong_p()) {
    throw ParseError(line, tok.column, "dimension must be a positive integer");
  }
  return v.get().get_num().get_ui();
}

}  // namespace

Matrix parse_matrix(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  bool have_header = false;
  std::vector<std::vector<Rational>> data;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto tokens = split(line);
    if (tokens.empty() || tokens.front().text.front() == '#') continue;

    if (!have_header) {
      if (tokens.size() != 2) {
        throw ParseError(line_no, 0, "header must be \"m n\", found " +
                                         std::to_string(tokens.size()) + " tokens");
      }
      rows = parse_dimension(tokens[0], line_no);
      cols = parse_dimension(tokens[1], line_no);
      have_header = true;
      continue;
    }
    if (data.size() == rows) {
      throw ParseError(line_no, tokens.front().column,
                       "unexpected data after " + std::to_string(rows) + " rows");
    }
    if (tokens.size() != cols) {
      throw ParseError(line_no, 0,
                       "row " + std::to_string(data.size() + 1) + " has " +
                           std::to_string(tokens.size()) + " token" +
                           (tokens.size() == 1 ? "" : "s") + ", expected " + std::to_string(cols));
    }
    std::vector<Rational> row;
    row.reserve(cols);
    for (const Token& tok : tokens) row.push_back(parse_entry(tok, line_no));
    data.push_back(std::move(row));
  }

  if (!have_header) throw ParseError(line_no, 0, "missing \"m n\" header");
  if (data.size() != rows) {
    throw ParseError(line_no, 0,
                     "expected " + std::to_string(rows) + " rows, found " + std::to_string(data.size()));
  }
  return Matrix::from_rows(data);
}

std::string format_matrix(const Matrix& a) {
  std::ostringstream os;
  os << a.rows() << ' ' << a.cols() << '\n';
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    for (std::size_t j = 1; j <= a.cols(); ++j) os << (j > 1 ? " " : "") << a(i, j);
    os << '\n';
  }
  return os.str();
}

Matrix parse_matrix_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(1, e.byte, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("rows") || !doc.contains("cols") ||
      !doc.contains("entries")) {
    throw ParseError(1, 0, "JSON matrix needs \"rows\", \"cols\" and \"entries\"");
  }
  const auto& rows_field = doc["rows"];
  const auto& cols_field = doc["cols"];
  if (!rows_field.is_number_unsigned() || !cols_field.is_number_unsigned() ||
      rows_field.get<std::size_t>() == 0 || cols_field.get<std::size_t>() == 0) {
    throw ParseError(1, 0, "\"rows\" and \"cols\" must be positive integers");
  }
  const auto rows = rows_field.get<std::size_t>();
  const auto cols = cols_field.get<std::size_t>();
  const auto& entries = doc["entries"];
  if (!entries.is_array() || entries.size() != rows) {
    throw ParseError(1, 0, "\"entries\" must hold " + std::to_string(rows) + " rows");
  }
  std::vector<std::vector<Rational>> data;
  for (std::size_t i = 0; i < rows; ++i) {
    if (!entries[i].is_array() || entries[i].size() != cols) {
      throw ParseError(1, 0, "row " + std::to_string(i + 1) + " must hold " +
                                 std::to_string(cols) + " entries");
    }
    std::vector<Rational> row;
    for (std::size_t j = 0; j < cols; ++j) {
      const auto& e = entries[i][j];
      std::string token;
      if (e.is_number_integer()) {
        token = e.dump();
      } else if (e.is_string()) {
        token = e.get<std::string>();
      } else {
        throw ParseError(1, 0, "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                   ") must be an integer or a \"p/q\" string");
      }
      row.push_back(parse_entry({token, 0}, 1));
    }
    data.push_back(std::move(row));
  }
  return Matrix::from_rows(data);
}

std::string format_matrix_json(const Matrix& a) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 1; j <= a.cols(); ++j) {
      const Rational& x = a(i, j);
      if (x.is_integer() && x.get().get_num().fits_slong_p()) {
        row.push_back(x.get().get_num().get_si());
      } else {
        row.push_back(x.str());
      }
    }
    entries.push_back(std::move(row));
  }
  nlohmann::json doc = {{"rows", a.rows()}, {"cols", a.cols()}, {"entries", entries}};
  return doc.dump() + "\n";
}

std::string format_vector(const std::vector<Rational>& v) {
  std::ostringstream os;
  for (std::size_t t = 0; t < v.size(); ++t) os << (t ? " " : "") << v[t];
  return os.str();
}

}  // namespace tpscaffold
