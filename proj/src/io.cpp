#include "omfam/io.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

namespace omfam {

InputError::InputError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(line == 0 ? message
                                   : "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                                         message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<std::vector<Token>> tokenize_lines(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i >= line.size()) break;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      tokens.push_back({std::string(line.substr(i, j - i)), line_no, i + 1});
      i = j;
    }
    if (!tokens.empty()) lines.push_back(std::move(tokens));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

std::optional<double> irrational_literal(const std::string& s) {
  std::string body = s;
  double sign = 1.0;
  if (!body.empty() && body.front() == '-') {
    sign = -1.0;
    body.erase(0, 1);
  }
  if (body == "pi") return sign * std::numbers::pi;
  if (body == "e") return sign * std::numbers::e;
  if (body.rfind("sqrt(", 0) == 0 && body.back() == ')') {
    const std::string arg = body.substr(5, body.size() - 6);
    try {
      const Rational r = Rational::parse(arg);
      if (r.sign() < 0) return std::nullopt;
      return sign * std::sqrt(r.to_double());
    } catch (const ParseError&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::size_t parse_count(const Token& t) {
  try {
    const Rational r = Rational::parse(t.text);
    if (!r.is_integer() || r.sign() < 0 || !r.numerator().fits_ulong_p()) throw ParseError("");
    return r.numerator().get_ui();
  } catch (const ParseError&) {
    throw InputError("expected a nonnegative integer, got '" + t.text + "'", t.line, t.column);
  }
}

}  // namespace

MatrixFile parse_matrix(std::string_view text, Mode mode) {
  const auto lines = tokenize_lines(text);
  if (lines.empty()) throw InputError("empty matrix file", 1, 1);
  const auto& header = lines.front();
  if (header.size() != 2) throw InputError("header must be 'rows cols'", header.front().line, header.front().column);
  const std::size_t rows = parse_count(header[0]);
  const std::size_t cols = parse_count(header[1]);
  if (rows == 0 || cols == 0) throw InputError("matrix dimensions must be positive", header[0].line, header[0].column);
  if (lines.size() - 1 != rows) {
    const auto& where = lines.back().back();
    throw InputError("expected " + std::to_string(rows) + " rows, found " + std::to_string(lines.size() - 1),
                     where.line, where.column);
  }

  MatrixFile out{Matrix(rows, cols), false};
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& tokens = lines[r + 1];
    if (tokens.size() != cols) {
      const auto& where = tokens.size() > cols ? tokens[cols] : tokens.back();
      throw InputError("expected " + std::to_string(cols) + " entries, found " + std::to_string(tokens.size()),
                       where.line, where.column);
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const Token& t = tokens[c];
      try {
        out.matrix(r, c) = Rational::parse(t.text);
      } catch (const ParseError& e) {
        if (auto approx = irrational_literal(t.text)) {
          if (mode == Mode::Exact)
            throw IrrationalInput("irrational entry '" + t.text + "' at line " + std::to_string(t.line) +
                                  ", column " + std::to_string(t.column) + " needs --mode float");
          out.matrix(r, c) = Rational::from_double(*approx);
          out.approximate = true;
        } else {
          throw InputError(e.what(), t.line, t.column);
        }
      }
    }
  }
  return out;
}

std::string format_matrix(const Matrix& m) {
  std::ostringstream os;
  os << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
    os << '\n';
  }
  return os.str();
}

Distribution parse_distribution(std::string_view text, Mode mode, double tol) {
  const auto lines = tokenize_lines(text);
  if (lines.size() != 1) throw InputError("distribution file must contain exactly one line of values", 1, 1);
  const auto& tokens = lines.front();
  try {
    if (mode == Mode::Exact) {
      std::vector<Rational> p;
      for (const auto& t : tokens) {
        try {
          p.push_back(Rational::parse(t.text));
        } catch (const ParseError& e) {
          throw InputError(e.what(), t.line, t.column);
        }
      }
      return Distribution::exact(std::move(p));
    }
    std::vector<double> p;
    for (const auto& t : tokens) {
      try {
        p.push_back(Rational::parse(t.text).to_double());
      } catch (const ParseError& e) {
        throw InputError(e.what(), t.line, t.column);
      }
    }
    return Distribution::approximate(std::move(p), tol);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

Vector parse_measure(std::string_view text) {
  std::vector<Rational> q;
  for (const auto& line : tokenize_lines(text)) {
    for (const auto& t : line) {
      try {
        q.push_back(Rational::parse(t.text));
      } catch (const ParseError& e) {
        throw InputError(e.what(), t.line, t.column);
      }
      if (q.back().sign() <= 0) throw InputError("reference measure must be positive", t.line, t.column);
    }
  }
  if (q.empty()) throw InputError("empty reference measure");
  return Vector(std::move(q));
}

IndexSet parse_subset(std::string_view text, std::size_t m) {
  IndexSet s;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    if (item.empty()) {
      if (text.empty()) break;
      throw InputError("empty element in subset '" + std::string(text) + "'");
    }
    std::size_t value = 0;
    for (char c : item) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw InputError("bad subset element '" + std::string(item) + "'");
      value = value * 10 + static_cast<std::size_t>(c - '0');
      if (value > kMaxGroundSize) break;
    }
    if (value < 1 || value > m) throw InputError("subset element " + std::string(item) + " outside 1.." + std::to_string(m));
    s.insert(value - 1);
    if (end == text.size()) break;
    pos = end + 1;
  }
  return s;
}

std::string format_subset(IndexSet s) {
  std::string out = "{";
  bool first = true;
  for (auto i : s.indices()) {
    out += (first ? "" : ",") + std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace omfam
