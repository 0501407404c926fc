#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "omfam/expfam.hpp"
#include "omfam/index_set.hpp"
#include "omfam/matrix.hpp"

namespace omfam {

/// Malformed input, with a 1-based position when one is known.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& message, std::size_t line = 0, std::size_t column = 0);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// An irrational literal (sqrt(k), pi, e) read in exact mode.
class IrrationalInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MatrixFile {
  Matrix matrix;
  /// True if some entry was an irrational literal rounded in float mode.
  bool approximate = false;
};

/// Header "d m", then d lines of m entries. Entries are integers,
/// fractions ("2/5") or decimals, all read exactly. In float mode the
/// literals sqrt(k), pi and e are also accepted and rounded to the nearest
/// double; in exact mode they raise IrrationalInput.
MatrixFile parse_matrix(std::string_view text, Mode mode = Mode::Exact);
std::string format_matrix(const Matrix& m);

/// One line of whitespace-separated probabilities. Exact mode reads
/// rationals and requires a sum of exactly 1; float mode reads doubles and
/// accepts a sum within `tol` of 1.
Distribution parse_distribution(std::string_view text, Mode mode = Mode::Exact, double tol = kDefaultTolerance);

/// A reference measure: whitespace-separated positive rationals.
Vector parse_measure(std::string_view text);

/// "1,3,4" (1-based) to a 0-based subset of {0..m-1}.
IndexSet parse_subset(std::string_view text, std::size_t m);
std::string format_subset(IndexSet s);

std::string read_file(const std::string& path);

}  // namespace omfam
