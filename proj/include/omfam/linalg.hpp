#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "omfam/matrix.hpp"

namespace omfam {

/// Reduced row echelon form together with the pivot columns. `transform`
/// records the row operations: transform * input == reduced.
struct EchelonForm {
  Matrix reduced;
  Matrix transform;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination over the rationals. The pivot in each column is
/// the first nonzero entry at or below the current row, so results are
/// deterministic.
EchelonForm row_reduce(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of {n : M n = 0}, one vector per free column of the echelon form,
/// with a 1 in that free column. Empty when the kernel is trivial.
std::vector<Vector> kernel_basis(const Matrix& m);

/// A matrix whose rows form a basis of the orthogonal complement of the row
/// span of `m` (a Gale dual). Has zero rows when `m` has full column rank.
Matrix orthogonal_complement_basis(const Matrix& m);

/// Certificate of inconsistency for M x = b: a row combination y with
/// yᵀM = 0 and yᵀb != 0.
struct Infeasible {
  Vector certificate;
};

/// Solves M x = b. Free variables are set to zero.
std::variant<Vector, Infeasible> solve(const Matrix& m, const Vector& b);

/// True if `v` lies in the row span of `m`.
bool in_row_span(const Matrix& m, const Vector& v);

/// True if the rows of `a` and `b` span the same space.
bool same_row_span(const Matrix& a, const Matrix& b);

}  // namespace omfam
