#include "omfam/linalg.hpp"

namespace omfam {

EchelonForm row_reduce(const Matrix& m) {
  EchelonForm ef{m, Matrix::identity(m.rows()), {}};
  Matrix& a = ef.reduced;
  Matrix& t = ef.transform;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();

  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t p = lead;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != lead) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(lead, j));
      for (std::size_t j = 0; j < rows; ++j) std::swap(t(p, j), t(lead, j));
    }
    const Rational inv = a(lead, c).inverse();
    for (std::size_t j = 0; j < cols; ++j) a(lead, j) *= inv;
    for (std::size_t j = 0; j < rows; ++j) t(lead, j) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || a(r, c).is_zero()) continue;
      const Rational f = a(r, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!a(lead, j).is_zero()) a(r, j) -= f * a(lead, j);
      for (std::size_t j = 0; j < rows; ++j)
        if (!t(lead, j).is_zero()) t(r, j) -= f * t(lead, j);
    }
    ef.pivots.push_back(c);
    ++lead;
  }
  return ef;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::vector<Vector> kernel_basis(const Matrix& m) {
  const EchelonForm ef = row_reduce(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : ef.pivots) is_pivot[p] = true;

  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < ef.pivots.size(); ++i) v[ef.pivots[i]] = -ef.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix orthogonal_complement_basis(const Matrix& m) {
  return Matrix::from_rows(kernel_basis(m), m.cols());
}

std::variant<Vector, Infeasible> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("right-hand side length mismatch");
  const EchelonForm ef = row_reduce(m);
  const Vector tb = ef.transform * b;
  const std::size_t r = ef.pivots.size();
  for (std::size_t i = r; i < m.rows(); ++i) {
    if (!tb[i].is_zero()) return Infeasible{ef.transform.row(i)};
  }
  Vector x(m.cols());
  for (std::size_t i = 0; i < r; ++i) x[ef.pivots[i]] = tb[i];
  return x;
}

bool in_row_span(const Matrix& m, const Vector& v) {
  if (m.rows() == 0) return v.is_zero();
  return std::holds_alternative<Vector>(solve(m.transposed(), v));
}

bool same_row_span(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (!in_row_span(b, a.row(i))) return false;
  for (std::size_t i = 0; i < b.rows(); ++i)
    if (!in_row_span(a, b.row(i))) return false;
  return true;
}

}  // namespace omfam
