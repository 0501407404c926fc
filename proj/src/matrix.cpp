#include "omfam/matrix.hpp"

#include <algorithm>

namespace omfam {

bool Vector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& r) { return r.is_zero(); });
}

Vector& Vector::operator+=(const Vector& o) {
  if (o.size() != size()) throw std::invalid_argument("vector length mismatch");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  if (o.size() != size()) throw std::invalid_argument("vector length mismatch");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

Vector& Vector::operator*=(const Rational& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Rational sum;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) sum += a[i] * b[i];
  }
  return sum;
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vector Matrix::row(std::size_t r) const {
  Vector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::select_columns(std::span<const std::size_t> columns) const {
  Matrix s(rows_, columns.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < columns.size(); ++j) s(r, j) = (*this)(r, columns[j]);
  return s;
}

Matrix Matrix::with_row_appended(const Vector& row) const {
  if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
  Matrix m(rows_ + 1, cols_);
  std::copy(entries_.begin(), entries_.end(), m.entries_.begin());
  for (std::size_t c = 0; c < cols_; ++c) m(rows_, c) = row[c];
  return m;
}

Vector Matrix::operator*(const Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational sum;
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& a = (*this)(r, c);
      if (!a.is_zero() && !v[c].is_zero()) sum += a * v[c];
    }
    out[r] = sum;
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (o.rows_ != cols_) throw std::invalid_argument("matrix size mismatch");
  Matrix out(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) out(r, c) += a * o(k, c);
    }
  return out;
}

bool Matrix::is_integral() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& r) { return r.is_integer(); });
}

}  // namespace omfam
