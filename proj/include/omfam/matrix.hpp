#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#include "omfam/rational.hpp"

namespace omfam {

/// Fixed-length vector of exact rationals.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t n) : entries_(n) {}
  Vector(std::initializer_list<Rational> values) : entries_(values) {}
  explicit Vector(std::vector<Rational> values) : entries_(std::move(values)) {}

  std::size_t size() const { return entries_.size(); }
  Rational& operator[](std::size_t i) { return entries_[i]; }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  auto begin() { return entries_.begin(); }
  auto end() { return entries_.end(); }
  std::span<const Rational> view() const { return entries_; }
  const std::vector<Rational>& entries() const { return entries_; }

  bool is_zero() const;

  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector& operator*=(const Rational& s);
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Rational& s, Vector v) { return v *= s; }
  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<Rational> entries_;
};

Rational dot(const Vector& a, const Vector& b);

/// Dense row-major rational matrix. Zero-row matrices are legal: they arise
/// as the orthogonal complement of a full-column-rank matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transposed() const;
  /// Submatrix keeping the listed columns in the given order.
  Matrix select_columns(std::span<const std::size_t> columns) const;
  Matrix with_row_appended(const Vector& row) const;

  Vector operator*(const Vector& v) const;
  Matrix operator*(const Matrix& o) const;
  friend bool operator==(const Matrix&, const Matrix&) = default;

  bool is_integral() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

}  // namespace omfam
