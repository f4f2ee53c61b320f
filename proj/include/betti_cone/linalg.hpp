#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "betti_cone/rational.hpp"

namespace betti::linalg {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  Vector column(std::size_t c) const;
  Vector apply(std::span<const Rational> x) const;
  Matrix operator*(const Matrix& other) const;
  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix transpose(const Matrix& m);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

/// Basis of { x : m x = 0 }, one vector per free column.
std::vector<Vector> nullspace(Matrix m);

/// Some x with m x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, std::span<const Rational> b);

/// Incrementally maintained row space, used to pick complements of subspaces.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t dim) : dim_(dim) {}

  /// Adds v; returns true when v was not already in the span.
  bool add(std::span<const Rational> v);
  bool contains(std::span<const Rational> v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }

 private:
  Vector reduce(std::span<const Rational> v) const;

  std::size_t dim_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Exact phase-one simplex: is there x >= 0 with a x = b?
/// Bland's rule, so it always terminates.
bool nonnegative_feasible(const Matrix& a, std::span<const Rational> b);

}  // namespace betti::linalg
