#pragma once

#include <cstddef>
#include <vector>

#include "commalg/field.hpp"

namespace commalg {

// Dense matrix of exact scalars. Linear maps act on column vectors, so a map
// K^c -> K^r is an r x c matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!Field::is_zero(x)) return false;
    }
    return true;
  }

  Matrix column(std::size_t j) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix multiply(const Field& field, const Matrix& a, const Matrix& b);
// [a | b]
Matrix hconcat(const Matrix& a, const Matrix& b);

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
};

// Reduced row echelon form by Gauss-Jordan elimination.
RowEchelon row_reduce(const Field& field, Matrix m);

std::size_t rank(const Field& field, const Matrix& m);

// Columns form a basis of {x : m x = 0}; the result is m.cols() x nullity.
Matrix kernel_basis(const Field& field, const Matrix& m);

// Solves a x = b; throws InvariantViolation if some column of b lies outside
// the column space of a.
Matrix solve(const Field& field, const Matrix& a, const Matrix& b);

// Indices k such that the standard vectors e_k extend the column span of
// `span` (a d x c matrix) to a basis of K^d.
std::vector<std::size_t> complement_basis(const Field& field,
                                          const Matrix& span);

}  // namespace commalg
