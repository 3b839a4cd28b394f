#include "commalg/linalg.hpp"

#include "commalg/errors.hpp"

namespace commalg {

Matrix Matrix::column(std::size_t j) const {
  Matrix c(rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
  return c;
}

Matrix multiply(const Field& field, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw InvariantViolation("matrix shapes do not compose");
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (Field::is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (Field::is_zero(b(k, j))) continue;
        out(i, j) = field.add(out(i, j), field.mul(a(i, k), b(k, j)));
      }
    }
  }
  return out;
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) {
    throw InvariantViolation("hconcat needs equal row counts");
  }
  Matrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

RowEchelon row_reduce(const Field& field, Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && Field::is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    }
    const Scalar inv = field.inv(m(row, col));
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = field.mul(m(row, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || Field::is_zero(m(i, col))) continue;
      const Scalar factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        m(i, j) = field.sub(m(i, j), field.mul(factor, m(row, j)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return RowEchelon{std::move(m), std::move(pivots)};
}

std::size_t rank(const Field& field, const Matrix& m) {
  return row_reduce(field, m).pivot_columns.size();
}

Matrix kernel_basis(const Field& field, const Matrix& m) {
  const RowEchelon e = row_reduce(field, m);
  std::vector<char> is_pivot(m.cols(), 0);
  for (std::size_t c : e.pivot_columns) is_pivot[c] = 1;

  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) free.push_back(c);
  }
  Matrix basis(m.cols(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = 1;
    for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) {
      basis(e.pivot_columns[r], k) = field.neg(e.reduced(r, free[k]));
    }
  }
  return basis;
}

Matrix solve(const Field& field, const Matrix& a, const Matrix& b) {
  const RowEchelon e = row_reduce(field, hconcat(a, b));
  Matrix x(a.cols(), b.cols());
  for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) {
    const std::size_t pc = e.pivot_columns[r];
    if (pc >= a.cols()) {
      throw InvariantViolation("linear system has no solution");
    }
    for (std::size_t k = 0; k < b.cols(); ++k) {
      x(pc, k) = e.reduced(r, a.cols() + k);
    }
  }
  return x;
}

std::vector<std::size_t> complement_basis(const Field& field,
                                          const Matrix& span) {
  const std::size_t d = span.rows();
  const RowEchelon e = row_reduce(field, hconcat(span, Matrix::identity(d)));
  std::vector<std::size_t> out;
  for (std::size_t c : e.pivot_columns) {
    if (c >= span.cols()) out.push_back(c - span.cols());
  }
  return out;
}

}  // namespace commalg
