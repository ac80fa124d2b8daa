#pragma once

#include <cstddef>
#include <vector>

#include "ncalg/scalar.hpp"

namespace ncalg {

/// Dense row-major matrix over an exact field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);
  static Matrix identity(FieldSpec field, std::size_t n);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  Matrix transpose() const;
  /// Throws DimensionMismatch for non-square and DivisionByZero for singular.
  Matrix inverse() const;
  Scalar determinant() const;

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RowEchelon {
  Matrix reduced;                    // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each row
  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination with pivots taken left to right.
RowEchelon row_reduce(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Rows form a basis of {v : m v = 0}.
Matrix nullspace(const Matrix& m);

}  // namespace ncalg
