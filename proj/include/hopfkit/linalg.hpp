#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hopfkit/field.hpp"

namespace hk {

using Vector = std::vector<Scalar>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& F, std::size_t rows, std::size_t cols)
      : field_(F), rows_(rows), cols_(cols), a_(rows * cols, F.zero()) {}

  static Matrix identity(const Field& F, std::size_t n);
  static Matrix from_rows(const Field& F, const std::vector<std::vector<long long>>& rows);
  static Matrix from_columns(const Field& F, std::size_t rows, const std::vector<Vector>& cols);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  Vector column(std::size_t j) const;
  void set_column(std::size_t j, const Vector& v);
  bool is_zero() const;
  bool is_identity() const;
  bool is_square() const { return rows_ == cols_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, Scalar c);
Matrix transpose(const Matrix& a);
Vector apply(const Matrix& a, const Vector& v);
Matrix kron(const Matrix& a, const Matrix& b);
// Permutation X⊗Y -> Y⊗X.
Matrix swap_matrix(const Field& F, std::size_t dx, std::size_t dy);

// Row-reduced echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& a);
std::size_t rank(const Matrix& a);
// Canonical kernel basis: one vector per free column, reduced echelon style.
std::vector<Vector> kernel_basis(const Matrix& a);
// Throws NoSolution when inconsistent; free variables set to zero.
Vector solve(const Matrix& a, const Vector& b);
Matrix inverse(const Matrix& a);
Poly char_poly(const Matrix& a);
std::vector<Vector> eigenspace(const Matrix& a, Scalar lambda);
// Reduced row basis of the span of the given vectors.
std::vector<Vector> span_basis(const Field& F, std::size_t dim, const std::vector<Vector>& vs);

Vector zero_vector(const Field& F, std::size_t n);
Vector unit_vector(const Field& F, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector vadd(const Field& F, const Vector& a, const Vector& b);
Vector vsub(const Field& F, const Vector& a, const Vector& b);
Vector vscale(const Field& F, const Vector& a, Scalar c);

std::string to_string(const Matrix& a);

}  // namespace hk
