#pragma once

#include <optional>
#include <vector>

#include "mono/rational.hpp"

namespace mono {

// Dense rational matrix, row-major. Dimensions may be zero: maps in and
// out of the zero module are everywhere and must behave.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static Matrix identity(int n);
  static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  bool is_zero() const;
  bool is_identity() const;
  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Rational& c) const;
  Matrix transpose() const;

  Matrix col(int j) const;
  Matrix rows_slice(int from, int count) const;
  Matrix cols_slice(int from, int count) const;
  void set_block(int i0, int j0, const Matrix& b);

  static Matrix hstack(const std::vector<Matrix>& parts);
  static Matrix vstack(const std::vector<Matrix>& parts);
  static Matrix block_diag(const std::vector<Matrix>& parts);

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

// Gaussian elimination with deterministic pivoting: columns are scanned
// left to right, the pivot row is the first row (top to bottom) with a
// nonzero entry. All derived bases are therefore bit-reproducible.
struct Rref {
  Matrix mat;
  std::vector<int> pivot_cols;
  int rank() const { return static_cast<int>(pivot_cols.size()); }
};
Rref rref(const Matrix& m);

int rank(const Matrix& m);

// Basis of the right null space, one column per basis vector
// (cols = nullity). Exact: m * kernel_basis(m) = 0.
Matrix kernel_basis(const Matrix& m);

// Some x with m*x = b (b may have several columns) or nullopt if the
// system is inconsistent. Free variables are set to zero.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);

// Canonical basis of the column space (columns of the result).
Matrix column_space_basis(const Matrix& m);

// Columns of `extra` that extend the column space of `base` to the span
// of [base|extra], chosen greedily left to right.
Matrix extend_basis(const Matrix& base, const Matrix& extra);

// Coordinates of each column of v in the basis `basis` (columns
// independent); throws InputError when v is not in the span.
Matrix coordinates_in_basis(const Matrix& basis, const Matrix& v);

bool subspace_contains(const Matrix& basis, const Matrix& vectors);

}  // namespace mono
