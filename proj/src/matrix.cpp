#include "mono/matrix.hpp"

#include <cassert>

namespace mono {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& q : a_)
    if (sgn(q) != 0) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != Rational(i == j ? 1 : 0)) return false;
  return true;
}

Matrix Matrix::operator*(const Matrix& o) const {
  assert(cols_ == o.rows_);
  Matrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& x = at(i, k);
      if (sgn(x) == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Rational& y = o.at(k, j);
        if (sgn(y) != 0) r.at(i, j) += x * y;
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  Matrix r(rows_, cols_);
  for (size_t t = 0; t < a_.size(); ++t) r.a_[t] = a_[t] + o.a_[t];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  Matrix r(rows_, cols_);
  for (size_t t = 0; t < a_.size(); ++t) r.a_[t] = a_[t] - o.a_[t];
  return r;
}

Matrix Matrix::scaled(const Rational& c) const {
  Matrix r(rows_, cols_);
  for (size_t t = 0; t < a_.size(); ++t) r.a_[t] = a_[t] * c;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix Matrix::col(int j) const {
  Matrix r(rows_, 1);
  for (int i = 0; i < rows_; ++i) r.at(i, 0) = at(i, j);
  return r;
}

Matrix Matrix::rows_slice(int from, int count) const {
  Matrix r(count, cols_);
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(from + i, j);
  return r;
}

Matrix Matrix::cols_slice(int from, int count) const {
  Matrix r(rows_, count);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < count; ++j) r.at(i, j) = at(i, from + j);
  return r;
}

void Matrix::set_block(int i0, int j0, const Matrix& b) {
  assert(i0 + b.rows() <= rows_ && j0 + b.cols() <= cols_);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) at(i0 + i, j0 + j) = b.at(i, j);
}

Matrix Matrix::hstack(const std::vector<Matrix>& parts) {
  int rows = parts.empty() ? 0 : parts.front().rows();
  int cols = 0;
  for (const auto& p : parts) {
    assert(p.rows() == rows);
    cols += p.cols();
  }
  Matrix r(rows, cols);
  int j0 = 0;
  for (const auto& p : parts) {
    r.set_block(0, j0, p);
    j0 += p.cols();
  }
  return r;
}

Matrix Matrix::vstack(const std::vector<Matrix>& parts) {
  int cols = parts.empty() ? 0 : parts.front().cols();
  int rows = 0;
  for (const auto& p : parts) {
    assert(p.cols() == cols);
    rows += p.rows();
  }
  Matrix r(rows, cols);
  int i0 = 0;
  for (const auto& p : parts) {
    r.set_block(i0, 0, p);
    i0 += p.rows();
  }
  return r;
}

Matrix Matrix::block_diag(const std::vector<Matrix>& parts) {
  int rows = 0, cols = 0;
  for (const auto& p : parts) {
    rows += p.rows();
    cols += p.cols();
  }
  Matrix r(rows, cols);
  int i0 = 0, j0 = 0;
  for (const auto& p : parts) {
    r.set_block(i0, j0, p);
    i0 += p.rows();
    j0 += p.cols();
  }
  return r;
}

Rref rref(const Matrix& m) {
  Rref res;
  res.mat = m;
  Matrix& a = res.mat;
  int pr = 0;  // next pivot row
  for (int c = 0; c < a.cols() && pr < a.rows(); ++c) {
    int piv = -1;
    for (int r = pr; r < a.rows(); ++r)
      if (sgn(a.at(r, c)) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != pr)
      for (int j = 0; j < a.cols(); ++j) swap(a.at(piv, j), a.at(pr, j));
    Rational inv = 1 / a.at(pr, c);
    for (int j = c; j < a.cols(); ++j) a.at(pr, j) *= inv;
    for (int r = 0; r < a.rows(); ++r) {
      if (r == pr || sgn(a.at(r, c)) == 0) continue;
      Rational f = a.at(r, c);
      for (int j = c; j < a.cols(); ++j) a.at(r, j) -= f * a.at(pr, j);
    }
    res.pivot_cols.push_back(c);
    ++pr;
  }
  return res;
}

int rank(const Matrix& m) { return rref(m).rank(); }

Matrix kernel_basis(const Matrix& m) {
  Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : r.pivot_cols) is_pivot[c] = true;
  int nullity = m.cols() - r.rank();
  Matrix k(m.cols(), nullity);
  int out = 0;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    k.at(c, out) = 1;
    for (int p = 0; p < r.rank(); ++p) k.at(r.pivot_cols[p], out) = -r.mat.at(p, c);
    ++out;
  }
  return k;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
  if (b.rows() != m.rows()) throw InputError("solve: dimension mismatch");
  Rref r = rref(Matrix::hstack({m, b}));
  for (int c : r.pivot_cols)
    if (c >= m.cols()) return std::nullopt;
  Matrix x(m.cols(), b.cols());
  for (int p = 0; p < r.rank(); ++p)
    for (int j = 0; j < b.cols(); ++j) x.at(r.pivot_cols[p], j) = r.mat.at(p, m.cols() + j);
  return x;
}

Matrix column_space_basis(const Matrix& m) {
  Rref r = rref(m);
  Matrix b(m.rows(), r.rank());
  for (int p = 0; p < r.rank(); ++p)
    for (int i = 0; i < m.rows(); ++i) b.at(i, p) = m.at(i, r.pivot_cols[p]);
  return b;
}

Matrix extend_basis(const Matrix& base, const Matrix& extra) {
  Matrix current = base;
  int r0 = rank(current);
  std::vector<Matrix> added;
  for (int j = 0; j < extra.cols(); ++j) {
    Matrix cand = Matrix::hstack({current, extra.col(j)});
    int r = rank(cand);
    if (r > r0) {
      current = cand;
      r0 = r;
      added.push_back(extra.col(j));
    }
  }
  if (added.empty()) return Matrix(base.rows(), 0);
  return Matrix::hstack(added);
}

Matrix coordinates_in_basis(const Matrix& basis, const Matrix& v) {
  auto x = solve(basis, v);
  if (!x) throw InputError("coordinates_in_basis: vector not in span");
  return *x;
}

bool subspace_contains(const Matrix& basis, const Matrix& vectors) {
  if (vectors.cols() == 0) return true;
  return rank(Matrix::hstack({basis, vectors})) == rank(basis);
}

}  // namespace mono
