#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "jrigid/cyclotomic.hpp"
#include "jrigid/error.hpp"
#include "jrigid/rational.hpp"

namespace jrigid::linalg {

template <typename T>
class Mat {
 public:
  Mat() : r_(0), c_(0) {}
  Mat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, T()) {
    require(rows >= 0 && cols >= 0, "negative matrix dimension");
  }
  Mat(int rows, int cols, std::vector<T> flat) : r_(rows), c_(cols), a_(std::move(flat)) {
    require(a_.size() == static_cast<size_t>(r_) * c_, "flat data has wrong length");
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  T& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const T& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  Mat operator*(const Mat& o) const {
    require(c_ == o.r_, "matrix product dimension mismatch");
    Mat m(r_, o.c_);
    for (int i = 0; i < r_; ++i)
      for (int k = 0; k < c_; ++k) {
        const T& x = at(i, k);
        if (x == T()) continue;
        for (int j = 0; j < o.c_; ++j) m.at(i, j) += x * o.at(k, j);
      }
    return m;
  }

  std::vector<T> operator*(const std::vector<T>& x) const {
    require(static_cast<int>(x.size()) == c_, "matrix-vector dimension mismatch");
    std::vector<T> y(static_cast<size_t>(r_), T());
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) y[static_cast<size_t>(i)] += at(i, j) * x[static_cast<size_t>(j)];
    return y;
  }

  Mat operator+(const Mat& o) const {
    require(r_ == o.r_ && c_ == o.c_, "matrix sum dimension mismatch");
    Mat m = *this;
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
    return m;
  }

  Mat operator-(const Mat& o) const {
    require(r_ == o.r_ && c_ == o.c_, "matrix difference dimension mismatch");
    Mat m = *this;
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
    return m;
  }

  Mat transpose() const {
    Mat m(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  void swap_rows(int i, int j) {
    for (int k = 0; k < c_; ++k) std::swap(at(i, k), at(j, k));
  }
  void swap_cols(int i, int j) {
    for (int k = 0; k < r_; ++k) std::swap(at(k, i), at(k, j));
  }

 private:
  int r_, c_;
  std::vector<T> a_;
};

using IMat = Mat<Integer>;
using QMat = Mat<Rational>;
using CycMat = Mat<Cyclotomic>;

// Field-element helpers so the elimination templates work for both Rational
// and Cyclotomic entries.
inline bool fe_is_zero(const Rational& x) { return x == 0; }
inline bool fe_is_zero(const Cyclotomic& x) { return x.is_zero(); }
inline Rational fe_inverse(const Rational& x) {
  require(x != 0, "inverse of zero");
  return Rational(1) / x;
}
inline Cyclotomic fe_inverse(const Cyclotomic& x) { return x.inverse(); }

// Reduces `a` in place to row echelon form (pivots scaled to 1, entries above
// pivots cleared), applying the same row operations to `side` if non-null.
// Returns the pivot columns in order.
template <typename F>
std::vector<int> row_reduce(Mat<F>& a, Mat<F>* side = nullptr) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int p = -1;
    for (int i = row; i < a.rows(); ++i)
      if (!fe_is_zero(a.at(i, col))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    a.swap_rows(row, p);
    if (side) side->swap_rows(row, p);
    F inv = fe_inverse(a.at(row, col));
    for (int j = 0; j < a.cols(); ++j) a.at(row, j) = a.at(row, j) * inv;
    if (side)
      for (int j = 0; j < side->cols(); ++j) side->at(row, j) = side->at(row, j) * inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row || fe_is_zero(a.at(i, col))) continue;
      F f = a.at(i, col);
      for (int j = 0; j < a.cols(); ++j) a.at(i, j) = a.at(i, j) - f * a.at(row, j);
      if (side)
        for (int j = 0; j < side->cols(); ++j)
          side->at(i, j) = side->at(i, j) - f * side->at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename F>
int rank(Mat<F> a) {
  return static_cast<int>(row_reduce(a).size());
}

// One solution of a x = b, or nullopt if inconsistent.
template <typename F>
std::optional<std::vector<F>> solve(const Mat<F>& a, const std::vector<F>& b) {
  require(static_cast<int>(b.size()) == a.rows(), "right-hand side has wrong length");
  Mat<F> aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[static_cast<size_t>(i)];
  }
  std::vector<int> pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<F> x(static_cast<size_t>(a.cols()), F());
  for (size_t r = 0; r < pivots.size(); ++r)
    x[static_cast<size_t>(pivots[r])] = aug.at(static_cast<int>(r), a.cols());
  return x;
}

// Basis of the right kernel of a.
template <typename F>
std::vector<std::vector<F>> kernel_basis(Mat<F> a) {
  std::vector<int> pivots = row_reduce(a);
  std::vector<bool> is_pivot(static_cast<size_t>(a.cols()), false);
  for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<std::vector<F>> basis;
  for (int free_col = 0; free_col < a.cols(); ++free_col) {
    if (is_pivot[static_cast<size_t>(free_col)]) continue;
    std::vector<F> v(static_cast<size_t>(a.cols()), F());
    v[static_cast<size_t>(free_col)] = F(1);
    for (size_t r = 0; r < pivots.size(); ++r)
      v[static_cast<size_t>(pivots[r])] = F() - a.at(static_cast<int>(r), free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <typename F>
std::optional<Mat<F>> inverse(const Mat<F>& a) {
  require(a.rows() == a.cols(), "inverse of a non-square matrix");
  Mat<F> work = a;
  Mat<F> inv = Mat<F>::identity(a.rows());
  std::vector<int> pivots = row_reduce(work, &inv);
  if (static_cast<int>(pivots.size()) < a.rows()) return std::nullopt;
  return inv;
}

template <typename F>
F det_gauss(Mat<F> a) {
  require(a.rows() == a.cols(), "determinant of a non-square matrix");
  F det(1);
  for (int col = 0; col < a.cols(); ++col) {
    int p = -1;
    for (int i = col; i < a.rows(); ++i)
      if (!fe_is_zero(a.at(i, col))) {
        p = i;
        break;
      }
    if (p < 0) return F();
    if (p != col) {
      a.swap_rows(col, p);
      det = F() - det;
    }
    det = det * a.at(col, col);
    F inv = fe_inverse(a.at(col, col));
    for (int i = col + 1; i < a.rows(); ++i) {
      if (fe_is_zero(a.at(i, col))) continue;
      F f = a.at(i, col) * inv;
      for (int j = col; j < a.cols(); ++j) a.at(i, j) = a.at(i, j) - f * a.at(col, j);
    }
  }
  return det;
}

// Division-free determinant by cofactor expansion; fine for small matrices
// over any commutative ring (e.g. Laurent polynomials).
template <typename R>
R det_cofactor(const Mat<R>& a) {
  require(a.rows() == a.cols(), "determinant of a non-square matrix");
  const int n = a.rows();
  if (n == 0) return R(1);
  if (n == 1) return a.at(0, 0);
  R acc = R();
  for (int i = 0; i < n; ++i) {
    Mat<R> minor(n - 1, n - 1);
    for (int r = 0, rr = 0; r < n; ++r) {
      if (r == i) continue;
      for (int c = 1; c < n; ++c) minor.at(rr, c - 1) = a.at(r, c);
      ++rr;
    }
    R term = a.at(i, 0) * det_cofactor(minor);
    if (i % 2 == 0)
      acc = acc + term;
    else
      acc = acc - term;
  }
  return acc;
}

QMat to_rational(const IMat& a);

// Fraction-free exact determinant of an integer matrix.
Integer det_bareiss(IMat a);

// Smith normal form with unimodular transforms: u * input * v = d, where d is
// diagonal with nonnegative entries d_0 | d_1 | ...  The identity is verified
// internally before returning.
struct SnfResult {
  IMat d, u, v;
};
SnfResult smith_normal_form(const IMat& a);

// Nonzero diagonal entries of the Smith form, in divisibility order.
std::vector<Integer> elementary_divisors(const IMat& a);

// One solution of  a x = b  (mod n)  with entries in [0, n), or nullopt.
std::optional<std::vector<Integer>> solve_mod(const IMat& a, const std::vector<Integer>& b,
                                              const Integer& n);

}  // namespace jrigid::linalg
