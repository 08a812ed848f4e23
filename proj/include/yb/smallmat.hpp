#pragma once

// Small dense square matrices (n <= 8) for structure matrices and Jacobians.

#include <vector>

#include "yb/scalar.hpp"

namespace yb {

template <Scalar F>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n, F::zero()) {}

  static SquareMatrix identity(int n) {
    SquareMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = F::one();
    return m;
  }

  int size() const { return n_; }

  F& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
  const F& operator()(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix c(a.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int k = 0; k < a.n_; ++k) {
        const F& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < a.n_; ++j) c(i, j) = c(i, j) + aik * b(k, j);
      }
    return c;
  }

  friend SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix c(a.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int j = 0; j < a.n_; ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
  }

  SquareMatrix transpose() const {
    SquareMatrix t(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  std::vector<F> apply(const std::vector<F>& v) const {
    std::vector<F> out(static_cast<std::size_t>(n_), F::zero());
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) out[i] = out[i] + (*this)(i, j) * v[j];
    return out;
  }

  static SquareMatrix block_diag(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix m(a.n_ + b.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int j = 0; j < a.n_; ++j) m(i, j) = a(i, j);
    for (int i = 0; i < b.n_; ++i)
      for (int j = 0; j < b.n_; ++j) m(a.n_ + i, a.n_ + j) = b(i, j);
    return m;
  }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) = default;

 private:
  int n_ = 0;
  std::vector<F> e_;
};

template <Scalar F>
bool eq(const SquareMatrix<F>& a, const SquareMatrix<F>& b, double tol) {
  if (a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j)
      if (!eq(a(i, j), b(i, j), tol)) return false;
  return true;
}

template <Scalar F>
bool is_antisymmetric(const SquareMatrix<F>& m, double tol) {
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j <= i; ++j)
      if (!eq(m(i, j), -m(j, i), tol)) return false;
  return true;
}

}  // namespace yb
