#pragma once

// 2x2 matrices over any Scalar, entries labeled a1..a4 as [[a1,a2],[a3,a4]].

#include <string>

#include "yb/scalar.hpp"

namespace yb {

template <Scalar F>
struct Mat2 {
  F a1{F::zero()};
  F a2{F::zero()};
  F a3{F::zero()};
  F a4{F::zero()};

  static Mat2 zero() { return {}; }
  static Mat2 identity() { return {F::one(), F::zero(), F::zero(), F::one()}; }

  F det() const { return a1 * a4 - a2 * a3; }
  F trace() const { return a1 + a4; }

  Mat2 adjugate() const { return {a4, -a2, -a3, a1}; }

  Mat2 inverse() const {
    F d = det();
    if (!d.is_unit()) throw SingularMatrix();
    F di = d.inverse();
    return {a4 * di, -a2 * di, -a3 * di, a1 * di};
  }

  friend Mat2 operator+(const Mat2& x, const Mat2& y) {
    return {x.a1 + y.a1, x.a2 + y.a2, x.a3 + y.a3, x.a4 + y.a4};
  }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) {
    return {x.a1 - y.a1, x.a2 - y.a2, x.a3 - y.a3, x.a4 - y.a4};
  }
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a1 * y.a1 + x.a2 * y.a3, x.a1 * y.a2 + x.a2 * y.a4,
            x.a3 * y.a1 + x.a4 * y.a3, x.a3 * y.a2 + x.a4 * y.a4};
  }
  friend Mat2 operator*(const F& c, const Mat2& x) {
    return {c * x.a1, c * x.a2, c * x.a3, c * x.a4};
  }
  friend Mat2 operator*(const Mat2& x, const F& c) { return c * x; }
  Mat2 operator-() const { return {-a1, -a2, -a3, -a4}; }

  friend bool operator==(const Mat2& x, const Mat2& y) = default;
};

template <Scalar F>
bool eq(const Mat2<F>& x, const Mat2<F>& y, double tol) {
  return eq(x.a1, y.a1, tol) && eq(x.a2, y.a2, tol) && eq(x.a3, y.a3, tol) &&
         eq(x.a4, y.a4, tol);
}

// P * A * P^{-1}; preserves trace and determinant.
template <Scalar F>
Mat2<F> conjugate(const Mat2<F>& P, const Mat2<F>& A) {
  return P * A * P.inverse();
}

template <Scalar F>
Mat2<F> mat_from_exact(const Mat2<GaussianRational>& m) {
  return {from_exact<F>(m.a1), from_exact<F>(m.a2), from_exact<F>(m.a3), from_exact<F>(m.a4)};
}

template <Scalar F>
std::string mat_str(const Mat2<F>& m) {
  return "[[" + scalar_str(m.a1) + ", " + scalar_str(m.a2) + "], [" + scalar_str(m.a3) +
         ", " + scalar_str(m.a4) + "]]";
}

}  // namespace yb
