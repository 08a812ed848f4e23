#pragma once

// First-degree matrix polynomials L(zeta) = A - zeta*B, the coefficients of
// det(A - zeta*B) = f2*zeta^2 - f1*zeta + f0, and coefficientwise equality
// of pencil products.

#include "yb/mat2.hpp"

namespace yb {

template <Scalar F>
struct MatrixPencil {
  Mat2<F> A;
  Mat2<F> B;

  Mat2<F> eval(const F& zeta) const { return A - zeta * B; }
};

template <Scalar F>
struct PencilInvariants {
  F f0{F::zero()};
  F f1{F::zero()};
  F f2{F::zero()};

  friend bool operator==(const PencilInvariants&, const PencilInvariants&) = default;
};

template <Scalar F>
bool eq(const PencilInvariants<F>& x, const PencilInvariants<F>& y, double tol) {
  return eq(x.f0, y.f0, tol) && eq(x.f1, y.f1, tol) && eq(x.f2, y.f2, tol);
}

// f1 uses the bilinear coefficient form so singular B is supported; when B is
// invertible it agrees with det(B)*tr(A*B^{-1}).
template <Scalar F>
PencilInvariants<F> invariants(const Mat2<F>& A, const Mat2<F>& B) {
  PencilInvariants<F> f;
  f.f0 = A.det();
  f.f1 = A.a1 * B.a4 + A.a4 * B.a1 - A.a3 * B.a2 - A.a2 * B.a3;
  f.f2 = B.det();
  return f;
}

template <Scalar F>
PencilInvariants<F> invariants(const MatrixPencil<F>& L) {
  return invariants(L.A, L.B);
}

// True iff L1(z)L2(z) = L3(z)L4(z) as polynomials in z, decided on the three
// matrix coefficients.
template <Scalar F>
bool pencil_product_equal(const MatrixPencil<F>& L1, const MatrixPencil<F>& L2,
                          const MatrixPencil<F>& L3, const MatrixPencil<F>& L4,
                          double tol) {
  // (A1 - zB1)(A2 - zB2) = A1A2 - z(A1B2 + B1A2) + z^2 B1B2
  return eq(L1.A * L2.A, L3.A * L4.A, tol) &&
         eq(L1.A * L2.B + L1.B * L2.A, L3.A * L4.B + L3.B * L4.A, tol) &&
         eq(L1.B * L2.B, L3.B * L4.B, tol);
}

template <Scalar F>
struct TripleProducts {
  Mat2<F> K;  // X Y Z
  Mat2<F> L;  // X Y B + X B Z + B Y Z
  Mat2<F> M;  // X B^2 + B Y B + B^2 Z
};

// The zeta-coefficients of (X - zB)(Y - zB)(Z - zB) besides -z^3 B^3:
// the product expands to K - z L + z^2 M - z^3 B^3.
template <Scalar F>
TripleProducts<F> triple_products(const Mat2<F>& X, const Mat2<F>& Y, const Mat2<F>& Z,
                                  const Mat2<F>& B) {
  TripleProducts<F> t;
  t.K = X * Y * Z;
  t.L = X * Y * B + X * B * Z + B * Y * Z;
  t.M = X * B * B + B * Y * B + B * B * Z;
  return t;
}

}  // namespace yb
