#pragma once

// Re-factorization of pencil products: the general Yang-Baxter map
// (X, Y) -> (U, V) with U V = Y X and U B + B V = Y B + B X, its inverse
// branch, the trivial branch, and the three-factor first-factor
// reconstruction that witnesses uniqueness.

#include <utility>

#include "yb/pencil.hpp"

namespace yb {

template <Scalar F>
struct RefactorResult {
  Mat2<F> U;
  Mat2<F> V;
  PencilInvariants<F> in_x, in_y;    // invariants of the inputs X, Y
  PencilInvariants<F> out_u, out_v;  // invariants of the outputs U, V
};

// P1 = f2(X)(YB + BX) - f1(X)B^2,  P2 = f2(X)YX - f0(X)B^2.
template <Scalar F>
std::pair<Mat2<F>, Mat2<F>> characteristic_combinations(const Mat2<F>& X, const Mat2<F>& Y,
                                                        const Mat2<F>& B) {
  const PencilInvariants<F> f = invariants(X, B);
  const Mat2<F> B2 = B * B;
  Mat2<F> P1 = f.f2 * (Y * B + B * X) - f.f1 * B2;
  Mat2<F> P2 = f.f2 * (Y * X) - f.f0 * B2;
  return {P1, P2};
}

// U = P2 P1^{-1} B, V = B^{-1}(YB + BX - UB).  Defined on the open dense
// domain det P1 != 0; inputs outside it are rejected, never coerced to the
// trivial branch.
template <Scalar F>
RefactorResult<F> refactor(const Mat2<F>& X, const Mat2<F>& Y, const Mat2<F>& B) {
  if (!B.det().is_unit()) throw SingularB();
  auto [P1, P2] = characteristic_combinations(X, Y, B);
  if (!P1.det().is_unit()) throw SingularP1();

  RefactorResult<F> r;
  r.U = P2 * P1.inverse() * B;
  r.V = B.inverse() * (Y * B + B * X - r.U * B);
  r.in_x = invariants(X, B);
  r.in_y = invariants(Y, B);
  r.out_u = invariants(r.U, B);
  r.out_v = invariants(r.V, B);
  return r;
}

template <Scalar F>
std::pair<Mat2<F>, Mat2<F>> trivial_branch(const Mat2<F>& X, const Mat2<F>& Y) {
  return {Y, X};
}

// Recovers (X, V) from (U, Y): with D = U - Y,
//   X = D^{-1} U B^{-1} D B,  V = D^{-1} Y B^{-1} D B.
template <Scalar F>
std::pair<Mat2<F>, Mat2<F>> inverse_refactor(const Mat2<F>& U, const Mat2<F>& Y,
                                             const Mat2<F>& B) {
  if (!B.det().is_unit()) throw SingularB();
  const Mat2<F> D = U - Y;
  if (!D.det().is_unit()) throw SingularDifference();
  const Mat2<F> Di = D.inverse();
  const Mat2<F> Bi = B.inverse();
  Mat2<F> X = Di * U * Bi * D * B;
  Mat2<F> V = Di * Y * Bi * D * B;
  return {X, V};
}

// Solves (X'-zB)(Y'-zB)(Z'-zB) = (X-zB)(Y-zB)(Z-zB) for the first factor
// under matched invariants, returning
//   X' = (f2^2 K - f2 f0 M + f1 f0 B^3) N^{-1} B,
//   N  = f2^2 L - f2 f1 M + (f1^2 - f2 f0) B^3,
// with f_i = f_i(X).  On generic triples this returns X itself.
template <Scalar F>
Mat2<F> reconstruct_first_factor(const Mat2<F>& X, const Mat2<F>& Y, const Mat2<F>& Z,
                                 const Mat2<F>& B) {
  if (!B.det().is_unit()) throw SingularB();
  const PencilInvariants<F> f = invariants(X, B);
  const TripleProducts<F> t = triple_products(X, Y, Z, B);
  const Mat2<F> B3 = B * B * B;

  const Mat2<F> N = (f.f2 * f.f2) * t.L - (f.f2 * f.f1) * t.M + (f.f1 * f.f1 - f.f2 * f.f0) * B3;
  if (!N.det().is_unit()) throw NonGenericTriple();

  const Mat2<F> num = (f.f2 * f.f2) * t.K - (f.f2 * f.f0) * t.M + (f.f1 * f.f0) * B3;
  return num * N.inverse() * B;
}

}  // namespace yb
