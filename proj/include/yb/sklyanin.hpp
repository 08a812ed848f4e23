#pragma once

// The quadratic bracket restricted to first-degree 2x2 pencils: the 4x4
// structure matrix J_B(A), its Casimirs, the Jacobi identity, the underlying
// 4-parameter Lie algebra, and Jacobian-based Poisson-map testing.

#include <array>
#include <functional>
#include <utility>
#include <vector>

#include "yb/mat2.hpp"
#include "yb/smallmat.hpp"

namespace yb {

// J_B(A)_{ij} = {a_i, a_j}; antisymmetric and linear in A.
template <Scalar F>
SquareMatrix<F> structure_matrix(const Mat2<F>& A, const Mat2<F>& B) {
  SquareMatrix<F> J(4);
  J(0, 1) = -A.a2 * B.a1 + A.a1 * B.a2;
  J(0, 2) = A.a3 * B.a1 - A.a1 * B.a3;
  J(0, 3) = A.a3 * B.a2 - A.a2 * B.a3;
  J(1, 2) = A.a4 * B.a1 - A.a1 * B.a4;
  J(1, 3) = A.a4 * B.a2 - A.a2 * B.a4;
  J(2, 3) = -A.a4 * B.a3 + A.a3 * B.a4;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < i; ++j) J(i, j) = -J(j, i);
  return J;
}

// Block bracket on a pair (X, Y) flattened to (x1..x4, y1..y4): cross-block
// brackets vanish.
template <Scalar F>
SquareMatrix<F> product_structure(const Mat2<F>& B, const std::vector<F>& flat8) {
  Mat2<F> X{flat8[0], flat8[1], flat8[2], flat8[3]};
  Mat2<F> Y{flat8[4], flat8[5], flat8[6], flat8[7]};
  return SquareMatrix<F>::block_diag(structure_matrix(X, B), structure_matrix(Y, B));
}

// Gradients of the Casimirs f0 = det A and f1 = a1 b4 + a4 b1 - a3 b2 - a2 b3.
template <Scalar F>
std::vector<F> casimir_gradient_f0(const Mat2<F>& A) {
  return {A.a4, -A.a3, -A.a2, A.a1};
}
template <Scalar F>
std::vector<F> casimir_gradient_f1(const Mat2<F>& B) {
  return {B.a4, -B.a3, -B.a2, B.a1};
}

template <Scalar F>
bool casimir_check(const Mat2<F>& A, const Mat2<F>& B, double tol) {
  const SquareMatrix<F> J = structure_matrix(A, B);
  for (const std::vector<F>& g : {casimir_gradient_f0(A), casimir_gradient_f1(B)})
    for (const F& c : J.apply(g))
      if (!eq(c, F::zero(), tol)) return false;
  return true;
}

// d J / d a_l as constant matrices (J is linear in A).
template <Scalar F>
std::array<SquareMatrix<F>, 4> structure_matrix_derivatives(const Mat2<F>& B) {
  std::array<SquareMatrix<F>, 4> D{SquareMatrix<F>(4), SquareMatrix<F>(4), SquareMatrix<F>(4),
                                   SquareMatrix<F>(4)};
  Mat2<F> E;
  E.a1 = F::one();
  D[0] = structure_matrix(E, B);
  E = Mat2<F>{};
  E.a2 = F::one();
  D[1] = structure_matrix(E, B);
  E = Mat2<F>{};
  E.a3 = F::one();
  D[2] = structure_matrix(E, B);
  E = Mat2<F>{};
  E.a4 = F::one();
  D[3] = structure_matrix(E, B);
  return D;
}

// Cyclic Jacobi sum for one index triple (i, j, k).
template <Scalar F>
F jacobi_sum(const SquareMatrix<F>& J, const std::array<SquareMatrix<F>, 4>& D, int i, int j,
             int k) {
  F s = F::zero();
  for (int l = 0; l < 4; ++l)
    s = s + J(i, l) * D[l](j, k) + J(j, l) * D[l](k, i) + J(k, l) * D[l](i, j);
  return s;
}

template <Scalar F>
bool jacobi_check(const Mat2<F>& B, const Mat2<F>& A, double tol) {
  const SquareMatrix<F> J = structure_matrix(A, B);
  const auto D = structure_matrix_derivatives(B);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k)
        if (!eq(jacobi_sum(J, D, i, j, k), F::zero(), tol)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// The 4-dimensional Lie algebra whose Lie-Poisson structure on the dual
// coincides with J_B: c[i][j][k] are the structure constants of [e_i, e_j].

template <Scalar F>
struct LieStructure {
  std::array<std::array<std::array<F, 4>, 4>, 4> c{};

  // {a_i, a_j} = sum_k c_{ij}^k a_k, assembled into a 4x4 bracket matrix.
  SquareMatrix<F> bracket_matrix(const Mat2<F>& A) const {
    const std::array<F, 4> a{A.a1, A.a2, A.a3, A.a4};
    SquareMatrix<F> J(4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        F s = F::zero();
        for (int k = 0; k < 4; ++k) s = s + c[i][j][k] * a[k];
        J(i, j) = s;
      }
    return J;
  }

  bool jacobi_holds(double tol) const {
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        for (int k = j + 1; k < 4; ++k)
          for (int l = 0; l < 4; ++l) {
            F s = F::zero();
            for (int m = 0; m < 4; ++m)
              s = s + c[i][j][m] * c[m][k][l] + c[j][k][m] * c[m][i][l] +
                  c[k][i][m] * c[m][j][l];
            if (!eq(s, F::zero(), tol)) return false;
          }
    return true;
  }
};

template <Scalar F>
LieStructure<F> lie_structure_constants(const Mat2<F>& B) {
  const F b1 = B.a1, b2 = B.a2, b3 = B.a3, b4 = B.a4;
  LieStructure<F> g;
  auto set = [&g](int i, int j, std::array<F, 4> v) {
    g.c[i][j] = v;
    for (int k = 0; k < 4; ++k) g.c[j][i][k] = -v[k];
  };
  const F z = F::zero();
  set(0, 1, {b2, -b1, z, z});   // [e1,e2] = b2 e1 - b1 e2
  set(0, 2, {-b3, z, b1, z});   // [e1,e3] = -b3 e1 + b1 e3
  set(0, 3, {z, -b3, b2, z});   // [e1,e4] = -b3 e2 + b2 e3
  set(1, 2, {-b4, z, z, b1});   // [e2,e3] = b1 e4 - b4 e1
  set(1, 3, {z, -b4, z, b2});   // [e2,e4] = -b4 e2 + b2 e4
  set(2, 3, {z, z, b4, -b3});   // [e3,e4] = b4 e3 - b3 e4
  return g;
}

// ---------------------------------------------------------------------------
// Jacobians via dual scalars and the pointwise Poisson-map test.

template <Scalar F>
struct JacobianResult {
  SquareMatrix<F> jac;
  std::vector<F> image;
};

// fn maps vectors of Dual<F> to vectors of Dual<F>; one dual sweep per input
// coordinate yields the exact Jacobian column plus the image point.
template <Scalar F, class Fn>
JacobianResult<F> map_jacobian(Fn&& fn, const std::vector<F>& x) {
  const int n = static_cast<int>(x.size());
  JacobianResult<F> r{SquareMatrix<F>(n), {}};
  for (int j = 0; j < n; ++j) {
    std::vector<Dual<F>> xd;
    xd.reserve(x.size());
    for (int k = 0; k < n; ++k)
      xd.push_back(Dual<F>{x[k], k == j ? F::one() : F::zero()});
    std::vector<Dual<F>> y = fn(xd);
    if (static_cast<int>(y.size()) != n) throw Error("map must preserve dimension");
    for (int i = 0; i < n; ++i) r.jac(i, j) = y[i].deriv;
    if (j == 0) {
      r.image.reserve(y.size());
      for (const auto& yi : y) r.image.push_back(yi.value);
    }
  }
  return r;
}

// True iff DR J_in(x) DR^T = J_out(R(x)) entrywise.
template <Scalar F, class MapDual, class JinFn, class JoutFn>
bool poisson_map_check(MapDual&& map_dual, JinFn&& bracket_in, JoutFn&& bracket_out,
                       const std::vector<F>& x, double tol) {
  const JacobianResult<F> r = map_jacobian<F>(map_dual, x);
  const SquareMatrix<F> lhs = r.jac * bracket_in(x) * r.jac.transpose();
  const SquareMatrix<F> rhs = bracket_out(r.image);
  return eq(lhs, rhs, tol);
}

// Central-difference Jacobian on the float backend (oracle for the dual one).
template <class Fn>
SquareMatrix<ComplexFloat> fd_jacobian(Fn&& fn, const std::vector<ComplexFloat>& x, double h) {
  const int n = static_cast<int>(x.size());
  SquareMatrix<ComplexFloat> J(n);
  const ComplexFloat inv2h{1.0 / (2.0 * h), 0.0};
  for (int j = 0; j < n; ++j) {
    std::vector<ComplexFloat> xp = x, xm = x;
    xp[j].re += h;
    xm[j].re -= h;
    const std::vector<ComplexFloat> fp = fn(xp);
    const std::vector<ComplexFloat> fm = fn(xm);
    for (int i = 0; i < n; ++i) J(i, j) = (fp[i] - fm[i]) * inv2h;
  }
  return J;
}

}  // namespace yb
