#pragma once

// The Yang-Baxter cube check: both composition orders
//   R23 . R13 . R12   and   R12 . R13 . R23
// applied to a triple must agree on all three factors.  Factor slots keep
// their points' parameters throughout.

#include <array>
#include <utility>

#include "yb/leaf.hpp"

namespace yb {

template <Scalar F>
using Triple = std::array<ParamPoint<F>, 3>;

template <Scalar F, class MapFn>
Triple<F> apply_on_factors(const MapFn& R, Triple<F> t, int i, int j) {
  auto [u, v] = R(t[i], t[j]);
  t[i] = std::move(u);
  t[j] = std::move(v);
  return t;
}

template <Scalar F, class MapFn>
bool yb_cube_check(const MapFn& R, const Triple<F>& t, double tol) {
  // rightmost map acts first
  Triple<F> lhs = apply_on_factors<F>(R, apply_on_factors<F>(R, apply_on_factors<F>(R, t, 0, 1), 0, 2), 1, 2);
  Triple<F> rhs = apply_on_factors<F>(R, apply_on_factors<F>(R, apply_on_factors<F>(R, t, 1, 2), 0, 2), 0, 1);
  for (int k = 0; k < 3; ++k)
    if (!eq(lhs[k], rhs[k], tol)) return false;
  return true;
}

template <Scalar F, class MapFn>
std::pair<Triple<F>, Triple<F>> yb_cube_sides(const MapFn& R, const Triple<F>& t) {
  Triple<F> lhs = apply_on_factors<F>(R, apply_on_factors<F>(R, apply_on_factors<F>(R, t, 0, 1), 0, 2), 1, 2);
  Triple<F> rhs = apply_on_factors<F>(R, apply_on_factors<F>(R, apply_on_factors<F>(R, t, 1, 2), 0, 2), 0, 1);
  return {lhs, rhs};
}

}  // namespace yb
