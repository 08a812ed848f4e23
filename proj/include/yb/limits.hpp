#pragma once

// Degenerations of the re-factorization maps as the leading term B becomes
// singular: the epsilon-parameterized Lax families, their closed-form limit
// maps (Adler-Yamilov and the KdV lift), numerical limit verification, the
// KdV quad-graph squeeze and the degenerate Lax matrices of the limits.

#include <cmath>
#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "yb/leaf.hpp"

namespace yb {

// ---------------------------------------------------------------------------
// Closed-form limit maps.  Both run on any backend.

// u1 = y1 - (a-b) x1 / (1 + x1 y2), u2 = y2, v1 = x1,
// v2 = x2 + (a-b) y2 / (1 + x1 y2); preserves the canonical bracket
// {x1,x2} = {y1,y2} = 1.
template <Scalar F>
std::pair<ParamPoint<F>, ParamPoint<F>> adler_yamilov_map(const ParamPoint<F>& x,
                                                          const ParamPoint<F>& y) {
  const F d = x.params[0] - y.params[0];
  const F den = F::one() + x.coords[0] * y.coords[1];
  if (!den.is_unit()) throw PoleEncountered();
  ParamPoint<F> u{{y.coords[0] - d * x.coords[0] / den, y.coords[1]}, x.params};
  ParamPoint<F> v{{x.coords[0], x.coords[1] + d * y.coords[1] / den}, y.params};
  return {u, v};
}

// u1 = y1 + (a-b)/(x1 + y2), u2 = y2, v1 = x1, v2 = x2 - (a-b)/(x1 + y2);
// preserves {x1,x2} = {y1,y2} = -1.
template <Scalar F>
std::pair<ParamPoint<F>, ParamPoint<F>> kdv_lift_map(const ParamPoint<F>& x,
                                                     const ParamPoint<F>& y) {
  const F den = x.coords[0] + y.coords[1];
  if (!den.is_unit()) throw PoleEncountered();
  const F q = (x.params[0] - y.params[0]) / den;
  ParamPoint<F> u{{y.coords[0] + q, y.coords[1]}, x.params};
  ParamPoint<F> v{{x.coords[0], x.coords[1] - q}, y.params};
  return {u, v};
}

// ---------------------------------------------------------------------------
// Epsilon families (float backend only; the AY chart needs a square root).

enum class FamilyId { AY, KDV };

using PointC = ParamPoint<ComplexFloat>;

// Chart matrix for B = diag(1, eps) at levels f0 = c, f1 = 1:
//   a11 = (1 - sqrt(1 - 4 eps (c + x1 x2))) / (2 eps),
//   a22 = (1 + sqrt(1 - 4 eps (c + x1 x2))) / 2,
// principal square-root branch.
inline Mat2<ComplexFloat> ay_family_lax_entries(const std::vector<ComplexFloat>& x,
                                                const ComplexFloat& c, double eps) {
  const ComplexFloat e{eps, 0.0};
  const ComplexFloat rad =
      ComplexFloat::one() - ComplexFloat{4.0 * eps, 0.0} * (c + x[0] * x[1]);
  if (rad.is_zero()) throw BranchCut();
  const std::complex<double> s = std::sqrt(std::complex<double>(rad.re, rad.im));
  const ComplexFloat sq{s.real(), s.imag()};
  const ComplexFloat half{0.5, 0.0};
  const ComplexFloat a11 = (ComplexFloat::one() - sq) / (ComplexFloat{2.0 * eps, 0.0});
  const ComplexFloat a22 = half * (ComplexFloat::one() + sq);
  return {a11, x[0], x[1], a22};
}

inline std::pair<PointC, PointC> ay_family_map(const PointC& x, const PointC& y, double eps) {
  if (eps == 0.0) throw DomainError("epsilon must be nonzero");
  const Mat2<ComplexFloat> B{ComplexFloat::one(), ComplexFloat::zero(), ComplexFloat::zero(),
                             {eps, 0.0}};
  const Mat2<ComplexFloat> X = ay_family_lax_entries(x.coords, x.params[0], eps);
  const Mat2<ComplexFloat> Y = ay_family_lax_entries(y.coords, y.params[0], eps);
  const RefactorResult<ComplexFloat> r = refactor(X, Y, B);
  return {PointC{{r.U.a2, r.U.a3}, x.params}, PointC{{r.V.a2, r.V.a3}, y.params}};
}

// Chart matrix for B = [[eps,1],[0,eps]] at levels f0 = c, f1 = 1:
//   a21 = eps (x1 + x2) - 1,  a12 = (x1 x2 - c) / a21,
// coordinates (a11, a22).
inline Mat2<ComplexFloat> kdv_family_lax_entries(const std::vector<ComplexFloat>& x,
                                                 const ComplexFloat& c, double eps) {
  const ComplexFloat e{eps, 0.0};
  const ComplexFloat a21 = e * (x[0] + x[1]) - ComplexFloat::one();
  if (!a21.is_unit()) throw ChartSingular();
  const ComplexFloat a12 = (x[0] * x[1] - c) / a21;
  return {x[0], a12, a21, x[1]};
}

inline std::pair<PointC, PointC> kdv_family_map(const PointC& x, const PointC& y, double eps) {
  if (eps == 0.0) throw DomainError("epsilon must be nonzero");
  const Mat2<ComplexFloat> B{{eps, 0.0}, ComplexFloat::one(), ComplexFloat::zero(), {eps, 0.0}};
  const Mat2<ComplexFloat> X = kdv_family_lax_entries(x.coords, x.params[0], eps);
  const Mat2<ComplexFloat> Y = kdv_family_lax_entries(y.coords, y.params[0], eps);
  const RefactorResult<ComplexFloat> r = refactor(X, Y, B);
  return {PointC{{r.U.a1, r.U.a4}, x.params}, PointC{{r.V.a1, r.V.a4}, y.params}};
}

inline std::pair<PointC, PointC> family_map(FamilyId id, const PointC& x, const PointC& y,
                                            double eps) {
  return id == FamilyId::AY ? ay_family_map(x, y, eps) : kdv_family_map(x, y, eps);
}

inline std::pair<PointC, PointC> family_closed_form(FamilyId id, const PointC& x,
                                                    const PointC& y) {
  return id == FamilyId::AY ? adler_yamilov_map(x, y) : kdv_lift_map(x, y);
}

// ---------------------------------------------------------------------------
// Numerical limit verification.

struct ConvergenceSample {
  double eps = 0.0;
  double err = 0.0;
};

struct ConvergenceReport {
  std::vector<ConvergenceSample> samples;
  bool monotone = false;   // strictly decreasing error along the schedule
  double slope = 0.0;      // least-squares slope of log err vs log eps
  double final_err = 0.0;

  bool passed(double tol, double min_slope) const {
    return monotone && final_err <= tol && slope >= min_slope;
  }
};

using ClosedFormMap = std::function<std::pair<PointC, PointC>(const PointC&, const PointC&)>;

inline double point_pair_distance(const std::pair<PointC, PointC>& a,
                                  const std::pair<PointC, PointC>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.first.coords.size(); ++i)
    m = std::max(m, (a.first.coords[i] - b.first.coords[i]).abs());
  for (std::size_t i = 0; i < a.second.coords.size(); ++i)
    m = std::max(m, (a.second.coords[i] - b.second.coords[i]).abs());
  return m;
}

inline ConvergenceReport limit_convergence_check(FamilyId family, const ClosedFormMap& closed,
                                                 const PointC& x, const PointC& y,
                                                 const std::vector<double>& schedule) {
  ConvergenceReport rep;
  const auto target = closed(x, y);
  for (double e : schedule)
    rep.samples.push_back({e, point_pair_distance(family_map(family, x, y, e), target)});

  rep.monotone = rep.samples.size() >= 2;
  for (std::size_t i = 1; i < rep.samples.size(); ++i)
    if (!(rep.samples[i].err < rep.samples[i - 1].err)) rep.monotone = false;
  rep.final_err = rep.samples.empty() ? 0.0 : rep.samples.back().err;

  // log-log least squares; degenerate (zero-error) samples give slope 0
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (const auto& s : rep.samples) {
    if (s.err <= 0.0 || s.eps <= 0.0) continue;
    const double lx = std::log(s.eps), ly = std::log(s.err);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  if (n >= 2 && sxx * n - sx * sx != 0.0) rep.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return rep;
}

inline ConvergenceReport limit_convergence_check(FamilyId family, const PointC& x,
                                                 const PointC& y,
                                                 const std::vector<double>& schedule) {
  return limit_convergence_check(
      family, [family](const PointC& a, const PointC& b) { return family_closed_form(family, a, b); },
      x, y, schedule);
}

// ---------------------------------------------------------------------------
// KdV quad-graph squeeze.  Inputs are taken in the sign-changed variables
// (x2 -> -x2, y2 -> -y2 relative to the lift map); the change is applied
// internally so the lift map itself stays untouched.  On y1 = x2 the squeezed
// values satisfy (f12 - f)(f1 - f2) = a - b.

template <Scalar F>
struct QuadgraphResult {
  F f, f1, f2, f12;
  F residual;
};

template <Scalar F>
QuadgraphResult<F> kdv_quadgraph_reduce(const ParamPoint<F>& x, const ParamPoint<F>& y,
                                        double tol) {
  if (!eq(y.coords[0], x.coords[1], tol)) throw SqueezeViolated();
  ParamPoint<F> xs{{x.coords[0], -x.coords[1]}, x.params};
  ParamPoint<F> ys{{y.coords[0], -y.coords[1]}, y.params};
  auto [u, v] = kdv_lift_map(xs, ys);
  u.coords[1] = -u.coords[1];
  v.coords[1] = -v.coords[1];

  QuadgraphResult<F> q;
  q.f = y.coords[0];
  q.f1 = x.coords[0];
  q.f2 = y.coords[1];
  q.f12 = u.coords[0];
  q.residual = (q.f12 - q.f) * (q.f1 - q.f2) - (x.params[0] - y.params[0]);
  return q;
}

// ---------------------------------------------------------------------------
// Degenerate Lax matrices (the eps -> 0 limits of the family pencils).

enum class DegenerateLax { L1, L2 };

// L1(a1,a2;c) = [[a1 a2 + c - z, a1],[a2, 1]]
template <Scalar F>
MatrixPencil<F> degenerate_lax_l1(const ParamPoint<F>& p) {
  const F c = p.params[0];
  Mat2<F> A{p.coords[0] * p.coords[1] + c, p.coords[0], p.coords[1], F::one()};
  Mat2<F> B{F::one(), F::zero(), F::zero(), F::zero()};
  return {A, B};
}

// L2(a1,a2;c) = [[a1, c - a1 a2 - z],[-1, a2]]
template <Scalar F>
MatrixPencil<F> degenerate_lax_l2(const ParamPoint<F>& p) {
  const F c = p.params[0];
  Mat2<F> A{p.coords[0], c - p.coords[0] * p.coords[1], -F::one(), p.coords[1]};
  Mat2<F> B{F::zero(), F::one(), F::zero(), F::zero()};
  return {A, B};
}

struct DegenerateLaxReport {
  // The closed-form map image solves L(u;a)L(v;b) = L(y;b)L(x;a).
  bool image_satisfies = false;
  // The trivial branch with levels exchanged, ((y;b),(x;a)), also solves it.
  bool swap_satisfies = false;
  // ... and differs from the image (exactly when a != b).
  bool swap_distinct = false;
  // A second solution in the same parameter slots (a with u, b with v),
  // obtained by interchanging the passive components u2 <-> v1 of the image.
  // Holds for L2 (the equation there determines u2 + v1 only), fails for L1.
  bool second_solution_satisfies = false;
  bool second_solution_distinct = false;
};

template <Scalar F>
DegenerateLaxReport degenerate_lax_check(DegenerateLax which, const ParamPoint<F>& x,
                                         const ParamPoint<F>& y, double tol) {
  const bool l1 = which == DegenerateLax::L1;
  auto lax = [l1](const ParamPoint<F>& p) {
    return l1 ? degenerate_lax_l1(p) : degenerate_lax_l2(p);
  };
  auto [u, v] = l1 ? adler_yamilov_map(x, y) : kdv_lift_map(x, y);

  const MatrixPencil<F> Ly = lax(y), Lx = lax(x);
  auto satisfies = [&](const ParamPoint<F>& cu, const ParamPoint<F>& cv) {
    return pencil_product_equal(lax(cu), lax(cv), Ly, Lx, tol);
  };

  DegenerateLaxReport rep;
  rep.image_satisfies = satisfies(u, v);
  rep.swap_satisfies = satisfies(y, x);
  rep.swap_distinct = !(eq(u, y, tol) && eq(v, x, tol));

  ParamPoint<F> u2{{u.coords[0], v.coords[0]}, x.params};
  ParamPoint<F> v2{{u.coords[1], v.coords[1]}, y.params};
  rep.second_solution_satisfies = satisfies(u2, v2);
  rep.second_solution_distinct = !(eq(u2, u, tol) && eq(v2, v, tol));
  return rep;
}

}  // namespace yb
