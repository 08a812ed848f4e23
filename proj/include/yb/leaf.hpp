#pragma once

// Level-set charts for the Casimirs: embeddings of coordinate points onto
// pencils with prescribed (f0, f1), the reduced parametric maps obtained by
// conjugating the general re-factorization map through a chart, conjugation
// transport, and the normal-form catalog.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "yb/refactor.hpp"
#include "yb/smallmat.hpp"

namespace yb {

// A point of a reduced phase space: chart coordinates plus the level values
// it carries.  Levels ride along unchanged under all reduced maps.
template <Scalar F>
struct ParamPoint {
  std::vector<F> coords;
  std::vector<F> params;

  friend bool operator==(const ParamPoint&, const ParamPoint&) = default;
};

template <Scalar F>
bool eq(const ParamPoint<F>& a, const ParamPoint<F>& b, double tol) {
  if (a.coords.size() != b.coords.size() || a.params.size() != b.params.size()) return false;
  for (std::size_t i = 0; i < a.coords.size(); ++i)
    if (!eq(a.coords[i], b.coords[i], tol)) return false;
  for (std::size_t i = 0; i < a.params.size(); ++i)
    if (!eq(a.params[i], b.params[i], tol)) return false;
  return true;
}

template <Scalar F>
ParamPoint<F> point_from_exact(const ParamPoint<GaussianRational>& p) {
  ParamPoint<F> q;
  q.coords.reserve(p.coords.size());
  q.params.reserve(p.params.size());
  for (const auto& c : p.coords) q.coords.push_back(from_exact<F>(c));
  for (const auto& c : p.params) q.params.push_back(from_exact<F>(c));
  return q;
}

enum class ChartKind {
  Identity,    // B = I, levels (f0, f1), pivots a3, a4, domain a2 != 0
  Diag,        // B = diag(l1, l2), pivots a3, a4, domain a2 != 0
  Jordan,      // B = [[l,1],[0,l]], pivots a3, a2, domain a3 != 0 on the level set
  Rotation,    // B = [[l1,-l2],[l2,l1]], pivots a3, a4, domain l2 a1 + l1 a2 != 0
  Sl2,         // Identity chart with f0 pinned to 1; single level f1 = c
  IdentityF0,  // B = I, one level f0 = c, pivot a4, domain a1 != 0
  IdentityF1,  // B = I, one level f1 = c, pivot a4, no domain restriction
};

struct ChartSpec {
  ChartKind kind = ChartKind::Identity;
  std::string name = "identity";
  GaussianRational lambda1 = GaussianRational::one();
  GaussianRational lambda2 = GaussianRational::one();
};

inline ChartSpec identity_chart_spec() { return {ChartKind::Identity, "identity", {}, {}}; }
inline ChartSpec sl2_chart_spec() { return {ChartKind::Sl2, "sl2", {}, {}}; }
inline ChartSpec identity_f0_chart_spec() {
  return {ChartKind::IdentityF0, "identity-f0", {}, {}};
}
inline ChartSpec identity_f1_chart_spec() {
  return {ChartKind::IdentityF1, "identity-f1", {}, {}};
}
inline ChartSpec diag_chart_spec(GaussianRational l1, GaussianRational l2) {
  return {ChartKind::Diag, "diag", std::move(l1), std::move(l2)};
}
inline ChartSpec jordan_chart_spec(GaussianRational l) {
  return {ChartKind::Jordan, "jordan", std::move(l), {}};
}
inline ChartSpec rotation_chart_spec(GaussianRational l1, GaussianRational l2) {
  return {ChartKind::Rotation, "rotation", std::move(l1), std::move(l2)};
}

// The charts reachable by name: one per leading-term normal form plus the
// unit-determinant restriction of the identity chart.
inline std::vector<ChartSpec> normal_form_catalog() {
  return {identity_chart_spec(),
          diag_chart_spec(GaussianRational::integer(1), GaussianRational::integer(2)),
          jordan_chart_spec(GaussianRational::integer(1)),
          rotation_chart_spec(GaussianRational::integer(1), GaussianRational::integer(1)),
          sl2_chart_spec()};
}

template <Scalar F>
struct LeafChart {
  std::string name;
  ChartSpec spec;
  Mat2<F> B;
  int coord_dim = 2;
  int param_dim = 2;

  std::function<Mat2<F>(const std::vector<F>&, const std::vector<F>&)> embed_entries;
  std::function<std::vector<F>(const Mat2<F>&)> project;
  // Closed-form restriction of the structure matrix to the chart coordinates.
  std::function<SquareMatrix<F>(const std::vector<F>&, const std::vector<F>&)> reduced_bracket;

  Mat2<F> embed(const ParamPoint<F>& p) const { return embed_entries(p.coords, p.params); }

  MatrixPencil<F> lax(const ParamPoint<F>& p) const { return {embed(p), B}; }
};

template <Scalar F>
LeafChart<F> make_chart(const ChartSpec& spec) {
  LeafChart<F> c;
  c.spec = spec;
  c.name = spec.name;
  const F l1 = from_exact<F>(spec.lambda1);
  const F l2 = from_exact<F>(spec.lambda2);

  switch (spec.kind) {
    case ChartKind::Identity:
    case ChartKind::Sl2: {
      const bool sl2 = spec.kind == ChartKind::Sl2;
      c.B = Mat2<F>::identity();
      c.coord_dim = 2;
      c.param_dim = sl2 ? 1 : 2;
      c.embed_entries = [sl2](const std::vector<F>& x, const std::vector<F>& p) {
        const F c1 = sl2 ? F::one() : p[0];
        const F c2 = sl2 ? p[0] : p[1];
        if (!x[1].is_unit()) throw ChartSingular();
        const F a4 = c2 - x[0];
        const F a3 = (x[0] * (c2 - x[0]) - c1) / x[1];
        return Mat2<F>{x[0], x[1], a3, a4};
      };
      c.project = [](const Mat2<F>& A) { return std::vector<F>{A.a1, A.a2}; };
      c.reduced_bracket = [](const std::vector<F>& x, const std::vector<F>&) {
        SquareMatrix<F> J(2);
        J(0, 1) = -x[1];  // {x1, x2} = -x2
        J(1, 0) = x[1];
        return J;
      };
      break;
    }
    case ChartKind::Diag: {
      c.B = Mat2<F>{l1, F::zero(), F::zero(), l2};
      c.coord_dim = 2;
      c.param_dim = 2;
      c.embed_entries = [l1, l2](const std::vector<F>& x, const std::vector<F>& p) {
        if (!x[1].is_unit() || !l1.is_unit()) throw ChartSingular();
        const F a4 = (p[1] - l2 * x[0]) / l1;
        const F a3 = (x[0] * a4 - p[0]) / x[1];
        return Mat2<F>{x[0], x[1], a3, a4};
      };
      c.project = [](const Mat2<F>& A) { return std::vector<F>{A.a1, A.a2}; };
      c.reduced_bracket = [l1](const std::vector<F>& x, const std::vector<F>&) {
        SquareMatrix<F> J(2);
        J(0, 1) = -(l1 * x[1]);  // {x1, x2} = -l1 x2
        J(1, 0) = l1 * x[1];
        return J;
      };
      break;
    }
    case ChartKind::Jordan: {
      c.B = Mat2<F>{l1, F::one(), F::zero(), l1};
      c.coord_dim = 2;
      c.param_dim = 2;
      c.embed_entries = [l1](const std::vector<F>& x, const std::vector<F>& p) {
        const F a3 = l1 * (x[0] + x[1]) - p[1];
        if (!a3.is_unit()) throw ChartSingular();
        const F a2 = (x[0] * x[1] - p[0]) / a3;
        return Mat2<F>{x[0], a2, a3, x[1]};
      };
      c.project = [](const Mat2<F>& A) { return std::vector<F>{A.a1, A.a4}; };
      c.reduced_bracket = [l1](const std::vector<F>& x, const std::vector<F>& p) {
        SquareMatrix<F> J(2);
        // {a11, a22} = a21 on the level set
        J(0, 1) = l1 * (x[0] + x[1]) - p[1];
        J(1, 0) = -J(0, 1);
        return J;
      };
      break;
    }
    case ChartKind::Rotation: {
      c.B = Mat2<F>{l1, -l2, l2, l1};
      c.coord_dim = 2;
      c.param_dim = 2;
      c.embed_entries = [l1, l2](const std::vector<F>& x, const std::vector<F>& p) {
        const F den = l2 * x[0] + l1 * x[1];
        if (!den.is_unit()) throw ChartSingular();
        // l1 a4 + l2 a3 = s and a1 a4 - a2 a3 = c1, solved by Cramer's rule
        const F s = p[1] - l1 * x[0] + l2 * x[1];
        const F a3 = (s * x[0] - l1 * p[0]) / den;
        const F a4 = (l2 * p[0] + x[1] * s) / den;
        return Mat2<F>{x[0], x[1], a3, a4};
      };
      c.project = [](const Mat2<F>& A) { return std::vector<F>{A.a1, A.a2}; };
      c.reduced_bracket = [l1, l2](const std::vector<F>& x, const std::vector<F>&) {
        SquareMatrix<F> J(2);
        J(0, 1) = -(l1 * x[1] + l2 * x[0]);  // {x1, x2} = -(l1 x2 + l2 x1)
        J(1, 0) = l1 * x[1] + l2 * x[0];
        return J;
      };
      break;
    }
    case ChartKind::IdentityF0: {
      c.B = Mat2<F>::identity();
      c.coord_dim = 3;
      c.param_dim = 1;
      c.embed_entries = [](const std::vector<F>& x, const std::vector<F>& p) {
        if (!x[0].is_unit()) throw ChartSingular();
        const F a4 = (p[0] + x[1] * x[2]) / x[0];
        return Mat2<F>{x[0], x[1], x[2], a4};
      };
      c.project = [](const Mat2<F>& A) { return std::vector<F>{A.a1, A.a2, A.a3}; };
      c.reduced_bracket = [](const std::vector<F>& x, const std::vector<F>& p) {
        SquareMatrix<F> J(3);
        J(0, 1) = -x[1];
        J(0, 2) = x[2];
        J(1, 2) = (p[0] + x[1] * x[2]) / x[0] - x[0];  // a4 - a1 on the level set
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < i; ++j) J(i, j) = -J(j, i);
        return J;
      };
      break;
    }
    case ChartKind::IdentityF1: {
      c.B = Mat2<F>::identity();
      c.coord_dim = 3;
      c.param_dim = 1;
      c.embed_entries = [](const std::vector<F>& x, const std::vector<F>& p) {
        return Mat2<F>{x[0], x[1], x[2], p[0] - x[0]};
      };
      c.project = [](const Mat2<F>& A) { return std::vector<F>{A.a1, A.a2, A.a3}; };
      c.reduced_bracket = [](const std::vector<F>& x, const std::vector<F>& p) {
        SquareMatrix<F> J(3);
        J(0, 1) = -x[1];
        J(0, 2) = x[2];
        J(1, 2) = p[0] - x[0] - x[0];
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < i; ++j) J(i, j) = -J(j, i);
        return J;
      };
      break;
    }
  }
  return c;
}

template <Scalar F>
LeafChart<F> make_chart_by_name(const std::string& name) {
  for (const ChartSpec& s : normal_form_catalog())
    if (s.name == name) return make_chart<F>(s);
  if (name == "identity-f0") return make_chart<F>(identity_f0_chart_spec());
  if (name == "identity-f1") return make_chart<F>(identity_f1_chart_spec());
  throw UnknownChart(name);
}

// Embed both points, re-factorize over the chart's B, project back.  Levels
// stay attached to their factors.
template <Scalar F>
std::pair<ParamPoint<F>, ParamPoint<F>> reduced_map(const LeafChart<F>& chart,
                                                    const ParamPoint<F>& x,
                                                    const ParamPoint<F>& y) {
  const Mat2<F> X = chart.embed(x);
  const Mat2<F> Y = chart.embed(y);
  const RefactorResult<F> r = refactor(X, Y, chart.B);
  return {ParamPoint<F>{chart.project(r.U), x.params},
          ParamPoint<F>{chart.project(r.V), y.params}};
}

template <Scalar F>
bool lax_equation_holds(const LeafChart<F>& chart, const ParamPoint<F>& u,
                        const ParamPoint<F>& v, const ParamPoint<F>& x, const ParamPoint<F>& y,
                        double tol) {
  return pencil_product_equal(chart.lax(u), chart.lax(v), chart.lax(y), chart.lax(x), tol);
}

// Same value as reduced_map, plus a coefficientwise re-verification of
// L(u;a)L(v;b) = L(y;b)L(x;a).
template <Scalar F>
std::pair<ParamPoint<F>, ParamPoint<F>> solve_lax_equation(const LeafChart<F>& chart,
                                                           const ParamPoint<F>& x,
                                                           const ParamPoint<F>& y,
                                                           double tol = 1e-9) {
  auto [u, v] = reduced_map(chart, x, y);
  if (!lax_equation_holds(chart, u, v, x, y, tol))
    throw Error("reduced map output violates the Lax equation");
  return {u, v};
}

// Transports a chart along B -> P B P^{-1}.  The transported map coincides
// with the original one on coordinates; its Lax matrix is P L0 P^{-1}.
template <Scalar F>
LeafChart<F> conjugate_transport(const LeafChart<F>& chart0, const Mat2<F>& P) {
  if (!P.det().is_unit()) throw SingularMatrix();
  LeafChart<F> c = chart0;
  c.name = chart0.name + "@conj";
  const Mat2<F> Pi = P.inverse();
  c.B = P * chart0.B * Pi;
  auto embed0 = chart0.embed_entries;
  auto project0 = chart0.project;
  c.embed_entries = [P, Pi, embed0](const std::vector<F>& x, const std::vector<F>& p) {
    return P * embed0(x, p) * Pi;
  };
  c.project = [P, Pi, project0](const Mat2<F>& A) { return project0(Pi * A * P); };
  return c;
}

}  // namespace yb
