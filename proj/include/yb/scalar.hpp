#pragma once

// Pluggable scalar arithmetic: exact Gaussian rationals, complex binary64,
// and forward-mode dual scalars over either.  All higher layers are
// templated on the Scalar concept below.

#include <cmath>
#include <concepts>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "yb/errors.hpp"

namespace yb {

using Rational = boost::multiprecision::cpp_rational;

// A field element usable by the matrix and map layers.  is_unit() decides
// invertibility (for dual scalars this inspects the value part only).
template <class F>
concept Scalar = std::regular<F> && requires(const F a, const F b) {
  { a + b } -> std::same_as<F>;
  { a - b } -> std::same_as<F>;
  { a * b } -> std::same_as<F>;
  { a / b } -> std::same_as<F>;
  { -a } -> std::same_as<F>;
  { a.is_zero() } -> std::same_as<bool>;
  { a.is_unit() } -> std::same_as<bool>;
  { a.inverse() } -> std::same_as<F>;
  { F::zero() } -> std::same_as<F>;
  { F::one() } -> std::same_as<F>;
  { F::imag_unit() } -> std::same_as<F>;
  { F::integer(0LL) } -> std::same_as<F>;
};

namespace detail {

// Splits a scalar literal "re", "imi" or "re±imi" into its real part and
// signed imaginary part ("" when absent).  A '+'/'-' is a separator only if
// it is not a leading sign and not part of an exponent or fraction.
struct ComplexParts {
  std::string re;
  std::string im;  // signed, without the trailing 'i'
};

inline ComplexParts split_complex_literal(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty scalar literal");

  const bool imaginary_tail = s.back() == 'i';
  std::string_view body = imaginary_tail ? s.substr(0, s.size() - 1) : s;

  std::size_t split = std::string_view::npos;
  for (std::size_t k = 1; k < body.size(); ++k) {
    const char c = body[k];
    if (c != '+' && c != '-') continue;
    const char prev = body[k - 1];
    if (prev == 'e' || prev == 'E' || prev == '/' || prev == '+' || prev == '-') continue;
    split = k;
  }

  if (!imaginary_tail) {
    if (split != std::string_view::npos)
      throw ParseError("scalar literal has two parts but no trailing 'i': " + std::string(s));
    return {std::string(body), ""};
  }
  if (split == std::string_view::npos) return {"", std::string(body)};
  return {std::string(body.substr(0, split)), std::string(body.substr(split))};
}

inline Rational parse_rational(std::string_view s) {
  if (s.empty() || s == "+") return Rational(1);
  if (s == "-") return Rational(-1);
  std::string t(s);
  if (t.front() == '+') t.erase(t.begin());
  try {
    return Rational(t);
  } catch (const std::exception&) {
    throw ParseError("bad rational literal: " + std::string(s));
  }
}

inline std::string rational_str(const Rational& r) { return r.str(); }

inline double parse_double_part(std::string_view s) {
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  std::string t(s);
  if (t.find('/') != std::string::npos) return parse_rational(t).convert_to<double>();
  try {
    std::size_t pos = 0;
    double v = std::stod(t, &pos);
    if (pos != t.size()) throw ParseError("bad float literal: " + t);
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("bad float literal: " + std::string(s));
  }
}

inline std::string double_str(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Exact backend: elements of Q(i) with arbitrary-precision rational parts.
// cpp_rational keeps numerator/denominator coprime with positive denominator,
// so equality and the textual form are canonical.

class GaussianRational {
 public:
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational zero() { return {}; }
  static GaussianRational one() { return {Rational(1), Rational(0)}; }
  static GaussianRational imag_unit() { return {Rational(0), Rational(1)}; }
  static GaussianRational integer(long long n) { return {Rational(n), Rational(0)}; }
  static GaussianRational fraction(long long p, long long q) {
    if (q == 0) throw DivisionByZero();
    return {Rational(p) / q, Rational(0)};
  }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_unit() const { return !is_zero(); }

  GaussianRational inverse() const {
    Rational n = re * re + im * im;
    if (n.is_zero()) throw DivisionByZero();
    return {re / n, -im / n};
  }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    return a * b.inverse();
  }
  GaussianRational operator-() const { return {-re, -im}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;

  // Canonical textual form "p/q+r/si", e.g. "3/4+1/2i", "-2+0i".
  std::string str() const {
    std::string out = detail::rational_str(re);
    out += im < 0 ? "-" + detail::rational_str(-im) : "+" + detail::rational_str(im);
    out += 'i';
    return out;
  }

  static GaussianRational parse(std::string_view s) {
    auto [re_s, im_s] = detail::split_complex_literal(s);
    GaussianRational g;
    g.re = re_s.empty() ? Rational(0) : detail::parse_rational(re_s);
    g.im = im_s.empty() ? Rational(0) : detail::parse_rational(im_s);
    return g;
  }

  double re_double() const { return re.convert_to<double>(); }
  double im_double() const { return im.convert_to<double>(); }
};

// ---------------------------------------------------------------------------
// Approximate backend: complex numbers in binary64.  operator== is exact;
// identity testing goes through eq() with an explicit tolerance.

class ComplexFloat {
 public:
  double re = 0.0;
  double im = 0.0;

  ComplexFloat() = default;
  ComplexFloat(double r, double i) : re(r), im(i) {}

  static ComplexFloat zero() { return {}; }
  static ComplexFloat one() { return {1.0, 0.0}; }
  static ComplexFloat imag_unit() { return {0.0, 1.0}; }
  static ComplexFloat integer(long long n) { return {static_cast<double>(n), 0.0}; }

  bool is_zero() const { return re == 0.0 && im == 0.0; }
  bool is_unit() const { return !is_zero(); }

  double abs() const { return std::hypot(re, im); }

  ComplexFloat inverse() const {
    const double n = re * re + im * im;
    if (n == 0.0) throw DivisionByZero();
    return {re / n, -im / n};
  }

  friend ComplexFloat operator+(const ComplexFloat& a, const ComplexFloat& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexFloat operator-(const ComplexFloat& a, const ComplexFloat& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexFloat operator*(const ComplexFloat& a, const ComplexFloat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexFloat operator/(const ComplexFloat& a, const ComplexFloat& b) {
    return a * b.inverse();
  }
  ComplexFloat operator-() const { return {-re, -im}; }

  friend bool operator==(const ComplexFloat& a, const ComplexFloat& b) = default;

  std::string str() const {
    std::string out = detail::double_str(re);
    out += (im < 0 || (im == 0.0 && std::signbit(im))) ? "-" + detail::double_str(std::fabs(im))
                                                       : "+" + detail::double_str(im);
    out += 'i';
    return out;
  }

  static ComplexFloat parse(std::string_view s) {
    auto [re_s, im_s] = detail::split_complex_literal(s);
    ComplexFloat c;
    c.re = re_s.empty() ? 0.0 : detail::parse_double_part(re_s);
    c.im = im_s.empty() ? 0.0 : detail::parse_double_part(im_s);
    return c;
  }
};

// Symmetric comparison with an absolute floor of 1: values closer than
// tol*max(1,|a|,|b|) are considered equal.
inline bool approx_equal(const ComplexFloat& a, const ComplexFloat& b, double tol) {
  const double scale = std::max({1.0, a.abs(), b.abs()});
  return (a - b).abs() <= tol * scale;
}

// ---------------------------------------------------------------------------
// Forward-mode dual scalar: value + deriv*eps with eps^2 = 0.

template <Scalar F>
class Dual {
 public:
  F value{F::zero()};
  F deriv{F::zero()};

  Dual() = default;
  Dual(F v, F d) : value(std::move(v)), deriv(std::move(d)) {}

  static Dual zero() { return {}; }
  static Dual one() { return {F::one(), F::zero()}; }
  static Dual imag_unit() { return {F::imag_unit(), F::zero()}; }
  static Dual integer(long long n) { return {F::integer(n), F::zero()}; }
  static Dual constant(F v) { return {std::move(v), F::zero()}; }
  static Dual variable(F v) { return {std::move(v), F::one()}; }

  bool is_zero() const { return value.is_zero() && deriv.is_zero(); }
  // Invertibility in the dual ring requires a nonzero value part.
  bool is_unit() const { return value.is_unit(); }

  Dual inverse() const {
    if (!value.is_unit()) throw DivisionByZero();
    F vi = value.inverse();
    return {vi, -(vi * vi) * deriv};
  }

  friend Dual operator+(const Dual& a, const Dual& b) {
    return {a.value + b.value, a.deriv + b.deriv};
  }
  friend Dual operator-(const Dual& a, const Dual& b) {
    return {a.value - b.value, a.deriv - b.deriv};
  }
  friend Dual operator*(const Dual& a, const Dual& b) {
    return {a.value * b.value, a.value * b.deriv + a.deriv * b.value};
  }
  friend Dual operator/(const Dual& a, const Dual& b) { return a * b.inverse(); }
  Dual operator-() const { return {-value, -deriv}; }

  friend bool operator==(const Dual& a, const Dual& b) = default;
};

// ---------------------------------------------------------------------------
// Backend-uniform equality: exact where the field is exact, tolerance-based
// on the float backend, componentwise on duals.

inline bool eq(const GaussianRational& a, const GaussianRational& b, double /*tol*/) {
  return a == b;
}
inline bool eq(const ComplexFloat& a, const ComplexFloat& b, double tol) {
  return approx_equal(a, b, tol);
}
template <Scalar F>
bool eq(const Dual<F>& a, const Dual<F>& b, double tol) {
  return eq(a.value, b.value, tol) && eq(a.deriv, b.deriv, tol);
}

inline std::string scalar_str(const GaussianRational& a) { return a.str(); }
inline std::string scalar_str(const ComplexFloat& a) { return a.str(); }
template <Scalar F>
std::string scalar_str(const Dual<F>& a) {
  return scalar_str(a.value) + " + (" + scalar_str(a.deriv) + ")eps";
}

// Injection of exact scalars into any backend (dual parts start at zero).
template <Scalar F>
struct FromExact;

template <>
struct FromExact<GaussianRational> {
  static GaussianRational get(const GaussianRational& g) { return g; }
};
template <>
struct FromExact<ComplexFloat> {
  static ComplexFloat get(const GaussianRational& g) { return {g.re_double(), g.im_double()}; }
};
template <Scalar F>
struct FromExact<Dual<F>> {
  static Dual<F> get(const GaussianRational& g) { return {FromExact<F>::get(g), F::zero()}; }
};

template <Scalar F>
F from_exact(const GaussianRational& g) {
  return FromExact<F>::get(g);
}

template <Scalar F>
struct ScalarTraits {
  static constexpr const char* backend_name = "unknown";
};
template <>
struct ScalarTraits<GaussianRational> {
  static constexpr const char* backend_name = "gaussian-rational";
};
template <>
struct ScalarTraits<ComplexFloat> {
  static constexpr const char* backend_name = "complex64";
};

// Exact partial derivative of a scalar function of one coordinate, realized
// by a single dual evaluation at x0 + 1*eps.
template <Scalar F, class Fn>
F derivative_of(Fn&& f, const F& x0) {
  return f(Dual<F>::variable(x0)).deriv;
}

}  // namespace yb
