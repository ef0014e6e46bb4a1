#pragma once

// The two scalar modes: exact Gaussian rationals Q[i] and IEEE complex doubles.
// Generic code reaches mode-specific behavior through scalar_traits<S>.

#include <charconv>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "overcert/error.hpp"
#include "overcert/rational.hpp"

namespace overcert {

struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long v) : re(v) {}

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    Rational d = o.re * o.re + o.im * o.im;
    if (d == 0) fail(ErrorCode::PreconditionFailed, "division by zero Gaussian rational");
    Rational r = (re * o.re + im * o.im) / d;
    Rational i = (im * o.re - re * o.im) / d;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) {
    return GaussianRational(Rational(-a.re), Rational(-a.im));
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

using Complex = std::complex<double>;

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<GaussianRational> {
  using real = Rational;
  static constexpr bool exact = true;
  static constexpr const char* mode_name = "exact";

  static GaussianRational zero() { return {}; }
  static GaussianRational one() { return GaussianRational(1L); }
  static GaussianRational from_int(long v) { return GaussianRational(v); }
  static GaussianRational from_rational(const Rational& q) { return GaussianRational(q); }
  static GaussianRational from_real(const real& r) { return GaussianRational(r); }
  static GaussianRational from_parts(const Rational& re, const Rational& im) { return {re, im}; }
  static GaussianRational from_complex(Complex c) {
    return {rational_from_double(c.real()), rational_from_double(c.imag())};
  }
  static Complex to_complex(const GaussianRational& s) { return {s.re.get_d(), s.im.get_d()}; }

  static bool is_zero(const GaussianRational& s) { return s.re == 0 && s.im == 0; }
  static void check_finite(const GaussianRational&) {}
  static void check_finite(const Rational&) {}

  /// |s|^2, exact.
  static real norm_sq(const GaussianRational& s) { return s.re * s.re + s.im * s.im; }
  /// Rational envelope |x| + |y| >= |x + iy|.
  static real abs_upper(const GaussianRational& s) { return abs(s.re) + abs(s.im); }
  /// Rational envelope max(|x|, |y|) <= |x + iy|.
  static real abs_lower(const GaussianRational& s) { return std::max(abs(s.re), abs(s.im)); }
  static real sqrt_upper(const real& q, unsigned bits) { return overcert::sqrt_upper(q, bits); }
  static real sqrt_lower(const real& q, unsigned bits) { return overcert::sqrt_lower(q, bits); }
  static double to_double(const real& r) { return r.get_d(); }
  static real real_from_double(double d) { return rational_from_double(d); }
  static real real_from_rational(const Rational& q) { return q; }
  static GaussianRational conj(const GaussianRational& s) { return {s.re, Rational(-s.im)}; }
  static GaussianRational round(const GaussianRational& s, unsigned bits) {
    return {round_dyadic(s.re, bits), round_dyadic(s.im, bits)};
  }
  /// A rational parsed from text is already exact.
  static real parse_real(std::string_view text) { return parse_rational(text); }
  static std::string format_real(const real& r) { return to_string(r); }
};

template <>
struct scalar_traits<Complex> {
  using real = double;
  static constexpr bool exact = false;
  static constexpr const char* mode_name = "float";

  static Complex zero() { return {}; }
  static Complex one() { return {1.0, 0.0}; }
  static Complex from_int(long v) { return {static_cast<double>(v), 0.0}; }
  static Complex from_rational(const Rational& q) { return {q.get_d(), 0.0}; }
  static Complex from_real(double r) { return {r, 0.0}; }
  static Complex from_parts(const Rational& re, const Rational& im) { return {re.get_d(), im.get_d()}; }
  static Complex from_complex(Complex c) { return c; }
  static Complex to_complex(const Complex& c) { return c; }

  static bool is_zero(const Complex& s) { return s.real() == 0.0 && s.imag() == 0.0; }
  static void check_finite(const Complex& s) {
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
      fail(ErrorCode::NonFiniteResult, "floating-point overflow or NaN");
  }
  static void check_finite(double r) {
    if (!std::isfinite(r)) fail(ErrorCode::NonFiniteResult, "floating-point overflow or NaN");
  }

  static double norm_sq(const Complex& s) { return std::norm(s); }
  static double abs_upper(const Complex& s) { return std::abs(s); }
  static double abs_lower(const Complex& s) { return std::abs(s); }
  static double sqrt_upper(double q, unsigned) { return std::sqrt(q); }
  static double sqrt_lower(double q, unsigned) { return std::sqrt(q); }
  static double to_double(double r) { return r; }
  static double real_from_double(double d) { return d; }
  static double real_from_rational(const Rational& q) { return q.get_d(); }
  static Complex conj(const Complex& s) { return std::conj(s); }
  static Complex round(const Complex& s, unsigned) { return s; }
  static double parse_real(std::string_view text) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      // Accept the exact "p/q" notation in float files too.
      return parse_rational(text).get_d();
    }
    check_finite(value);
    return value;
  }
  static std::string format_real(double r) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), r);
    return std::string(buf, ptr);
  }
};

template <class S>
using real_t = typename scalar_traits<S>::real;

template <class S>
using Point = std::vector<S>;

template <class S>
inline constexpr bool is_exact_v = scalar_traits<S>::exact;

/// ||z||^2 over the Hermitian norm, exact in exact mode.
template <class S>
real_t<S> norm_sq(const Point<S>& z) {
  real_t<S> acc(0);
  for (const auto& c : z) acc += scalar_traits<S>::norm_sq(c);
  return acc;
}

template <class S>
real_t<S> distance_sq(const Point<S>& a, const Point<S>& b) {
  require_dims(b.size(), a.size(), "distance");
  real_t<S> acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += scalar_traits<S>::norm_sq(S(a[i] - b[i]));
  return acc;
}

template <class To, class From>
To convert_scalar(const From& s) {
  if constexpr (std::is_same_v<To, From>) {
    return s;
  } else if constexpr (std::is_same_v<To, Complex>) {
    return scalar_traits<From>::to_complex(s);
  } else {
    return scalar_traits<To>::from_complex(scalar_traits<From>::to_complex(s));
  }
}

template <class To, class From>
Point<To> convert_point(const Point<From>& z) {
  Point<To> out;
  out.reserve(z.size());
  for (const auto& c : z) out.push_back(convert_scalar<To>(c));
  return out;
}

template <class To, class From>
real_t<To> convert_real(const real_t<From>& r) {
  if constexpr (std::is_same_v<To, From>) {
    return r;
  } else {
    return scalar_traits<To>::real_from_double(scalar_traits<From>::to_double(r));
  }
}

}  // namespace overcert
