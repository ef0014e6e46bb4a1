#pragma once

// Arbitrary-precision rational helpers on top of GMP's mpq_class.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>
#include <string_view>

#include "overcert/error.hpp"

namespace overcert {

using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) fail(ErrorCode::SchemaError, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational abs(const Rational& q) {
  Rational r = q;
  if (r < 0) r = -r;
  return r;
}

inline Rational pow(const Rational& base, unsigned e) {
  Rational result(1);
  Rational b = base;
  while (e > 0) {
    if (e & 1u) result *= b;
    e >>= 1u;
    if (e > 0) b *= b;
  }
  return result;
}

inline std::size_t bit_length(const BigInt& z) {
  return z == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 2);
}

namespace detail {

// floor(sqrt(q * 4^k)) for q >= 0, returned with the scale k chosen so the
// integer root has at least `bits` significant bits.
inline void scaled_isqrt(const Rational& q, unsigned bits, BigInt& root, BigInt& radicand,
                         unsigned long& shift) {
  // sqrt(a/b) = sqrt(a*b)/b.
  BigInt ab = q.get_num() * q.get_den();
  const std::size_t have = bit_length(ab) / 2;
  shift = have >= bits + 2 ? 0 : static_cast<unsigned long>(bits + 2 - have);
  radicand = ab << (2 * shift);
  mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
}

}  // namespace detail

/// Rational u with u*u >= q and u <= (1 + 2^-bits) * sqrt(q).
inline Rational sqrt_upper(const Rational& q, unsigned bits = 64) {
  if (q < 0) fail(ErrorCode::PreconditionFailed, "sqrt of negative rational");
  if (q == 0) return Rational(0);
  BigInt root, radicand;
  unsigned long shift = 0;
  detail::scaled_isqrt(q, bits, root, radicand, shift);
  if (root * root != radicand) root += 1;
  BigInt den = q.get_den();
  den <<= shift;
  return make_rational(root, den);
}

/// Rational l with l*l <= q and l >= (1 - 2^-bits) * sqrt(q).
inline Rational sqrt_lower(const Rational& q, unsigned bits = 64) {
  if (q < 0) fail(ErrorCode::PreconditionFailed, "sqrt of negative rational");
  if (q == 0) return Rational(0);
  BigInt root, radicand;
  unsigned long shift = 0;
  detail::scaled_isqrt(q, bits, root, radicand, shift);
  BigInt den = q.get_den();
  den <<= shift;
  return make_rational(root, den);
}

/// Nearest rational with denominator dividing 2^bits (ties away from zero).
inline Rational round_dyadic(const Rational& q, unsigned bits) {
  BigInt scaled_num = q.get_num();
  scaled_num <<= bits;
  const BigInt& den = q.get_den();
  // round(num * 2^bits / den)
  BigInt twice = 2 * scaled_num;
  BigInt quotient;
  if (twice >= 0) {
    BigInt t = twice + den;
    mpz_fdiv_q(quotient.get_mpz_t(), t.get_mpz_t(), BigInt(2 * den).get_mpz_t());
  } else {
    BigInt t = -twice + den;
    mpz_fdiv_q(quotient.get_mpz_t(), t.get_mpz_t(), BigInt(2 * den).get_mpz_t());
    quotient = -quotient;
  }
  BigInt out_den(1);
  out_den <<= bits;
  return make_rational(quotient, out_den);
}

/// Smallest multiple of 2^-bits that is >= q.
inline Rational round_up_dyadic(const Rational& q, unsigned bits) {
  BigInt scaled = q.get_num();
  scaled <<= bits;
  BigInt quotient;
  mpz_cdiv_q(quotient.get_mpz_t(), scaled.get_mpz_t(), q.get_den().get_mpz_t());
  BigInt den(1);
  den <<= bits;
  return make_rational(quotient, den);
}

/// Exact binary value of a finite double.
inline Rational rational_from_double(double x) {
  if (!std::isfinite(x)) fail(ErrorCode::NonFiniteResult, "non-finite double");
  return Rational(x);
}

/// Parses "p", "p/q", or a decimal "[-]d.ddd[e[-]x]" exactly.
inline Rational parse_rational(std::string_view text) {
  auto bad = [&]() -> Rational {
    fail(ErrorCode::SchemaError, "malformed rational '" + std::string(text) + "'");
  };
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) return bad();
  if (auto slash = s.find('/'); slash != std::string::npos) {
    BigInt num, den;
    if (num.set_str(s.substr(0, slash), 10) != 0 || den.set_str(s.substr(slash + 1), 10) != 0)
      return bad();
    if (den == 0) return bad();
    return make_rational(num, den);
  }
  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
  std::string digits;
  long exponent = 0;
  bool any_digit = false;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    digits += s[pos++];
    any_digit = true;
  }
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      digits += s[pos++];
      --exponent;
      any_digit = true;
    }
  }
  if (!any_digit) return bad();
  if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
    ++pos;
    std::string exp_text = s.substr(pos);
    if (exp_text.empty()) return bad();
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(exp_text, &used);
    } catch (...) {
      return bad();
    }
    if (used != exp_text.size() || e > 100000 || e < -100000) return bad();
    exponent += e;
    pos = s.size();
  }
  if (pos != s.size()) return bad();
  BigInt num(digits, 10);
  if (negative) num = -num;
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent >= 0) return make_rational(num * scale, BigInt(1));
  return make_rational(num, scale);
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace overcert
