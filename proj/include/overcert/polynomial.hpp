#pragma once

// Sparse multivariate polynomials over either scalar mode, with evaluation,
// differentiation, Taylor shifts, and the norm bounds used by the
// certification tests.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "overcert/error.hpp"
#include "overcert/linalg.hpp"
#include "overcert/scalar.hpp"

namespace overcert {

/// Exponent vector of a monomial. The default ordering is lexicographic on
/// the raw exponents; it only organizes storage.
struct Monomial {
  std::vector<int> exps;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}
  Monomial(std::initializer_list<int> e) : exps(e) {}
  explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}

  std::size_t size() const { return exps.size(); }
  int operator[](std::size_t i) const { return exps[i]; }
  int& operator[](std::size_t i) { return exps[i]; }

  int degree() const {
    int d = 0;
    for (int e : exps) d += e;
    return d;
  }

  static Monomial unit(std::size_t nvars, std::size_t var) {
    Monomial m(nvars);
    m.exps[var] = 1;
    return m;
  }

  friend Monomial operator+(const Monomial& a, const Monomial& b) {
    require_dims(b.size(), a.size(), "monomial product");
    Monomial out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.exps[i] = a.exps[i] + b.exps[i];
    return out;
  }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

template <class S>
class Polynomial {
  using Traits = scalar_traits<S>;

 public:
  using TermMap = std::map<Monomial, S>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const S& c) {
    Polynomial p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
  }
  static Polynomial variable(std::size_t nvars, std::size_t var) {
    Polynomial p(nvars);
    p.add_term(Monomial::unit(nvars, var), Traits::one());
    return p;
  }
  static Polynomial term(const Monomial& m, const S& c) {
    Polynomial p(m.size());
    p.add_term(m, c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  S coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Traits::zero() : it->second;
  }

  void add_term(const Monomial& m, const S& c) {
    require_dims(m.size(), nvars_, "polynomial term");
    for (int e : m.exps) {
      if (e < 0) fail(ErrorCode::SchemaError, "negative exponent");
    }
    if (Traits::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (Traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    require_dims(o.nvars_, nvars_, "polynomial sum");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    require_dims(o.nvars_, nvars_, "polynomial difference");
    for (const auto& [m, c] : o.terms_) add_term(m, S(-c));
    return *this;
  }
  Polynomial& operator*=(const S& c) {
    if (Traits::is_zero(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& [m, v] : a.terms_) v = -v;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const S& c) { return a *= c; }
  friend Polynomial operator*(const S& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_dims(b.nvars_, a.nvars_, "polynomial product");
    Polynomial out(a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma + mb, ca * cb);
    }
    return out;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t nvars_;
  TermMap terms_;
};

template <class S>
Polynomial<S> pow(const Polynomial<S>& p, unsigned k) {
  Polynomial<S> out = Polynomial<S>::constant(p.nvars(), scalar_traits<S>::one());
  for (unsigned i = 0; i < k; ++i) out *= p;
  return out;
}

/// N polynomials in a common ring of `nvars` variables.
template <class S>
struct PolySystem {
  std::size_t nvars = 0;
  std::vector<Polynomial<S>> polys;
  /// Optional variable names used by serialization.
  std::vector<std::string> names;

  PolySystem() = default;
  PolySystem(std::size_t n, std::vector<Polynomial<S>> ps, std::vector<std::string> vars = {})
      : nvars(n), polys(std::move(ps)), names(std::move(vars)) {
    validate();
  }

  void validate() const {
    for (const auto& p : polys) require_dims(p.nvars(), nvars, "system polynomial");
    if (!names.empty()) require_dims(names.size(), nvars, "variable names");
  }

  std::size_t size() const { return polys.size(); }
  bool is_square() const { return polys.size() == nvars; }
  const Polynomial<S>& operator[](std::size_t i) const { return polys[i]; }

  int max_degree() const {
    int d = -1;
    for (const auto& p : polys) d = std::max(d, p.degree());
    return d;
  }

  friend bool operator==(const PolySystem& a, const PolySystem& b) {
    return a.nvars == b.nvars && a.polys == b.polys;
  }
};

template <class To, class From>
Polynomial<To> convert_polynomial(const Polynomial<From>& p) {
  Polynomial<To> out(p.nvars());
  for (const auto& [m, c] : p.terms()) out.add_term(m, convert_scalar<To>(c));
  return out;
}

template <class To, class From>
PolySystem<To> convert_system(const PolySystem<From>& sys) {
  std::vector<Polynomial<To>> ps;
  ps.reserve(sys.size());
  for (const auto& p : sys.polys) ps.push_back(convert_polynomial<To>(p));
  return PolySystem<To>(sys.nvars, std::move(ps), sys.names);
}

namespace detail {

template <class S>
std::vector<std::vector<S>> power_table(const Polynomial<S>& p, const Point<S>& z) {
  std::vector<int> max_exp(p.nvars(), 0);
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t i = 0; i < m.size(); ++i) max_exp[i] = std::max(max_exp[i], m[i]);
  }
  std::vector<std::vector<S>> table(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    table[i].reserve(static_cast<std::size_t>(max_exp[i]) + 1);
    table[i].push_back(scalar_traits<S>::one());
    for (int e = 1; e <= max_exp[i]; ++e) table[i].push_back(table[i].back() * z[i]);
  }
  return table;
}

inline long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline Rational factorial(int n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r);
}

}  // namespace detail

/// p(z), bit-exact in exact mode.
template <class S>
S eval(const Polynomial<S>& p, const Point<S>& z) {
  require_dims(z.size(), p.nvars(), "eval");
  auto table = detail::power_table(p, z);
  S acc = scalar_traits<S>::zero();
  for (const auto& [m, c] : p.terms()) {
    S t = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] > 0) t *= table[i][static_cast<std::size_t>(m[i])];
    }
    acc += t;
  }
  scalar_traits<S>::check_finite(acc);
  return acc;
}

template <class S>
std::vector<S> eval(const PolySystem<S>& sys, const Point<S>& z) {
  require_dims(z.size(), sys.nvars, "system eval");
  std::vector<S> out;
  out.reserve(sys.size());
  for (const auto& p : sys.polys) out.push_back(eval(p, z));
  return out;
}

/// d^a p with exact falling-factorial coefficients.
template <class S>
Polynomial<S> partial(const Polynomial<S>& p, const Monomial& a) {
  require_dims(a.size(), p.nvars(), "partial");
  Polynomial<S> out(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    Monomial reduced(m.size());
    long factor = 1;
    bool vanishes = false;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] < a[i]) {
        vanishes = true;
        break;
      }
      reduced[i] = m[i] - a[i];
      for (int j = 0; j < a[i]; ++j) factor *= (m[i] - j);
    }
    if (vanishes) continue;
    out.add_term(reduced, c * scalar_traits<S>::from_int(factor));
  }
  return out;
}

/// Partial derivatives d p_i / d z_j of every polynomial, precomputed.
template <class S>
std::vector<std::vector<Polynomial<S>>> jacobian_polys(const PolySystem<S>& sys) {
  std::vector<std::vector<Polynomial<S>>> d(sys.size());
  for (std::size_t i = 0; i < sys.size(); ++i) {
    for (std::size_t j = 0; j < sys.nvars; ++j)
      d[i].push_back(partial(sys.polys[i], Monomial::unit(sys.nvars, j)));
  }
  return d;
}

template <class S>
Matrix<S> jacobian(const std::vector<std::vector<Polynomial<S>>>& dpolys, const Point<S>& z) {
  const std::size_t rows = dpolys.size();
  const std::size_t cols = z.size();
  Matrix<S> jac(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    require_dims(dpolys[i].size(), cols, "jacobian");
    for (std::size_t j = 0; j < cols; ++j) jac(i, j) = eval(dpolys[i][j], z);
  }
  return jac;
}

/// N x n Jacobian matrix of the system at z.
template <class S>
Matrix<S> jacobian(const PolySystem<S>& sys, const Point<S>& z) {
  require_dims(z.size(), sys.nvars, "jacobian");
  return jacobian(jacobian_polys(sys), z);
}

/// q(w) = p(z + w); the coefficient of w^a is d^a p(z) / a!.
template <class S>
Polynomial<S> taylor_shift(const Polynomial<S>& p, const Point<S>& z) {
  require_dims(z.size(), p.nvars(), "taylor_shift");
  const std::size_t n = p.nvars();
  auto table = detail::power_table(p, z);
  Polynomial<S> out(n);
  for (const auto& [m, c] : p.terms()) {
    // Enumerate all i <= m componentwise.
    Monomial i(n);
    while (true) {
      S coef = c;
      long binom = 1;
      for (std::size_t v = 0; v < n; ++v) {
        binom *= detail::binomial(m[v], i[v]);
        const int rest = m[v] - i[v];
        if (rest > 0) coef *= table[v][static_cast<std::size_t>(rest)];
      }
      out.add_term(i, coef * scalar_traits<S>::from_int(binom));
      std::size_t v = 0;
      while (v < n) {
        if (i[v] < m[v]) {
          ++i[v];
          break;
        }
        i[v] = 0;
        ++v;
      }
      if (v == n) break;
    }
  }
  return out;
}

/// B_k(p, z) = sum_{|a| = k} |d^a p(z)| / a!, read off a precomputed shift.
template <class S>
real_t<S> deriv_ell1_bound_from_shift(const Polynomial<S>& shifted, int k) {
  real_t<S> acc(0);
  for (const auto& [m, c] : shifted.terms()) {
    if (m.degree() == k) acc += scalar_traits<S>::abs_upper(c);
  }
  return acc;
}

/// Upper bound for ||D^k p(z)|| / k! via the entrywise l1 norm of the
/// scaled derivative tensor. Exact mode uses |x|+|y| for moduli.
template <class S>
real_t<S> deriv_ell1_bound(const Polynomial<S>& p, const Point<S>& z, int k) {
  if (k < 1) fail(ErrorCode::PreconditionFailed, "derivative order must be >= 1");
  require_dims(z.size(), p.nvars(), "deriv_ell1_bound");
  return deriv_ell1_bound_from_shift(taylor_shift(p, z), k);
}

/// Sum over the system of Bombieri-Weyl squared norms of each polynomial's
/// homogenization in its own degree.
template <class S>
real_t<S> bw_norm_sq(const PolySystem<S>& sys) {
  using Real = real_t<S>;
  Real total(0);
  for (const auto& p : sys.polys) {
    const int d = p.degree();
    if (d < 0) continue;
    const Rational dfact = detail::factorial(d);
    for (const auto& [m, c] : p.terms()) {
      Rational weight = detail::factorial(d - m.degree());
      for (int e : m.exps) weight *= detail::factorial(e);
      weight /= dfact;
      Real w = scalar_traits<S>::real_from_rational(weight);
      total += scalar_traits<S>::norm_sq(c) * w;
    }
  }
  return total;
}

/// Product of the degrees of a square system.
template <class S>
std::uint64_t bezout_bound(const PolySystem<S>& sys) {
  if (!sys.is_square()) fail(ErrorCode::NotSquare, "Bezout bound needs a square system");
  std::uint64_t prod = 1;
  for (const auto& p : sys.polys) {
    if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "zero polynomial in square system");
    prod *= static_cast<std::uint64_t>(p.degree());
  }
  return prod;
}

template <class S>
std::string to_string(const Polynomial<S>& p, const std::vector<std::string>& names = {}) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) os << " + ";
    first = false;
    if constexpr (is_exact_v<S>) {
      os << "(" << c.re.get_str();
      if (c.im != 0) os << (c.im > 0 ? "+" : "") << c.im.get_str() << "i";
      os << ")";
    } else {
      os << "(" << c.real() << (c.imag() >= 0 ? "+" : "") << c.imag() << "i)";
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      os << "*" << (names.empty() ? "x" + std::to_string(i + 1) : names[i]);
      if (m[i] > 1) os << "^" << m[i];
    }
  }
  return os.str();
}

}  // namespace overcert
