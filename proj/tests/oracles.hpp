#pragma once

// Independent reference computations for the test suite. Nothing here
// calls into the library's algorithms; only the data containers are shared.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <ostream>
#include <vector>

#include "overcert/polynomial.hpp"
#include "overcert/rational.hpp"

namespace overcert {

// Readable gtest diagnostics.
inline void PrintTo(const GaussianRational& g, std::ostream* os) { *os << g.re.get_str() << " + " << g.im.get_str() << "i"; }

}  // namespace overcert

namespace oracle {

using overcert::BigInt;
using overcert::Complex;
using overcert::GaussianRational;
using overcert::Rational;
using QPoint = std::vector<Rational>;

// Canonical a/b.
inline Rational frac(long a, long b) { return overcert::make_rational(BigInt(a), BigInt(b)); }

// Term-by-term evaluation with repeated multiplication.
inline Complex eval(const overcert::Polynomial<Complex>& p, const std::vector<Complex>& z) {
  Complex s = 0;
  for (const auto& [m, c] : p.terms()) {
    Complex t = c;
    for (std::size_t i = 0; i < z.size(); ++i) {
      for (int k = 0; k < m[i]; ++k) t *= z[i];
    }
    s += t;
  }
  return s;
}

inline GaussianRational eval(const overcert::Polynomial<GaussianRational>& p,
                             const std::vector<GaussianRational>& z) {
  GaussianRational s;
  for (const auto& [m, c] : p.terms()) {
    GaussianRational t = c;
    for (std::size_t i = 0; i < z.size(); ++i) {
      for (int k = 0; k < m[i]; ++k) t = t * z[i];
    }
    s = s + t;
  }
  return s;
}

inline std::vector<Complex> eval(const overcert::PolySystem<Complex>& sys, const std::vector<Complex>& z) {
  std::vector<Complex> out;
  for (const auto& p : sys.polys) out.push_back(eval(p, z));
  return out;
}

// Taylor coefficients of t -> p(z + t v) by a discrete Fourier transform
// over N > deg roots of unity on the circle |t| = r.
inline std::vector<Complex> directional_taylor(const overcert::Polynomial<Complex>& p,
                                               const std::vector<Complex>& z, const std::vector<Complex>& v,
                                               double r = 1.0) {
  const int deg = std::max(p.degree(), 0);
  const int n = deg + 1;
  std::vector<Complex> vals(n);
  for (int j = 0; j < n; ++j) {
    const Complex w = std::polar(r, 2.0 * std::numbers::pi * j / n);
    std::vector<Complex> pt(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) pt[i] = z[i] + w * v[i];
    vals[j] = eval(p, pt);
  }
  std::vector<Complex> coef(n);
  for (int k = 0; k < n; ++k) {
    Complex s = 0;
    for (int j = 0; j < n; ++j) s += vals[j] * std::polar(1.0, -2.0 * std::numbers::pi * j * k / n);
    coef[k] = s / (static_cast<double>(n) * std::pow(r, k));
  }
  return coef;
}

// Solves a small dense complex system by Gaussian elimination with
// partial pivoting.
inline std::vector<Complex> solve(std::vector<std::vector<Complex>> a, std::vector<Complex> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
    }
    std::swap(a[c], a[p]);
    std::swap(b[c], b[p]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const Complex f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  std::vector<Complex> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Complex s = b[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= a[i][k] * x[k];
    x[i] = s / a[i][i];
  }
  return x;
}

// Central-difference Jacobian.
inline std::vector<std::vector<Complex>> fd_jacobian(const overcert::PolySystem<Complex>& sys,
                                                     const std::vector<Complex>& z, double h = 1e-6) {
  const std::size_t n = z.size();
  std::vector<std::vector<Complex>> j(sys.size(), std::vector<Complex>(n));
  for (std::size_t c = 0; c < n; ++c) {
    auto zp = z, zm = z;
    zp[c] += h;
    zm[c] -= h;
    const auto fp = eval(sys, zp), fm = eval(sys, zm);
    for (std::size_t r = 0; r < sys.size(); ++r) j[r][c] = (fp[r] - fm[r]) / (2.0 * h);
  }
  return j;
}

// Lower estimate of Smale's gamma: the sup over k >= 2 and unit directions
// v of ||Dg^{-1} D^k g (v,...,v) / k!||^(1/(k-1)), sampled over `dirs`.
inline double sampled_gamma(const overcert::PolySystem<Complex>& sys, const std::vector<Complex>& z,
                            const std::vector<std::vector<Complex>>& dirs) {
  const std::size_t n = z.size();
  std::vector<std::vector<Complex>> jac(n, std::vector<Complex>(n));
  // Jacobian from first-order Taylor coefficients along the unit vectors.
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Complex> e(n, 0.0);
    e[c] = 1.0;
    for (std::size_t r = 0; r < n; ++r) jac[r][c] = directional_taylor(sys.polys[r], z, e)[1];
  }
  double best = 0.0;
  for (const auto& v : dirs) {
    std::vector<std::vector<Complex>> coefs;
    int maxdeg = 0;
    for (const auto& p : sys.polys) {
      coefs.push_back(directional_taylor(p, z, v));
      maxdeg = std::max(maxdeg, p.degree());
    }
    for (int k = 2; k <= maxdeg; ++k) {
      std::vector<Complex> rhs(n);
      for (std::size_t r = 0; r < n; ++r) rhs[r] = k < static_cast<int>(coefs[r].size()) ? coefs[r][k] : 0.0;
      const auto x = solve(jac, rhs);
      double norm = 0.0;
      for (const auto& xi : x) norm += std::norm(xi);
      best = std::max(best, std::pow(std::sqrt(norm), 1.0 / (k - 1)));
    }
  }
  return best;
}

// Exact determinant by fraction-producing elimination.
inline Rational det(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return d;
}

// gcd of all maximal minors of an integer matrix with more rows than columns.
inline BigInt maximal_minor_gcd(const std::vector<std::vector<long>>& rows) {
  const std::size_t cols = rows.front().size();
  BigInt g = 0;
  std::vector<std::size_t> pick(cols);
  for (std::size_t i = 0; i < cols; ++i) pick[i] = i;
  while (true) {
    std::vector<std::vector<Rational>> m;
    for (std::size_t i : pick) {
      std::vector<Rational> row;
      for (long x : rows[i]) row.emplace_back(x);
      m.push_back(row);
    }
    const Rational d = det(m);
    BigInt num = d.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    // Next combination.
    std::size_t i = cols;
    while (i > 0 && pick[i - 1] == rows.size() - cols + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t k = i; k < cols; ++k) pick[k] = pick[k - 1] + 1;
  }
  return g;
}

// Convex hull area of planar rational points by gift wrapping.
inline Rational hull_area(std::vector<QPoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return 0;
  auto cross = [](const QPoint& o, const QPoint& a, const QPoint& b) {
    return Rational((a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]));
  };
  std::vector<QPoint> hull;
  std::size_t start = 0;  // lexicographically smallest, always extreme
  std::size_t cur = start;
  do {
    hull.push_back(pts[cur]);
    std::size_t next = (cur + 1) % pts.size();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Rational c = cross(pts[cur], pts[next], pts[i]);
      const auto dist = [&](const QPoint& q) {
        return Rational((q[0] - pts[cur][0]) * (q[0] - pts[cur][0]) + (q[1] - pts[cur][1]) * (q[1] - pts[cur][1]));
      };
      if (c < 0 || (c == 0 && dist(pts[i]) > dist(pts[next]))) next = i;
    }
    cur = next;
  } while (cur != start && hull.size() <= pts.size());
  Rational twice = 0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto& a = hull[i];
    const auto& b = hull[(i + 1) % hull.size()];
    twice += a[0] * b[1] - a[1] * b[0];
  }
  return abs(twice) / 2;
}

inline Rational tetra_volume(const QPoint& a, const QPoint& b, const QPoint& c, const QPoint& d) {
  std::vector<std::vector<Rational>> m(3, std::vector<Rational>(3));
  for (std::size_t i = 0; i < 3; ++i) {
    m[0][i] = b[i] - a[i];
    m[1][i] = c[i] - a[i];
    m[2][i] = d[i] - a[i];
  }
  return abs(det(m)) / 6;
}

// Dyck paths of semilength m, counted by dynamic programming.
inline std::uint64_t dyck_paths(int m) {
  std::vector<std::uint64_t> ways(2 * m + 2, 0);
  ways[0] = 1;
  for (int step = 0; step < 2 * m; ++step) {
    std::vector<std::uint64_t> next(ways.size(), 0);
    for (int h = 0; h <= 2 * m; ++h) {
      if (!ways[h]) continue;
      next[h + 1] += ways[h];
      if (h > 0) next[h - 1] += ways[h];
    }
    ways = next;
  }
  return ways[0];
}

}  // namespace oracle
