#pragma once

// Exact builders for the worked example families: plane quartics through
// four points, the Schubert problem of 2-planes meeting codimension-3
// planes, five-point essential matrices, the rational normal curve, and a
// small three-variable Khovanskii basis.

#include <cstdint>
#include <string>
#include <vector>

#include "overcert/certify.hpp"
#include "overcert/error.hpp"
#include "overcert/polynomial.hpp"
#include "overcert/rational.hpp"
#include "overcert/rng.hpp"
#include "overcert/rootcount.hpp"

namespace overcert {

using ExactSystem = PolySystem<GaussianRational>;
using ExactPoint = Point<GaussianRational>;

namespace detail {

// Builds a polynomial from (coefficient, exponent) pairs.
inline ExactPolynomial poly(std::size_t n, std::initializer_list<std::pair<long, std::vector<int>>> terms) {
  ExactPolynomial p(n);
  for (const auto& [c, e] : terms) p.add_term(Monomial(e), GaussianRational(c));
  return p;
}

inline ExactPolynomial var(std::size_t n, std::size_t i) { return ExactPolynomial::variable(n, i); }

inline ExactPolynomial constant(std::size_t n, const Rational& q) {
  return ExactPolynomial::constant(n, GaussianRational(q));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Quartics through (4,4), (-3,-1), (-1,-1), (3,3).

struct QuarticsFixture {
  ExactSystem f;
  ExactPolynomial g;
  ExactPolynomial h;
  std::vector<GradedElement> basis;
  std::vector<ExactPoint> solutions;
};

inline QuarticsFixture quartics_fixture() {
  using detail::poly;
  const std::size_t n = 2;
  std::vector<ExactPolynomial> f{
      poly(n, {{1, {1, 1}}, {-1, {0, 2}}, {1, {1, 0}}, {-1, {0, 1}}}),
      poly(n, {{1, {2, 0}}, {-1, {0, 2}}, {4, {1, 0}}, {-4, {0, 1}}}),
      poly(n, {{1, {0, 3}}, {-6, {0, 2}}, {5, {0, 1}}, {12, {0, 0}}}),
      poly(n, {{1, {1, 2}}, {-6, {0, 2}}, {-1, {1, 0}}, {6, {0, 1}}, {12, {0, 0}}}),
      poly(n, {{1, {2, 1}}, {-6, {0, 2}}, {-4, {1, 0}}, {9, {0, 1}}, {12, {0, 0}}}),
      poly(n, {{1, {3, 0}}, {-6, {0, 2}}, {-13, {1, 0}}, {18, {0, 1}}, {12, {0, 0}}}),
      poly(n, {{1, {0, 4}}, {-31, {0, 2}}, {42, {0, 1}}, {72, {0, 0}}}),
      poly(n, {{1, {1, 3}}, {-31, {0, 2}}, {1, {1, 0}}, {41, {0, 1}}, {72, {0, 0}}}),
      poly(n, {{1, {2, 2}}, {-31, {0, 2}}, {4, {1, 0}}, {38, {0, 1}}, {72, {0, 0}}}),
      poly(n, {{1, {3, 1}}, {-31, {0, 2}}, {13, {1, 0}}, {29, {0, 1}}, {72, {0, 0}}}),
      poly(n, {{1, {4, 0}}, {-31, {0, 2}}, {40, {1, 0}}, {2, {0, 1}}, {72, {0, 0}}}),
  };
  QuarticsFixture fx;
  fx.g = poly(n, {{1, {1, 3}}, {-1, {0, 4}}, {10, {2, 1}}, {-26, {1, 2}}, {16, {0, 3}}, {10, {2, 0}},
                  {-15, {1, 1}}, {5, {0, 2}}, {12, {1, 0}}, {-12, {0, 1}}});
  fx.h = poly(n, {{10, {4, 1}}, {-49, {3, 2}}, {89, {2, 3}}, {-71, {1, 4}}, {21, {0, 5}}, {10, {4, 0}},
                  {-18, {3, 1}}, {-18, {2, 2}}, {50, {1, 3}}, {-24, {0, 4}}, {31, {3, 0}},
                  {-83, {2, 1}}, {73, {1, 2}}, {-21, {0, 3}}, {24, {2, 0}}, {-48, {1, 1}},
                  {24, {0, 2}}});
  for (const auto& p : f) fx.basis.push_back({p, 1});
  fx.basis.push_back({fx.g, 2});
  fx.basis.push_back({fx.h, 3});
  fx.f = ExactSystem(n, std::move(f), {"z1", "z2"});
  for (auto [a, b] : {std::pair{4, 4}, {-3, -1}, {-1, -1}, {3, 3}})
    fx.solutions.push_back({GaussianRational(a), GaussianRational(b)});
  return fx;
}

// ---------------------------------------------------------------------------
// Schubert problem: 2-planes in C^(m+2) meeting m general (m-1)-planes.

/// kappa_{m,0} of the Schur-function recursion; K_{m^2, 2^m}.
inline std::uint64_t kostka(int m) {
  if (m < 1) fail(ErrorCode::PreconditionFailed, "kostka needs m >= 1");
  std::vector<std::uint64_t> row{0, 1};  // kappa_{1,0}, kappa_{1,1}
  for (int k = 2; k <= m; ++k) {
    std::vector<std::uint64_t> next(static_cast<std::size_t>(k) + 1, 0);
    auto at = [&](int j) -> std::uint64_t {
      return j >= 0 && j < static_cast<int>(row.size()) ? row[static_cast<std::size_t>(j)] : 0;
    };
    next[0] = at(1);
    for (int j = 1; j <= k; ++j) next[static_cast<std::size_t>(j)] = at(j - 1) + at(j) + at(j + 1);
    row = std::move(next);
  }
  return row[0];
}

inline std::uint64_t catalan(int m) {
  if (m < 0) fail(ErrorCode::PreconditionFailed, "catalan needs m >= 0");
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), 2 * static_cast<unsigned long>(m), static_cast<unsigned long>(m));
  b /= m + 1;
  return b.get_ui();
}

using PolyMatrix = std::vector<std::vector<ExactPolynomial>>;
using QMatrix = std::vector<std::vector<Rational>>;

namespace detail {

/// Determinant by cofactor expansion along the first column.
inline ExactPolynomial poly_det(const PolyMatrix& m, std::size_t nvars) {
  const std::size_t n = m.size();
  if (n == 0) return ExactPolynomial::constant(nvars, GaussianRational(1L));
  if (n == 1) return m[0][0];
  ExactPolynomial out(nvars);
  for (std::size_t r = 0; r < n; ++r) {
    if (m[r][0].is_zero()) continue;
    PolyMatrix minor;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r) continue;
      minor.emplace_back(m[i].begin() + 1, m[i].end());
    }
    ExactPolynomial term = m[r][0] * poly_det(minor, nvars);
    if (r % 2 == 0) out += term;
    else out -= term;
  }
  return out;
}

/// A nonzero vector spanning the kernel of a (k x n) rational matrix of
/// rank n - 1; nullopt if the kernel has another dimension.
inline std::optional<std::vector<Rational>> kernel_vector(QMatrix a, std::size_t n) {
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < a.size(); ++c) {
    std::size_t p = a.size();
    for (std::size_t r = row; r < a.size(); ++r) {
      if (a[r][c] != 0) {
        p = r;
        break;
      }
    }
    if (p == a.size()) continue;
    std::swap(a[row], a[p]);
    const Rational inv = 1 / a[row][c];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t k = 0; k < n; ++k) a[r][k] -= f * a[row][k];
    }
    pivot_col.push_back(c);
    ++row;
  }
  if (pivot_col.size() + 1 != n) return std::nullopt;
  std::size_t free_col = 0;
  for (std::size_t c = 0, k = 0; c < n; ++c) {
    if (k < pivot_col.size() && pivot_col[k] == c) {
      ++k;
    } else {
      free_col = c;
      break;
    }
  }
  std::vector<Rational> v(n, Rational(0));
  v[free_col] = 1;
  for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -a[r][free_col];
  return v;
}

inline Rational small_rational(CounterRng& rng) {
  const long num = rng.uniform_int(-9, 9);
  const long den = rng.uniform_int(1, 5);
  return make_rational(BigInt(num), BigInt(den));
}

inline std::size_t qmatrix_rank(const QMatrix& a) {
  if (a.empty()) return 0;
  Matrix<GaussianRational> m(a.size(), a.front().size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) m(i, j) = GaussianRational(a[i][j]);
  }
  return rank(m);
}

}  // namespace detail

struct SchubertInstance {
  int m = 0;
  std::uint64_t seed = 0;
  /// K_k, each (m+2) x (m-1).
  std::vector<QMatrix> k;
  /// Appended columns c_{k,1}, c_{k,2}, each of length m+2.
  std::vector<std::array<std::vector<Rational>, 2>> columns;
  /// Row vectors whose kernels are the hyperplanes spanned by K_k, c_{k,1}, c_{k,2}.
  std::vector<std::vector<Rational>> lambda;
  /// Maximal minors f_{k,j}, ordered by k then deleted row j.
  ExactSystem f;
  /// g_{k,i} = det(H | K_k | c_{k,i}), ordered (1,1), (1,2), (2,1), ...
  ExactSystem g;
  /// h_{k,1}, h_{k,2}: the entries of lambda_k H.
  ExactSystem h;
  std::size_t d_ind = 0;
  std::size_t d_set = 0;
  std::size_t e = 0;
  /// Block boundaries 0, 2, 4, ..., 2m for the liaison chain.
  std::vector<std::size_t> breakpoints;

  std::size_t nvars() const { return 2 * static_cast<std::size_t>(m); }
};

namespace detail {

// H = (Z | I_2)^T with Z[0][j] = x_j and Z[1][j] = x_{m+j}.
inline PolyMatrix schubert_h(int m) {
  const std::size_t nv = 2 * static_cast<std::size_t>(m);
  const std::size_t rows = static_cast<std::size_t>(m) + 2;
  PolyMatrix h(rows, std::vector<ExactPolynomial>(2, ExactPolynomial(nv)));
  for (std::size_t r = 0; r < static_cast<std::size_t>(m); ++r) {
    h[r][0] = var(nv, r);
    h[r][1] = var(nv, static_cast<std::size_t>(m) + r);
  }
  h[static_cast<std::size_t>(m)][0] = constant(nv, 1);
  h[static_cast<std::size_t>(m) + 1][1] = constant(nv, 1);
  return h;
}

inline PolyMatrix hstack(const PolyMatrix& h, const QMatrix& k, const std::vector<Rational>* col,
                         std::size_t nv) {
  PolyMatrix out = h;
  for (std::size_t r = 0; r < out.size(); ++r) {
    for (const auto& x : k[r]) out[r].push_back(constant(nv, x));
    if (col) out[r].push_back(constant(nv, (*col)[r]));
  }
  return out;
}

inline ExactPolynomial schubert_det(const PolyMatrix& h, const QMatrix& k, const std::vector<Rational>& col,
                                    std::size_t nv) {
  return poly_det(hstack(h, k, &col, nv), nv);
}

}  // namespace detail

/// Draws the K_k and appended columns from `seed`, redrawing (up to ten
/// times) when a rank condition fails.
inline SchubertInstance schubert_fixture(int m, std::uint64_t seed) {
  if (m < 2) fail(ErrorCode::PreconditionFailed, "schubert_fixture needs m >= 2");
  const std::size_t mm = static_cast<std::size_t>(m);
  const std::size_t n = mm + 2;
  const std::size_t nv = 2 * mm;
  const PolyMatrix hmat = detail::schubert_h(m);
  for (std::uint64_t attempt = 0; attempt < 10; ++attempt) {
    CounterRng rng(seed, attempt);
    SchubertInstance inst;
    inst.m = m;
    inst.seed = seed;
    bool ok = true;
    std::vector<ExactPolynomial> fs, gs, hs;
    for (std::size_t kk = 0; kk < mm && ok; ++kk) {
      QMatrix kmat(n, std::vector<Rational>(mm - 1));
      for (auto& row : kmat) {
        for (auto& x : row) x = detail::small_rational(rng);
      }
      std::array<std::vector<Rational>, 2> cols;
      for (auto& c : cols) {
        c.resize(n);
        for (auto& x : c) x = detail::small_rational(rng);
      }
      // [K | c1 | c2]^T must have rank m+1 so lambda is unique.
      QMatrix stacked;
      for (std::size_t j = 0; j + 1 < mm; ++j) {
        std::vector<Rational> row(n);
        for (std::size_t r = 0; r < n; ++r) row[r] = kmat[r][j];
        stacked.push_back(std::move(row));
      }
      stacked.push_back(cols[0]);
      stacked.push_back(cols[1]);
      auto lambda = detail::kernel_vector(stacked, n);
      if (!lambda || detail::qmatrix_rank(stacked) != mm + 1) {
        ok = false;
        break;
      }
      const PolyMatrix hk = detail::hstack(hmat, kmat, nullptr, nv);
      for (std::size_t del = 0; del < n; ++del) {
        PolyMatrix minor;
        for (std::size_t r = 0; r < n; ++r) {
          if (r != del) minor.push_back(hk[r]);
        }
        fs.push_back(detail::poly_det(minor, nv));
      }
      for (const auto& c : cols) {
        gs.push_back(detail::schubert_det(hmat, kmat, c, nv));
        if (gs.back().degree() != 2) ok = false;
      }
      for (std::size_t c = 0; c < 2; ++c) {
        ExactPolynomial hc(nv);
        for (std::size_t r = 0; r < n; ++r) hc += hmat[r][c] * GaussianRational((*lambda)[r]);
        if (hc.degree() != 1) ok = false;
        hs.push_back(std::move(hc));
      }
      inst.k.push_back(std::move(kmat));
      inst.columns.push_back(std::move(cols));
      inst.lambda.push_back(std::move(*lambda));
    }
    if (!ok) continue;
    std::vector<std::string> names;
    for (std::size_t j = 0; j < mm; ++j) names.push_back("z1_" + std::to_string(j + 1));
    for (std::size_t j = 0; j < mm; ++j) names.push_back("z2_" + std::to_string(j + 1));
    inst.f = ExactSystem(nv, std::move(fs), names);
    inst.g = ExactSystem(nv, std::move(gs), names);
    inst.h = ExactSystem(nv, std::move(hs), names);
    inst.e = kostka(m);
    inst.d_set = catalan(m);
    inst.d_ind = inst.d_set - inst.e;
    for (std::size_t b = 0; b <= mm; ++b) inst.breakpoints.push_back(2 * b);
    return inst;
  }
  fail(ErrorCode::DegenerateData, "could not draw nondegenerate Schubert data in 10 attempts");
}

/// A second square subsystem g' from fresh appended columns for the same K_k.
inline ExactSystem schubert_alternate(const SchubertInstance& inst, std::uint64_t seed) {
  const std::size_t mm = static_cast<std::size_t>(inst.m);
  const std::size_t n = mm + 2;
  const std::size_t nv = inst.nvars();
  const PolyMatrix hmat = detail::schubert_h(inst.m);
  for (std::uint64_t attempt = 0; attempt < 10; ++attempt) {
    CounterRng rng(seed, 1000 + attempt);
    std::vector<ExactPolynomial> gs;
    bool ok = true;
    for (std::size_t kk = 0; kk < mm && ok; ++kk) {
      for (int i = 0; i < 2; ++i) {
        std::vector<Rational> c(n);
        for (auto& x : c) x = detail::small_rational(rng);
        gs.push_back(detail::schubert_det(hmat, inst.k[kk], c, nv));
        if (gs.back().degree() != 2) ok = false;
      }
    }
    if (ok) return ExactSystem(nv, std::move(gs), inst.g.names);
  }
  fail(ErrorCode::DegenerateData, "could not draw an alternate subsystem in 10 attempts");
}

inline LiaisonChainSpec<GaussianRational> schubert_chain(const SchubertInstance& inst) {
  return {inst.breakpoints, inst.g, inst.h};
}

// ---------------------------------------------------------------------------
// Five-point essential matrices on the chart e11 = 1.

struct EssentialFixture {
  std::vector<std::array<Rational, 3>> x, y;
  /// Unknowns e12, e13, e21, e22, e23, e31, e32, e33.
  ExactSystem g;
  /// e11, e11 e31 + e12 e32 + e13 e33, e11^2 + e12^2 + e13^2 on the chart.
  ExactSystem exclusion;
  std::array<std::array<Rational, 3>, 3> e_hat;

  ExactPoint e_hat_point() const {
    ExactPoint p;
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) {
        if (r == 0 && c == 0) continue;
        p.emplace_back(e_hat[r][c]);
      }
    }
    return p;
  }
};

inline EssentialFixture essential_fixture() {
  const std::size_t nv = 8;
  auto q = [](const char* s) { return parse_rational(s); };
  EssentialFixture fx;
  fx.x = {{{q("0"), q("0"), q("1")}},
          {{q("0"), q("1"), q("1")}},
          {{q(".750733"), q(".393279"), q("1")}},
          {{q(".383872"), q(".210436"), q("1")}},
          {{q(".970556"), q(".699694"), q("1")}}};
  fx.y = {{{q("0"), q("0"), q("1")}},
          {{q("0"), q("1"), q("1")}},
          {{q(".355041"), q(".153766"), q("1")}},
          {{q(".090869"), q(".143374"), q("1")}},
          {{q(".003463"), q(".17189"), q("1")}}};
  const char* e_hat[3][3] = {{"1", "-2.36148", "-.017451"},
                             {"2.52018", ".979523", "-.066457"},
                             {".117939", "-.913067", "-1e-6"}};
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) fx.e_hat[r][c] = q(e_hat[r][c]);
  }
  // E as polynomials on the chart.
  std::array<std::array<ExactPolynomial, 3>, 3> e;
  std::size_t v = 0;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      e[r][c] = (r == 0 && c == 0) ? detail::constant(nv, 1) : detail::var(nv, v++);
    }
  }
  std::vector<ExactPolynomial> gs;
  for (std::size_t i = 0; i < 5; ++i) {
    ExactPolynomial p(nv);
    for (std::size_t a = 0; a < 3; ++a) {
      for (std::size_t b = 0; b < 3; ++b) {
        const Rational w = fx.y[i][a] * fx.x[i][b];
        if (w != 0) p += e[a][b] * GaussianRational(w);
      }
    }
    gs.push_back(std::move(p));
  }
  auto rowdot = [&](std::size_t a, std::size_t b) {
    ExactPolynomial s(nv);
    for (std::size_t c = 0; c < 3; ++c) s += e[a][c] * e[b][c];
    return s;
  };
  const ExactPolynomial r11 = rowdot(0, 0), r22 = rowdot(1, 1), r33 = rowdot(2, 2);
  const ExactPolynomial r12 = rowdot(0, 1), r13 = rowdot(0, 2);
  const GaussianRational two(2L);
  // Row one of 2 E E^T E - tr(E E^T) E.
  for (std::size_t i = 0; i < 3; ++i) {
    gs.push_back((r11 - r22 - r33) * e[0][i] + two * (r12 * e[1][i]) + two * (r13 * e[2][i]));
  }
  const std::vector<std::string> names{"e12", "e13", "e21", "e22", "e23", "e31", "e32", "e33"};
  fx.g = ExactSystem(nv, std::move(gs), names);
  fx.exclusion = ExactSystem(nv, {e[0][0], r13, r11}, names);
  return fx;
}

// ---------------------------------------------------------------------------
// Rational normal curve and a secant line.

struct RncFixture {
  ExactSystem g;
  /// Polynomials cutting out the line Y in V(g_1, g_2) = C u Y.
  std::vector<ExactPolynomial> h;
  std::size_t r = 2;
  ExactPoint on_line;
  std::vector<ExactPoint> on_curve;
};

inline RncFixture rnc_fixture() {
  using detail::poly;
  const std::size_t n = 3;
  RncFixture fx;
  fx.g = ExactSystem(n,
                     {poly(n, {{1, {0, 0, 1}}, {-1, {0, 1, 0}}, {1, {2, 0, 0}}, {-1, {1, 1, 0}}}),
                      poly(n, {{1, {1, 0, 1}}, {-1, {0, 2, 0}}}),
                      poly(n, {{1, {1, 0, 0}}, {1, {0, 1, 0}}, {1, {0, 0, 1}}, {1, {0, 0, 0}}})},
                     {"x", "y", "z"});
  fx.h = {poly(n, {{1, {1, 0, 0}}, {-1, {0, 1, 0}}}), poly(n, {{1, {1, 0, 0}}, {-1, {0, 0, 1}}})};
  const GaussianRational third(Rational(-1, 3));
  fx.on_line = {third, third, third};
  const GaussianRational i(Rational(0), Rational(1)), mi(Rational(0), Rational(-1));
  fx.on_curve = {{GaussianRational(-1L), GaussianRational(1L), GaussianRational(-1L)},
                 {i, GaussianRational(-1L), mi},
                 {mi, GaussianRational(-1L), i}};
  return fx;
}

// ---------------------------------------------------------------------------
// Four polynomials in three variables whose span has d_L = 2.

struct Ahs18Fixture {
  ExactSystem f;
  /// The degree-2 element of L^2 with value (2, 0, 1).
  ExactPolynomial q;
  std::vector<GradedElement> basis;
  long deg_psi = 2;
};

inline Ahs18Fixture ahs18_fixture() {
  using detail::poly;
  const std::size_t n = 3;
  Ahs18Fixture fx;
  const auto f1 = poly(n, {{1, {2, 0, 0}}, {1, {0, 2, 0}}, {-1, {0, 0, 0}}});
  const auto f2 = poly(n, {{-16, {0, 2, 0}}, {8, {1, 0, 0}}, {17, {0, 0, 0}}});
  const auto f3 = poly(n, {{-1, {0, 2, 0}}, {1, {1, 0, 0}}, {-1, {0, 0, 1}}, {-1, {0, 0, 0}}});
  const auto f4 = poly(n, {{64, {1, 1, 0}}, {16, {0, 1, 0}}});
  fx.f = ExactSystem(n, {f1, f2, f3, f4}, {"z1", "z2", "z3"});
  const GaussianRational c(Rational(1, 8));
  fx.q = GaussianRational(64L) * (f1 * f2) - GaussianRational(21L) * (f2 * f2) -
         GaussianRational(512L) * (f1 * f3) + GaussianRational(768L) * (f2 * f3) -
         GaussianRational(6400L) * (f3 * f3) + c * (f4 * f4);
  fx.basis = {{f1, 1}, {f2, 1}, {f3, 1}, {f4, 1}, {f2 - GaussianRational(16L) * f3, 1}, {fx.q, 2}};
  return fx;
}

}  // namespace overcert
