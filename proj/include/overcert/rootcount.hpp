#pragma once

// Excess root counts from a supplied Khovanskii basis: lead-term valuations,
// degree-bounded basis verification, the Newton-Okounkov body, its exact
// volume, the lattice index, and the resulting intersection index d_L.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "overcert/error.hpp"
#include "overcert/polynomial.hpp"
#include "overcert/rational.hpp"
#include "overcert/scalar.hpp"

namespace overcert {

using ExactPolynomial = Polynomial<GaussianRational>;

struct MonomialOrder {
  enum class Kind { Grevlex, Lex };
  Kind kind = Kind::Grevlex;
  /// Variables from largest to smallest; empty means x1 > x2 > ... > xn.
  std::vector<std::size_t> variable_order;

  std::size_t var(std::size_t i) const { return variable_order.empty() ? i : variable_order[i]; }

  void validate(std::size_t n) const {
    if (variable_order.empty()) return;
    require_dims(variable_order.size(), n, "variable order");
    std::vector<std::size_t> sorted = variable_order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n; ++i) {
      if (sorted[i] != i) fail(ErrorCode::SchemaError, "variable order is not a permutation");
    }
  }

  std::strong_ordering compare(const std::vector<int>& a, const std::vector<int>& b) const {
    require_dims(b.size(), a.size(), "monomial comparison");
    const std::size_t n = a.size();
    if (kind == Kind::Grevlex) {
      const int da = std::accumulate(a.begin(), a.end(), 0);
      const int db = std::accumulate(b.begin(), b.end(), 0);
      if (da != db) return da <=> db;
      for (std::size_t i = n; i-- > 0;) {
        const int x = a[var(i)], y = b[var(i)];
        if (x != y) return y <=> x;
      }
      return std::strong_ordering::equal;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const int x = a[var(i)], y = b[var(i)];
      if (x != y) return x <=> y;
    }
    return std::strong_ordering::equal;
  }

  bool less(const std::vector<int>& a, const std::vector<int>& b) const { return compare(a, b) < 0; }
};

/// Exponent of the order-maximal monomial of p.
template <class S>
std::vector<int> lead_valuation(const Polynomial<S>& p, const MonomialOrder& order) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "valuation of the zero polynomial");
  order.validate(p.nvars());
  const std::vector<int>* best = nullptr;
  for (const auto& [m, c] : p.terms()) {
    if (!best || order.less(*best, m.exps)) best = &m.exps;
  }
  return *best;
}

/// t^level * poly in the graded algebra.
struct GradedElement {
  ExactPolynomial poly;
  int level = 1;
};

struct GradedValue {
  std::vector<int> v;
  int level = 1;
  friend auto operator<=>(const GradedValue&, const GradedValue&) = default;
};

using GradedValueSet = std::vector<GradedValue>;

struct RootCountInput {
  std::vector<GradedElement> basis;
  MonomialOrder order;
  long deg_psi = 1;
  /// Verification degree bound; <= 0 selects 2 * max basis level.
  int degree_bound = 0;
  /// Optional Bezout bound for the consistency cross-check.
  std::optional<std::uint64_t> bezout;
};

struct KhovanskiiResult {
  enum class Reason { None, MissingValue, ElementNotInAlgebra };
  bool verified = false;
  /// The bound D on success, else the failing level.
  int level = 0;
  /// Order-maximal value of L^level outside the generated semigroup.
  std::vector<int> missing;
  /// Every missing value found at the failing level, descending.
  std::vector<std::vector<int>> all_missing;
  Reason reason = Reason::None;
  std::optional<std::size_t> element;
};

namespace detail {

/// All monomials of degree <= max_degree, sorted descending by the order.
class MonomialIndex {
 public:
  MonomialIndex(std::size_t n, int max_degree, const MonomialOrder& order) : n_(n) {
    std::vector<int> e(n, 0);
    enumerate(e, 0, max_degree);
    std::sort(mons_.begin(), mons_.end(),
              [&](const auto& a, const auto& b) { return order.less(b, a); });
    for (std::size_t i = 0; i < mons_.size(); ++i) index_.emplace(mons_[i], i);
  }

  std::size_t size() const { return mons_.size(); }
  const std::vector<int>& monomial(std::size_t i) const { return mons_[i]; }
  std::optional<std::size_t> find(const std::vector<int>& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// shift[j] = index of monomial(j) * x^a, or size() when out of range.
  const std::vector<std::size_t>& shift(const std::vector<int>& a) const {
    auto it = shifts_.find(a);
    if (it != shifts_.end()) return it->second;
    std::vector<std::size_t> table(mons_.size(), mons_.size());
    std::vector<int> sum(n_);
    for (std::size_t j = 0; j < mons_.size(); ++j) {
      for (std::size_t i = 0; i < n_; ++i) sum[i] = mons_[j][i] + a[i];
      if (auto k = find(sum)) table[j] = *k;
    }
    return shifts_.emplace(a, std::move(table)).first->second;
  }

 private:
  void enumerate(std::vector<int>& e, std::size_t var, int left) {
    if (var == n_) {
      mons_.push_back(e);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[var] = k;
      enumerate(e, var + 1, left - k);
    }
    e[var] = 0;
  }

  std::size_t n_;
  std::vector<std::vector<int>> mons_;
  std::map<std::vector<int>, std::size_t> index_;
  mutable std::map<std::vector<int>, std::vector<std::size_t>> shifts_;
};

/// Dense integer coefficient vector over a MonomialIndex; scale is irrelevant.
struct IntRow {
  std::vector<BigInt> c;
  std::size_t lead = 0;  // == c.size() for the zero row

  bool is_zero() const { return lead == c.size(); }

  void find_lead(std::size_t from = 0) {
    lead = from;
    while (lead < c.size() && c[lead] == 0) ++lead;
  }

  void make_primitive() {
    if (is_zero()) return;
    BigInt g = 0;
    for (std::size_t j = lead; j < c.size(); ++j) {
      if (c[j] == 0) continue;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c[j].get_mpz_t());
      if (g == 1) break;
    }
    if (c[lead] < 0) g = -g;
    if (g == 1) return;
    for (std::size_t j = lead; j < c.size(); ++j) {
      if (c[j] != 0) mpz_divexact(c[j].get_mpz_t(), c[j].get_mpz_t(), g.get_mpz_t());
    }
  }
};

// Sparse integer polynomial: (exponent, coefficient) pairs.
using SparseInt = std::vector<std::pair<std::vector<int>, BigInt>>;

inline SparseInt to_sparse_int(const ExactPolynomial& p) {
  BigInt den = 1;
  for (const auto& [m, c] : p.terms()) {
    if (c.im != 0)
      fail(ErrorCode::PreconditionFailed, "value computations need real rational coefficients");
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.re.get_den_mpz_t());
  }
  SparseInt out;
  for (const auto& [m, c] : p.terms()) {
    BigInt v = c.re.get_num() * (den / c.re.get_den());
    out.emplace_back(m.exps, std::move(v));
  }
  return out;
}

inline IntRow to_row(const SparseInt& p, const MonomialIndex& idx) {
  IntRow r;
  r.c.assign(idx.size(), BigInt(0));
  for (const auto& [e, v] : p) {
    auto k = idx.find(e);
    if (!k) fail(ErrorCode::PreconditionFailed, "monomial outside the working degree range");
    r.c[*k] = v;
  }
  r.find_lead();
  r.make_primitive();
  return r;
}

inline IntRow multiply(const IntRow& p, const SparseInt& f, const MonomialIndex& idx) {
  IntRow r;
  r.c.assign(idx.size(), BigInt(0));
  for (const auto& [e, v] : f) {
    const auto& shift = idx.shift(e);
    for (std::size_t j = p.lead; j < p.c.size(); ++j) {
      if (p.c[j] == 0) continue;
      const std::size_t k = shift[j];
      if (k == idx.size()) fail(ErrorCode::PreconditionFailed, "product exceeds the working degree");
      mpz_addmul(r.c[k].get_mpz_t(), p.c[j].get_mpz_t(), v.get_mpz_t());
    }
  }
  r.find_lead();
  r.make_primitive();
  return r;
}

/// Reduces r by the pivot rows (indexed by lead column) until its lead has
/// no pivot or r vanishes.
inline void reduce(IntRow& r, const std::vector<const IntRow*>& pivots) {
  BigInt a, b, g;
  int steps = 0;
  while (!r.is_zero() && pivots[r.lead]) {
    const IntRow& p = *pivots[r.lead];
    const std::size_t l = r.lead;
    mpz_gcd(g.get_mpz_t(), p.c[l].get_mpz_t(), r.c[l].get_mpz_t());
    mpz_divexact(a.get_mpz_t(), p.c[l].get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), r.c[l].get_mpz_t(), g.get_mpz_t());
    const bool scale = a != 1;
    for (std::size_t j = l; j < r.c.size(); ++j) {
      if (scale && r.c[j] != 0) mpz_mul(r.c[j].get_mpz_t(), r.c[j].get_mpz_t(), a.get_mpz_t());
      if (p.c[j] != 0) mpz_submul(r.c[j].get_mpz_t(), b.get_mpz_t(), p.c[j].get_mpz_t());
    }
    r.find_lead(l + 1);
    if (scale && ++steps % 8 == 0) r.make_primitive();
  }
  r.make_primitive();
}

/// Incremental echelon form keyed by lead column.
class Echelon {
 public:
  explicit Echelon(std::size_t cols) : pivots_(cols, nullptr) {}

  /// Returns true when r was independent of the rows so far.
  bool insert(IntRow r) {
    reduce(r, pivots_);
    if (r.is_zero()) return false;
    rows_.push_back(std::make_unique<IntRow>(std::move(r)));
    pivots_[rows_.back()->lead] = rows_.back().get();
    return true;
  }

  bool contains(IntRow r) const {
    reduce(r, pivots_);
    return r.is_zero();
  }

  std::vector<std::size_t> leads() const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < pivots_.size(); ++j) {
      if (pivots_[j]) out.push_back(j);
    }
    return out;
  }

  std::vector<const IntRow*> rows() const {
    std::vector<const IntRow*> out;
    for (const auto* p : pivots_) {
      if (p) out.push_back(p);
    }
    return out;
  }

 private:
  std::vector<std::unique_ptr<IntRow>> rows_;
  std::vector<const IntRow*> pivots_;
};

inline int max_degree(const std::vector<ExactPolynomial>& ps) {
  int d = 0;
  for (const auto& p : ps) d = std::max(d, p.degree());
  return d;
}

}  // namespace detail

/// nu(L^k): lead exponents of the span of k-fold products, descending.
inline std::vector<std::vector<int>> value_space(const std::vector<ExactPolynomial>& l, int k,
                                                 const MonomialOrder& order) {
  if (l.empty()) fail(ErrorCode::EmptyInput, "empty span");
  if (k < 1) fail(ErrorCode::PreconditionFailed, "power must be >= 1");
  const std::size_t n = l.front().nvars();
  for (const auto& p : l) require_dims(p.nvars(), n, "value_space");
  order.validate(n);
  const detail::MonomialIndex idx(n, k * detail::max_degree(l), order);
  std::vector<detail::SparseInt> gens;
  for (const auto& p : l) gens.push_back(detail::to_sparse_int(p));
  auto level = std::make_unique<detail::Echelon>(idx.size());
  for (const auto& g : gens) level->insert(detail::to_row(g, idx));
  for (int j = 2; j <= k; ++j) {
    auto next = std::make_unique<detail::Echelon>(idx.size());
    for (const auto* row : level->rows()) {
      for (const auto& g : gens) next->insert(detail::multiply(*row, g, idx));
    }
    level = std::move(next);
  }
  std::vector<std::vector<int>> out;
  for (std::size_t j : level->leads()) out.push_back(idx.monomial(j));
  return out;
}

inline std::vector<std::vector<int>> value_space(const std::vector<ExactPolynomial>& l, int k) {
  return value_space(l, k, MonomialOrder{});
}

/// The values nu_t(b) = (lead(b), level) of the basis elements.
inline GradedValueSet basis_values(const std::vector<GradedElement>& basis, const MonomialOrder& order) {
  GradedValueSet out;
  for (const auto& b : basis) {
    if (b.level < 1) fail(ErrorCode::PreconditionFailed, "basis levels must be >= 1");
    out.push_back({lead_valuation(b.poly, order), b.level});
  }
  return out;
}

/// Checks, for every level k <= D, that nu(L^k) lies in the semigroup
/// generated by the basis values. L is the span of the level-one elements.
/// Elements of higher level are also checked to lie in L^level.
inline KhovanskiiResult khovanskii_verify(const RootCountInput& input) {
  const auto& basis = input.basis;
  if (basis.empty()) fail(ErrorCode::EmptyInput, "empty basis");
  const std::size_t n = basis.front().poly.nvars();
  for (const auto& b : basis) require_dims(b.poly.nvars(), n, "basis element");
  input.order.validate(n);
  const auto values = basis_values(basis, input.order);
  int max_level = 0;
  std::vector<ExactPolynomial> l;
  for (const auto& b : basis) {
    max_level = std::max(max_level, b.level);
    if (b.level == 1) l.push_back(b.poly);
  }
  if (l.empty()) fail(ErrorCode::PreconditionFailed, "basis has no level-one elements");
  const int bound = input.degree_bound > 0 ? input.degree_bound : 2 * max_level;
  const int dl = detail::max_degree(l);

  KhovanskiiResult result;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].poly.degree() > basis[i].level * dl) {
      result.level = basis[i].level;
      result.reason = KhovanskiiResult::Reason::ElementNotInAlgebra;
      result.element = i;
      return result;
    }
  }

  const detail::MonomialIndex idx(n, bound * dl, input.order);
  std::vector<detail::SparseInt> sparse;
  for (const auto& b : basis) sparse.push_back(detail::to_sparse_int(b.poly));
  std::vector<std::size_t> level_one;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].level == 1) level_one.push_back(i);
  }

  // products[k][col]: a product of basis elements at level k with lead col.
  std::vector<std::vector<std::optional<detail::IntRow>>> products(bound + 1);
  products[0].resize(idx.size());
  {
    detail::IntRow one;
    one.c.assign(idx.size(), BigInt(0));
    auto k0 = idx.find(std::vector<int>(n, 0));
    one.c[*k0] = 1;
    one.find_lead();
    products[0][*k0] = std::move(one);
  }

  for (int k = 1; k <= bound; ++k) {
    // Generated values at level k, each with a representative product.
    auto& cur = products[k];
    cur.resize(idx.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const int lv = basis[i].level;
      if (lv > k) continue;
      const auto& shift = idx.shift(values[i].v);
      for (std::size_t j = 0; j < idx.size(); ++j) {
        if (!products[k - lv][j]) continue;
        const std::size_t t = shift[j];
        if (t == idx.size() || cur[t]) continue;
        cur[t] = detail::multiply(*products[k - lv][j], sparse[i], idx);
      }
    }

    // Spanning set of L^k: level-one elements times a basis of L^{k-1}.
    std::vector<detail::IntRow> span;
    if (k == 1) {
      for (std::size_t i : level_one) span.push_back(detail::to_row(sparse[i], idx));
    } else {
      for (const auto& p : products[k - 1]) {
        if (!p) continue;
        for (std::size_t i : level_one) span.push_back(detail::multiply(*p, sparse[i], idx));
      }
    }

    std::set<std::size_t> missing;
    if (k <= max_level) {
      // Exact echelon form of L^k; compare values and test membership of
      // the basis elements of this level.
      detail::Echelon ech(idx.size());
      for (auto& r : span) ech.insert(std::move(r));
      for (std::size_t j : ech.leads()) {
        if (!cur[j]) missing.insert(j);
      }
      if (missing.empty()) {
        for (std::size_t i = 0; i < basis.size(); ++i) {
          if (basis[i].level != k) continue;
          if (!ech.contains(detail::to_row(sparse[i], idx))) {
            result.level = k;
            result.reason = KhovanskiiResult::Reason::ElementNotInAlgebra;
            result.element = i;
            return result;
          }
        }
      }
    } else {
      // Subduction against the representative products, which span a
      // subspace of L^k with exactly the generated values.
      std::vector<const detail::IntRow*> pivots(idx.size(), nullptr);
      for (std::size_t j = 0; j < idx.size(); ++j) {
        if (cur[j]) pivots[j] = &*cur[j];
      }
      for (auto& r : span) {
        detail::reduce(r, pivots);
        if (!r.is_zero()) missing.insert(r.lead);
      }
    }
    if (!missing.empty()) {
      result.level = k;
      result.reason = KhovanskiiResult::Reason::MissingValue;
      for (std::size_t j : missing) result.all_missing.push_back(idx.monomial(j));
      result.missing = result.all_missing.front();
      return result;
    }
    // Products below the deepest look-back are no longer needed.
    if (k - max_level >= 1) products[k - max_level].clear();
  }
  result.verified = true;
  result.level = bound;
  return result;
}

struct OkounkovBody {
  std::size_t n = 0;
  /// Affine dimension of the body.
  int dim = 0;
  /// Extreme points; for 2-dimensional bodies listed in boundary order.
  std::vector<std::vector<Rational>> vertices;
  /// For 3-dimensional bodies: facets as vertex indices in boundary order.
  std::vector<std::vector<std::size_t>> facets;
};

namespace detail {

using QPoint = std::vector<Rational>;

inline QPoint sub(const QPoint& a, const QPoint& b) {
  QPoint r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Rational dot(const QPoint& a, const QPoint& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline QPoint cross(const QPoint& a, const QPoint& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline Rational cross2(const QPoint& o, const QPoint& a, const QPoint& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Rank of a list of rational vectors.
inline int rational_rank(std::vector<QPoint> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t piv = rows.size();
    for (std::size_t r = static_cast<std::size_t>(rank); r < rows.size(); ++r) {
      if (rows[r][c] != 0) {
        piv = r;
        break;
      }
    }
    if (piv == rows.size()) continue;
    std::swap(rows[static_cast<std::size_t>(rank)], rows[piv]);
    const QPoint& p = rows[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      Rational f = rows[r][c] / p[c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * p[k];
    }
    ++rank;
  }
  return rank;
}

inline int affine_dim(const std::vector<QPoint>& pts) {
  std::vector<QPoint> d;
  for (std::size_t i = 1; i < pts.size(); ++i) d.push_back(sub(pts[i], pts[0]));
  return rational_rank(std::move(d));
}

// Counter-clockwise hull of planar points (strict: no collinear points).
inline std::vector<std::size_t> hull2(const std::vector<QPoint>& pts) {
  std::vector<std::size_t> order(pts.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return pts[a][0] != pts[b][0] ? pts[a][0] < pts[b][0] : pts[a][1] < pts[b][1];
  });
  if (order.size() < 3) return order;
  std::vector<std::size_t> h(2 * order.size());
  std::size_t k = 0;
  for (std::size_t i : order) {
    while (k >= 2 && cross2(pts[h[k - 2]], pts[h[k - 1]], pts[i]) <= 0) --k;
    h[k++] = i;
  }
  for (std::size_t t = order.size() - 1, lower = k + 1; t-- > 0;) {
    const std::size_t i = order[t];
    while (k >= lower && cross2(pts[h[k - 2]], pts[h[k - 1]], pts[i]) <= 0) --k;
    h[k++] = i;
  }
  h.resize(k - 1);
  return h;
}

// Coordinates (i, j) on which an affine plane of points projects injectively.
inline std::pair<std::size_t, std::size_t> planar_chart(const std::vector<QPoint>& pts) {
  const std::size_t n = pts.front().size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<QPoint> proj;
      for (const auto& p : pts) proj.push_back({p[i], p[j]});
      if (affine_dim(proj) == 2) return {i, j};
    }
  }
  fail(ErrorCode::PreconditionFailed, "points are not planar of dimension 2");
}

// Boundary-ordered hull of points spanning an affine plane in any dimension.
inline std::vector<std::size_t> planar_hull(const std::vector<QPoint>& pts) {
  auto [i, j] = planar_chart(pts);
  std::vector<QPoint> proj;
  for (const auto& p : pts) proj.push_back({p[i], p[j]});
  return hull2(proj);
}

inline std::vector<QPoint> unique_points(std::vector<QPoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace detail

/// Convex hull of points in Q^n for n <= 3.
inline OkounkovBody convex_body(std::vector<std::vector<Rational>> points) {
  using detail::QPoint;
  if (points.empty()) fail(ErrorCode::EmptyInput, "no values");
  OkounkovBody body;
  body.n = points.front().size();
  for (const auto& p : points) require_dims(p.size(), body.n, "body point");
  if (body.n > 3) fail(ErrorCode::DimensionTooHigh, "exact hulls are limited to n <= 3");
  auto pts = detail::unique_points(std::move(points));
  body.dim = detail::affine_dim(pts);
  switch (body.dim) {
    case 0:
      body.vertices = {pts.front()};
      break;
    case 1: {
      QPoint dir;
      for (const auto& p : pts) {
        dir = detail::sub(p, pts.front());
        if (detail::dot(dir, dir) != 0) break;
      }
      std::size_t lo = 0, hi = 0;
      for (std::size_t i = 1; i < pts.size(); ++i) {
        const Rational t = detail::dot(detail::sub(pts[i], pts.front()), dir);
        if (t < detail::dot(detail::sub(pts[lo], pts.front()), dir)) lo = i;
        if (t > detail::dot(detail::sub(pts[hi], pts.front()), dir)) hi = i;
      }
      body.vertices = {pts[lo], pts[hi]};
      break;
    }
    case 2:
      for (std::size_t i : detail::planar_hull(pts)) body.vertices.push_back(pts[i]);
      break;
    default: {
      // Facets: planes through three points with all points on one side.
      std::map<QPoint, std::size_t> vertex_id;
      std::set<std::vector<std::size_t>> seen;
      const std::size_t m = pts.size();
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
          for (std::size_t c = b + 1; c < m; ++c) {
            const QPoint normal = detail::cross(detail::sub(pts[b], pts[a]), detail::sub(pts[c], pts[a]));
            if (detail::dot(normal, normal) == 0) continue;
            bool pos = false, neg = false;
            std::vector<std::size_t> on;
            for (std::size_t p = 0; p < m && !(pos && neg); ++p) {
              const Rational s = detail::dot(normal, detail::sub(pts[p], pts[a]));
              if (s > 0) pos = true;
              else if (s < 0) neg = true;
              else on.push_back(p);
            }
            if (pos && neg) continue;
            if (!seen.insert(on).second) continue;
            std::vector<QPoint> face;
            for (std::size_t p : on) face.push_back(pts[p]);
            std::vector<std::size_t> facet;
            for (std::size_t k : detail::planar_hull(face)) {
              auto [it, fresh] = vertex_id.try_emplace(face[k], body.vertices.size());
              if (fresh) body.vertices.push_back(face[k]);
              facet.push_back(it->second);
            }
            body.facets.push_back(std::move(facet));
          }
        }
      }
      break;
    }
  }
  return body;
}

/// conv{v / k : (v, k) in values}.
inline OkounkovBody okounkov_body(const GradedValueSet& values) {
  if (values.empty()) fail(ErrorCode::EmptyInput, "no values");
  std::vector<std::vector<Rational>> pts;
  for (const auto& gv : values) {
    if (gv.level < 1) fail(ErrorCode::PreconditionFailed, "levels must be >= 1");
    std::vector<Rational> p;
    for (int x : gv.v) p.push_back(make_rational(BigInt(x), BigInt(gv.level)));
    pts.push_back(std::move(p));
  }
  return convex_body(std::move(pts));
}

/// Exact n-dimensional volume; 0 for bodies of lower dimension.
inline Rational volume(const OkounkovBody& body) {
  if (body.n > 3) fail(ErrorCode::DimensionTooHigh, "exact volume is limited to n <= 3");
  if (body.dim < static_cast<int>(body.n) || body.n == 0) return Rational(0);
  const auto& v = body.vertices;
  if (body.n == 1) return abs(Rational(v[1][0] - v[0][0]));
  if (body.n == 2) {
    Rational twice = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const auto& a = v[i];
      const auto& b = v[(i + 1) % v.size()];
      twice += a[0] * b[1] - a[1] * b[0];
    }
    return abs(twice) / 2;
  }
  // Fan of tetrahedra from the vertex centroid, which is interior.
  detail::QPoint c(3, Rational(0));
  for (const auto& p : v) {
    for (std::size_t i = 0; i < 3; ++i) c[i] += p[i];
  }
  for (auto& x : c) x /= static_cast<long>(v.size());
  Rational six = 0;
  for (const auto& f : body.facets) {
    for (std::size_t k = 1; k + 1 < f.size(); ++k) {
      const auto a = detail::sub(v[f[0]], c);
      const auto b = detail::sub(v[f[k]], c);
      const auto d = detail::sub(v[f[k + 1]], c);
      six += abs(detail::dot(a, detail::cross(b, d)));
    }
  }
  return six / 6;
}

/// Index of Z S(A_L) intersected with Z^n x {0} in Z^n x {0}.
inline BigInt lattice_index(const GradedValueSet& values) {
  if (values.empty()) fail(ErrorCode::EmptyInput, "no values");
  const std::size_t n = values.front().v.size();
  // Rows (level, v); the level column is eliminated first.
  std::vector<std::vector<BigInt>> rows;
  for (const auto& gv : values) {
    require_dims(gv.v.size(), n, "value");
    std::vector<BigInt> r{BigInt(gv.level)};
    for (int x : gv.v) r.emplace_back(x);
    rows.push_back(std::move(r));
  }
  std::size_t piv = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c <= n && piv < rows.size(); ++c) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = piv; r < rows.size(); ++r) {
        if (rows[r][c] != 0 && (best == rows.size() || abs(rows[r][c]) < abs(rows[best][c]))) best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[piv], rows[best]);
      bool others = false;
      for (std::size_t r = piv + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[piv][c].get_mpz_t());
        for (std::size_t k = c; k <= n; ++k) rows[r][k] -= q * rows[piv][k];
        if (rows[r][c] != 0) others = true;
      }
      if (!others) {
        pivot_cols.push_back(c);
        ++piv;
        break;
      }
    }
  }
  // Row 0 carries the level; the remaining rows generate the level-0 part.
  if (pivot_cols.size() != n + 1)
    fail(ErrorCode::RankDeficient, "level-0 sublattice has rank below n; index is infinite");
  BigInt det = 1;
  for (std::size_t r = 1; r <= n; ++r) det *= rows[r][pivot_cols[r]];
  return abs(Rational(det)).get_num();
}

struct RootCountReport {
  KhovanskiiResult verification;
  GradedValueSet values;
  OkounkovBody body;
  Rational volume;
  BigInt index;
  BigInt d_l;
};

/// n! * deg_psi / index * volume for a verified basis.
inline RootCountReport root_count(const RootCountInput& input) {
  if (input.deg_psi < 1) fail(ErrorCode::PreconditionFailed, "deg_psi must be >= 1");
  RootCountReport rep;
  rep.verification = khovanskii_verify(input);
  if (!rep.verification.verified)
    fail(ErrorCode::PreconditionFailed,
         "basis fails verification at level " + std::to_string(rep.verification.level));
  rep.values = basis_values(input.basis, input.order);
  rep.body = okounkov_body(rep.values);
  rep.volume = volume(rep.body);
  rep.index = lattice_index(rep.values);
  BigInt nfact;
  mpz_fac_ui(nfact.get_mpz_t(), rep.body.n);
  const Rational per_degree = Rational(nfact) * rep.volume / Rational(rep.index);
  if (input.bezout && per_degree > Rational(static_cast<unsigned long>(*input.bezout)))
    fail(ErrorCode::InconsistentInput, "n! vol / ind exceeds the supplied Bezout bound");
  Rational d = per_degree * input.deg_psi;
  if (d.get_den() != 1 || d <= 0)
    fail(ErrorCode::NonIntegerResult, "d_L = " + d.get_str() + " is not a positive integer");
  rep.d_l = d.get_num();
  return rep;
}

inline BigInt d_L(const RootCountInput& input) { return root_count(input).d_l; }

}  // namespace overcert
