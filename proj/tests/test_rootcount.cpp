#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "oracles.hpp"
#include "overcert/fixtures.hpp"
#include "overcert/rootcount.hpp"

using namespace overcert;
using detail::poly;
using detail::var;
using oracle::frac;

namespace {

using Exps = std::vector<int>;

// Reference grevlex for x1 > ... > xn: higher degree wins, then the
// smaller exponent in the last differing variable wins.
bool grevlex_greater(const Exps& a, const Exps& b) {
  const int da = std::accumulate(a.begin(), a.end(), 0), db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

Exps oracle_lead(const ExactPolynomial& p) {
  Exps best;
  for (const auto& [m, c] : p.terms()) {
    if (best.empty() || grevlex_greater(m.exps, best)) best = m.exps;
  }
  return best;
}

std::set<Exps> as_set(const std::vector<Exps>& v) { return {v.begin(), v.end()}; }

RootCountInput input_of(std::vector<GradedElement> basis, long deg_psi = 1, int bound = 0) {
  RootCountInput in;
  in.basis = std::move(basis);
  in.deg_psi = deg_psi;
  in.degree_bound = bound;
  return in;
}

}  // namespace

TEST(Valuation, GrevlexLeads) {
  const auto fx = quartics_fixture();
  EXPECT_EQ(lead_valuation(fx.f.polys[0], MonomialOrder{}), (Exps{1, 1}));
  EXPECT_EQ(lead_valuation(poly(2, {{1, {4, 0}}}), MonomialOrder{}), (Exps{4, 0}));
  EXPECT_EQ(lead_valuation(fx.g, MonomialOrder{}), (Exps{1, 3}));
  for (const auto& p : fx.f.polys) EXPECT_EQ(lead_valuation(p, MonomialOrder{}), oracle_lead(p));
}

TEST(Valuation, OrdersAndPermutations) {
  const auto p = poly(3, {{1, {1, 0, 1}}, {1, {0, 2, 0}}});
  EXPECT_EQ(lead_valuation(p, MonomialOrder{}), (Exps{0, 2, 0}));
  EXPECT_EQ(lead_valuation(p, MonomialOrder{MonomialOrder::Kind::Lex, {}}), (Exps{1, 0, 1}));
  // x3 > x2 > x1 keeps x1 smallest, so the tie still goes to x2^2.
  EXPECT_EQ(lead_valuation(p, MonomialOrder{MonomialOrder::Kind::Grevlex, {2, 1, 0}}), (Exps{0, 2, 0}));
  // x1 > x3 > x2 makes x2 smallest and the tie flips.
  EXPECT_EQ(lead_valuation(p, MonomialOrder{MonomialOrder::Kind::Grevlex, {0, 2, 1}}), (Exps{1, 0, 1}));
  try {
    lead_valuation(ExactPolynomial(3), MonomialOrder{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroPolynomial);
  }
  try {
    lead_valuation(p, MonomialOrder{MonomialOrder::Kind::Lex, {0, 0, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SchemaError);
  }
}

TEST(Valuation, Multiplicative) {
  CounterRng rng(3, 0);
  for (int t = 0; t < 30; ++t) {
    ExactPolynomial a(3), b(3);
    for (int k = 0; k < 5; ++k) {
      a.add_term(Monomial{static_cast<int>(rng.uniform_int(0, 3)), static_cast<int>(rng.uniform_int(0, 3)),
                          static_cast<int>(rng.uniform_int(0, 3))},
                 GaussianRational(rng.uniform_int(1, 9)));
      b.add_term(Monomial{static_cast<int>(rng.uniform_int(0, 3)), static_cast<int>(rng.uniform_int(0, 3)),
                          static_cast<int>(rng.uniform_int(0, 3))},
                 GaussianRational(rng.uniform_int(1, 9)));
    }
    for (const auto& order : {MonomialOrder{}, MonomialOrder{MonomialOrder::Kind::Lex, {1, 2, 0}}}) {
      const auto la = lead_valuation(a, order), lb = lead_valuation(b, order);
      Exps sum(3);
      for (int i = 0; i < 3; ++i) sum[i] = la[i] + lb[i];
      EXPECT_EQ(lead_valuation(a * b, order), sum);
    }
  }
}

TEST(ValueSpace, TwoVariablesSquared) {
  EXPECT_EQ(as_set(value_space({var(2, 0), var(2, 1)}, 2)), (std::set<Exps>{{2, 0}, {1, 1}, {0, 2}}));
}

TEST(ValueSpace, QuarticsLeadExponents) {
  const auto fx = quartics_fixture();
  std::set<Exps> leads;
  for (const auto& p : fx.f.polys) leads.insert(oracle_lead(p));
  EXPECT_EQ(leads.size(), 11u);
  const auto vs = value_space(fx.f.polys, 1);
  EXPECT_EQ(vs.size(), 11u);
  EXPECT_EQ(as_set(vs), leads);
}

TEST(ValueSpace, PowersOfOneMonomial) {
  for (int k = 1; k <= 4; ++k) EXPECT_EQ(value_space({var(3, 0)}, k), (std::vector<Exps>{{k, 0, 0}}));
}

TEST(ValueSpace, ContainsSumset) {
  const auto fx = quartics_fixture();
  const auto v1 = value_space(fx.f.polys, 1);
  const auto v2 = as_set(value_space(fx.f.polys, 2));
  for (const auto& a : v1) {
    for (const auto& b : v1) EXPECT_TRUE(v2.count({a[0] + b[0], a[1] + b[1]}));
  }
}

TEST(ValueSpace, RejectsBadInput) {
  try {
    value_space({}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyInput);
  }
  ExactPolynomial p(1);
  p.add_term(Monomial{1}, GaussianRational(Rational(0), Rational(1)));
  try {
    value_space({p}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionFailed);
  }
}

TEST(Khovanskii, PolynomialRing) {
  const auto r = khovanskii_verify(input_of({{var(2, 0), 1}, {var(2, 1), 1}}, 1, 5));
  EXPECT_TRUE(r.verified);
  EXPECT_EQ(r.level, 5);
}

TEST(Khovanskii, QuarticsBasisVerifies) {
  const auto fx = quartics_fixture();
  const auto r = khovanskii_verify(input_of(fx.basis, 1, 6));
  EXPECT_TRUE(r.verified);
  EXPECT_EQ(r.level, 6);
}

TEST(Khovanskii, QuarticsWithoutDegreeTwoElementFails) {
  const auto fx = quartics_fixture();
  std::vector<GradedElement> basis;
  for (const auto& b : fx.basis) {
    if (b.level != 2) basis.push_back(b);
  }
  const auto r = khovanskii_verify(input_of(basis, 1, 6));
  EXPECT_FALSE(r.verified);
  EXPECT_EQ(r.level, 2);
  EXPECT_EQ(r.reason, KhovanskiiResult::Reason::MissingValue);
  EXPECT_NE(std::find(r.all_missing.begin(), r.all_missing.end(), Exps{1, 3}), r.all_missing.end());
}

TEST(Khovanskii, ElementOutsideTheAlgebra) {
  const auto r = khovanskii_verify(input_of({{var(2, 0), 1}, {var(2, 1), 1}, {poly(2, {{1, {3, 0}}}), 2}}));
  EXPECT_FALSE(r.verified);
  EXPECT_EQ(r.reason, KhovanskiiResult::Reason::ElementNotInAlgebra);
  EXPECT_EQ(r.element, std::optional<std::size_t>(2));
}

TEST(Body, Segment) {
  const auto b = okounkov_body({{{1, 0}, 1}, {{0, 1}, 1}});
  EXPECT_EQ(b.dim, 1);
  std::set<std::vector<Rational>> v(b.vertices.begin(), b.vertices.end());
  EXPECT_EQ(v, (std::set<std::vector<Rational>>{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}));
  EXPECT_EQ(volume(b), Rational(0));
}

TEST(Body, ThreeVariableVertices) {
  const auto fx = ahs18_fixture();
  const auto b = okounkov_body(basis_values(fx.basis, MonomialOrder{}));
  std::set<std::vector<Rational>> v(b.vertices.begin(), b.vertices.end());
  const std::set<std::vector<Rational>> want{{Rational(1), Rational(0), Rational(0)},
                                             {Rational(0), Rational(2), Rational(0)},
                                             {Rational(2), Rational(0), Rational(0)},
                                             {Rational(1), Rational(0), Rational(1, 2)}};
  EXPECT_EQ(v, want);  // (1,1,0) lies on the edge from (2,0,0) to (0,2,0)
  EXPECT_EQ(b.dim, 3);
}

TEST(Body, VertexSetIgnoresInputOrder) {
  auto vals = basis_values(quartics_fixture().basis, MonomialOrder{});
  const auto a = okounkov_body(vals);
  std::reverse(vals.begin(), vals.end());
  std::rotate(vals.begin(), vals.begin() + 5, vals.end());
  const auto b = okounkov_body(vals);
  EXPECT_EQ((std::set<std::vector<Rational>>(a.vertices.begin(), a.vertices.end())),
            (std::set<std::vector<Rational>>(b.vertices.begin(), b.vertices.end())));
}

TEST(Body, TooManyVariables) {
  try {
    okounkov_body({{{1, 0, 0, 0}, 1}, {{0, 1, 0, 0}, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionTooHigh);
  }
}

TEST(Volume, UnitSimplex) {
  EXPECT_EQ(volume(okounkov_body({{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}})), Rational(1, 2));
}

TEST(Volume, QuarticsPolygon) {
  const auto vals = basis_values(quartics_fixture().basis, MonomialOrder{});
  std::vector<oracle::QPoint> pts;
  for (const auto& gv : vals) pts.push_back({frac(gv.v[0], gv.level), frac(gv.v[1], gv.level)});
  EXPECT_EQ(oracle::hull_area(pts), Rational(6));
  EXPECT_EQ(volume(okounkov_body(vals)), Rational(6));
}

TEST(Volume, ThreeVariablePyramid) {
  const auto fx = ahs18_fixture();
  const Rational want = oracle::tetra_volume({Rational(1), Rational(0), Rational(0)},
                                             {Rational(2), Rational(0), Rational(0)},
                                             {Rational(0), Rational(2), Rational(0)},
                                             {Rational(1), Rational(0), Rational(1, 2)});
  EXPECT_EQ(want, Rational(1, 6));
  EXPECT_EQ(volume(okounkov_body(basis_values(fx.basis, MonomialOrder{}))), want);
}

TEST(Volume, MatchesMonteCarloOnRandomBodies) {
  CounterRng rng(17, 0);
  for (int t = 0; t < 5; ++t) {
    GradedValueSet vals;
    for (int k = 0; k < 9; ++k) {
      vals.push_back({{static_cast<int>(rng.uniform_int(0, 6)), static_cast<int>(rng.uniform_int(0, 6)),
                       static_cast<int>(rng.uniform_int(0, 6))},
                      1});
    }
    const auto body = okounkov_body(vals);
    if (body.dim < 3) continue;
    // Hit-or-miss in the bounding box, with membership via facet planes
    // against the vertex centroid.
    std::vector<std::array<double, 3>> v;
    for (const auto& p : body.vertices) v.push_back({p[0].get_d(), p[1].get_d(), p[2].get_d()});
    std::array<double, 3> lo{1e9, 1e9, 1e9}, hi{-1e9, -1e9, -1e9}, c{0, 0, 0};
    for (const auto& p : v) {
      for (int i = 0; i < 3; ++i) {
        lo[i] = std::min(lo[i], p[i]);
        hi[i] = std::max(hi[i], p[i]);
        c[i] += p[i] / v.size();
      }
    }
    struct Plane {
      std::array<double, 3> nrm;
      double off;
    };
    std::vector<Plane> planes;
    for (const auto& f : body.facets) {
      const auto& a = v[f[0]];
      const auto& b = v[f[1]];
      const auto& d = v[f[2]];
      std::array<double, 3> u{b[0] - a[0], b[1] - a[1], b[2] - a[2]}, w{d[0] - a[0], d[1] - a[1], d[2] - a[2]};
      std::array<double, 3> nrm{u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2], u[0] * w[1] - u[1] * w[0]};
      double off = nrm[0] * a[0] + nrm[1] * a[1] + nrm[2] * a[2];
      if (nrm[0] * c[0] + nrm[1] * c[1] + nrm[2] * c[2] > off) {
        for (auto& x : nrm) x = -x;
        off = -off;
      }
      planes.push_back({nrm, off});
    }
    const int samples = 400000;
    int inside = 0;
    for (int s = 0; s < samples; ++s) {
      std::array<double, 3> p;
      for (int i = 0; i < 3; ++i) p[i] = rng.uniform(lo[i], hi[i]);
      bool in = true;
      for (const auto& pl : planes) {
        if (pl.nrm[0] * p[0] + pl.nrm[1] * p[1] + pl.nrm[2] * p[2] > pl.off + 1e-12) {
          in = false;
          break;
        }
      }
      inside += in;
    }
    const double box = (hi[0] - lo[0]) * (hi[1] - lo[1]) * (hi[2] - lo[2]);
    const double est = box * inside / samples;
    EXPECT_NEAR(est, volume(body).get_d(), 0.01 * volume(body).get_d()) << "trial " << t;
  }
}

TEST(LatticeIndex, SmallCases) {
  EXPECT_EQ(lattice_index({{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}}), BigInt(1));
  const std::vector<std::vector<long>> diffs{{2, 0}, {0, 2}, {2, -2}};
  EXPECT_EQ(oracle::maximal_minor_gcd(diffs), BigInt(4));
  EXPECT_EQ(lattice_index({{{2, 0}, 1}, {{0, 2}, 1}, {{0, 0}, 1}}), oracle::maximal_minor_gcd(diffs));
  EXPECT_EQ(lattice_index(basis_values(ahs18_fixture().basis, MonomialOrder{})), BigInt(1));
}

TEST(LatticeIndex, RankDeficient) {
  // {t z1, t z2}: same-level differences only span the line (1, -1).
  try {
    lattice_index({{{1, 0}, 1}, {{0, 1}, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RankDeficient);
  }
}

TEST(RootCount, Quartics) {
  const auto rep = root_count(input_of(quartics_fixture().basis, 1, 6));
  EXPECT_EQ(rep.volume, Rational(6));
  EXPECT_EQ(rep.index, BigInt(1));
  EXPECT_EQ(rep.d_l, BigInt(12));
  EXPECT_LE(rep.d_l, BigInt(16));  // Bezout bound of the squared-up pair
}

TEST(RootCount, ThreeVariableExample) {
  const auto fx = ahs18_fixture();
  const auto rep = root_count(input_of(fx.basis, fx.deg_psi));
  EXPECT_EQ(rep.volume, Rational(1, 6));
  EXPECT_EQ(rep.index, BigInt(1));
  EXPECT_EQ(rep.d_l, BigInt(2));
}

TEST(RootCount, GeneralLines) {
  // span{1, z1, z2}: two generic lines meet once.
  const auto in = input_of({{detail::constant(2, 1), 1}, {var(2, 0), 1}, {var(2, 1), 1}});
  EXPECT_EQ(d_L(in), BigInt(1));
}

TEST(RootCount, BezoutCrossCheck) {
  auto in = input_of(quartics_fixture().basis, 1, 6);
  in.bezout = 16;
  EXPECT_EQ(d_L(in), BigInt(12));
  in.bezout = 4;
  try {
    d_L(in);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InconsistentInput);
  }
}

TEST(RootCount, RefusesUnverifiedBasis) {
  const auto fx = quartics_fixture();
  std::vector<GradedElement> basis;
  for (const auto& b : fx.basis) {
    if (b.level != 2) basis.push_back(b);
  }
  try {
    d_L(input_of(basis, 1, 6));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionFailed);
  }
}
