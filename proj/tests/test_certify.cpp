#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "overcert/certify.hpp"
#include "overcert/fixtures.hpp"
#include "overcert/solver.hpp"

using namespace overcert;
using detail::poly;
using oracle::frac;

namespace {

GaussianRational q(long v) { return GaussianRational(v); }
GaussianRational q(long a, long b) { return GaussianRational(frac(a, b)); }

// Univariate monic quadric with roots a and b.
ExactPolynomial roots(long a, long b) { return poly(1, {{1, {2}}, {-(a + b), {1}}, {a * b, {0}}}); }

std::vector<Candidate<GaussianRational>> certified_at(const ExactSystem& g, const std::vector<ExactPoint>& pts) {
  std::vector<Candidate<GaussianRational>> out;
  for (const auto& p : pts) {
    out.push_back(make_candidate(g, p));
    EXPECT_TRUE(out.back().certified());
  }
  return out;
}

double dist(const Point<Complex>& a, const ExactPoint& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - scalar_traits<GaussianRational>::to_complex(b[i]));
  return std::sqrt(s);
}

}  // namespace

TEST(SquareUp, IdentityBlockSelectsSubsystem) {
  const auto fx = quartics_fixture();
  RationalMatrix a(2, std::vector<Rational>(11, Rational(0)));
  a[0][0] = 1;
  a[1][1] = 1;
  const auto r = square_up(fx.f, a);
  EXPECT_EQ(r.g.polys[0], fx.f.polys[0]);
  EXPECT_EQ(r.g.polys[1], fx.f.polys[1]);
}

TEST(SquareUp, SeededQuartics) {
  const auto fx = quartics_fixture();
  const auto r = square_up(fx.f, 42);
  ASSERT_EQ(r.g.size(), 2u);
  EXPECT_TRUE(r.g.is_square());
  for (const auto& p : r.g.polys) EXPECT_EQ(p.degree(), 4);
  // V(f) is contained in V(g).
  for (const auto& z : fx.solutions) {
    for (const auto& p : r.g.polys) EXPECT_EQ(eval(p, z), q(0));
  }
  for (const auto& row : r.a) {
    for (const auto& x : row) {
      EXPECT_LE(abs(x.get_num()), 999);
      EXPECT_LE(x.get_den(), 999);
    }
  }
  EXPECT_EQ(square_up(fx.f, 42).a, r.a);
  EXPECT_NE(square_up(fx.f, 43).a, r.a);
}

TEST(SquareUp, RankDeficientMatrix) {
  const auto fx = quartics_fixture();
  RationalMatrix a(2, std::vector<Rational>(11, Rational(1)));
  try {
    square_up(fx.f, a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RankDeficientMatrix);
  }
}

TEST(AlgInd, ZeroExcessCertifiesEverything) {
  const ExactSystem g(1, {roots(1, -1)});
  const ExactSystem f(1, {roots(1, -1), poly(1, {{1, {3}}, {-1, {1}}})});  // z^3 - z vanishes at +-1
  const auto s = certified_at(g, {{q(101, 100)}, {q(-101, 100)}});
  const auto out = alg_ind(f, g, 0, s);
  EXPECT_TRUE(out.count_matched);
  EXPECT_EQ(out.certified_count(), 2u);
}

TEST(AlgInd, SplitsSolutionsFromNonsolutions) {
  const ExactSystem g(1, {roots(1, -1)});
  const ExactSystem f(1, {roots(1, -1), poly(1, {{1, {1}}, {-1, {0}}})});
  const auto s = certified_at(g, {{q(-101, 100)}, {q(101, 100)}});
  const auto out = alg_ind(f, g, 1, s);
  ASSERT_TRUE(out.count_matched);
  EXPECT_EQ(out.classified[0].label, Label::CertifiedNonsolution);
  EXPECT_EQ(out.classified[0].witness, std::optional<std::size_t>(1));
  EXPECT_EQ(out.classified[1].label, Label::CertifiedSolutionOfF);
}

TEST(AlgInd, TooLargeExcessCertifiesNothing) {
  const ExactSystem g(1, {roots(1, -1)});
  const ExactSystem f(1, {roots(1, -1), poly(1, {{1, {1}}, {-1, {0}}})});
  const auto out = alg_ind(f, g, 2, certified_at(g, {{q(-101, 100)}, {q(101, 100)}}), 4);
  EXPECT_FALSE(out.count_matched);
  EXPECT_EQ(out.certified_count(), 0u);
  // The rejected one keeps its witness; nothing is promoted.
  EXPECT_EQ(out.classified[0].label, Label::CertifiedNonsolution);
  EXPECT_EQ(out.classified[1].label, Label::Undetermined);
}

TEST(AlgInd, RequiresDistinctInput) {
  const ExactSystem g(1, {roots(1, -1)});
  const auto c = make_candidate(g, ExactPoint{q(101, 100)});
  try {
    alg_ind(g, g, 0, std::vector{c, c});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InputNotDistinct);
  }
}

TEST(AlgInd, QuarticsMatchExactMembership) {
  const auto fx = quartics_fixture();
  const auto f = convert_system<Complex>(fx.f);
  const auto g = convert_system<Complex>(square_up(fx.f, 42).g);
  SolveConfig cfg;
  cfg.starts = 2000;
  cfg.box_radius = 1000;
  cfg.seed = 42;
  const auto s = multistart_solve(g, cfg);
  ASSERT_EQ(s.size(), 16u);
  const auto out = alg_ind(f, g, 12, s, 8);
  EXPECT_EQ(out.rejected, 12u);
  EXPECT_EQ(out.certified_count(), 4u);
  // Every known solution is exact; the certified points are exactly those near one.
  for (const auto& z : fx.solutions) {
    for (const auto& p : fx.f.polys) ASSERT_EQ(eval(p, z), q(0));
  }
  for (const auto& cc : out.classified) {
    double best = 1e300;
    for (const auto& z : fx.solutions) best = std::min(best, dist(cc.candidate.point, z));
    if (cc.label == Label::CertifiedSolutionOfF)
      EXPECT_LT(best, 1e-8);
    else
      EXPECT_GT(best, 1e-3);
  }
}

TEST(AlgSet, IdenticalSubsystemsCertifyOnlyTheFullSet) {
  const ExactSystem g(1, {roots(2, -3)});
  const auto s = certified_at(g, {{q(201, 100)}, {q(-301, 100)}});
  EXPECT_TRUE(alg_set(2, 2, g, g, s, s).certified);
  const auto r = alg_set(2, 1, g, g, s, s);
  EXPECT_FALSE(r.certified);
  EXPECT_FALSE(r.reason.empty());
}

TEST(AlgSet, UnrelatedSubsystemGivesEmptySet) {
  const ExactSystem g(1, {roots(1, -1)});
  const ExactSystem g2(1, {roots(2, -2)});
  const auto s = certified_at(g, {{q(101, 100)}, {q(-101, 100)}});
  const auto s2 = certified_at(g2, {{q(201, 100)}, {q(-201, 100)}});
  const auto r = alg_set(2, 0, g, g2, s, s2);
  EXPECT_TRUE(r.certified);
  EXPECT_TRUE(r.t.empty());
  // Brute force: every refined S' ball misses every S ball.
  for (const auto& c2 : r.refined) {
    for (const auto& c : s) EXPECT_TRUE(distinct(c, c2));
  }
  EXPECT_FALSE(alg_set(2, 1, g, g2, s, s2).certified);
}

TEST(AlgSet, SharedRootIsFound) {
  const ExactSystem g(1, {roots(1, 2)});
  const ExactSystem g2(1, {roots(1, -5)});
  const auto s = certified_at(g, {{q(1001, 1000)}, {q(1999, 1000)}});
  const auto s2 = certified_at(g2, {{q(999, 1000)}, {q(-5001, 1000)}});
  const auto r = alg_set(2, 1, g, g2, s, s2);
  ASSERT_TRUE(r.certified) << r.reason;
  EXPECT_EQ(r.t, std::vector<std::size_t>{0});
  // Cross-check: the refined S' point also certifies for g.
  EXPECT_TRUE(certify_square(g, r.refined[0].point).certified);
}

TEST(AlgSet, FailCases) {
  const ExactSystem g(1, {roots(1, -1)});
  const auto s = certified_at(g, {{q(101, 100)}, {q(-101, 100)}});
  const auto mismatch = alg_set(2, 1, g, g, s, std::vector{s[0]});
  EXPECT_FALSE(mismatch.certified);
  EXPECT_NE(mismatch.reason.find("expected 2"), std::string::npos);
  try {
    alg_set(2, 3, g, g, s, s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionFailed);
  }
}

TEST(Liaison, RationalNormalCurveSplit) {
  const auto fx = rnc_fixture();
  std::vector<ExactPoint> pts = fx.on_curve;
  pts.push_back(fx.on_line);
  const auto s = certified_at(fx.g, pts);
  const auto r = liaison_classify(fx.r, fx.g, fx.h, s);
  EXPECT_EQ(r.t, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(r.u, std::vector<std::size_t>{3});
  EXPECT_TRUE(r.undetermined.empty());
}

TEST(Liaison, RationalNormalCurveFromFloatCandidates) {
  const auto fx = rnc_fixture();
  const auto g = convert_system<Complex>(fx.g);
  std::vector<Polynomial<Complex>> h;
  for (const auto& p : fx.h) h.push_back(convert_polynomial<Complex>(p));
  std::vector<Candidate<Complex>> s;
  for (const auto& z : fx.on_curve) s.push_back(make_candidate(g, convert_point<Complex>(z)));
  s.push_back(make_candidate(g, Point<Complex>{-1.0 / 3, -1.0 / 3 + 1e-9, -1.0 / 3}));
  const auto r = liaison_classify(2, g, h, s);
  EXPECT_EQ(r.t.size(), 3u);
  EXPECT_EQ(r.u, std::vector<std::size_t>{3});
  EXPECT_EQ(r.t.size() + r.u.size() + r.undetermined.size(), s.size());
}

TEST(Liaison, SwappingInTheSameEquationsPutsEverythingOnY) {
  const auto fx = rnc_fixture();
  std::vector<ExactPoint> pts = fx.on_curve;
  pts.push_back(fx.on_line);
  const auto s = certified_at(fx.g, pts);
  const auto r = liaison_classify(2, fx.g, {fx.g.polys[0], fx.g.polys[1]}, s);
  EXPECT_EQ(r.u.size(), 4u);
  EXPECT_TRUE(r.t.empty());
}

TEST(Liaison, SingleBlockChainEqualsClassify) {
  const auto fx = rnc_fixture();
  std::vector<ExactPoint> pts = fx.on_curve;
  pts.push_back(fx.on_line);
  const auto s = certified_at(fx.g, pts);
  const std::vector<ExactPolynomial> h{fx.h[0], fx.h[1], fx.g.polys[2]};
  const auto a = liaison_classify(3, fx.g, h, s);
  const auto b = liaison_chain(LiaisonChainSpec<GaussianRational>{{0, 3}, fx.g, ExactSystem(3, h)}, s);
  EXPECT_EQ(a.t, b.t);
  EXPECT_EQ(a.u, b.u);
  EXPECT_EQ(a.undetermined, b.undetermined);
}

TEST(Liaison, ChainValidation) {
  const auto fx = rnc_fixture();
  const ExactSystem h(3, {fx.h[0], fx.h[1], fx.g.polys[2]});
  for (const auto& bp : std::vector<std::vector<std::size_t>>{{0, 2}, {1, 3}, {0, 2, 2, 3}, {0}}) {
    try {
      liaison_chain(LiaisonChainSpec<GaussianRational>{bp, fx.g, h}, {});
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::PreconditionFailed);
    }
  }
  try {
    liaison_classify(2, fx.g, {fx.h[0]}, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
}

class SchubertPipeline : public ::testing::TestWithParam<int> {};

TEST_P(SchubertPipeline, CountsMatchTheTable) {
  const int m = GetParam();
  const auto inst = schubert_fixture(m, 1);
  const auto g = convert_system<Complex>(inst.g);
  const auto f = convert_system<Complex>(inst.f);
  SolveConfig cfg;
  cfg.starts = 2000;
  cfg.box_radius = 100;
  cfg.seed = 1;
  const auto s = multistart_solve(g, cfg);
  ASSERT_EQ(s.size(), catalan(m));
  const auto ind = alg_ind(f, g, inst.d_ind, s, 16);
  EXPECT_EQ(ind.certified_count(), kostka(m));
  const auto chain = liaison_chain(LiaisonChainSpec<Complex>{inst.breakpoints, g, convert_system<Complex>(inst.h)}, s);
  EXPECT_EQ(chain.t.size(), kostka(m));
  EXPECT_TRUE(chain.undetermined.empty());
  std::vector<std::size_t> ind_t;
  for (const auto& cc : ind.classified) {
    if (cc.label == Label::CertifiedSolutionOfF) ind_t.push_back(cc.index);
  }
  EXPECT_EQ(chain.t, ind_t);
}

INSTANTIATE_TEST_SUITE_P(Small, SchubertPipeline, ::testing::Values(2, 3));
