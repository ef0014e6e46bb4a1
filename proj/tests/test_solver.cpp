#include <gtest/gtest.h>

#include "oracles.hpp"
#include "overcert/certify.hpp"
#include "overcert/fixtures.hpp"
#include "overcert/solver.hpp"

using namespace overcert;
using detail::poly;

namespace {

PolySystem<Complex> square_minus_one() {
  return convert_system<Complex>(ExactSystem(1, {poly(1, {{1, {2}}, {-1, {0}}})}));
}

PolySystem<Complex> quartics_g() { return convert_system<Complex>(square_up(quartics_fixture().f, 42).g); }

SolveConfig config(int starts, double radius, std::uint64_t seed) {
  SolveConfig cfg;
  cfg.starts = starts;
  cfg.box_radius = radius;
  cfg.seed = seed;
  return cfg;
}

void expect_well_formed(const std::vector<Candidate<Complex>>& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    EXPECT_TRUE(s[i].certified());
    for (std::size_t j = i + 1; j < s.size(); ++j) EXPECT_TRUE(distinct(s[i], s[j]));
    if (i + 1 < s.size()) EXPECT_FALSE(detail::lex_less_rounded(s[i + 1].point, s[i].point));
  }
}

}  // namespace

TEST(Multistart, SquareMinusOne) {
  const auto s = multistart_solve(square_minus_one(), config(50, 2, 0));
  ASSERT_EQ(s.size(), 2u);
  EXPECT_NEAR(std::abs(s[0].point[0] - Complex(-1.0)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(s[1].point[0] - Complex(1.0)), 0.0, 1e-12);
  expect_well_formed(s);
}

TEST(Multistart, SquaredUpQuartics) {
  const auto s = multistart_solve(quartics_g(), config(2000, 1000, 42));
  EXPECT_EQ(s.size(), 16u);
  expect_well_formed(s);
}

TEST(Multistart, SchubertThreeHasCatalanManyRoots) {
  const auto inst = schubert_fixture(3, 2);
  const auto s = multistart_solve(convert_system<Complex>(inst.g), config(2000, 100, 2));
  EXPECT_EQ(s.size(), catalan(3));
  expect_well_formed(s);
}

TEST(Multistart, DeterministicAcrossWorkerCounts) {
  auto cfg = config(400, 1000, 9);
  const auto a = multistart_solve(quartics_g(), cfg);
  cfg.jobs = 3;
  const auto b = multistart_solve(quartics_g(), cfg);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].point, b[i].point);
  cfg.dedup = false;
  const auto raw = multistart_solve(quartics_g(), cfg);
  EXPECT_GE(raw.size(), a.size());
}

TEST(Multistart, RejectsBadConfig) {
  for (const auto& cfg : {config(0, 1, 0), config(10, 0, 0), config(10, -2, 0)}) {
    try {
      multistart_solve(square_minus_one(), cfg);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::PreconditionFailed);
    }
  }
}

TEST(Multistart, RootlessSystemGivesEmptyList) {
  // z1 - z2 and z1 - z2 + 1 never meet.
  const auto g = convert_system<Complex>(
      ExactSystem(2, {poly(2, {{1, {1, 0}}, {-1, {0, 1}}}), poly(2, {{1, {1, 0}}, {-1, {0, 1}}, {1, {0, 0}}})}));
  EXPECT_TRUE(multistart_solve(g, config(20, 3, 0)).empty());
}

TEST(CountReached, KnownCounts) {
  EXPECT_TRUE(count_reached(square_minus_one(), config(50, 2, 0), 2));
  EXPECT_FALSE(count_reached(square_minus_one(), config(50, 2, 0), 3));
  EXPECT_TRUE(count_reached(quartics_g(), config(2000, 1000, 42), 16));
  EXPECT_FALSE(count_reached(quartics_g(), config(2000, 1000, 42), 17));
}

TEST(Separate, SixteenQuarticCandidatesStaySeparate) {
  const auto g = quartics_g();
  const auto s = multistart_solve(g, config(2000, 1000, 42));
  const auto out = separate_all(g, s);
  EXPECT_EQ(out.size(), 16u);
}
