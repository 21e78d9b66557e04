#include "knotconc/upsilon.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace knotconc;

namespace {

Rational R(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

PLFunction U(const char* expr) { return upsilon_of(parse_formula(expr)); }

}  // namespace

TEST(PLFunction, ArithmeticLaws) {
  const PLFunction f = U("T(2,3)");
  EXPECT_EQ(f + PLFunction(), f);
  const PLFunction neg = pl_scale(f, -1);
  for (const auto& t : oracle::grid(7)) EXPECT_EQ(neg(t), -f(t));
  EXPECT_EQ(pl_add(f, f), pl_scale(f, 2));
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_TRUE(pl_scale(f, 0).is_zero());
}

TEST(PLFunction, CanonicalFormDropsCollinearPoints) {
  const PLFunction f =
      PLFunction::from_points({{R(0), R(0)}, {R(1, 2), R(-1, 2)}, {R(1), R(-1)}, {R(2), R(0)}});
  EXPECT_EQ(f.breakpoints().size(), 3u);
  EXPECT_EQ(f, U("T(2,3)"));
  EXPECT_THROW(PLFunction::from_points({{R(0), R(0)}, {R(1), R(0)}}), std::invalid_argument);
  EXPECT_THROW(PLFunction::from_points({{R(0), R(0)}, {R(1), R(0)}, {R(1), R(1)}, {R(2), R(0)}}),
               std::invalid_argument);
  EXPECT_THROW(f(R(3)), std::out_of_range);
}

TEST(Upsilon, TrefoilTent) {
  const PLFunction f = upsilon_staircase(StaircaseParams({1, 1}));
  ASSERT_EQ(f.breakpoints().size(), 3u);
  EXPECT_EQ(f.breakpoints()[1].t, R(1));
  EXPECT_EQ(f(R(1)), R(-1));
  EXPECT_EQ(f.slope(0), R(-1));
  EXPECT_EQ(f.slope(1), R(1));
  EXPECT_EQ(render_pieces(f), (std::vector<std::string>{"0 → 1 : -t", "1 → 2 : t - 2"}));
}

TEST(Upsilon, T34) {
  const PLFunction f = upsilon_staircase(StaircaseParams({1, 2, 2, 1}));
  EXPECT_EQ(f(R(1)), R(-2));
  EXPECT_EQ(f.slope(0), R(-3));
}

TEST(Upsilon, VanishingCombinations) {
  EXPECT_TRUE(U("T(1,7)").is_zero());
  EXPECT_TRUE(U("T(3,7) - 2*T(3,4)").is_zero());
  EXPECT_TRUE(U("W(1)").is_zero());
  EXPECT_EQ(render_pieces(U("W(2)")), (std::vector<std::string>{"0 → 2 : 0"}));
}

TEST(UpsilonProperty, MatchesPointwiseMinimumOverGenerators) {
  for (std::int64_t p = 2; p <= 10; ++p) {
    for (std::int64_t q = p + 1; q <= 23; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const PLFunction f = upsilon_of(make_torus_knot(p, q));
      const auto steps = oracle::full_staircase(p, q);
      for (const auto& t : oracle::grid(2 * p * q)) {
        ASSERT_EQ(f(t), oracle::upsilon_at(steps, t)) << p << "," << q << " t=" << to_string(t);
      }
      // Breakpoints of a lower envelope are where the minimum changes; the
      // function is exact there too.
      for (const auto& bp : f.breakpoints()) ASSERT_EQ(bp.v, oracle::upsilon_at(steps, bp.t));
    }
  }
}

TEST(UpsilonProperty, ShapeOfTorusKnotUpsilon) {
  for (std::int64_t p = 2; p <= 9; ++p) {
    for (std::int64_t q = p + 1; q <= 20; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const PLFunction f = upsilon_of(make_torus_knot(p, q));
      EXPECT_EQ(f.slope(0), R(-oracle::genus(p, q)));
      for (const auto& t : oracle::grid(12)) EXPECT_EQ(f(t), f(2 - t));
      for (std::size_t k = 0; k + 1 < f.piece_count(); ++k) EXPECT_LT(f.slope(k), f.slope(k + 1));
    }
  }
}

TEST(UpsilonRecursion, Examples) {
  EXPECT_TRUE(check_upsilon_recursion(3, 1, 2).holds);
  EXPECT_TRUE(check_upsilon_recursion(5, 2, 0).holds);
  EXPECT_TRUE(check_upsilon_recursion(7, 3, 3).holds);
  EXPECT_THROW(check_upsilon_recursion(4, 2, 1), std::invalid_argument);
}

TEST(UpsilonRecursion, FailureIsReportedNotHidden) {
  const auto r = detail::compare_pl(U("T(2,5)"), U("T(2,3)"), "probe");
  EXPECT_FALSE(r.holds);
  EXPECT_NE(r.report.find("differ first at t="), std::string::npos);
}

TEST(UpsilonShift, Identities) {
  for (std::int64_t n = 0; n <= 5; ++n) EXPECT_TRUE(check_upsilon_shift(n).holds) << n;
  EXPECT_THROW(check_upsilon_shift(-1), std::invalid_argument);
}

TEST(UpsilonFamily, VanishesForAllIndices) {
  for (std::int64_t n = 0; n <= 5; ++n) EXPECT_TRUE(upsilon_of(family_W(n)).is_zero()) << n;
  EXPECT_FALSE(upsilon_of(family_J(1)).is_zero());
}

TEST(UpsilonSamples, CsvGrid) {
  const auto s = U("T(2,3)").samples(5);
  ASSERT_EQ(s.size(), 5u);
  EXPECT_DOUBLE_EQ(s[2].first, 1.0);
  EXPECT_DOUBLE_EQ(s[2].second, -1.0);
  EXPECT_THROW(U("T(2,3)").samples(1), std::invalid_argument);
}
