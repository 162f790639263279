#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "bcf/bcf.hpp"
#include "oracles.hpp"

using bcf::MultiIndex;
using bcf::Rational;

namespace {

const bcf::AFraction& arctan_fraction() {
  static const bcf::AFraction f = bcf::build_afraction(bcf::generate_arctan2d_series(12), 6).fraction();
  return f;
}

}  // namespace

TEST(Eval, FirstApproximantsByHand) {
  const auto& f = arctan_fraction();
  const double z1 = 0.3, z2 = -0.4;
  // f_1 = z1 + z2
  EXPECT_NEAR(bcf::eval_approximant<double>(f, {z1, z2}, 1).value(), z1 + z2, 1e-15);
  // f_2 = z1 / (1 + z1^2/3) + z2 / (1 + z2 z1 / 1 + z2^2/3)
  const double f2 = z1 / (1 + z1 * z1 / 3) + z2 / (1 + z2 * z1 + z2 * z2 / 3);
  EXPECT_NEAR(bcf::eval_approximant<double>(f, {z1, z2}, 2).value(), f2, 1e-15);
  EXPECT_EQ(bcf::eval_approximant<double>(f, {z1, z2}, 0).value(), 0.0);
}

TEST(Eval, ExactAndFloatAgree) {
  const auto& f = arctan_fraction();
  for (const auto& [a, b] : {std::pair{Rational(1, 5), Rational(3, 10)}, {Rational(-4, 5), Rational(-7, 10)},
                             {Rational(9, 10), Rational(9, 10)}}) {
    for (int n = 1; n <= 6; ++n) {
      const Rational exact = bcf::eval_approximant<Rational>(f, {a, b}, n).value();
      const double x = bcf::eval_approximant<double>(f, {a.get_d(), b.get_d()}, n).value();
      EXPECT_NEAR(x, exact.get_d(), 1e-10 * std::fabs(exact.get_d())) << n;
    }
  }
}

TEST(Eval, AFormAndJFormAgreeUnderInversion) {
  const auto& f = arctan_fraction();
  const auto j = bcf::to_jfraction(f);
  const Rational w1(7, 3), w2(-5, 2);
  for (int n = 1; n <= 6; ++n) {
    const Rational a = bcf::eval_approximant<Rational>(f, {1 / w1, 1 / w2}, n).value();
    const Rational b = bcf::eval_j_approximant<Rational>(j, {w1, w2}, n).value();
    EXPECT_EQ(a, b) << n;
  }
  EXPECT_THROW(bcf::eval_j_approximant<double>(j, {0.0, 1.0}, 2), std::invalid_argument);
}

TEST(Eval, ArgumentChecks) {
  const auto& f = arctan_fraction();
  EXPECT_THROW(bcf::eval_approximant<double>(f, {0.1}, 2), std::invalid_argument);
  EXPECT_THROW(bcf::eval_approximant<double>(f, {0.1, 0.2}, 7), std::invalid_argument);
}

TEST(Eval, PoleReportsBranch) {
  bcf::AFraction f(2, 2);
  f.set({1, 0}, {Rational(1), Rational(1)});
  f.set({0, 1}, {Rational(1), Rational(0)});
  const auto v = bcf::eval_approximant<Rational>(f, {Rational(-1), Rational(1)}, 1);
  ASSERT_FALSE(v.has_value());
  EXPECT_EQ(v.pole().branch, (MultiIndex{1, 0}));
  EXPECT_THROW(v.value(), std::runtime_error);
  const auto d = bcf::eval_approximant<double>(f, {-1.0 + 1e-16, 1.0}, 1);
  EXPECT_FALSE(d.has_value());
}

TEST(Eval, AbsentBranchesContributeNothing) {
  bcf::AFraction f(2, 2);
  f.set({1, 0}, {Rational(2), Rational(0)});
  f.set({2, 0}, {Rational(1), Rational(0)});
  // 2 z1 / (1 - z1^2)
  const double z = 0.25;
  EXPECT_NEAR(bcf::eval_approximant<double>(f, {z, 0.7}, 2).value(), 2 * z / (1 - z * z), 1e-15);
}

TEST(Expand, MatchesIndependentTaylorSeries) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t dim = 1 + trial % 3;
    const auto f = oracle::random_fraction(rng, dim, 3);
    for (int n = 0; n <= 3; ++n) EXPECT_EQ(bcf::expand_approximant(f, n, 7), oracle::taylor(f, n, 7)) << trial;
  }
}

TEST(Expand, CorrespondenceThroughTwiceTheOrder) {
  const auto L = bcf::generate_arctan2d_series(12);
  const auto& f = arctan_fraction();
  for (int n = 1; n <= 6; ++n)
    EXPECT_TRUE(bcf::agreement_order(bcf::expand_approximant(f, n, 2 * n), L.truncated(2 * n)).is_infinite()) << n;
}

TEST(Expand, GenericAgreementStopsAtTwiceTheOrderPlusOne) {
  std::mt19937_64 rng(43);
  const auto f = oracle::random_fraction(rng, 2, 4);
  const auto L = oracle::taylor(f, 4, 8);
  for (int n = 1; n <= 3; ++n)
    EXPECT_EQ(bcf::agreement_order(bcf::expand_approximant(f, n, 8), L), bcf::Valuation::finite(2 * n + 1)) << n;
}

TEST(Expand, JFormUsesTheSameElements) {
  const auto a = bcf::build_afraction(bcf::generate_trigamma2d_laurent(8), 4).fraction();
  EXPECT_EQ(bcf::expand_approximant(bcf::to_jfraction(a), 4, 8), bcf::expand_approximant(a, 4, 8));
}

TEST(Fork, HoldsForArctanAtHalf) {
  const auto r = bcf::fork_check(arctan_fraction(), {0.5, 0.5}, 6);
  EXPECT_EQ(r.status, bcf::ForkReport::Status::Holds);
  EXPECT_EQ(r.values.size(), 6u);
  EXPECT_TRUE(r.violations.empty());
}

TEST(Fork, SingleLevelHoldsTrivially) {
  const auto r = bcf::fork_check(arctan_fraction().truncated(1), {0.5, 0.5}, 1);
  EXPECT_EQ(r.status, bcf::ForkReport::Status::Holds);
}

TEST(Fork, PoleMakesItInapplicable) {
  bcf::AFraction f(1, 2);
  f.set({1}, {Rational(1), Rational(1)});
  f.set({2}, {Rational(1), Rational(0)});
  const auto r = bcf::fork_check(f, {-1.0}, 2);
  EXPECT_EQ(r.status, bcf::ForkReport::Status::Inapplicable);
  ASSERT_TRUE(r.pole.has_value());
  EXPECT_EQ(r.pole->branch, MultiIndex{1});
  EXPECT_EQ(r.pole_order, 1);
}

TEST(Fork, DetectsBrokenOrdering) {
  // z / (1 + z^2 / (1 - z^2)) has f_3 < f_2.
  bcf::AFraction f(1, 3);
  f.set({1}, {Rational(1), Rational(0)});
  f.set({2}, {Rational(-1), Rational(0)});
  f.set({3}, {Rational(1), Rational(0)});
  const auto r = bcf::fork_check(f, {0.5}, 3);
  EXPECT_EQ(r.status, bcf::ForkReport::Status::Violated);
  EXPECT_FALSE(r.violations.empty());
}
