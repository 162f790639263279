#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "bcf/eval.hpp"
#include "bcf/gragg1d.hpp"
#include "oracles.hpp"

using bcf::Rational;

namespace {

std::vector<Rational> arctan_coefficients(int M) {
  std::vector<Rational> c;
  for (int m = 1; m <= M; ++m) c.push_back(m % 2 == 0 ? Rational(0) : Rational((m / 2) % 2 == 0 ? 1 : -1, m));
  return c;
}

}  // namespace

TEST(Gragg, ArctanElements) {
  const auto ex = bcf::gragg_expand(arctan_coefficients(10));
  ASSERT_TRUE(ex.ok());
  ASSERT_EQ(ex.fraction.size(), 5u);
  const std::vector<Rational> p{1, Rational(-1, 3), Rational(-4, 15), Rational(-9, 35), Rational(-16, 63)};
  for (std::size_t n = 0; n < 5; ++n) {
    EXPECT_EQ(ex.fraction.pairs[n].p, p[n]) << n;
    EXPECT_EQ(ex.fraction.pairs[n].q, 0) << n;
  }
}

TEST(Gragg, TraceBoundaryValues) {
  const auto ex = bcf::gragg_expand(arctan_coefficients(6));
  EXPECT_EQ(ex.trace.sigma(-1), 1);
  EXPECT_EQ(ex.trace.tau(-1), 0);
  EXPECT_EQ(ex.trace.B(0, 0), 1);
  EXPECT_EQ(ex.trace.B(-1, 0), 0);
  EXPECT_EQ(ex.trace.B(2, 5), 0);
  EXPECT_EQ(ex.trace.max_index(), 2);
  EXPECT_THROW(ex.trace.sigma(3), std::out_of_range);
}

TEST(Gragg, GeometricSeriesDegeneratesAtSecondStep) {
  const std::vector<Rational> c(6, Rational(1));
  const auto ex = bcf::gragg_expand(c);
  ASSERT_FALSE(ex.ok());
  EXPECT_EQ(ex.failure->kind, bcf::GraggFailure::Kind::DegenerateSigma);
  EXPECT_EQ(ex.failure->hankel_order(), 2);
  ASSERT_EQ(ex.fraction.size(), 1u);
  EXPECT_EQ(ex.fraction.pairs[0].p, 1);
  EXPECT_EQ(ex.fraction.pairs[0].q, -1);
  EXPECT_EQ(bcf::hankel_det(c, 2), 0);
}

TEST(Gragg, LeadingZeroIsReported) {
  const std::vector<Rational> c{0, 1, 2, 3};
  const auto ex = bcf::gragg_expand(c);
  ASSERT_FALSE(ex.ok());
  EXPECT_EQ(ex.failure->kind, bcf::GraggFailure::Kind::LeadingZero);
  EXPECT_EQ(ex.failure->hankel_order(), 1);
  EXPECT_TRUE(ex.fraction.pairs.empty());
}

TEST(Gragg, OddLengthUsesFloorHalf) {
  const auto ex = bcf::gragg_expand(arctan_coefficients(7));
  EXPECT_EQ(ex.fraction.size(), 3u);
  EXPECT_TRUE(bcf::gragg_expand(std::vector<Rational>{}).ok());
}

TEST(Gragg, HankelDeterminants) {
  const std::vector<Rational> c{1, 2, 3, 5, 8};
  EXPECT_EQ(bcf::hankel_det(c, 1), 1);
  EXPECT_EQ(bcf::hankel_det(c, 2), Rational(1 * 3 - 2 * 2));
  // [[1,2,3],[2,3,5],[3,5,8]]
  EXPECT_EQ(bcf::hankel_det(c, 3), Rational(0));
  EXPECT_THROW(bcf::hankel_det(c, 4), std::invalid_argument);
  const std::vector<Rational> pivot{0, 1, 0};
  EXPECT_EQ(bcf::hankel_det(pivot, 2), -1);
}

TEST(Gragg, RecoversRandomOneVariableFractions) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = oracle::random_fraction(rng, 1, 4);
    const auto s = oracle::taylor(f, 4, 8);
    std::vector<Rational> c;
    for (int m = 1; m <= 8; ++m) c.push_back(s.coefficient(bcf::MultiIndex{m}));
    const auto ex = bcf::gragg_expand(c);
    ASSERT_TRUE(ex.ok()) << trial;
    for (int n = 1; n <= 4; ++n) {
      const auto& el = f.at(bcf::MultiIndex{n});
      EXPECT_EQ(ex.fraction.pairs[static_cast<std::size_t>(n - 1)], el) << trial << " level " << n;
    }
  }
}

TEST(Gragg, SigmaVanishesExactlyWithHankel) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Rational> c;
    for (int i = 0; i < 8; ++i) c.push_back(Rational(d(rng)));
    const auto ex = bcf::gragg_expand(c);
    int first_zero = 0;
    for (int m = 1; m <= 4 && !first_zero; ++m)
      if (bcf::hankel_det(c, m) == 0) first_zero = m;
    if (ex.ok())
      EXPECT_EQ(first_zero, 0);
    else
      EXPECT_EQ(ex.failure->hankel_order(), first_zero);
  }
}

TEST(EvalCf1d, MatchesDirectFormulaAndReportsPoles) {
  bcf::ContinuedFraction1D f{{{Rational(1), Rational(0)}, {Rational(-1, 3), Rational(0)}}};
  // z / (1 + z^2/3)
  const double z = 0.7;
  EXPECT_NEAR(bcf::eval_cf_1d<double>(f, z, 2).value(), z / (1 + z * z / 3), 1e-15);
  EXPECT_EQ(bcf::eval_cf_1d<Rational>(f, Rational(1, 2), 2).value(), Rational(6, 13));
  EXPECT_EQ(bcf::eval_cf_1d<double>(f, z, 0).value(), 0.0);
  bcf::ContinuedFraction1D g{{{Rational(1), Rational(1)}}};
  const auto pole = bcf::eval_cf_1d<Rational>(g, Rational(-1), 1);
  ASSERT_FALSE(pole.has_value());
  EXPECT_EQ(pole.pole().branch, bcf::MultiIndex{1});
  EXPECT_FALSE(bcf::eval_cf_1d<double>(g, -1.0, 1).has_value());
  EXPECT_THROW(bcf::eval_cf_1d<double>(g, 0.5, 2), std::invalid_argument);
}

TEST(EvalCf1d, AgreesWithBranchedEvaluatorInOneVariable) {
  std::mt19937_64 rng(3);
  const auto f = oracle::random_fraction(rng, 1, 5);
  bcf::ContinuedFraction1D g;
  for (int n = 1; n <= 5; ++n) g.pairs.push_back(f.at(bcf::MultiIndex{n}));
  for (Rational z : {Rational(1, 7), Rational(-2, 9), Rational(3, 11)}) {
    auto a = bcf::eval_cf_1d<Rational>(g, z, 5);
    auto b = bcf::eval_approximant<Rational>(f, std::vector<Rational>{z}, 5);
    if (a.has_value() && b.has_value()) EXPECT_EQ(a.value(), b.value());
  }
}
