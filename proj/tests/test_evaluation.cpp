#include "oracles.hpp"

#include <qseries/convergence.hpp>
#include <qseries/error.hpp>
#include <qseries/evaluation.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace qseries {
namespace {

using Q = ExactRational;

TEST(ClosedFormBranch, Basics) {
  EXPECT_EQ(closed_form_branch({Q(3), Q(-2)}, 0.0), 0.0);
  EXPECT_EQ(closed_form_branch({Q(1), Q(0)}, 0.3), 0.3);
  const double u = closed_form_branch({Q(1), Q(-1)}, 0.4);
  EXPECT_NEAR(u, 0.35078105935821219, 1e-15);
  EXPECT_LT(std::fabs(-0.4 * u * u - u + 0.4), 1e-12);
}

TEST(ClosedFormBranch, MatchesNewtonOracle) {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> frac(-2.0, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    const Q a = testing::random_small_rational(rng);
    Q b = testing::random_small_rational(rng);
    if (sgn(a) == sgn(b)) b = -b;  // AB < 0: no branch point on the real line
    const QuadraticParams p{a, b};
    const double w = frac(rng) * radius_closed_form(p);
    const double u = closed_form_branch(p, w);
    const double A = p.a_double();
    const double B = p.b_double();
    EXPECT_LT(std::fabs(B * w * u * u - u + A * w), 1e-12 * (1 + std::fabs(u)));
    const long double ref = testing::newton_branch(A, B, w);
    EXPECT_NEAR(u, static_cast<double>(ref), 1e-13 * (1 + std::fabs(u)));
  }
}

TEST(ClosedFormBranch, StableNearZero) {
  for (const QuadraticParams& p : {QuadraticParams{Q(1), Q(-1)}, QuadraticParams{Q(-7, 3), Q(5)},
                                   QuadraticParams{Q(2), Q(3)}}) {
    EXPECT_LT(std::fabs(closed_form_branch(p, 1e-8) / 1e-8 - p.a_double()), 1e-6);
  }
}

TEST(ClosedFormBranch, ComplexBranchThrows) {
  const QuadraticParams p{Q(1), Q(1)};
  EXPECT_DOUBLE_EQ(branch_point(p), 0.5);
  EXPECT_NO_THROW(closed_form_branch(p, 0.5));
  EXPECT_THROW(closed_form_branch(p, 0.6), DomainError);
  EXPECT_THROW(closed_form_branch(p, -0.6), DomainError);
  EXPECT_TRUE(std::isinf(branch_point({Q(1), Q(-1)})));
  try {
    closed_form_branch(p, 0.6);
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("branch point 0.5"), std::string::npos) << e.what();
  }
}

TEST(CompareSeriesToClosed, InsideRadius) {
  const auto r1 = compare_series_to_closed({Q(1), Q(-1)}, 0.25, 81);
  EXPECT_LT(r1.abs_error, 1e-10);
  EXPECT_TRUE(r1.inside_radius);
  EXPECT_EQ(r1.order_used, 81u);
  EXPECT_EQ(r1.abs_error, std::fabs(r1.series_value - r1.closed_value));

  const auto r2 = compare_series_to_closed({Q(2), Q(-3, 2)}, 0.14, 81);
  EXPECT_LT(r2.abs_error, 1e-10);
  EXPECT_TRUE(r2.inside_radius);
}

TEST(CompareSeriesToClosed, AtZero) {
  const auto r = compare_series_to_closed({Q(1), Q(-1)}, 0.0, 17);
  EXPECT_EQ(r.series_value, 0.0);
  EXPECT_EQ(r.closed_value, 0.0);
  EXPECT_EQ(r.abs_error, 0.0);
}

TEST(CompareSeriesToClosed, OutsideRadiusStillReports) {
  const auto r = compare_series_to_closed({Q(1), Q(-1)}, 0.75, 41);
  EXPECT_FALSE(r.inside_radius);
  EXPECT_TRUE(std::isfinite(r.closed_value));
  EXPECT_GT(r.abs_error, 1.0);
}

TEST(CompareSeriesToClosed, ErrorShrinksWithOrder) {
  // w = r/2 with (A, B) = (1, -1), at orders 21, 41, 81.
  const QuadraticParams p{Q(1), Q(-1)};
  const double e21 = compare_series_to_closed(p, 0.25, 21).abs_error;
  const double e41 = compare_series_to_closed(p, 0.25, 41).abs_error;
  const double e81 = compare_series_to_closed(p, 0.25, 81).abs_error;
  EXPECT_GT(e21, e41);
  EXPECT_GE(e41, e81);
}

TEST(CompareSeriesToClosed, PropagatesDomainError) {
  EXPECT_THROW(compare_series_to_closed({Q(1), Q(1)}, 0.6, 5), DomainError);
}

}  // namespace
}  // namespace qseries
