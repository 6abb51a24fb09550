#include "oracles.hpp"

#include <qseries/catalan.hpp>
#include <qseries/power_series.hpp>

#include <gtest/gtest.h>

#include <random>

namespace qseries {
namespace {

using Q = ExactRational;

template <typename L, typename R>
concept Addable = requires(const L& l, const R& r) { series_add(l, r); };

static_assert(Addable<ExactSeries, ExactSeries>);
static_assert(Addable<FloatSeries, FloatSeries>);
static_assert(!Addable<ExactSeries, FloatSeries>, "mixed scalar kinds must not combine");
static_assert(ExactSeries::kind == ScalarKind::exact_rational);
static_assert(FloatSeries::kind == ScalarKind::floating);

ExactSeries random_series(std::mt19937_64& rng, std::size_t order) {
  ExactSeries s(order);
  for (std::size_t k = 0; k <= order; ++k) s[k] = testing::random_small_rational(rng, false);
  return s;
}

TEST(TruncatedSeries, Construction) {
  const ExactSeries zero(4);
  EXPECT_EQ(zero.order(), 4u);
  EXPECT_EQ(zero.coeffs().size(), 5u);
  EXPECT_TRUE(zero.is_zero());
  EXPECT_THROW(ExactSeries(std::vector<Q>{}), std::invalid_argument);
  EXPECT_EQ((ExactSeries{1, 2, 3}).truncated(1), (ExactSeries{1, 2}));
  EXPECT_THROW((ExactSeries{1, 2}).truncated(3), std::invalid_argument);
}

TEST(SeriesAdd, Coefficientwise) {
  EXPECT_EQ(series_add(ExactSeries{1, 2}, ExactSeries{3, 4}), (ExactSeries{4, 6}));
  EXPECT_EQ(series_add(ExactSeries{1, 1, 1}, ExactSeries{0, 0}), (ExactSeries{1, 1}));
  const ExactSeries a{Q(1, 3), Q(-2), Q(5, 7)};
  EXPECT_EQ(series_add(a, ExactSeries(2)), a);
  EXPECT_EQ(series_add(FloatSeries{0.5, 1.0}, FloatSeries{0.25, 2.0}), (FloatSeries{0.75, 3.0}));
}

TEST(SeriesMul, CauchyProduct) {
  EXPECT_EQ(series_mul(ExactSeries{1, 1, 0}, ExactSeries{1, 1, 0}), (ExactSeries{1, 2, 1}));
  EXPECT_EQ(series_mul(ExactSeries{1, 1, 1}, ExactSeries{1, -1, 0}), (ExactSeries{1, 0, 0}));
  EXPECT_EQ(series_mul(ExactSeries{1, 1, 1, 1}, ExactSeries{1, 1}).order(), 1u);
}

TEST(SeriesMul, CatalanSquareShiftedReproducesCatalan) {
  const ExactSeries c = catalan_generating_series(6);
  ExactSeries one(6);
  one[0] = 1;
  EXPECT_EQ(series_add(one, series_shift_scale(series_mul(c, c), 1, Q(1))), c);
}

TEST(SeriesMul, CommutativeAndAssociative) {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t order = 1 + trial % 9;
    const ExactSeries a = random_series(rng, order);
    const ExactSeries b = random_series(rng, order + trial % 3);
    const ExactSeries c = random_series(rng, order + 1);
    EXPECT_EQ(series_mul(a, b), series_mul(b, a));
    EXPECT_EQ(series_mul(series_mul(a, b), c), series_mul(a, series_mul(b, c)));
    EXPECT_EQ(series_mul(a, series_add(b, c)), series_add(series_mul(a, b), series_mul(a, c)));
  }
}

TEST(SeriesShiftScale, Basics) {
  EXPECT_EQ(series_shift_scale(ExactSeries{1, 1, 0}, 1, Q(2)), (ExactSeries{0, 2, 2}));
  const ExactSeries a{Q(3), Q(-1, 2), Q(7)};
  EXPECT_EQ(series_shift_scale(a, 0, Q(1)), a);
  EXPECT_TRUE(series_shift_scale(a, 5, Q(1)).is_zero());
}

TEST(SeriesShiftScale, BuildsCatalanRightHandSide) {
  // C^2 has coefficients c_1, c_2, ...; placing its degrees 0..5 one step up
  // and adding 1 gives the right side of C = 1 + x C^2 at order 6.
  ExactSeries square_head(6);
  for (std::size_t n = 0; n <= 5; ++n) square_head[n] = Q(catalan_closed(n + 1));
  ExactSeries one(6);
  one[0] = 1;
  const ExactSeries rhs = series_add(one, series_shift_scale(square_head, 1, Q(1)));
  EXPECT_EQ(rhs, (ExactSeries{1, 1, 2, 5, 14, 42, 132}));
  EXPECT_EQ(rhs, catalan_generating_series(6));
}

TEST(SeriesEvaluate, HornerAndPartialSums) {
  const auto e = series_evaluate(ExactSeries{0, 1}, 0.5);
  EXPECT_DOUBLE_EQ(e.value, 0.5);
  EXPECT_EQ(e.partial_sums, (std::vector<double>{0.0, 0.5}));

  const auto z = series_evaluate(ExactSeries(5), 3.7);
  EXPECT_EQ(z.value, 0.0);
  EXPECT_EQ(z.partial_sums.size(), 6u);

  const auto f = series_evaluate(FloatSeries{1.0, 2.0, 3.0}, 2.0);
  EXPECT_DOUBLE_EQ(f.value, 17.0);
  EXPECT_EQ(f.partial_sums, (std::vector<double>{1.0, 5.0, 17.0}));
}

TEST(FixedPointSolve, CatalanAtOddDegrees) {
  EXPECT_EQ(fixed_point_solve(Q(1), Q(1), 7), (ExactSeries{0, 1, 0, 1, 0, 2, 0, 5}));
}

TEST(FixedPointSolve, ZeroWhenAIsZero) {
  EXPECT_TRUE(fixed_point_solve(Q(0), Q(5), 9).is_zero());
  EXPECT_EQ(fixed_point_solve(Q(0), Q(5), 9).order(), 9u);
}

TEST(FixedPointSolve, MatchesUndeterminedCoefficients) {
  // Hand iteration: Aw, then Aw + A^2 B w^3, then the w^5 term 2 A^3 B^2 = 36.
  EXPECT_EQ(fixed_point_solve(Q(2), Q(-3, 2), 5), (ExactSeries{0, 2, 0, -6, 0, 36}));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Q a = testing::random_small_rational(rng, false);
    const Q b = testing::random_small_rational(rng, false);
    const std::size_t order = 3 + 2 * trial;
    EXPECT_EQ(fixed_point_solve(a, b, order).coeffs(), testing::undetermined_coefficients(a, b, order))
        << a << " " << b;
  }
}

TEST(FixedPointSolve, EvenDegreesVanish) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const ExactSeries u = fixed_point_solve(testing::random_small_rational(rng, false),
                                            testing::random_small_rational(rng, false), 24);
    for (std::size_t k = 0; k <= 24; k += 2) EXPECT_EQ(u[k], 0) << k;
  }
}

TEST(FixedPointSolve, OrderZeroAndOne) {
  EXPECT_EQ(fixed_point_solve(Q(3), Q(4), 0), (ExactSeries{0}));
  EXPECT_EQ(fixed_point_solve(Q(3), Q(4), 1), (ExactSeries{0, 3}));
}

TEST(FixedPointSolve, FloatScalars) {
  const FloatSeries u = fixed_point_solve(2.0, -1.5, 5);
  EXPECT_EQ(u, (FloatSeries{0.0, 2.0, 0.0, -6.0, 0.0, 36.0}));
}

}  // namespace
}  // namespace qseries
