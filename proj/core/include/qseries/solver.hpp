#pragma once

#include <qseries/exact.hpp>
#include <qseries/power_series.hpp>

#include <cstddef>
#include <optional>

namespace qseries {

/// Coefficients (A, B) of u = (A + B u^2) w. Any finite real input is held as an
/// exact rational, so the same parameters drive both exact and float paths.
struct QuadraticParams {
  ExactRational a;
  ExactRational b;

  static QuadraticParams from_double(double a, double b);

  bool a_zero() const { return a == 0; }
  bool b_zero() const { return b == 0; }
  bool degenerate() const { return a_zero() || b_zero(); }

  double a_double() const { return to_double(a); }
  double b_double() const { return to_double(b); }
};

/// sum over 2n+1 <= order of c_n A^{n+1} B^n w^{2n+1}. Even degrees are zero.
/// For A = 0 this is the zero series, the unique solution vanishing at w = 0.
ExactSeries lemma1_series(const QuadraticParams& params, std::size_t order);

struct OracleComparison {
  std::size_t order = 0;
  bool equal = false;
  /// Lowest degree where the closed-form series and the fixed-point oracle differ.
  std::optional<std::size_t> first_mismatch;
};

OracleComparison verify_against_oracle(const QuadraticParams& params, std::size_t order);

/// Lowest differing degree of two series over their common order, if any.
std::optional<std::size_t> first_difference(const ExactSeries& lhs, const ExactSeries& rhs);

/// (A + B u^2) w - u, truncated at u.order().
ExactSeries residual(const ExactSeries& u, const QuadraticParams& params);

}  // namespace qseries
