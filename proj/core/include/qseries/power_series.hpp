#pragma once

// Truncated formal power series a_0 + a_1 w + ... + a_N w^N.
//
// Binary operations truncate to the smaller operand order so that every
// stored degree is trustworthy. The scalar is a template parameter; mixing an
// exact series with a float series does not compile.

#include <qseries/exact.hpp>

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qseries {

template <typename T>
concept SeriesScalar = std::same_as<T, ExactRational> || std::same_as<T, double>;

enum class ScalarKind { exact_rational, floating };

template <SeriesScalar Scalar>
class TruncatedSeries {
 public:
  using scalar_type = Scalar;

  static constexpr ScalarKind kind =
      std::same_as<Scalar, ExactRational> ? ScalarKind::exact_rational : ScalarKind::floating;

  /// Zero series of the given order.
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1, Scalar(0)) {}

  /// Takes ownership of coefficients; coeffs[k] multiplies w^k. Must be non-empty.
  explicit TruncatedSeries(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
      throw std::invalid_argument("TruncatedSeries needs at least one coefficient");
    }
  }

  TruncatedSeries(std::initializer_list<Scalar> coeffs)
      : TruncatedSeries(std::vector<Scalar>(coeffs)) {}

  std::size_t order() const noexcept { return coeffs_.size() - 1; }

  const Scalar& operator[](std::size_t degree) const { return coeffs_.at(degree); }
  Scalar& operator[](std::size_t degree) { return coeffs_.at(degree); }

  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c == 0; });
  }

  /// Copy of this series cut down to `order` (which must not exceed the current order).
  TruncatedSeries truncated(std::size_t order) const {
    if (order > this->order()) {
      throw std::invalid_argument("cannot raise the order of a truncated series");
    }
    return TruncatedSeries(std::vector<Scalar>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Scalar> coeffs_;
};

using ExactSeries = TruncatedSeries<ExactRational>;
using FloatSeries = TruncatedSeries<double>;

template <SeriesScalar Scalar>
TruncatedSeries<Scalar> series_add(const TruncatedSeries<Scalar>& a,
                                   const TruncatedSeries<Scalar>& b) {
  const std::size_t order = std::min(a.order(), b.order());
  TruncatedSeries<Scalar> out(order);
  for (std::size_t k = 0; k <= order; ++k) {
    out[k] = a[k] + b[k];
  }
  return out;
}

/// Cauchy product truncated at min(a.order(), b.order()).
template <SeriesScalar Scalar>
TruncatedSeries<Scalar> series_mul(const TruncatedSeries<Scalar>& a,
                                   const TruncatedSeries<Scalar>& b) {
  const std::size_t order = std::min(a.order(), b.order());
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  TruncatedSeries<Scalar> out(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (y[j] == 0) continue;
      out[i + j] += x[i] * y[j];
    }
  }
  return out;
}

/// Multiplies by scalar * w^power, keeping the original order.
template <SeriesScalar Scalar>
TruncatedSeries<Scalar> series_shift_scale(const TruncatedSeries<Scalar>& a, std::size_t power,
                                           const Scalar& scalar) {
  TruncatedSeries<Scalar> out(a.order());
  for (std::size_t k = 0; k + power <= a.order(); ++k) {
    out[k + power] = a[k] * scalar;
  }
  return out;
}

inline double as_double(const ExactRational& v) { return to_double(v); }
inline double as_double(double v) { return v; }

struct SeriesEvaluation {
  double value = 0.0;
  /// partial_sums[k] = a_0 + ... + a_k w^k for k = 0..N.
  std::vector<double> partial_sums;
};

/// Horner value at w plus the forward partial sums S_0..S_N. Exact coefficients
/// are rounded to double first.
template <SeriesScalar Scalar>
SeriesEvaluation series_evaluate(const TruncatedSeries<Scalar>& a, double w) {
  SeriesEvaluation out;
  const std::size_t n = a.order();
  for (std::size_t k = n + 1; k-- > 0;) {
    out.value = out.value * w + as_double(a[k]);
  }
  out.partial_sums.reserve(n + 1);
  double sum = 0.0;
  double power = 1.0;
  for (std::size_t k = 0; k <= n; ++k) {
    sum += as_double(a[k]) * power;
    out.partial_sums.push_back(sum);
    power *= w;
  }
  return out;
}

/// Fixed-point iteration u <- (A + B u^2) w from u = 0, truncated at `order`.
///
/// Each pass fixes at least two further degrees, so floor(order/2) + 1 passes
/// reach the solution; one extra pass certifies that nothing moves. Throws
/// std::logic_error if the certification pass changes the series.
template <SeriesScalar Scalar>
TruncatedSeries<Scalar> fixed_point_solve(const Scalar& a, const Scalar& b, std::size_t order) {
  TruncatedSeries<Scalar> constant(order);
  constant[0] = a;
  auto step = [&](const TruncatedSeries<Scalar>& u) {
    auto inner = series_add(constant, series_shift_scale(series_mul(u, u), 0, b));
    return series_shift_scale(inner, 1, Scalar(1));
  };

  TruncatedSeries<Scalar> u(order);
  const std::size_t passes = order / 2 + 1;
  for (std::size_t i = 0; i < passes; ++i) {
    u = step(u);
  }
  if (step(u) != u) {
    throw std::logic_error("fixed-point iteration did not stabilize");
  }
  return u;
}

}  // namespace qseries
