#include <qseries/catalan.hpp>
#include <qseries/solver.hpp>

#include <algorithm>

namespace qseries {

QuadraticParams QuadraticParams::from_double(double a, double b) {
  return QuadraticParams{rational_from_double(a), rational_from_double(b)};
}

ExactSeries lemma1_series(const QuadraticParams& params, std::size_t order) {
  ExactSeries out(order);
  if (params.a_zero()) {
    return out;
  }
  // Coefficient of w^{2n+1} is c_n A (AB)^n.
  const ExactRational ab = params.a * params.b;
  ExactRational scale = params.a;
  for (std::size_t n = 0; 2 * n + 1 <= order; ++n) {
    out[2 * n + 1] = ExactRational(catalan_recurrence(n)) * scale;
    scale *= ab;
  }
  return out;
}

std::optional<std::size_t> first_difference(const ExactSeries& lhs, const ExactSeries& rhs) {
  const std::size_t order = std::min(lhs.order(), rhs.order());
  for (std::size_t k = 0; k <= order; ++k) {
    if (lhs[k] != rhs[k]) {
      return k;
    }
  }
  return std::nullopt;
}

OracleComparison verify_against_oracle(const QuadraticParams& params, std::size_t order) {
  const ExactSeries closed = lemma1_series(params, order);
  const ExactSeries iterated = fixed_point_solve(params.a, params.b, order);
  OracleComparison out;
  out.order = order;
  out.first_mismatch = first_difference(closed, iterated);
  out.equal = !out.first_mismatch.has_value();
  return out;
}

ExactSeries residual(const ExactSeries& u, const QuadraticParams& params) {
  ExactSeries constant(u.order());
  constant[0] = params.a;
  const ExactSeries rhs = series_shift_scale(
      series_add(constant, series_shift_scale(series_mul(u, u), 0, params.b)), 1, ExactRational(1));
  return series_add(rhs, series_shift_scale(u, 0, ExactRational(-1)));
}

}  // namespace qseries
