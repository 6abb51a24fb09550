#include <qseries/convergence.hpp>
#include <qseries/error.hpp>
#include <qseries/evaluation.hpp>

#include <cmath>
#include <limits>
#include <sstream>

namespace qseries {

double branch_point(const QuadraticParams& params) {
  if (sgn(params.a) * sgn(params.b) <= 0) {
    return std::numeric_limits<double>::infinity();
  }
  return 1.0 / (2.0 * std::sqrt(to_double(params.a * params.b)));
}

double closed_form_branch(const QuadraticParams& params, double w) {
  const double a = params.a_double();
  const double b = params.b_double();
  if (params.b_zero() || w == 0.0) {
    return a * w;
  }
  const double disc = 1.0 - 4.0 * a * b * w * w;
  if (disc < 0.0) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "complex branch: w = " << w << " lies beyond the branch point "
        << branch_point(params) << " (1 - 4ABw^2 < 0)";
    throw DomainError(msg.str());
  }
  return 2.0 * a * w / (1.0 + std::sqrt(disc));
}

EvalReport compare_series_to_closed(const QuadraticParams& params, double w, std::size_t order) {
  EvalReport report;
  report.w = w;
  report.order_used = order;
  report.closed_value = closed_form_branch(params, w);
  report.series_value = series_evaluate(lemma1_series(params, order), w).value;
  report.abs_error = std::fabs(report.series_value - report.closed_value);
  report.inside_radius = std::fabs(w) < radius_closed_form(params);
  return report;
}

}  // namespace qseries
