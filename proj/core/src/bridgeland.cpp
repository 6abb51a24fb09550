#include <qseries/bridgeland.hpp>
#include <qseries/convergence.hpp>
#include <qseries/error.hpp>

#include <cmath>

namespace qseries {

namespace {

QuadraticParams dictionary(const BridgelandParams& p) {
  return QuadraticParams{p.m + p.alpha - p.e, -(p.m - p.e / 2)};
}

}  // namespace

const char* to_string(RegimeNote note) {
  switch (note) {
    case RegimeNote::generic:
      return "generic";
    case RegimeNote::a_zero:
      return "A_zero";
    case RegimeNote::b_zero:
      return "B_zero";
  }
  return "generic";
}

QuadraticParams ab_from_geometry(const BridgelandParams& params) {
  if (params.m <= 0) {
    throw DomainError("m must be positive, got " + to_string(params.m));
  }
  if (params.alpha <= 0) {
    throw DomainError("alpha must be positive, got " + to_string(params.alpha));
  }
  return dictionary(params);
}

ThresholdReport threshold(const BridgelandParams& params) {
  const QuadraticParams ab = ab_from_geometry(params);
  ThresholdReport report;
  report.a = ab.a;
  report.b = ab.b;
  report.radius = radius_closed_form(ab);
  if (ab.a_zero()) {
    report.regime_note = RegimeNote::a_zero;
  } else if (ab.b_zero()) {
    report.regime_note = RegimeNote::b_zero;
  }
  if (report.regime_note == RegimeNote::generic) {
    report.v_threshold = 2.0 * std::sqrt(to_double(abs(ab.a * ab.b)));
  }
  return report;
}

bool sign_regime_check(const BridgelandParams& params) {
  const QuadraticParams ab = dictionary(params);
  return ab.a > 0 && ab.b < 0;
}

}  // namespace qseries
