#include <qseries/catalan.hpp>
#include <qseries/convergence.hpp>
#include <qseries/error.hpp>

#include <cmath>
#include <limits>
#include <vector>

namespace qseries {

namespace {

constexpr std::size_t kProbeWindow = 10;
constexpr double kProbeFactor = 1e3;
// Relative distance from |w| = r treated as "on the circle".
constexpr double kBoundaryTolerance = 1e-9;

void require_nondegenerate(const QuadraticParams& params, const char* what) {
  if (params.degenerate()) {
    throw DomainError(std::string(what) + " requires A != 0 and B != 0");
  }
}

}  // namespace

double radius_closed_form(const QuadraticParams& params) {
  if (params.degenerate()) {
    return std::numeric_limits<double>::infinity();
  }
  const ExactRational ab = abs(params.a * params.b);
  return 1.0 / (2.0 * std::sqrt(to_double(ab)));
}

double hadamard_estimate(const QuadraticParams& params, std::size_t n) {
  require_nondegenerate(params, "Hadamard estimate");
  if (n == 0) {
    throw DomainError("Hadamard estimate requires n >= 1");
  }
  const double x = static_cast<double>(n);
  const double log_coeff = log_abs(catalan_recurrence(n)) + (x + 1.0) * log_abs(params.a) +
                           x * log_abs(params.b);
  const double log_rho = log_coeff / x;
  return std::exp(-0.5 * log_rho);
}

double asymptotic_ratio(std::size_t n) {
  return std::exp(log_abs(catalan_recurrence(n)) - catalan_asymptotic_log(n));
}

ConvergenceReport analyze_convergence(const QuadraticParams& params, std::size_t n) {
  ConvergenceReport report;
  report.analytic_radius = radius_closed_form(params);
  report.n_used = n;
  report.asymptotic_ratio = asymptotic_ratio(n);
  if (!params.degenerate()) {
    report.hadamard_estimate = hadamard_estimate(params, n);
    report.relative_gap =
        std::fabs(*report.hadamard_estimate - report.analytic_radius) / report.analytic_radius;
  }
  return report;
}

const char* to_string(ProbeOutcome outcome) {
  switch (outcome) {
    case ProbeOutcome::terms_vanish:
      return "terms_vanish";
    case ProbeOutcome::terms_blow_up:
      return "terms_blow_up";
    case ProbeOutcome::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

ProbeOutcome divergence_probe(const QuadraticParams& params, double w, std::size_t max_terms) {
  require_nondegenerate(params, "divergence probe");
  if (!(w > 0.0) || !std::isfinite(w)) {
    throw DomainError("divergence probe requires finite w > 0");
  }
  const double r = radius_closed_form(params);
  if (std::fabs(w / r - 1.0) <= kBoundaryTolerance) {
    return ProbeOutcome::inconclusive;
  }
  if (max_terms < kProbeWindow + 1) {
    return ProbeOutcome::inconclusive;
  }

  // log |c_n A^{n+1} B^n w^{2n+1}|
  const double log_a = log_abs(params.a);
  const double log_b = log_abs(params.b);
  const double log_w = std::log(w);
  std::vector<double> log_terms;
  log_terms.reserve(max_terms);
  for (std::size_t n = 0; n < max_terms; ++n) {
    const double x = static_cast<double>(n);
    log_terms.push_back(log_abs(catalan_recurrence(n)) + (x + 1.0) * log_a + x * log_b +
                        (2.0 * x + 1.0) * log_w);
  }

  bool decreasing = true;
  bool increasing = true;
  for (std::size_t k = max_terms - kProbeWindow; k < max_terms; ++k) {
    decreasing = decreasing && log_terms[k] < log_terms[k - 1];
    increasing = increasing && log_terms[k] > log_terms[k - 1];
  }
  const double log_growth = log_terms.back() - log_terms.front();
  const double log_factor = std::log(kProbeFactor);
  if (decreasing && log_growth < -log_factor) {
    return ProbeOutcome::terms_vanish;
  }
  if (increasing && log_growth > log_factor) {
    return ProbeOutcome::terms_blow_up;
  }
  return ProbeOutcome::inconclusive;
}

}  // namespace qseries
