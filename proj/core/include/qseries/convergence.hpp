#pragma once

#include <qseries/solver.hpp>

#include <cstddef>
#include <optional>

namespace qseries {

/// 1 / (2 sqrt|AB|); +infinity when A = 0 (zero series) or B = 0 (u = Aw).
double radius_closed_form(const QuadraticParams& params);

/// Root-test estimate of the u-series radius from the n-th nonzero coefficient:
/// rho_n = |c_n A^{n+1} B^n|^{1/n} in log space, returned as 1 / sqrt(rho_n).
/// Throws DomainError if A or B is zero or n == 0.
double hadamard_estimate(const QuadraticParams& params, std::size_t n);

/// c_n / (4^n / (sqrt(pi) n^{3/2})) from the exact c_n. Requires n >= 1.
double asymptotic_ratio(std::size_t n);

struct ConvergenceReport {
  double analytic_radius = 0.0;  // may be +infinity
  std::optional<double> hadamard_estimate;
  std::size_t n_used = 0;
  double asymptotic_ratio = 0.0;
  /// |estimate - analytic| / analytic when both are finite.
  std::optional<double> relative_gap;
};

/// Analytic radius plus the Hadamard estimate at n (omitted in degenerate regimes).
ConvergenceReport analyze_convergence(const QuadraticParams& params, std::size_t n);

enum class ProbeOutcome { terms_vanish, terms_blow_up, inconclusive };

const char* to_string(ProbeOutcome outcome);

/// Heuristic classification of |c_n A^{n+1} B^n w^{2n+1}| for n < max_terms.
/// terms_vanish: last 10 terms strictly decreasing and last < 1e-3 * first.
/// terms_blow_up: last 10 strictly increasing and last > 1e3 * first.
/// A w on the circle |w| = r is always inconclusive.
/// Throws DomainError for A = 0, B = 0 or w <= 0.
ProbeOutcome divergence_probe(const QuadraticParams& params, double w, std::size_t max_terms);

}  // namespace qseries
