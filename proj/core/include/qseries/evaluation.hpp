#pragma once

#include <qseries/solver.hpp>

#include <cstddef>

namespace qseries {

/// Root of B w u^2 - u + A w = 0 with u -> 0 as w -> 0, in the form
/// u = 2 A w / (1 + sqrt(1 - 4 A B w^2)). Returns A w when B = 0 or w = 0.
/// Throws DomainError when 1 - 4 A B w^2 < 0 (w past the real branch point).
double closed_form_branch(const QuadraticParams& params, double w);

/// 1 / (2 sqrt(AB)) when AB > 0, otherwise +infinity.
double branch_point(const QuadraticParams& params);

struct EvalReport {
  double w = 0.0;
  double series_value = 0.0;
  double closed_value = 0.0;
  double abs_error = 0.0;
  std::size_t order_used = 0;
  bool inside_radius = false;
};

EvalReport compare_series_to_closed(const QuadraticParams& params, double w, std::size_t order);

}  // namespace qseries
