#pragma once

#include <qseries/exact.hpp>
#include <qseries/power_series.hpp>

#include <cstddef>
#include <shared_mutex>
#include <vector>

namespace qseries {

enum class CatalanMethod { recurrence, closed_form };

struct CatalanTable {
  std::vector<ExactInteger> values;  // values[n] = c_n
  CatalanMethod generated_by = CatalanMethod::recurrence;
};

/// Growable memo of Catalan numbers filled by the convolution
/// c_n = sum_{i+j=n-1} c_i c_j. Readers share a lock; growth is serialized.
///
/// Cost is quadratic in n (big-integer products), so n around 10^4 is the
/// practical ceiling for interactive use; memory holds every c_k up to n.
class CatalanMemo {
 public:
  CatalanMemo();

  ExactInteger get(std::size_t n);

  /// Number of values currently cached.
  std::size_t size() const;

 private:
  void grow_to(std::size_t n);

  mutable std::shared_mutex mutex_;
  std::vector<ExactInteger> values_;
};

/// c_n via the recurrence, served from a process-wide memo.
ExactInteger catalan_recurrence(std::size_t n);

/// c_n via the recurrence with a private table built from scratch.
ExactInteger catalan_recurrence_uncached(std::size_t n);

/// c_n = binom(2n, n) / (n + 1). The division is checked to be exact.
ExactInteger catalan_closed(std::size_t n);

/// c_0..c_n by the chosen method.
CatalanTable catalan_table(std::size_t n, CatalanMethod method);

/// C_N(x) = sum_{n<=N} c_n x^n with exact coefficients.
ExactSeries catalan_generating_series(std::size_t order);

/// 4^n / (sqrt(pi) n^{3/2}), evaluated through logarithms. Requires n >= 1.
double catalan_asymptotic(std::size_t n);

/// ln(4^n / (sqrt(pi) n^{3/2})). Requires n >= 1.
double catalan_asymptotic_log(std::size_t n);

}  // namespace qseries
