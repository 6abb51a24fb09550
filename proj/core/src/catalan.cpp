#include <qseries/catalan.hpp>
#include <qseries/error.hpp>

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace qseries {

namespace {

// Extends `values` (holding c_0..c_{k-1}, k >= 1) through c_n.
void extend_by_recurrence(std::vector<ExactInteger>& values, std::size_t n) {
  values.reserve(n + 1);
  ExactInteger sum;
  for (std::size_t k = values.size(); k <= n; ++k) {
    sum = 0;
    // c_k = sum_{i=0}^{k-1} c_i c_{k-1-i}; pair symmetric terms.
    const std::size_t last = k - 1;
    for (std::size_t i = 0; i < (last + 1) / 2; ++i) {
      mpz_addmul(sum.get_mpz_t(), values[i].get_mpz_t(), values[last - i].get_mpz_t());
    }
    sum *= 2;
    if (last % 2 == 0) {
      const auto& mid = values[last / 2];
      mpz_addmul(sum.get_mpz_t(), mid.get_mpz_t(), mid.get_mpz_t());
    }
    values.push_back(sum);
  }
}

CatalanMemo& shared_memo() {
  static CatalanMemo memo;
  return memo;
}

}  // namespace

CatalanMemo::CatalanMemo() : values_{ExactInteger(1)} {}

ExactInteger CatalanMemo::get(std::size_t n) {
  {
    std::shared_lock lock(mutex_);
    if (n < values_.size()) {
      return values_[n];
    }
  }
  grow_to(n);
  std::shared_lock lock(mutex_);
  return values_[n];
}

std::size_t CatalanMemo::size() const {
  std::shared_lock lock(mutex_);
  return values_.size();
}

void CatalanMemo::grow_to(std::size_t n) {
  std::unique_lock lock(mutex_);
  if (n < values_.size()) {
    return;
  }
  extend_by_recurrence(values_, n);
}

ExactInteger catalan_recurrence(std::size_t n) { return shared_memo().get(n); }

ExactInteger catalan_recurrence_uncached(std::size_t n) {
  std::vector<ExactInteger> values{ExactInteger(1)};
  extend_by_recurrence(values, n);
  return values[n];
}

ExactInteger catalan_closed(std::size_t n) {
  ExactInteger binom;
  mpz_bin_uiui(binom.get_mpz_t(), 2 * static_cast<unsigned long>(n), static_cast<unsigned long>(n));
  ExactInteger quotient;
  ExactInteger remainder;
  const ExactInteger divisor(static_cast<unsigned long>(n) + 1);
  mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), binom.get_mpz_t(), divisor.get_mpz_t());
  if (remainder != 0) {
    throw std::logic_error("binom(2n, n) not divisible by n + 1");
  }
  return quotient;
}

CatalanTable catalan_table(std::size_t n, CatalanMethod method) {
  CatalanTable table;
  table.generated_by = method;
  if (method == CatalanMethod::recurrence) {
    table.values.push_back(ExactInteger(1));
    extend_by_recurrence(table.values, n);
  } else {
    table.values.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      table.values.push_back(catalan_closed(k));
    }
  }
  return table;
}

ExactSeries catalan_generating_series(std::size_t order) {
  ExactSeries out(order);
  for (std::size_t n = 0; n <= order; ++n) {
    out[n] = ExactRational(catalan_recurrence(n));
  }
  return out;
}

double catalan_asymptotic_log(std::size_t n) {
  if (n == 0) {
    throw DomainError("asymptotic estimate needs n >= 1");
  }
  const double x = static_cast<double>(n);
  return x * std::log(4.0) - 0.5 * std::log(std::numbers::pi) - 1.5 * std::log(x);
}

double catalan_asymptotic(std::size_t n) { return std::exp(catalan_asymptotic_log(n)); }

}  // namespace qseries
