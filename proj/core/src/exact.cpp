#include <qseries/error.hpp>
#include <qseries/exact.hpp>

#include <cmath>
#include <regex>
#include <string>

namespace qseries {

namespace {

const std::regex& fraction_pattern() {
  static const std::regex re(R"(([+-]?[0-9]+)/([0-9]+))");
  return re;
}

const std::regex& decimal_pattern() {
  static const std::regex re(R"(([+-]?)([0-9]*)(?:\.([0-9]*))?(?:[eE]([+-]?[0-9]+))?)");
  return re;
}

ExactInteger pow10(unsigned long exponent) {
  ExactInteger out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, exponent);
  return out;
}

}  // namespace

ExactRational parse_rational(std::string_view text) {
  const std::string s(text);
  std::smatch match;

  if (std::regex_match(s, match, fraction_pattern())) {
    const std::string num_text = match[1].str();
    ExactInteger num(num_text.front() == '+' ? num_text.substr(1) : num_text, 10);
    ExactInteger den(match[2].str(), 10);
    if (den == 0) {
      throw ParseError("zero denominator in '" + s + "'");
    }
    ExactRational out(num, den);
    out.canonicalize();
    return out;
  }

  if (std::regex_match(s, match, decimal_pattern())) {
    const std::string whole = match[2].str();
    const std::string frac = match[3].str();
    if (whole.empty() && frac.empty()) {
      throw ParseError("not a number: '" + s + "'");
    }
    long exponent = 0;
    if (match[4].matched) {
      const std::string exp_text = match[4].str();
      if (exp_text.size() > 7) {
        throw ParseError("exponent out of range in '" + s + "'");
      }
      exponent = std::stol(exp_text);
    }
    exponent -= static_cast<long>(frac.size());

    ExactInteger digits(whole + frac, 10);
    if (match[1].str() == "-") {
      digits = -digits;
    }
    ExactRational out;
    if (exponent >= 0) {
      out = ExactRational(digits * pow10(static_cast<unsigned long>(exponent)));
    } else {
      out = ExactRational(digits, pow10(static_cast<unsigned long>(-exponent)));
      out.canonicalize();
    }
    return out;
  }

  throw ParseError("not a rational or decimal number: '" + s + "'");
}

ExactRational rational_from_double(double value) {
  if (!std::isfinite(value)) {
    throw DomainError("expected a finite real, got " + std::to_string(value));
  }
  return ExactRational(value);
}

std::string to_string(const ExactRational& value) { return value.get_str(); }

std::string to_string(const ExactInteger& value) { return value.get_str(); }

double to_double(const ExactRational& value) { return value.get_d(); }

double log_abs(const ExactInteger& value) {
  if (value == 0) {
    throw DomainError("log of zero");
  }
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
  return std::log(std::fabs(mantissa)) + static_cast<double>(exponent) * std::log(2.0);
}

double log_abs(const ExactRational& value) {
  return log_abs(ExactInteger(value.get_num())) - log_abs(ExactInteger(value.get_den()));
}

}  // namespace qseries
