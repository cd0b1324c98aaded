#include "copsrob/thresholds.hpp"

#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

#include "copsrob/error.hpp"

namespace copsrob {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

constexpr std::size_t kMaxDimension = 4096;

cpp_int falling(std::size_t a, std::size_t b) {
  cpp_int out = 1;
  for (std::size_t i = 0; i < b; ++i) out *= a - i;
  return out;
}

BigRatio to_ratio(const cpp_rational& q) {
  BigRatio out;
  const cpp_int num = boost::multiprecision::numerator(q);
  const cpp_int den = boost::multiprecision::denominator(q);
  out.numerator = num.str();
  out.denominator = den.str();
  out.value = q.convert_to<double>();
  const cpp_int fl = num / den;  // nonnegative, so truncation is floor
  const bool whole = fl * den == num;
  out.floor = fl.str();
  out.ceiling = (whole ? fl : fl + 1).str();
  out.below = (whole ? fl - 1 : fl).str();
  return out;
}

void check_dimension(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::DomainError, "n must be positive");
  if (n > kMaxDimension) throw Error(ErrorCode::DomainError, "n above " + std::to_string(kMaxDimension));
}

}  // namespace

double trap_dimension_constant() { return 0.5 - std::sqrt(2.0) / 4.0; }

UpperThreshold qn_upper_k_min(std::size_t n, std::size_t d) {
  check_dimension(n);
  if (2 * d + 1 > n) {
    throw Error(ErrorCode::DomainError,
                "need 2d+1 <= n, got d=" + std::to_string(d) + " n=" + std::to_string(n));
  }
  const cpp_int num = 36 * (cpp_int(1) << n) * falling(2 * d + 1, d + 1);
  const cpp_int den = falling(n - d, d + 1);
  UpperThreshold out;
  out.k_min = to_ratio(cpp_rational(num, den));
  out.d_in_range = static_cast<double>(d) <= trap_dimension_constant() * static_cast<double>(n) - 2.0;
  return out;
}

BigRatio qn_lower_k_max(std::size_t n, std::size_t d) {
  check_dimension(n);
  if (d > n) throw Error(ErrorCode::DomainError, "need d <= n");
  cpp_int sum = 0;
  cpp_int binom = 1;
  for (std::size_t i = 0; i <= d; ++i) {
    sum += binom;
    binom = binom * (n - i) / (i + 1);
  }
  return to_ratio(cpp_rational(cpp_int(1) << n, sum));
}

std::size_t radius_threshold(double degree, std::size_t n, std::size_t k, double C) {
  if (!(degree > 0) || n == 0 || k == 0 || !(C > 0)) {
    throw Error(ErrorCode::DomainError, "degree, n, k and C must be positive");
  }
  // Natural log, as in the random-graph expansion argument.
  const double target = C * static_cast<double>(n) * std::log(static_cast<double>(n)) / static_cast<double>(k);
  if (degree <= 1 && degree * degree < target) {
    throw Error(ErrorCode::DomainError, "degree <= 1 never reaches the target");
  }
  std::size_t r = 1;
  double power = degree * degree;
  while (power < target) {
    power *= degree;
    ++r;
  }
  return r;
}

Thresholds thresholds(std::size_t n, std::size_t d, std::size_t k, double C) {
  Thresholds out;
  out.upper = qn_upper_k_min(n, d);
  out.lower = qn_lower_k_max(n, d);
  out.r = radius_threshold(static_cast<double>(d), n, k, C);
  return out;
}

}  // namespace copsrob
