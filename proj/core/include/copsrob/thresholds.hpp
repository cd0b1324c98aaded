#pragma once

#include <cstddef>
#include <string>

namespace copsrob {

/// An exact nonnegative rational in lowest terms. Integers are decimal
/// strings since they outgrow 64 bits quickly.
struct BigRatio {
  std::string numerator;
  std::string denominator;
  double value = 0.0;
  std::string floor;
  std::string ceiling;
  /// Largest integer strictly below the ratio.
  std::string below;
};

/// 1/2 - sqrt(2)/4.
double trap_dimension_constant();

struct UpperThreshold {
  /// 36 * 2^n * (2d+1)_{d+1} / (n-d)_{d+1}; enough random cops for a 2d+1
  /// round capture on Q_n.
  BigRatio k_min;
  /// d <= c*n - 2, the range where the guarantee is stated.
  bool d_in_range = false;
};

/// Throws DomainError when n = 0 or 2d+1 > n (the falling factorial in the
/// denominator vanishes or the sphere argument has no room).
UpperThreshold qn_upper_k_min(std::size_t n, std::size_t d);

/// 2^n / sum_{i<=d} C(n,i): with fewer cops the robber survives d rounds on
/// Q_n. Throws DomainError when n = 0 or d > n.
BigRatio qn_lower_k_max(std::size_t n, std::size_t d);

/// Smallest r >= 1 with degree^(r+1) >= C * n * ln(n) / k. Throws
/// DomainError for nonpositive arguments or when degree <= 1 and the target
/// exceeds 1 (no r exists).
std::size_t radius_threshold(double degree, std::size_t n, std::size_t k, double C);

struct Thresholds {
  UpperThreshold upper;
  BigRatio lower;
  std::size_t r = 0;
};

/// All three with `d` doubling as the degree for r.
Thresholds thresholds(std::size_t n, std::size_t d, std::size_t k, double C);

}  // namespace copsrob
