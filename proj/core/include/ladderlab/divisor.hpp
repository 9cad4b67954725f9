#pragma once

#include <cstdint>

namespace ladderlab {

/// Number of divisors of n >= 1, by trial division up to sqrt(n).
std::uint64_t divisor_d(std::uint64_t n);

/// D(x) = sum of d(n) for n <= x, by the hyperbola method.
std::uint64_t dirichlet_sum_D(double x);
std::uint64_t dirichlet_sum_D(std::uint64_t n);

/// Sum of d(n) over A < n <= B.
struct SegmentSum {
  double lower = 0.0;
  double upper = 0.0;
  std::uint64_t value = 0;
};

SegmentSum segment_sum(double lower, double upper);

}  // namespace ladderlab
