#include "ladderlab/divisor.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ladderlab/arith.hpp"
#include "ladderlab/error.hpp"

namespace ladderlab {

__extension__ using u128 = unsigned __int128;
namespace {

std::uint64_t floor_nonnegative(double x, const char* what) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw Error(ErrorKind::domain, std::string(what) + " requires a finite x >= 0");
  }
  if (x >= 0x1p63) throw Error(ErrorKind::domain, std::string(what) + ": x too large");
  return static_cast<std::uint64_t>(std::floor(x));
}

}  // namespace

std::uint64_t divisor_d(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::domain, "divisor_d requires n >= 1");
  std::uint64_t count = 1;
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    std::uint64_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    count *= e + 1;
  }
  if (n > 1) count *= 2;
  return count;
}

std::uint64_t dirichlet_sum_D(std::uint64_t n) {
  const std::uint64_t s = isqrt(n);
  u128 total = 0;
  for (std::uint64_t k = 1; k <= s; ++k) total += n / k;
  total *= 2;
  total -= static_cast<u128>(s) * s;
  if (total > std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorKind::domain, "dirichlet_sum_D overflows 64 bits");
  }
  return static_cast<std::uint64_t>(total);
}

std::uint64_t dirichlet_sum_D(double x) {
  return dirichlet_sum_D(floor_nonnegative(x, "dirichlet_sum_D"));
}

SegmentSum segment_sum(double lower, double upper) {
  const std::uint64_t a = floor_nonnegative(lower, "segment_sum");
  const std::uint64_t b = floor_nonnegative(upper, "segment_sum");
  if (upper < lower) throw Error(ErrorKind::domain, "segment_sum requires lower <= upper");
  return SegmentSum{lower, upper, dirichlet_sum_D(b) - dirichlet_sum_D(a)};
}

}  // namespace ladderlab
