#include "ladderlab/arith.hpp"

#include <algorithm>
#include <cmath>

#include "ladderlab/error.hpp"

namespace ladderlab {
namespace {

__extension__ using u128 = unsigned __int128;

struct SieveOutput {
  std::vector<std::uint32_t> primes;
  std::vector<std::uint32_t> smallest_factor;
};

SieveOutput linear_sieve(std::uint64_t n_max) {
  if (n_max > (std::uint64_t{1} << 32) - 1) {
    throw Error(ErrorKind::domain, "sieve limit too large");
  }
  SieveOutput out;
  out.smallest_factor.assign(n_max + 1, 0);
  for (std::uint64_t i = 2; i <= n_max; ++i) {
    if (out.smallest_factor[i] == 0) {
      out.smallest_factor[i] = static_cast<std::uint32_t>(i);
      out.primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (const std::uint32_t p : out.primes) {
      const std::uint64_t m = p * i;
      if (p > out.smallest_factor[i] || m > n_max) break;
      out.smallest_factor[m] = p;
    }
  }
  return out;
}

}  // namespace

std::vector<int> mobius_table(std::uint64_t n_max) {
  const auto sieve = linear_sieve(n_max);
  std::vector<int> mu(n_max + 1, 0);
  if (n_max >= 1) mu[1] = 1;
  for (std::uint64_t i = 2; i <= n_max; ++i) {
    const std::uint64_t p = sieve.smallest_factor[i];
    const std::uint64_t rest = i / p;
    mu[i] = (rest % p == 0) ? 0 : -mu[rest];
  }
  return mu;
}

std::vector<int> liouville_table(std::uint64_t n_max) {
  const auto sieve = linear_sieve(n_max);
  std::vector<int> lambda(n_max + 1, 0);
  if (n_max >= 1) lambda[1] = 1;
  for (std::uint64_t i = 2; i <= n_max; ++i) {
    lambda[i] = -lambda[i / sieve.smallest_factor[i]];
  }
  return lambda;
}

std::vector<std::uint32_t> divisor_count_table(std::uint64_t n_max) {
  const auto sieve = linear_sieve(n_max);
  std::vector<std::uint32_t> d(n_max + 1, 0);
  // exponent[i] is the multiplicity of the smallest prime factor of i.
  std::vector<std::uint8_t> exponent(n_max + 1, 0);
  if (n_max >= 1) d[1] = 1;
  for (std::uint64_t i = 2; i <= n_max; ++i) {
    const std::uint64_t p = sieve.smallest_factor[i];
    const std::uint64_t rest = i / p;
    if (rest % p == 0) {
      exponent[i] = static_cast<std::uint8_t>(exponent[rest] + 1);
      d[i] = d[rest] / (exponent[rest] + 1u) * (exponent[i] + 1u);
    } else {
      exponent[i] = 1;
      d[i] = d[rest] * 2;
    }
  }
  return d;
}

double divisor_growth_constant(double kappa) {
  if (!(kappa >= 0.05 && kappa < 1.0)) {
    throw Error(ErrorKind::domain, "divisor_growth_constant requires 0.05 <= kappa < 1");
  }
  // Only primes with p^kappa < 2 can contribute a factor above 1.
  const auto limit = static_cast<std::uint64_t>(std::floor(std::pow(2.0, 1.0 / kappa)));
  const auto sieve = linear_sieve(std::max<std::uint64_t>(limit, 2));
  double constant = 1.0;
  for (const std::uint32_t p : sieve.primes) {
    if (p > limit) break;
    const double step = std::pow(static_cast<double>(p), kappa);
    double best = 1.0;
    double power = 1.0;
    for (int a = 1;; ++a) {
      power *= step;
      const double value = (a + 1) / power;
      if (value <= best) break;
      best = value;
    }
    constant *= best;
  }
  return constant;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace ladderlab
