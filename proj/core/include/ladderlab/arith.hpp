#pragma once

#include <cstdint>
#include <vector>

namespace ladderlab {

/// Tables indexed 0..n_max (index 0 unused) from a linear sieve.
std::vector<int> mobius_table(std::uint64_t n_max);
std::vector<int> liouville_table(std::uint64_t n_max);
std::vector<std::uint32_t> divisor_count_table(std::uint64_t n_max);

/// Smallest C with d(n) <= C n^kappa for every n >= 1, for 0 < kappa < 1.
double divisor_growth_constant(double kappa);

/// floor(sqrt(n)) exactly.
std::uint64_t isqrt(std::uint64_t n);

}  // namespace ladderlab
