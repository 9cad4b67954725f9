#include <array>
#include <cmath>
#include <complex>
#include <span>

#include "ladderlab/analytic.hpp"
#include "ladderlab/error.hpp"

namespace ladderlab {
namespace detail {
double theta_tail(double t);
}  // namespace detail

namespace {

#include "rs_coefficients.inc"

struct CorrectionTerm {
  std::span<const double> re;
  std::span<const double> im;
};

const std::array<CorrectionTerm, kRsTerms> kCorrections = {{
    {kRsRe0, kRsIm0}, {kRsRe1, kRsIm1}, {kRsRe2, kRsIm2}, {kRsRe3, kRsIm3}, {kRsRe4, kRsIm4},
    {kRsRe5, kRsIm5}, {kRsRe6, kRsIm6}, {kRsRe7, kRsIm7}, {kRsRe8, kRsIm8}, {kRsRe9, kRsIm9},
}};

double horner(std::span<const double> coeffs, double x) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

double hardy_z_riemann_siegel(double t) {
  t = std::abs(t);
  if (!(t > 0.0)) throw Error(ErrorKind::domain, "hardy_z_riemann_siegel: t must be positive");
  const double a = std::sqrt(t / (2.0 * kPi));
  const auto n_main = static_cast<long>(std::floor(a));
  const double p = 1.0 - 2.0 * (a - static_cast<double>(n_main));
  const double theta = rs_theta(t);

  double main_sum = 0.0;
  for (long n = 1; n <= n_main; ++n) {
    const double nn = static_cast<double>(n);
    main_sum += std::cos(theta - t * std::log(nn)) / std::sqrt(nn);
  }

  // sum_k T_k(p) a^-k with the complex Taylor tables, Horner in 1/a.
  const double inv_a = 1.0 / a;
  std::complex<double> correction = 0.0;
  for (auto it = kCorrections.rbegin(); it != kCorrections.rend(); ++it) {
    correction = correction * inv_a + std::complex<double>(horner(it->re, p), horner(it->im, p));
  }
  const double sign = (n_main % 2 == 1) ? 1.0 : -1.0;  // (-1)^(N-1)
  const double remainder =
      2.0 * sign / std::sqrt(a) * (std::polar(1.0, detail::theta_tail(t)) * correction).real();
  return 2.0 * main_sum + remainder;
}

double hardy_z(double t, const AnalyticConfig& cfg) {
  t = std::abs(t);
  if (!std::isfinite(t)) throw Error(ErrorKind::domain, "hardy_z: non-finite t");
  if (t >= cfg.t_switch) return hardy_z_riemann_siegel(t);
  if (t == 0.0) return zeta_em(0.5, 0.0, cfg).real();
  return (std::polar(1.0, rs_theta(t)) * zeta_em(0.5, t, cfg)).real();
}

}  // namespace ladderlab
