#include <array>
#include <cmath>
#include <complex>
#include <string>

#include "ladderlab/analytic.hpp"
#include "ladderlab/error.hpp"

namespace ladderlab {
namespace {

using cplx = std::complex<double>;

// B_{2k} / (2k)!, k = 1..15.
constexpr std::array<double, 15> kBernoulliOverFactorial = {
    0.083333333333333333333,     -0.0013888888888888888889,   0.000033068783068783068783,
    -8.2671957671957671958e-7,   2.0876756987868098979e-8,    -5.2841901386874931849e-10,
    1.3382536530684678833e-11,   -3.3896802963225828668e-13,  8.5860620562778445641e-15,
    -2.1748686985580618730e-16,  5.5090028283602295152e-18,   -1.3954464685812523341e-19,
    3.5347070396294674717e-21,   -8.9535174270375468504e-23,  2.2679524523376830603e-24,
};

// B_{2k} / (2k (2k - 1)), k = 1..10, for the Stirling series.
constexpr std::array<double, 10> kStirling = {
    0.083333333333333333333,  -0.0027777777777777777778, 0.00079365079365079365079,
    -0.00059523809523809523810, 0.00084175084175084175084, -0.0019175269175269175269,
    0.0064102564102564102564, -0.029550653594771241830,  0.17964437236883057316,
    -1.3924322169059011164,
};

struct EmAttempt {
  bool converged;
  cplx value;
};

EmAttempt zeta_em_with(cplx s, std::size_t n_terms, double tol) {
  const double sigma = s.real();
  const double t = s.imag();
  std::complex<long double> partial = 0.0L;
  for (std::size_t n = 1; n < n_terms; ++n) {
    const double ln_n = std::log(static_cast<double>(n));
    partial += std::polar(std::exp(-sigma * ln_n), -t * ln_n);
  }
  const double big_n = static_cast<double>(n_terms);
  const double ln_big_n = std::log(big_n);
  const cplx n_pow_minus_s = std::exp(-s * ln_big_n);

  cplx value = cplx(static_cast<double>(partial.real()), static_cast<double>(partial.imag()));
  value += n_pow_minus_s * big_n / (s - 1.0) + 0.5 * n_pow_minus_s;

  const double inv_n2 = 1.0 / (big_n * big_n);
  cplx term = kBernoulliOverFactorial[0] * s * n_pow_minus_s / big_n;
  for (std::size_t k = 1; k <= kBernoulliOverFactorial.size(); ++k) {
    value += term;
    if (k == kBernoulliOverFactorial.size()) break;
    const double kk = static_cast<double>(k);
    const cplx next = term * (kBernoulliOverFactorial[k] / kBernoulliOverFactorial[k - 1]) *
                      (s + 2.0 * kk - 1.0) * (s + 2.0 * kk) * inv_n2;
    // Remainder after term k is bounded by |(s+2k+1)/(sigma+2k+1)| |next|.
    const double bound = std::abs(next) * std::abs(s + 2.0 * kk + 1.0) / (sigma + 2.0 * kk + 1.0);
    if (bound < tol) return {true, value};
    term = next;
  }
  return {false, value};
}

cplx log_gamma(cplx z) {
  // Shift to Re >= 10 and use Stirling; each log has Re > 0 so the imaginary
  // parts stay on a continuous branch.
  cplx shift_sum = 0.0;
  while (z.real() < 10.0) {
    shift_sum += std::log(z);
    z += 1.0;
  }
  const cplx inv = 1.0 / z;
  const cplx inv2 = inv * inv;
  cplx series = 0.0;
  cplx power = inv;
  for (double c : kStirling) {
    series += c * power;
    power *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * kLnTwoPi + series - shift_sum;
}

}  // namespace

std::complex<double> zeta_em(double sigma, double t, const AnalyticConfig& cfg) {
  if (!std::isfinite(sigma) || !std::isfinite(t)) {
    throw Error(ErrorKind::domain, "zeta_em: non-finite argument");
  }
  if (sigma < 0.5) {
    throw Error(ErrorKind::domain, "zeta_em: sigma must be >= 1/2, got " + std::to_string(sigma));
  }
  if (sigma == 1.0 && t == 0.0) {
    throw Error(ErrorKind::pole, "zeta_em: pole at s = 1");
  }
  const cplx s(sigma, t);
  auto n_terms = static_cast<std::size_t>(10.0 + std::ceil(std::abs(t) / 3.0));
  while (n_terms <= cfg.max_em_terms) {
    const EmAttempt attempt = zeta_em_with(s, n_terms, cfg.precision_target);
    if (attempt.converged) return attempt.value;
    n_terms = n_terms + n_terms / 2 + 1;
  }
  throw Error(ErrorKind::precision_unreachable,
              "zeta_em: tolerance not reachable within " + std::to_string(cfg.max_em_terms) +
                  " terms");
}

double rs_theta_log_gamma(double t) {
  if (!(t > 0.0)) throw Error(ErrorKind::domain, "rs_theta: t must be positive");
  return log_gamma(cplx(0.25, 0.5 * t)).imag() - 0.5 * t * std::log(kPi);
}

namespace detail {

// theta(t) minus its leading terms (t/2) ln(t/2pi) - t/2 - pi/8.
double theta_tail(double t) {
  const double inv = 1.0 / t;
  const double inv2 = inv * inv;
  return inv * (1.0 / 48.0 +
                inv2 * (7.0 / 5760.0 +
                        inv2 * (31.0 / 80640.0 +
                                inv2 * (127.0 / 430080.0 + inv2 * (511.0 / 1216512.0)))));
}

}  // namespace detail

double rs_theta(double t) {
  if (!(t > 0.0)) throw Error(ErrorKind::domain, "rs_theta: t must be positive");
  if (t < 10.0) return rs_theta_log_gamma(t);
  return 0.5 * t * (std::log(t) - kLnTwoPi) - 0.5 * t - kPi / 8.0 + detail::theta_tail(t);
}

}  // namespace ladderlab
