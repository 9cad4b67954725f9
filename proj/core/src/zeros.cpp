#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "ladderlab/analytic.hpp"
#include "ladderlab/error.hpp"
#include "ladderlab/quadrature.hpp"

namespace ladderlab {
namespace {

constexpr double kArgStartSigma = 2.0;
constexpr double kArgInitialStep = 1.0 / 32.0;
constexpr double kArgMinStep = 1e-12;
constexpr double kMaxArgIncrement = kPi / 2.0;
constexpr int kScanRefinements = 7;

// Mean spacing of zeros near height t, floored for small t.
double zero_spacing(double t) {
  return 2.0 * kPi / std::max(1.0, std::log(t / (2.0 * kPi)));
}

double bisect_zero(double lo, double hi, double z_lo, const AnalyticConfig& cfg) {
  while (hi - lo > cfg.zero_tol) {
    const double mid = 0.5 * (lo + hi);
    const double z_mid = hardy_z(mid, cfg);
    if (z_mid == 0.0) return mid;
    if ((z_mid < 0.0) == (z_lo < 0.0)) {
      lo = mid;
      z_lo = z_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> scan_zeros(double t_lo, double t_hi, double divisions,
                               const AnalyticConfig& cfg) {
  std::vector<double> zeros;
  double t = t_lo;
  double z = hardy_z(t, cfg);
  while (t < t_hi) {
    const double next = std::min(t_hi, t + zero_spacing(t) / divisions);
    const double z_next = hardy_z(next, cfg);
    if (z_next == 0.0) {
      zeros.push_back(next);
    } else if (z != 0.0 && (z < 0.0) != (z_next < 0.0)) {
      zeros.push_back(bisect_zero(t, next, z, cfg));
    }
    t = next;
    z = z_next;
  }
  return zeros;
}

}  // namespace

double arg_zeta_critical(double t, const AnalyticConfig& cfg) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw Error(ErrorKind::domain, "arg continuation requires t > 0");
  }
  if (std::abs(hardy_z(t, cfg)) < cfg.zero_tol) {
    throw Error(ErrorKind::on_zero, "t = " + std::to_string(t) + " is a zero ordinate");
  }
  // |log zeta(2 + it)| <= log zeta(2) < pi/6, so the principal value is the
  // continuous branch at the starting point.
  double sigma = kArgStartSigma;
  std::complex<double> prev = zeta_em(sigma, t, cfg);
  double arg = std::arg(prev);
  double step = kArgInitialStep;
  while (sigma > 0.5) {
    const double next_sigma = std::max(0.5, sigma - step);
    const std::complex<double> value = zeta_em(next_sigma, t, cfg);
    const double increment = std::arg(value / prev);
    if (std::abs(increment) > kMaxArgIncrement) {
      step *= 0.5;
      if (step < kArgMinStep) {
        throw Error(ErrorKind::continuation_failure,
                    "argument step underflow at sigma = " + std::to_string(sigma) +
                        ", t = " + std::to_string(t));
      }
      continue;
    }
    arg += increment;
    sigma = next_sigma;
    prev = value;
    if (std::abs(increment) < kMaxArgIncrement / 4.0) step = std::min(kArgInitialStep, 2.0 * step);
  }
  return arg;
}

double s_of_t(double t, const AnalyticConfig& cfg) { return arg_zeta_critical(t, cfg) / kPi; }

double counting_value(double t, const AnalyticConfig& cfg) {
  return rs_theta(t) / kPi + 1.0 + s_of_t(t, cfg);
}

long zero_count(double t, const AnalyticConfig& cfg) {
  if (!(t > 0.0)) throw Error(ErrorKind::domain, "zero_count requires t > 0");
  // A zero at t itself belongs to (0, t]; step just past it.
  double probe = t;
  for (int i = 0; i < 8 && std::abs(hardy_z(probe, cfg)) < 10.0 * cfg.zero_tol; ++i) {
    probe += 10.0 * cfg.zero_tol;
  }
  const double value = counting_value(probe, cfg);
  const double rounded = std::round(value);
  if (std::abs(value - rounded) > 0.25) {
    throw Error(ErrorKind::continuation_failure,
                "counting identity far from an integer at t = " + std::to_string(t));
  }
  return static_cast<long>(rounded);
}

ZeroList find_zeros(double t_lo, double t_hi, const AnalyticConfig& cfg) {
  if (!(t_lo > 0.0) || !(t_lo < t_hi) || !std::isfinite(t_hi)) {
    throw Error(ErrorKind::domain, "find_zeros requires 0 < t_lo < t_hi");
  }
  const long expected = zero_count(t_hi, cfg) - zero_count(t_lo, cfg);
  double divisions = 16.0;
  for (int attempt = 0; attempt < kScanRefinements; ++attempt, divisions *= 2.0) {
    std::vector<double> zeros = scan_zeros(t_lo, t_hi, divisions, cfg);
    if (static_cast<long>(zeros.size()) == expected) return {std::move(zeros), t_lo, t_hi};
  }
  throw Error(ErrorKind::missed_zero,
              "sign scan on [" + std::to_string(t_lo) + ", " + std::to_string(t_hi) +
                  "] disagrees with N(t_hi) - N(t_lo) = " + std::to_string(expected));
}

S1Profile::S1Profile(double t_max, const AnalyticConfig& cfg) : t_max_(t_max) {
  if (!(t_max >= 0.0) || !std::isfinite(t_max)) {
    throw Error(ErrorKind::domain, "S1Profile requires a finite t_max >= 0");
  }
  if (t_max > 1.0) {
    if (zero_count(1.0, cfg) != 0) {
      throw Error(ErrorKind::missed_zero, "counting identity reports zeros below t = 1");
    }
    zeros_ = find_zeros(1.0, t_max, cfg).ordinates;
  }
  s1_at_zero_.reserve(zeros_.size());
  double acc = 0.0;
  double left = 0.0;
  for (std::size_t j = 0; j < zeros_.size(); ++j) {
    acc += integrate_piece(left, zeros_[j], static_cast<long>(j));
    s1_at_zero_.push_back(acc);
    left = zeros_[j];
  }
}

double S1Profile::integrate_piece(double a, double b, long count_below) const {
  if (b <= a) return 0.0;
  const auto s_piece = [count_below](double u) {
    return static_cast<double>(count_below) - 1.0 - rs_theta(u) / kPi;
  };
  return integrate_adaptive(s_piece, a, b, 1e-12 * std::max(1.0, b - a)).value;
}

double S1Profile::s(double t) const {
  if (!(t > 0.0) || t > t_max_) throw Error(ErrorKind::domain, "S1Profile::s outside (0, t_max]");
  const auto below = std::lower_bound(zeros_.begin(), zeros_.end(), t) - zeros_.begin();
  return static_cast<double>(below) - 1.0 - rs_theta(t) / kPi;
}

double S1Profile::s1(double t) const {
  if (!(t >= 0.0) || t > t_max_) {
    throw Error(ErrorKind::domain, "S1Profile::s1 outside [0, t_max]");
  }
  const auto j = std::upper_bound(zeros_.begin(), zeros_.end(), t) - zeros_.begin();
  if (j == 0) return integrate_piece(0.0, t, 0);
  return s1_at_zero_[j - 1] + integrate_piece(zeros_[j - 1], t, static_cast<long>(j));
}

double s1_of_t(double t, const AnalyticConfig& cfg) {
  if (!(t >= 0.0)) throw Error(ErrorKind::domain, "s1_of_t requires t >= 0");
  if (t == 0.0) return 0.0;
  return S1Profile(t, cfg).s1(t);
}

}  // namespace ladderlab
