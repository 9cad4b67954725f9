#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "ladderlab/constants.hpp"

namespace ladderlab {

struct AnalyticConfig {
  /// Absolute tolerance for scalar evaluations of zeta.
  double precision_target = kDefaultPrecisionTarget;
  /// Below this height Z(t) comes from Euler-Maclaurin, above from
  /// Riemann-Siegel.
  double t_switch = 30.0;
  /// Bisection tolerance for zero ordinates.
  double zero_tol = 1e-9;
  /// Upper limit on the Euler-Maclaurin partial-sum length.
  std::size_t max_em_terms = 20'000'000;
};

/// zeta(sigma + i t) by Euler-Maclaurin summation, sigma >= 1/2.
std::complex<double> zeta_em(double sigma, double t, const AnalyticConfig& cfg = {});

/// Riemann-Siegel theta function, t > 0.
double rs_theta(double t);

/// theta(t) from the complex log-gamma route, valid for every t > 0.
double rs_theta_log_gamma(double t);

/// Hardy's Z(t) = exp(i theta(t)) zeta(1/2 + i t); even in t.
double hardy_z(double t, const AnalyticConfig& cfg = {});

/// Riemann-Siegel main sum plus correction terms. Accurate for t >= 30.
double hardy_z_riemann_siegel(double t);

struct ZeroList {
  std::vector<double> ordinates;
  double t_lo = 0.0;
  double t_hi = 0.0;
};

/// Zeros of Z on (t_lo, t_hi], validated against the counting identity.
ZeroList find_zeros(double t_lo, double t_hi, const AnalyticConfig& cfg = {});

/// arg zeta(1/2 + i t) by continuous variation from sigma = 2.
double arg_zeta_critical(double t, const AnalyticConfig& cfg = {});

/// S(t) = arg zeta(1/2 + i t) / pi.
double s_of_t(double t, const AnalyticConfig& cfg = {});

/// theta(t)/pi + 1 + S(t); an integer away from zero ordinates.
double counting_value(double t, const AnalyticConfig& cfg = {});

/// N(t), the number of zeros with ordinate in (0, t].
long zero_count(double t, const AnalyticConfig& cfg = {});

/// S1(t) = integral of S over [0, t].
double s1_of_t(double t, const AnalyticConfig& cfg = {});

/// Piecewise description of S and S1 on [0, t_max]. Between consecutive zero
/// ordinates S(u) = n - 1 - theta(u)/pi, so S1 is accumulated one smooth
/// piece at a time.
class S1Profile {
 public:
  explicit S1Profile(double t_max, const AnalyticConfig& cfg = {});

  double t_max() const noexcept { return t_max_; }
  const std::vector<double>& zeros() const noexcept { return zeros_; }

  /// S(t) for t in (0, t_max], not at a zero.
  double s(double t) const;
  /// S1(t) for t in [0, t_max].
  double s1(double t) const;
  double operator()(double t) const { return s1(t); }

 private:
  double integrate_piece(double a, double b, long count_below) const;

  double t_max_;
  std::vector<double> zeros_;
  /// s1_at_zero_[j] = S1(zeros_[j]).
  std::vector<double> s1_at_zero_;
};

}  // namespace ladderlab
