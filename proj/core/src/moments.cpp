#include "ladderlab/moments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>

#include "ladderlab/constants.hpp"
#include "ladderlab/error.hpp"

namespace ladderlab {
namespace {

std::string analytic_fingerprint(const AnalyticConfig& cfg) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "prec=%a;tswitch=%a;zerotol=%a", cfg.precision_target,
                cfg.t_switch, cfg.zero_tol);
  return buf;
}

// Runs `compute` unless the cache already holds the integral.
template <typename Compute>
MomentIntegralResult cached(const MomentSettings& settings, const MomentKey& key, double lower,
                            Compute&& compute) {
  if (settings.cache != nullptr) {
    if (auto hit = settings.cache->lookup(key)) {
      MomentIntegralResult r;
      r.value = hit->value;
      r.abs_error_estimate = hit->abs_error_estimate;
      r.lower = lower;
      r.upper = key.upper;
      r.backend = Backend::real;
      return r;
    }
  }
  MomentIntegralResult r = compute();
  if (settings.cache != nullptr) {
    settings.cache->store(key, {r.value, r.abs_error_estimate});
  }
  return r;
}

MomentIntegralResult synthetic(double lower, double upper, double value) {
  MomentIntegralResult r;
  r.value = value;
  r.lower = lower;
  r.upper = upper;
  r.backend = Backend::synthetic;
  return r;
}

}  // namespace

double j_asymptotic(double T) {
  if (T < 0.0) throw Error(ErrorKind::domain, "j_asymptotic requires T >= 0");
  if (T == 0.0) return 0.0;
  return T * std::log(T) + (2.0 * kEulerGamma - 1.0 - kLnTwoPi) * T;
}

MomentIntegralResult hl_sigma_integral(double sigma, double T, double tol,
                                       const MomentSettings& settings) {
  if (!(sigma >= 0.5 + settings.epsilon)) {
    throw Error(ErrorKind::domain, "hl_sigma_integral requires sigma >= 1/2 + epsilon");
  }
  if (!(T >= 1.0)) throw Error(ErrorKind::domain, "hl_sigma_integral requires T >= 1");
  if (settings.backend == Backend::synthetic) {
    return synthetic(1.0, T, zeta_em(2.0 * sigma, 0.0, settings.analytic).real() * T);
  }
  char params[96];
  std::snprintf(params, sizeof params, "sigma=%a;", sigma);
  const MomentKey key{"hl", params + analytic_fingerprint(settings.analytic), T, tol};
  return cached(settings, key, 1.0, [&] {
    const auto integrand = [&](double t) { return std::norm(zeta_em(sigma, t, settings.analytic)); };
    PanelPolicy policy = settings.policy;
    policy.max_width = std::min(policy.max_width, 1.0);
    return integrate_adaptive(integrand, 1.0, T, tol, {}, policy);
  });
}

MomentIntegralResult crit_integral(double T1, double T2, double tol,
                                   const MomentSettings& settings) {
  if (!(T1 >= 0.0) || !(T1 <= T2) || !std::isfinite(T2)) {
    throw Error(ErrorKind::domain, "crit_integral requires 0 <= T1 <= T2");
  }
  if (settings.backend == Backend::synthetic) {
    return synthetic(T1, T2, j_asymptotic(T2) - j_asymptotic(T1));
  }
  if (T1 == T2) {
    MomentIntegralResult r;
    r.lower = T1;
    r.upper = T2;
    return r;
  }
  char params[96];
  std::snprintf(params, sizeof params, "lower=%a;", T1);
  const MomentKey key{"crit", params + analytic_fingerprint(settings.analytic), T2, tol};
  auto result = cached(settings, key, T1, [&] {
    const auto integrand = [&](double t) {
      const double z = hardy_z(t, settings.analytic);
      return z * z;
    };
    PanelPolicy policy = settings.policy;
    policy.max_width = std::min(policy.max_width, kCritPanelWidth);
    return integrate_adaptive(integrand, T1, T2, tol, {}, policy);
  });
  // Accuracy of Z itself: |int Z^2 - int Zhat^2| <= d (2 sqrt(L int Z^2) + d L).
  const double d = settings.analytic.precision_target;
  const double length = T2 - T1;
  result.abs_error_estimate +=
      d * (2.0 * std::sqrt(length * std::abs(result.value)) + d * length);
  return result;
}

MomentIntegralResult s1_moment_integral(int l, double T, double tol,
                                        const MomentSettings& settings, std::optional<double> cbar,
                                        const S1Profile* profile) {
  if (l < 1) throw Error(ErrorKind::domain, "s1_moment_integral requires l >= 1");
  if (!(T >= 1.0)) throw Error(ErrorKind::domain, "s1_moment_integral requires T >= 1");
  if (settings.backend == Backend::synthetic) {
    if (!cbar || !(*cbar > 0.0)) {
      throw Error(ErrorKind::domain, "synthetic S1 moment needs a positive Selberg constant");
    }
    return synthetic(1.0, T, *cbar * T);
  }
  char params[64];
  std::snprintf(params, sizeof params, "l=%d;", l);
  const MomentKey key{"s1", params + analytic_fingerprint(settings.analytic), T, tol};
  return cached(settings, key, 1.0, [&] {
    std::optional<S1Profile> owned;
    if (profile == nullptr || profile->t_max() < T) {
      owned.emplace(T, settings.analytic);
      profile = &*owned;
    }
    const auto integrand = [&](double t) { return std::pow(std::abs(profile->s1(t)), 2 * l); };
    PanelPolicy policy = settings.policy;
    policy.max_width = std::min(policy.max_width, 1.0);
    return integrate_adaptive(integrand, 1.0, T, tol, profile->zeros(), policy);
  });
}

}  // namespace ladderlab
