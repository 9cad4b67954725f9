#pragma once

#include <optional>
#include <string>

#include "ladderlab/analytic.hpp"
#include "ladderlab/quadrature.hpp"

namespace ladderlab {

class S1Profile;

/// Identifies one cached moment integral. `params` echoes every parameter
/// that influences the value.
struct MomentKey {
  std::string kind;
  std::string params;
  double upper = 0.0;
  double tol = 0.0;
};

struct CachedMoment {
  double value = 0.0;
  double abs_error_estimate = 0.0;
};

/// Persistence hook for moment integrals; implemented by CheckpointStore.
class MomentCache {
 public:
  virtual ~MomentCache() = default;
  virtual std::optional<CachedMoment> lookup(const MomentKey& key) const = 0;
  virtual void store(const MomentKey& key, const CachedMoment& moment) = 0;
};

struct MomentSettings {
  Backend backend = Backend::real;
  /// Hardy-Littlewood integrals require sigma >= 1/2 + epsilon.
  double epsilon = 0.05;
  AnalyticConfig analytic{};
  PanelPolicy policy{};
  MomentCache* cache = nullptr;
};

/// Panel width cap for Z(t)^2 above t = 1000.
inline constexpr double kCritPanelWidth = 0.25;

/// integral over [1, T] of |zeta(sigma + i t)|^2. Synthetic: zeta(2 sigma) T.
MomentIntegralResult hl_sigma_integral(double sigma, double T, double tol,
                                       const MomentSettings& settings = {});

/// integral over [T1, T2] of |zeta(1/2 + i t)|^2 = Z(t)^2.
/// Synthetic: Jhat(T2) - Jhat(T1) with Jhat(T) = T ln T + (2c - 1 - ln 2 pi) T.
MomentIntegralResult crit_integral(double T1, double T2, double tol,
                                   const MomentSettings& settings = {});

/// integral over [1, T] of |S1(t)|^(2l). Synthetic: cbar T, where `cbar`
/// must be supplied. A prebuilt profile reaching T may be passed to share
/// the zero list across calls.
MomentIntegralResult s1_moment_integral(int l, double T, double tol,
                                        const MomentSettings& settings = {},
                                        std::optional<double> cbar = std::nullopt,
                                        const S1Profile* profile = nullptr);

/// Leading term T ln T + (2c - 1 - ln 2 pi) T of the integral of Z^2 over
/// [0, T]; zero at T = 0.
double j_asymptotic(double T);

}  // namespace ladderlab
