#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace ladderlab {

enum class Backend { real, synthetic };

const char* to_string(Backend backend);

struct MomentIntegralResult {
  double value = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double abs_error_estimate = 0.0;
  std::size_t panels_used = 0;
  Backend backend = Backend::real;
};

/// One accepted Gauss-Kronrod panel.
struct Panel {
  double a;
  double b;
  double value;
  double error;
};

struct PanelPolicy {
  /// Initial panels are no wider than this.
  double max_width = std::numeric_limits<double>::infinity();
  std::size_t max_panels = std::size_t{1} << 22;
  /// Initial panels are refined independently, so the result does not
  /// depend on this.
  unsigned workers = 1;
};

/// Locally adaptive 21-point Gauss-Kronrod integration of f over [a, b].
///
/// The interval is first cut at every breakpoint strictly inside (a, b) and
/// then into pieces no wider than `policy.max_width`. Each piece receives a
/// share of `tol` proportional to its width and is bisected until its error
/// estimate meets that share. Accepted panels are summed left to right.
/// Throws Error(tolerance_not_met) when the panel budget runs out and
/// Error(non_finite) when f returns NaN or infinity.
MomentIntegralResult integrate_adaptive(const std::function<double(double)>& f, double a,
                                        double b, double tol,
                                        std::span<const double> breakpoints = {},
                                        const PanelPolicy& policy = {});

/// Same as integrate_adaptive, returning the accepted panels in order.
std::vector<Panel> adaptive_panels(const std::function<double(double)>& f, double a, double b,
                                   double tol, std::span<const double> breakpoints = {},
                                   const PanelPolicy& policy = {});

/// Abscissae of the 21-point Kronrod rule on `panel`, in ascending order,
/// and the matching weights.
void kronrod_nodes(double a, double b, std::span<double, 21> nodes,
                   std::span<double, 21> weights);

}  // namespace ladderlab
