#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ladderlab/dirichlet.hpp"
#include "ladderlab/fermat.hpp"
#include "ladderlab/ladder.hpp"

namespace ladderlab {

enum class FunctionalKind { prod3, lin3, dprod, divisor };

const char* to_string(FunctionalKind kind);
FunctionalKind functional_kind_from_string(const std::string& text);

/// Everything that determines a functional run.
struct FunctionalParameters {
  int l = 1;
  double sigma = 1.0;
  double cbar = 0.0;
  std::string family_id;
  LadderConfig ladder{};
  Backend backend = Backend::real;
};

/// Finite-tau value of a limit functional whose limit is target_x.
struct FunctionalEstimate {
  FunctionalKind kind = FunctionalKind::prod3;
  double target_x = 0.0;
  double tau = 0.0;
  double estimate = 0.0;
  double deviation = 0.0;
  /// Upper integration limit X the substitution produced.
  double upper_limit = 0.0;
  FunctionalParameters parameters;
};

struct SelbergConstantEstimate {
  int l = 1;
  std::vector<std::pair<double, double>> estimates;  // (T, value / T)
  double adopted = 0.0;

  /// max |a - b| / min(a, b) over all pairs of estimates.
  double spread() const;
};

struct LabSettings {
  LadderConfig ladder{};
  MomentSettings moments{};
  /// Relative tolerance for the moment integrals.
  double rel_tol = 1e-7;
  MeanSquareOptions mean_square{};
  unsigned workers = 1;
};

/// Ratios between the quantities chained by the prod3/dprod/divisor
/// functionals. Each quantity tends to x tau.
struct ChainComparison {
  double target_x = 0.0;
  double tau = 0.0;
  double prod3_inner = 0.0;
  double dprod_inner = 0.0;
  double divisor_segment = 0.0;
  double prod3_over_dprod = 0.0;
  double prod3_over_divisor = 0.0;
  double dprod_over_divisor = 0.0;
};

struct FermatBounds {
  std::uint64_t x_max = 50;
  std::uint64_t y_max = 50;
  std::uint64_t z_max = 50;
  unsigned n_min = 3;
  unsigned n_max = 12;
};

struct FermatScanRow {
  std::uint64_t x, y, z;
  unsigned n;
  std::string exact;
  double float_value;
  double estimate;
  double estimate_deviation_from_one;
  double exact_deviation_from_one;
};

struct FermatScanSummary {
  std::uint64_t tuples = 0;
  std::uint64_t fermat_equalities = 0;
  /// Tuples whose value fell outside the functional's domain; their rows
  /// carry a NaN estimate.
  std::uint64_t evaluation_failures = 0;
  double max_abs_estimate_minus_exact = 0.0;
  /// max |estimate - exact| / max(1, exact).
  double max_rel_estimate_minus_exact = 0.0;
  double min_exact_deviation_from_one = 0.0;
};

class FunctionalLab {
 public:
  explicit FunctionalLab(LabSettings settings = {});

  const LabSettings& settings() const noexcept { return settings_; }
  const Ladder& ladder() const noexcept { return ladder_; }

  /// value/T of the S1 moment integral along an increasing grid of T.
  SelbergConstantEstimate estimate_cbar(int l, std::span<const double> grid) const;

  /// (1/tau) {crit * hl * s1}^(1/3) at X = x tau / ((1-c) cbar zeta(2 sigma))^(1/3).
  FunctionalEstimate prod3(double x, int l, double sigma, double tau, double cbar) const;
  /// (1/tau) {crit/(1-c) + hl/zeta(2 sigma) + s1/cbar} at X = x tau / 3.
  FunctionalEstimate lin3(double x, int l, double sigma, double tau, double cbar) const;
  /// (1/tau) prod_m {integral of |f_m|^2 over [0, X]}^(1/M) at X = x tau / (prod F_m)^(1/M).
  FunctionalEstimate dprod(double x, const SeriesFamily& family, double tau) const;
  /// (1/tau) sum of d(n) over X < n <= phi1_inv(X) at X = x tau / (1 - c).
  FunctionalEstimate divisor(double x, double tau) const;

  ChainComparison chain_compare(double x, int l, double sigma, double cbar,
                                const SeriesFamily& family, double tau) const;

  using RowSink = std::function<void(const FermatScanRow&)>;
  /// Evaluates `evaluate(target_x)` at every Fermat rational in range, in
  /// (x, y, z, n) lexicographic order.
  FermatScanSummary fermat_scan(const FermatBounds& bounds,
                                const std::function<double(double)>& evaluate,
                                const RowSink& sink) const;

 private:
  double zeta_two_sigma(double sigma) const;
  double tol_for(double magnitude) const;

  LabSettings settings_;
  Ladder ladder_;
};

/// divisor functional without a lab object.
FunctionalEstimate divisor_functional(double x, double tau, const Ladder& ladder);

}  // namespace ladderlab
