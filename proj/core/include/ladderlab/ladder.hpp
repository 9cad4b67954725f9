#pragma once

#include <mutex>
#include <optional>
#include <vector>

#include "ladderlab/moments.hpp"

namespace ladderlab {

// Operational Jacob's ladder. phi1(T) is the unique y with V(y) = J(T), where
// J(T) is the integral of Z^2 over [0, T] and V(y) = y ln y + (c - ln 2 pi) y.
// This is a model of the true ladder that reproduces the spacing
// T^r - T^(r-1) ~ (1 - c) T / ln T and the increments (1 - c) T^(r-1).

enum class LadderMode { quadrature, asymptotic };

const char* to_string(LadderMode mode);

struct LadderConfig {
  LadderMode mode = LadderMode::asymptotic;
  /// Absolute quadrature tolerance per unit cell of J.
  double j_tol = 1e-8;
  /// Absolute tolerance on root locations.
  double root_tol = 1e-9;
};

/// V is strictly increasing for y >= kLadderYMin.
inline constexpr double kLadderYMin = 10.0;

double transfer_v(double y);
double transfer_v_derivative(double y);

struct LadderSequence {
  double base = 0.0;
  std::vector<double> iterates;
  std::vector<double> increments;
  /// Filled on demand: integral of Z^2 over [T^(r-1), T^r].
  std::vector<double> segment_integrals;
  std::vector<double> segment_errors;
};

struct PartitionReport {
  /// (T^(r+1) - T^r) / (T^r - T^(r-1)).
  std::vector<double> increment_ratios;
  /// Consecutive segment-integral ratios.
  std::vector<double> segment_ratios;
  /// segment_integrals[r] / ((1 - c) T^(r-1)).
  std::vector<double> normalized_segments;
  double telescoping_sum = 0.0;
  double whole_integral = 0.0;
  /// Sum of the segment and whole-interval error estimates.
  double error_budget = 0.0;
};

class Ladder {
 public:
  explicit Ladder(LadderConfig cfg = {}, MomentSettings moments = {});

  const LadderConfig& config() const noexcept { return cfg_; }
  const MomentSettings& moments() const noexcept { return moments_; }

  /// J(T): quadrature or asymptotic according to the configured mode.
  double j_integral(double T) const;
  double phi1(double T) const;
  double phi1_inv(double T) const;

  /// [T, phi1_inv(T), ...] with k reverse steps.
  LadderSequence reverse_iterates(double T, int k, bool with_segment_integrals = false) const;

  /// Integral of Z^2 over the first ladder step [T, phi1_inv(T)]; on the
  /// synthetic backend exactly (1 - c) T.
  MomentIntegralResult segment_integral(double T, double tol) const;

 private:
  double j_quadrature(double T) const;
  void extend_table(std::size_t cells) const;
  double z_squared(double t) const;

  LadderConfig cfg_;
  MomentSettings moments_;
  // Unit cells [k, k+1] of the quadrature-mode J, with prefix sums.
  mutable std::mutex table_mutex_;
  mutable std::vector<double> prefix_;
};

PartitionReport partition_report(const LadderSequence& seq, double tol,
                                 const MomentSettings& moments = {});

}  // namespace ladderlab
