#include "ladderlab/ladder.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "ladderlab/analytic.hpp"
#include "ladderlab/constants.hpp"
#include "ladderlab/error.hpp"

namespace ladderlab {
namespace {

constexpr int kMaxBracketGrowth = 60;
constexpr int kMaxRootIterations = 400;

// Root of an increasing function on [lo, hi] with f(lo) <= 0 <= f(hi).
// Newton steps from `x`, falling back to bisection whenever a step leaves
// the bracket or the derivative vanishes.
double safeguarded_root(const std::function<double(double)>& f,
                        const std::function<double(double)>& df, double lo, double hi, double x,
                        double tol) {
  for (int it = 0; it < kMaxRootIterations; ++it) {
    const double fx = f(x);
    if (fx == 0.0) return x;
    if (fx < 0.0) {
      lo = x;
    } else {
      hi = x;
    }
    if (hi - lo <= tol) return 0.5 * (lo + hi);
    const double slope = df(x);
    double next = (slope > 0.0) ? x - fx / slope : lo - 1.0;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 0.5 * tol) return next;
    x = next;
  }
  throw Error(ErrorKind::convergence_failure, "root finder did not converge");
}

}  // namespace

const char* to_string(LadderMode mode) {
  return mode == LadderMode::quadrature ? "quadrature" : "asymptotic";
}

double transfer_v(double y) {
  if (!(y >= kLadderYMin)) {
    throw Error(ErrorKind::domain, "transfer_v requires y >= " + std::to_string(kLadderYMin));
  }
  return y * std::log(y) + (kEulerGamma - kLnTwoPi) * y;
}

double transfer_v_derivative(double y) {
  if (!(y >= kLadderYMin)) {
    throw Error(ErrorKind::domain, "transfer_v requires y >= " + std::to_string(kLadderYMin));
  }
  return std::log(y) + 1.0 + kEulerGamma - kLnTwoPi;
}

Ladder::Ladder(LadderConfig cfg, MomentSettings moments)
    : cfg_(cfg), moments_(std::move(moments)), prefix_{0.0} {
  if (!(cfg_.j_tol > 0.0) || !(cfg_.root_tol > 0.0)) {
    throw Error(ErrorKind::domain, "LadderConfig tolerances must be positive");
  }
}

double Ladder::z_squared(double t) const {
  const double z = hardy_z(t, moments_.analytic);
  return z * z;
}

void Ladder::extend_table(std::size_t cells) const {
  MomentSettings cell_settings = moments_;
  cell_settings.cache = nullptr;
  while (prefix_.size() <= cells) {
    const double k = static_cast<double>(prefix_.size() - 1);
    prefix_.push_back(prefix_.back() + crit_integral(k, k + 1.0, cfg_.j_tol, cell_settings).value);
  }
}

double Ladder::j_quadrature(double T) const {
  const auto cell = static_cast<std::size_t>(std::floor(T));
  double base = 0.0;
  {
    std::lock_guard lock(table_mutex_);
    extend_table(cell);
    base = prefix_[cell];
  }
  MomentSettings cell_settings = moments_;
  cell_settings.cache = nullptr;
  return base + crit_integral(static_cast<double>(cell), T, cfg_.j_tol, cell_settings).value;
}

double Ladder::j_integral(double T) const {
  if (!(T >= 0.0) || !std::isfinite(T)) throw Error(ErrorKind::domain, "J(T) requires T >= 0");
  if (cfg_.mode == LadderMode::asymptotic) return j_asymptotic(T);
  return j_quadrature(T);
}

double Ladder::phi1(double T) const {
  const double target = j_integral(T);
  if (!(target > transfer_v(kLadderYMin))) {
    throw Error(ErrorKind::domain,
                "phi1: J(T) must exceed V(" + std::to_string(kLadderYMin) + ") at T = " +
                    std::to_string(T));
  }
  const auto f = [&](double y) { return transfer_v(y) - target; };
  double lo = kLadderYMin;
  double hi = std::max(T, 2.0 * kLadderYMin);
  for (int i = 0; f(hi) < 0.0; ++i) {
    if (i == kMaxBracketGrowth) throw Error(ErrorKind::bracket_failure, "phi1: no upper bracket");
    lo = hi;
    hi *= 2.0;
  }
  return safeguarded_root(f, transfer_v_derivative, lo, hi, 0.5 * (lo + hi), cfg_.root_tol);
}

double Ladder::phi1_inv(double T) const {
  const double target = transfer_v(T);
  if (cfg_.mode == LadderMode::asymptotic) {
    const auto f = [&](double u) { return j_asymptotic(u) - target; };
    const auto df = [](double u) { return std::log(u) + 2.0 * kEulerGamma - kLnTwoPi; };
    double lo = T;
    double hi = 2.0 * T;
    if (f(lo) > 0.0) throw Error(ErrorKind::bracket_failure, "phi1_inv: J(T) already exceeds V(T)");
    for (int i = 0; f(hi) < 0.0; ++i) {
      if (i == kMaxBracketGrowth) {
        throw Error(ErrorKind::bracket_failure, "phi1_inv: no upper bracket");
      }
      lo = hi;
      hi *= 2.0;
    }
    const double guess = std::clamp(T + kOneMinusC * T / std::log(T), lo, hi);
    return safeguarded_root(f, df, lo, hi, guess, cfg_.root_tol);
  }

  // Quadrature mode: locate the unit cell holding the root from the prefix
  // table, then solve inside it with J' = Z^2.
  std::size_t cell = 0;
  double base = 0.0;
  {
    std::lock_guard lock(table_mutex_);
    const auto first = static_cast<std::size_t>(std::floor(T));
    extend_table(first + 1);
    if (prefix_[first] > target) {
      throw Error(ErrorKind::bracket_failure, "phi1_inv: J(T) already exceeds V(T)");
    }
    while (prefix_.back() < target) {
      if (prefix_.size() > 64 * (first + 2)) {
        throw Error(ErrorKind::bracket_failure, "phi1_inv: no upper bracket");
      }
      extend_table(prefix_.size());
    }
    const auto it = std::upper_bound(prefix_.begin() + static_cast<std::ptrdiff_t>(first),
                                     prefix_.end(), target);
    cell = static_cast<std::size_t>(it - prefix_.begin()) - 1;
    base = prefix_[cell];
  }
  MomentSettings cell_settings = moments_;
  cell_settings.cache = nullptr;
  const double lo = std::max(static_cast<double>(cell), T);
  const double hi = static_cast<double>(cell) + 1.0;
  const auto f = [&](double u) {
    return base + crit_integral(static_cast<double>(cell), u, cfg_.j_tol, cell_settings).value -
           target;
  };
  const auto df = [&](double u) { return z_squared(u); };
  return safeguarded_root(f, df, lo, hi, 0.5 * (lo + hi), cfg_.root_tol);
}

LadderSequence Ladder::reverse_iterates(double T, int k, bool with_segment_integrals) const {
  if (k < 0) throw Error(ErrorKind::domain, "reverse_iterates requires k >= 0");
  LadderSequence seq;
  seq.base = T;
  seq.iterates.push_back(T);
  for (int r = 1; r <= k; ++r) {
    const double next = phi1_inv(seq.iterates.back());
    seq.increments.push_back(next - seq.iterates.back());
    seq.iterates.push_back(next);
  }
  if (with_segment_integrals) {
    for (int r = 1; r <= k; ++r) {
      const double lo = seq.iterates[static_cast<std::size_t>(r) - 1];
      const double hi = seq.iterates[static_cast<std::size_t>(r)];
      const auto seg = crit_integral(lo, hi, cfg_.j_tol * std::max(1.0, hi - lo), moments_);
      seq.segment_integrals.push_back(seg.value);
      seq.segment_errors.push_back(seg.abs_error_estimate);
    }
  }
  return seq;
}

MomentIntegralResult Ladder::segment_integral(double T, double tol) const {
  if (moments_.backend == Backend::synthetic) {
    MomentIntegralResult r;
    r.value = kOneMinusC * T;
    r.lower = T;
    r.upper = phi1_inv(T);
    r.backend = Backend::synthetic;
    return r;
  }
  return crit_integral(T, phi1_inv(T), tol, moments_);
}

PartitionReport partition_report(const LadderSequence& seq, double tol,
                                 const MomentSettings& moments) {
  PartitionReport report;
  for (std::size_t r = 1; r < seq.increments.size(); ++r) {
    report.increment_ratios.push_back(seq.increments[r] / seq.increments[r - 1]);
  }
  const auto& seg = seq.segment_integrals;
  for (std::size_t r = 1; r < seg.size(); ++r) report.segment_ratios.push_back(seg[r] / seg[r - 1]);
  for (std::size_t r = 0; r < seg.size(); ++r) {
    report.normalized_segments.push_back(seg[r] / (kOneMinusC * seq.iterates[r]));
    report.telescoping_sum += seg[r];
    report.error_budget += seq.segment_errors.size() > r ? seq.segment_errors[r] : 0.0;
  }
  if (!seg.empty()) {
    const auto whole = crit_integral(seq.iterates.front(), seq.iterates.back(), tol, moments);
    report.whole_integral = whole.value;
    report.error_budget += whole.abs_error_estimate;
  }
  return report;
}

}  // namespace ladderlab
