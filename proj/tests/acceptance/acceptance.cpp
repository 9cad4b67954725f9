#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "ladderlab/analytic.hpp"
#include "ladderlab/arith.hpp"
#include "ladderlab/constants.hpp"
#include "ladderlab/dirichlet.hpp"
#include "ladderlab/divisor.hpp"
#include "ladderlab/error.hpp"
#include "ladderlab/functional.hpp"
#include "ladderlab/ladder.hpp"
#include "oracle_values.hpp"

using namespace ladderlab;

namespace {

// Tolerances and limits, fixed.
constexpr double kZetaOracleTol = 1e-10;
constexpr double kHardyConsistencyTol = 1e-8;
constexpr double kC1Seconds = 10.0;
constexpr double kIntegralityTol = 1e-6;
constexpr double kC2Seconds = 120.0;
constexpr double kHardyLittlewoodRelTol = 0.02;
constexpr double kC3Seconds = 300.0;
constexpr double kCrossModeRelTol = 0.02;
constexpr double kC4Seconds = 300.0;
constexpr double kIncrementLow = 0.9;
constexpr double kIncrementHigh = 1.1;
constexpr double kRatioLow = 0.95;
constexpr double kRatioHigh = 1.05;
constexpr double kMeanValueRelTol = 0.02;
constexpr double kSyntheticTol = 1e-12;
constexpr double kC8Seconds = 1.0;
constexpr double kC10Seconds = 60.0;
constexpr double kFermatRelTol = 1e-12;
constexpr double kC11Seconds = 60.0;
constexpr double kSelbergSpreadTol = 0.10;

// Criteria known to fail at desk scale. They still print FAIL; the exit status
// reports only unexpected outcomes.
constexpr std::array kExpectedFailures{9};

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass;
  std::string detail;
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

int failures = 0;
int unexpected = 0;

bool expected_to_fail(int id) {
  return std::find(kExpectedFailures.begin(), kExpectedFailures.end(), id) !=
         kExpectedFailures.end();
}

void report(int id, const char* title, const std::function<Verdict()>& check) {
  const auto start = Clock::now();
  Verdict v;
  try {
    v = check();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (!v.pass) ++failures;
  if (v.pass == expected_to_fail(id)) ++unexpected;
  std::printf("%s C%02d %s: %s [%.1f s]%s\n", v.pass ? "PASS" : "FAIL", id, title,
              v.detail.c_str(), secs,
              v.pass == expected_to_fail(id) ? (v.pass ? " (unexpected pass)" : "") : "");
  std::fflush(stdout);
}

double elapsed(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Verdict c1_oracle() {
  const auto start = Clock::now();
  double zeta_err = 0.0;
  for (const auto& s : oracle::kZetaSamples) {
    zeta_err = std::max(zeta_err, std::abs(zeta_em(s.sigma, s.t) - std::complex<double>(s.re, s.im)));
  }
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> height(50.0, 500.0);
  double z_err = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double t = height(rng);
    z_err = std::max(z_err, std::abs(std::abs(hardy_z(t)) - std::abs(zeta_em(0.5, t))));
  }
  const double secs = elapsed(start);
  return {zeta_err < kZetaOracleTol && z_err < kHardyConsistencyTol && secs < kC1Seconds,
          fmt("zeta max err %.2e (tol %.0e), |Z|-|zeta| max %.2e (tol %.0e), %.2f s (limit %.0f s)",
              zeta_err, kZetaOracleTol, z_err, kHardyConsistencyTol, secs, kC1Seconds)};
}

Verdict c2_counting() {
  const auto start = Clock::now();
  std::mt19937_64 rng(102);
  std::uniform_real_distribution<double> height(0.0, 1000.0);
  std::vector<double> ts;
  while (ts.size() < 100) {
    const double t = height(rng);
    if (t > 0.0) ts.push_back(t);
  }
  std::sort(ts.begin(), ts.end());
  double worst = 0.0;
  bool monotone = true;
  std::vector<long> counts;
  for (const double t : ts) {
    const double v = rs_theta(t) / kPi + 1.0 + s_of_t(t);
    worst = std::max(worst, std::abs(v - std::round(v)));
    const long n = std::lround(v);
    if (!counts.empty() && n < counts.back()) monotone = false;
    counts.push_back(n);
  }
  bool match = true;
  for (std::size_t i = 0; i < 10; ++i) {
    const std::size_t a = 10 * i;
    const std::size_t b = 10 * i + 9;
    const auto zeros = find_zeros(ts[a], ts[b]);
    if (static_cast<long>(zeros.ordinates.size()) != counts[b] - counts[a]) match = false;
  }
  const double secs = elapsed(start);
  return {worst < kIntegralityTol && monotone && match && secs < kC2Seconds,
          fmt("max distance to integer %.2e (tol %.0e), nondecreasing %s, zero counts on 10 "
              "subintervals %s, %.1f s (limit %.0f s)",
              worst, kIntegralityTol, monotone ? "yes" : "no", match ? "match" : "differ", secs,
              kC2Seconds)};
}

Verdict c3_hardy_littlewood() {
  const auto start = Clock::now();
  const double T = 3000.0;
  const auto r = hl_sigma_integral(1.0, T, 1e-7 * T);
  const double rel = std::abs(r.value / T - oracle::kZeta2) / oracle::kZeta2;
  const double secs = elapsed(start);
  return {rel < kHardyLittlewoodRelTol && secs < kC3Seconds,
          fmt("integral/T = %.6f vs zeta(2) = %.6f, rel dev %.3e (tol %.2f), %.1f s (limit %.0f s)",
              r.value / T, oracle::kZeta2, rel, kHardyLittlewoodRelTol, secs, kC3Seconds)};
}

Verdict c4_cross_mode() {
  const auto start = Clock::now();
  LadderConfig cfg;
  cfg.mode = LadderMode::quadrature;
  const Ladder ladder(cfg);
  const double J = ladder.j_integral(5000.0);
  const double rel = std::abs(J - j_asymptotic(5000.0)) / J;
  const double secs = elapsed(start);
  return {rel < kCrossModeRelTol && secs < kC4Seconds,
          fmt("J(5000) = %.4f, Jhat(5000) = %.4f, rel diff %.3e (tol %.2f), %.1f s (limit %.0f s)",
              J, j_asymptotic(5000.0), rel, kCrossModeRelTol, secs, kC4Seconds)};
}

Verdict c5_increment() {
  LadderConfig cfg;
  cfg.mode = LadderMode::quadrature;
  const Ladder ladder(cfg);
  std::vector<double> ratios;
  for (const double T : {1e3, 1e4}) {
    const double U = ladder.phi1_inv(T);
    const auto seg = crit_integral(T, U, 1e-9 * (U - T));
    ratios.push_back(seg.value / (kOneMinusC * T));
  }
  const bool in_band = std::all_of(ratios.begin(), ratios.end(), [](double r) {
    return r >= kIncrementLow && r <= kIncrementHigh;
  });
  const bool closer = std::abs(ratios[1] - 1.0) < std::abs(ratios[0] - 1.0);
  return {in_band && closer,
          fmt("ratio at 1e3 = %.5f, at 1e4 = %.5f (band [%.1f, %.1f]), 1e4 closer to 1: %s",
              ratios[0], ratios[1], kIncrementLow, kIncrementHigh, closer ? "yes" : "no")};
}

Verdict c6_partition() {
  const Ladder asymptotic;
  const auto seq = asymptotic.reverse_iterates(1e4, 5);
  bool increasing = true;
  for (std::size_t r = 1; r < seq.iterates.size(); ++r) {
    increasing = increasing && seq.iterates[r] > seq.iterates[r - 1];
  }
  const auto report = partition_report(seq, 1.0);
  double lo = 1e9, hi = -1e9;
  for (const double q : report.increment_ratios) {
    lo = std::min(lo, q);
    hi = std::max(hi, q);
  }
  const bool ratios_ok = !report.increment_ratios.empty() && lo >= kRatioLow && hi <= kRatioHigh;

  LadderConfig cfg;
  cfg.mode = LadderMode::quadrature;
  const Ladder quadrature(cfg);
  const auto spot = quadrature.reverse_iterates(1e4, 2, true);
  const auto spot_report =
      partition_report(spot, cfg.j_tol * (spot.iterates.back() - spot.iterates.front()));
  const double gap = std::abs(spot_report.telescoping_sum - spot_report.whole_integral);
  const bool telescopes = gap <= spot_report.error_budget;
  return {increasing && ratios_ok && telescopes,
          fmt("chain increasing %s, increment ratios in [%.5f, %.5f] (band [%.2f, %.2f]), "
              "telescoping gap %.2e <= error budget %.2e: %s",
              increasing ? "yes" : "no", lo, hi, kRatioLow, kRatioHigh, gap,
              spot_report.error_budget, telescopes ? "yes" : "no")};
}

Verdict c7_mean_value() {
  const double unit = mean_value_estimate(unit_series(2.0), 500.0);
  const double mobius = mean_value_estimate(mobius_series(2.0), 500.0);
  const double unit_target = oracle::kZeta4;
  const double mobius_target = oracle::kZeta4 / oracle::kZeta8;
  const double unit_rel = std::abs(unit / unit_target - 1.0);
  const double mobius_rel = std::abs(mobius / mobius_target - 1.0);
  return {unit_rel < kMeanValueRelTol && mobius_rel < kMeanValueRelTol,
          fmt("unit %.6f vs zeta(4) %.6f (rel %.2e), mobius %.6f vs zeta(4)/zeta(8) %.6f "
              "(rel %.2e), tol %.2f",
              unit, unit_target, unit_rel, mobius, mobius_target, mobius_rel, kMeanValueRelTol)};
}

Verdict c8_synthetic() {
  const auto start = Clock::now();
  LabSettings s;
  s.moments.backend = Backend::synthetic;
  const FunctionalLab lab(s);
  const auto family = family_from_string("unit:2,mobius:2");
  const double cbar = 0.75;
  std::mt19937_64 rng(108);
  std::uniform_real_distribution<double> target(0.0, 10.0);
  double worst = 0.0;
  double worst_ratio = 0.0;
  for (int i = 0; i < 50; ++i) {
    double x = target(rng);
    if (x == 0.0) x = 10.0;
    for (const double tau : {1e5, 1e6}) {
      for (const double e : {lab.prod3(x, 1, 1.0, tau, cbar).estimate,
                             lab.lin3(x, 1, 1.0, tau, cbar).estimate,
                             lab.dprod(x, family, tau).estimate, lab.divisor(x, tau).estimate}) {
        worst = std::max(worst, std::abs(e - x));
      }
      const auto c = lab.chain_compare(x, 1, 1.0, cbar, family, tau);
      for (const double r : {c.prod3_over_dprod, c.prod3_over_divisor, c.dprod_over_divisor}) {
        worst_ratio = std::max(worst_ratio, std::abs(r - 1.0));
      }
    }
  }
  const double secs = elapsed(start);
  return {worst < kSyntheticTol && worst_ratio < kSyntheticTol && secs < kC8Seconds,
          fmt("max |estimate - x| %.2e, max |ratio - 1| %.2e (tol %.0e), %.3f s (limit %.0f s)",
              worst, worst_ratio, kSyntheticTol, secs, kC8Seconds)};
}

Verdict c9_trend() {
  const FunctionalLab lab;
  const std::vector<double> cbar_grid{500.0, 1000.0};
  const double cbar = lab.estimate_cbar(1, cbar_grid).adopted;
  const auto family = family_from_string("unit:2,mobius:2");
  const std::vector<double> taus{1000.0, 2000.0, 4000.0, 8000.0};
  const std::vector<std::pair<const char*, std::function<double(double, double)>>> kinds{
      {"prod3", [&](double x, double tau) { return lab.prod3(x, 1, 1.0, tau, cbar).estimate; }},
      {"lin3", [&](double x, double tau) { return lab.lin3(x, 1, 1.0, tau, cbar).estimate; }},
      {"dprod", [&](double x, double tau) { return lab.dprod(x, family, tau).estimate; }},
      {"divisor", [&](double x, double tau) { return lab.divisor(x, tau).estimate; }},
  };
  bool all = true;
  std::ostringstream detail;
  detail << "tau grid 1e3..8e3, cbar " << fmt("%.4f", cbar);
  for (const auto& [name, eval] : kinds) {
    for (const double x : {1.0, 0.728}) {
      const double first = std::abs(eval(x, taus.front()) - x);
      const double last = std::abs(eval(x, taus.back()) - x);
      const bool ok = last < first;
      all = all && ok;
      detail << fmt("; %s x=%g: %.2e -> %.2e%s", name, x, first, last, ok ? "" : " (not smaller)");
    }
  }
  return {all, detail.str()};
}

Verdict c10_divisor() {
  const auto start = Clock::now();
  const auto d = divisor_count_table(100000);
  std::uint64_t running = 0;
  bool exact = true;
  for (std::uint64_t n = 1; n <= 100000; ++n) {
    running += divisor_d(n);
    exact = exact && running == dirichlet_sum_D(n) && d[n] == divisor_d(n);
  }
  exact = exact && dirichlet_sum_D(std::uint64_t{0}) == 0;
  const Ladder ladder;
  std::mt19937_64 rng(110);
  std::uniform_real_distribution<double> base(std::log(1e3), std::log(1e5));
  bool segments = true;
  for (int i = 0; i < 20; ++i) {
    const double X = std::exp(base(rng));
    const double U = ladder.phi1_inv(X);
    std::uint64_t brute = 0;
    for (auto n = static_cast<std::uint64_t>(std::floor(X)) + 1; n <= std::floor(U); ++n) {
      brute += divisor_d(n);
    }
    segments = segments && segment_sum(X, U).value == brute;
  }
  const double secs = elapsed(start);
  return {exact && segments && secs < kC10Seconds,
          fmt("D(x) equals brute force for x <= 1e5: %s; 20 ladder segments: %s; %.1f s "
              "(limit %.0f s)",
              exact ? "yes" : "no", segments ? "yes" : "no", secs, kC10Seconds)};
}

Verdict c11_fermat() {
  const auto start = Clock::now();
  LabSettings s;
  s.moments.backend = Backend::synthetic;
  const FunctionalLab lab(s);
  const auto family = family_from_string("unit:2,mobius:2");
  const FermatBounds bounds{50, 50, 50, 3, 12};
  const auto summary = lab.fermat_scan(
      bounds, [&](double x) { return lab.dprod(x, family, 1e4).estimate; }, {});
  const double secs = elapsed(start);
  const std::uint64_t expected = 50ull * 50 * 50 * 10;
  return {summary.tuples == expected && summary.fermat_equalities == 0 &&
              summary.evaluation_failures == 0 &&
              summary.max_rel_estimate_minus_exact < kFermatRelTol && secs < kC11Seconds,
          fmt("%llu tuples, %llu equalities, max |estimate - exact|/max(1, exact) %.2e (tol %.0e), "
              "%.1f s (limit %.0f s)",
              static_cast<unsigned long long>(summary.tuples),
              static_cast<unsigned long long>(summary.fermat_equalities),
              summary.max_rel_estimate_minus_exact, kFermatRelTol, secs, kC11Seconds)};
}

Verdict c12_selberg() {
  const FunctionalLab lab;
  const std::vector<double> grid{500.0, 1000.0};
  const auto est = lab.estimate_cbar(1, grid);
  return {est.spread() < kSelbergSpreadTol && est.adopted > 0.0,
          fmt("cbar(500) = %.6f, cbar(1000) = %.6f, spread %.2e (tol %.2f), adopted %.6f",
              est.estimates[0].second, est.estimates[1].second, est.spread(), kSelbergSpreadTol,
              est.adopted)};
}

std::string data_rows(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"ladderlab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  if (status != 0) throw std::runtime_error("command failed: " + err.str());
  std::istringstream in(out.str());
  std::string line, rows;
  std::getline(in, line);  // configuration header with its timestamp
  while (std::getline(in, line)) rows += line + '\n';
  return rows;
}

Verdict c13_determinism() {
  const std::vector<std::vector<std::string>> commands{
      {"eval", "--fn", "zeta", "--sigma", "0.75", "--t", "3,17.5,99"},
      {"eval", "--fn", "s1", "--t", "50,150"},
      {"ladder", "--T", "2000", "--k", "3"},
      {"ladder", "--mode", "quadrature", "--T", "800", "--k", "2"},
      {"functional", "--kind", "dprod", "--x", "0.728", "--tau", "300"},
      {"functional", "--kind", "prod3", "--x", "1", "--tau", "600", "--cbar", "0.746"},
      {"scan", "--backend", "synthetic", "--x-max", "6", "--y-max", "6", "--z-max", "6"},
      {"chain", "--x", "1", "--tau", "600", "--cbar", "0.746"},
  };
  int identical = 0;
  for (const auto& cmd : commands) {
    std::vector<std::string> outputs;
    for (const char* workers : {"1", "4", "1"}) {
      auto args = cmd;
      args.insert(args.begin(), {"--workers", workers});
      outputs.push_back(data_rows(args));
    }
    if (outputs[0] == outputs[1] && outputs[0] == outputs[2] && !outputs[0].empty()) ++identical;
  }
  return {identical == static_cast<int>(commands.size()),
          fmt("%d of %zu commands byte-identical across reruns and worker counts 1/4", identical,
              commands.size())};
}

}  // namespace

int main() {
  report(1, "oracle agreement", c1_oracle);
  report(2, "counting identity", c2_counting);
  report(3, "Hardy-Littlewood mean", c3_hardy_littlewood);
  report(4, "J-integral cross-mode", c4_cross_mode);
  report(5, "ladder increment", c5_increment);
  report(6, "partition properties", c6_partition);
  report(7, "Dirichlet mean value", c7_mean_value);
  report(8, "synthetic functional algebra", c8_synthetic);
  report(9, "real-backend convergence trend", c9_trend);
  report(10, "divisor exactness", c10_divisor);
  report(11, "Fermat scan exactness", c11_fermat);
  report(12, "Selberg-constant stability", c12_selberg);
  report(13, "determinism", c13_determinism);
  std::printf("%d of 13 criteria passed, %zu expected to fail, %d unexpected outcomes\n",
              13 - failures, kExpectedFailures.size(), unexpected);
  return unexpected == 0 ? 0 : 1;
}
