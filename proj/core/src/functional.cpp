#include "ladderlab/functional.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

#include "ladderlab/constants.hpp"
#include "ladderlab/divisor.hpp"
#include "ladderlab/error.hpp"

namespace ladderlab {
namespace {

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw Error(ErrorKind::domain, std::string(what) + " must be positive and finite");
  }
}

FunctionalEstimate make_estimate(FunctionalKind kind, double x, double tau, double estimate,
                                 double upper, FunctionalParameters params) {
  if (!std::isfinite(estimate)) throw Error(ErrorKind::non_finite, "functional estimate is not finite");
  FunctionalEstimate out;
  out.kind = kind;
  out.target_x = x;
  out.tau = tau;
  out.estimate = estimate;
  out.deviation = estimate - x;
  out.upper_limit = upper;
  out.parameters = std::move(params);
  return out;
}

}  // namespace

const char* to_string(FunctionalKind kind) {
  switch (kind) {
    case FunctionalKind::prod3: return "prod3";
    case FunctionalKind::lin3: return "lin3";
    case FunctionalKind::dprod: return "dprod";
    case FunctionalKind::divisor: return "divisor";
  }
  return "?";
}

FunctionalKind functional_kind_from_string(const std::string& text) {
  for (const auto kind : {FunctionalKind::prod3, FunctionalKind::lin3, FunctionalKind::dprod,
                          FunctionalKind::divisor}) {
    if (text == to_string(kind)) return kind;
  }
  throw Error(ErrorKind::usage, "unknown functional kind '" + text + "'");
}

double SelbergConstantEstimate::spread() const {
  double worst = 0.0;
  for (const auto& [ta, a] : estimates) {
    for (const auto& [tb, b] : estimates) {
      worst = std::max(worst, std::abs(a - b) / std::min(a, b));
    }
  }
  return worst;
}

FunctionalLab::FunctionalLab(LabSettings settings)
    : settings_(std::move(settings)), ladder_(settings_.ladder, settings_.moments) {
  settings_.moments.policy.workers = std::max(1u, settings_.workers);
}

double FunctionalLab::zeta_two_sigma(double sigma) const {
  return zeta_em(2.0 * sigma, 0.0, settings_.moments.analytic).real();
}

double FunctionalLab::tol_for(double magnitude) const {
  return settings_.rel_tol * std::abs(magnitude);
}

SelbergConstantEstimate FunctionalLab::estimate_cbar(int l, std::span<const double> grid) const {
  if (grid.empty()) throw Error(ErrorKind::domain, "estimate_cbar needs a nonempty grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= 1.0) || (i > 0 && !(grid[i] > grid[i - 1]))) {
      throw Error(ErrorKind::domain, "estimate_cbar grid must be increasing and >= 1");
    }
  }
  MomentSettings real = settings_.moments;
  real.backend = Backend::real;
  const S1Profile profile(grid.back(), real.analytic);
  SelbergConstantEstimate out;
  out.l = l;
  for (const double T : grid) {
    const auto r = s1_moment_integral(l, T, tol_for(T), real, std::nullopt, &profile);
    out.estimates.emplace_back(T, r.value / T);
  }
  out.adopted = out.estimates.back().second;
  if (!(out.adopted > 0.0)) {
    throw Error(ErrorKind::convergence_failure, "Selberg constant estimate is not positive");
  }
  return out;
}

FunctionalEstimate FunctionalLab::prod3(double x, int l, double sigma, double tau,
                                        double cbar) const {
  require_positive(x, "x");
  require_positive(tau, "tau");
  require_positive(cbar, "cbar");
  const double zeta = zeta_two_sigma(sigma);
  const double X = x * tau / std::cbrt(kOneMinusC * cbar * zeta);
  const auto crit = ladder_.segment_integral(X, tol_for(kOneMinusC * X));
  const auto hl = hl_sigma_integral(sigma, X, tol_for(zeta * X), settings_.moments);
  const auto s1 = s1_moment_integral(l, X, tol_for(cbar * X), settings_.moments, cbar);
  const double estimate = std::cbrt(crit.value * hl.value * s1.value) / tau;
  return make_estimate(FunctionalKind::prod3, x, tau, estimate, X,
                       {l, sigma, cbar, {}, settings_.ladder, settings_.moments.backend});
}

FunctionalEstimate FunctionalLab::lin3(double x, int l, double sigma, double tau,
                                       double cbar) const {
  require_positive(x, "x");
  require_positive(tau, "tau");
  require_positive(cbar, "cbar");
  const double zeta = zeta_two_sigma(sigma);
  const double X = x * tau / 3.0;
  const auto crit = ladder_.segment_integral(X, tol_for(kOneMinusC * X));
  const auto hl = hl_sigma_integral(sigma, X, tol_for(zeta * X), settings_.moments);
  const auto s1 = s1_moment_integral(l, X, tol_for(cbar * X), settings_.moments, cbar);
  const double estimate = (crit.value / kOneMinusC + hl.value / zeta + s1.value / cbar) / tau;
  return make_estimate(FunctionalKind::lin3, x, tau, estimate, X,
                       {l, sigma, cbar, {}, settings_.ladder, settings_.moments.backend});
}

FunctionalEstimate FunctionalLab::dprod(double x, const SeriesFamily& family, double tau) const {
  require_positive(x, "x");
  require_positive(tau, "tau");
  if (family.members.empty()) throw Error(ErrorKind::domain, "series family is empty");
  const double scale =
      std::pow(family.big_f_product(), 1.0 / static_cast<double>(family.members.size()));
  const double X = x * tau / scale;
  double inner = 0.0;
  if (settings_.moments.backend == Backend::synthetic) {
    inner = scale * X;
  } else {
    inner = family_product_integral(family, X, settings_.mean_square);
  }
  FunctionalParameters params;
  params.family_id = family.id;
  params.ladder = settings_.ladder;
  params.backend = settings_.moments.backend;
  return make_estimate(FunctionalKind::dprod, x, tau, inner / tau, X, std::move(params));
}

FunctionalEstimate divisor_functional(double x, double tau, const Ladder& ladder) {
  require_positive(x, "x");
  require_positive(tau, "tau");
  const double X = x * tau / kOneMinusC;
  const double upper = ladder.phi1_inv(X);
  double inner = 0.0;
  if (ladder.moments().backend == Backend::synthetic) {
    inner = kOneMinusC * X;
  } else {
    inner = static_cast<double>(segment_sum(X, upper).value);
  }
  FunctionalParameters params;
  params.ladder = ladder.config();
  params.backend = ladder.moments().backend;
  return make_estimate(FunctionalKind::divisor, x, tau, inner / tau, X, std::move(params));
}

FunctionalEstimate FunctionalLab::divisor(double x, double tau) const {
  return divisor_functional(x, tau, ladder_);
}

ChainComparison FunctionalLab::chain_compare(double x, int l, double sigma, double cbar,
                                             const SeriesFamily& family, double tau) const {
  ChainComparison out;
  out.target_x = x;
  out.tau = tau;
  out.prod3_inner = prod3(x, l, sigma, tau, cbar).estimate * tau;
  out.dprod_inner = dprod(x, family, tau).estimate * tau;
  out.divisor_segment = divisor(x, tau).estimate * tau;
  out.prod3_over_dprod = out.prod3_inner / out.dprod_inner;
  out.prod3_over_divisor = out.prod3_inner / out.divisor_segment;
  out.dprod_over_divisor = out.dprod_inner / out.divisor_segment;
  return out;
}

FermatScanSummary FunctionalLab::fermat_scan(const FermatBounds& bounds,
                                             const std::function<double(double)>& evaluate,
                                             const RowSink& sink) const {
  if (bounds.x_max < 1 || bounds.y_max < 1 || bounds.z_max < 1) {
    throw Error(ErrorKind::domain, "Fermat bounds must be at least 1");
  }
  if (bounds.n_min < 3 || bounds.n_max < bounds.n_min) {
    throw Error(ErrorKind::domain, "Fermat bounds need 3 <= n_min <= n_max");
  }
  const std::uint64_t base_max = std::max({bounds.x_max, bounds.y_max, bounds.z_max});
  // powers[b][n - n_min] = b^n
  std::vector<std::vector<mpz_class>> powers(base_max + 1);
  for (std::uint64_t b = 1; b <= base_max; ++b) {
    for (unsigned n = bounds.n_min; n <= bounds.n_max; ++n) {
      mpz_class p;
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(b), n);
      powers[b].push_back(std::move(p));
    }
  }

  struct Block {
    std::vector<FermatScanRow> rows;
    std::uint64_t tuples = 0;
    std::uint64_t equalities = 0;
    std::uint64_t failures = 0;
    double max_gap = 0.0;
    double max_rel_gap = 0.0;
    double min_exact_dev = std::numeric_limits<double>::infinity();
  };
  const auto scan_x = [&](std::uint64_t x) {
    Block block;
    for (std::uint64_t y = 1; y <= bounds.y_max; ++y) {
      for (std::uint64_t z = 1; z <= bounds.z_max; ++z) {
        for (unsigned n = bounds.n_min; n <= bounds.n_max; ++n) {
          const std::size_t j = n - bounds.n_min;
          ++block.tuples;
          const mpz_class& xn = powers[x][j];
          const mpz_class& yn = powers[y][j];
          const mpz_class& zn = powers[z][j];
          if (xn + yn == zn) {
            ++block.equalities;
            continue;
          }
          const auto r = FermatRational::from_powers(x, y, z, n, xn, yn, zn);
          double estimate = std::numeric_limits<double>::quiet_NaN();
          try {
            estimate = evaluate(r.float_value());
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::domain) throw;
            ++block.failures;
          }
          const mpq_class gap = r.exact_value() - 1;
          const double exact_dev = std::abs(gap.get_d());
          if (!std::isnan(estimate)) {
            const double diff = std::abs(estimate - r.float_value());
            block.max_gap = std::max(block.max_gap, diff);
            block.max_rel_gap = std::max(block.max_rel_gap, diff / std::max(1.0, r.float_value()));
          }
          block.min_exact_dev = std::min(block.min_exact_dev, exact_dev);
          if (sink) {
            block.rows.push_back({x, y, z, n, r.exact_string(), r.float_value(), estimate,
                                  std::abs(estimate - 1.0), exact_dev});
          }
        }
      }
    }
    return block;
  };

  FermatScanSummary summary;
  summary.min_exact_deviation_from_one = std::numeric_limits<double>::infinity();
  const std::uint64_t workers = std::max(1u, settings_.workers);
  for (std::uint64_t first = 1; first <= bounds.x_max; first += workers) {
    const std::uint64_t last = std::min(bounds.x_max, first + workers - 1);
    std::vector<Block> blocks(last - first + 1);
    std::vector<std::exception_ptr> failures(blocks.size());
    {
      std::vector<std::jthread> threads;
      for (std::uint64_t x = first + 1; x <= last; ++x) {
        threads.emplace_back([&, x] {
          try {
            blocks[x - first] = scan_x(x);
          } catch (...) {
            failures[x - first] = std::current_exception();
          }
        });
      }
      blocks[0] = scan_x(first);
    }
    for (const auto& failure : failures) {
      if (failure) std::rethrow_exception(failure);
    }
    for (auto& block : blocks) {
      summary.tuples += block.tuples;
      summary.fermat_equalities += block.equalities;
      summary.evaluation_failures += block.failures;
      summary.max_rel_estimate_minus_exact =
          std::max(summary.max_rel_estimate_minus_exact, block.max_rel_gap);
      summary.max_abs_estimate_minus_exact =
          std::max(summary.max_abs_estimate_minus_exact, block.max_gap);
      summary.min_exact_deviation_from_one =
          std::min(summary.min_exact_deviation_from_one, block.min_exact_dev);
      for (const auto& row : block.rows) sink(row);
    }
  }
  return summary;
}

}  // namespace ladderlab
