#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ladderlab/quadrature.hpp"

namespace ladderlab {

/// |a_n| <= bound * n^kappa for every n >= 1.
struct CoefficientGrowth {
  double bound = 1.0;
  double kappa = 0.0;
};

/// Returns a_1 .. a_count (element 0 is a_1).
using CoefficientTable = std::function<std::vector<double>(std::uint64_t count)>;

struct DirichletSeriesSpec {
  std::string name;
  CoefficientTable coefficients;
  /// Point of absolute convergence at which the series is evaluated.
  double sigma0 = 2.0;
  std::optional<CoefficientGrowth> growth;
  /// Number of nonzero-indexed coefficients for finite lists.
  std::optional<std::uint64_t> length;
  std::optional<double> closed_form_F;
};

DirichletSeriesSpec unit_series(double sigma0 = 2.0);
DirichletSeriesSpec mobius_series(double sigma0 = 2.0);
DirichletSeriesSpec liouville_series(double sigma0 = 2.0);
DirichletSeriesSpec divisor_series(double sigma0 = 2.0);
DirichletSeriesSpec finite_series(std::string name, std::vector<double> coefficients,
                                  double sigma0, double kappa);

/// Parses "<name>:<sigma0>" for a built-in series or "file:<path>".
DirichletSeriesSpec series_from_token(const std::string& token);

/// Coefficient file: header line "sigma0=<value> kappa=<value>", then one
/// coefficient per line for n = 1, 2, ...
DirichletSeriesSpec parse_coefficient_list(std::istream& in, const std::string& name);
DirichletSeriesSpec load_coefficient_file(const std::filesystem::path& path);

/// Checks absolute convergence at sigma0 and F(sigma0; f) > 0.
void validate(const DirichletSeriesSpec& spec);

/// Smallest N whose tail bound sum_{n>N} |a_n| n^-sigma0 is below tol.
std::uint64_t truncation_point(const DirichletSeriesSpec& spec, double tol);

/// f(sigma0 + i t), truncated so the neglected tail is below tol.
std::complex<double> eval_series(const DirichletSeriesSpec& spec, double t, double tol);

/// Precomputed truncated series for repeated evaluation along t.
class SeriesEvaluator {
 public:
  SeriesEvaluator(const DirichletSeriesSpec& spec, double tol);

  std::complex<double> operator()(double t) const;
  double abs_squared(double t) const { return std::norm((*this)(t)); }
  std::uint64_t terms() const noexcept { return weights_.size(); }

 private:
  std::vector<double> weights_;  // a_n n^-sigma0
  std::vector<double> logs_;     // ln n
};

/// F(sigma0; f) = sum |a_n|^2 n^(-2 sigma0).
double big_f(const DirichletSeriesSpec& spec, double tol = 1e-12);

struct MeanSquareOptions {
  /// Tail tolerance for each series evaluation.
  double eval_tol = 1e-3;
  /// Relative quadrature tolerance.
  double rel_tol = 1e-8;
  PanelPolicy policy{1.0};
};

/// integral over [0, T] of |f(sigma0 + i t)|^2.
MomentIntegralResult mean_square_integral(const DirichletSeriesSpec& spec, double T,
                                          const MeanSquareOptions& options = {});

/// (1/T) times the integral over [0, T] of |f(sigma0 + i t)|^2.
double mean_value_estimate(const DirichletSeriesSpec& spec, double T,
                           const MeanSquareOptions& options = {});

struct SeriesFamily {
  std::string id;
  std::vector<DirichletSeriesSpec> members;

  /// Product of F_m(sigma0^m) over the members. Families built by
  /// family_from_string compute it once and share the value across copies.
  double big_f_product() const;

  struct ProductCache {
    std::once_flag once;
    double value = 0.0;
  };
  std::shared_ptr<ProductCache> product_cache;
};

/// Comma-separated list of series tokens, e.g. "unit:2,mobius:2".
SeriesFamily family_from_string(const std::string& text);

/// prod_m { integral over [0, T] of |f_m|^2 }^(1/M).
double family_product_integral(const SeriesFamily& family, double T,
                               const MeanSquareOptions& options = {});

/// M = 2 box integral over [0, T]^2 of |f_1(t_1)|^2 |f_2(t_2)|^2, evaluated
/// with the tensor product of the one-dimensional panels. Returns the box
/// value and the product of the one-dimensional sums on the same panels.
struct BoxFactorization {
  double box_value;
  double product_of_integrals;
};

BoxFactorization box_product_integral(const DirichletSeriesSpec& first,
                                      const DirichletSeriesSpec& second, double T,
                                      const MeanSquareOptions& options = {});

}  // namespace ladderlab
