#include "ladderlab/dirichlet.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>

#include "ladderlab/analytic.hpp"
#include "ladderlab/arith.hpp"
#include "ladderlab/error.hpp"

namespace ladderlab {
namespace {

constexpr double kDivisorKappa = 0.3;
constexpr std::uint64_t kMaxTerms = std::uint64_t{1} << 26;
constexpr std::uint64_t kMaxBigFTerms = std::uint64_t{1} << 24;

double zeta_real(double s) {
  AnalyticConfig cfg;
  cfg.precision_target = 1e-15;
  return zeta_em(s, 0.0, cfg).real();
}

// Bound on sum_{n > N} bound * n^(kappa - sigma).
double tail_bound(double bound, double kappa, double sigma, std::uint64_t N) {
  const double excess = sigma - kappa - 1.0;
  return bound * std::pow(static_cast<double>(N), -excess) / excess;
}

// Smallest N >= 1 with tail_bound(N) < tol.
std::uint64_t tail_cutoff(double bound, double kappa, double sigma, double tol) {
  const double excess = sigma - kappa - 1.0;
  if (!(excess > 0.0)) {
    throw Error(ErrorKind::domain, "series is not absolutely convergent at sigma0");
  }
  if (!(tol > 0.0)) throw Error(ErrorKind::domain, "tail tolerance must be positive");
  const double guess = std::ceil(std::pow(bound / (tol * excess), 1.0 / excess));
  if (!(guess < static_cast<double>(kMaxTerms))) {
    throw Error(ErrorKind::precision_unreachable,
                "tail tolerance needs more than " + std::to_string(kMaxTerms) + " terms");
  }
  auto N = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(guess));
  while (N > 1 && tail_bound(bound, kappa, sigma, N - 1) < tol) --N;
  while (!(tail_bound(bound, kappa, sigma, N) < tol)) ++N;
  return N;
}

std::vector<double> to_doubles(const std::vector<int>& table) {
  return {table.begin() + 1, table.end()};
}

double parse_number(const std::string& text, const std::string& context) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || !std::isfinite(value)) {
    throw Error(ErrorKind::domain, context + ": cannot parse '" + text + "' as a number");
  }
  return value;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

DirichletSeriesSpec unit_series(double sigma0) {
  DirichletSeriesSpec spec;
  spec.name = "unit";
  spec.coefficients = [](std::uint64_t count) { return std::vector<double>(count, 1.0); };
  spec.sigma0 = sigma0;
  spec.growth = CoefficientGrowth{1.0, 0.0};
  spec.closed_form_F = zeta_real(2.0 * sigma0);
  return spec;
}

DirichletSeriesSpec mobius_series(double sigma0) {
  DirichletSeriesSpec spec;
  spec.name = "mobius";
  spec.coefficients = [](std::uint64_t count) { return to_doubles(mobius_table(count)); };
  spec.sigma0 = sigma0;
  spec.growth = CoefficientGrowth{1.0, 0.0};
  spec.closed_form_F = zeta_real(2.0 * sigma0) / zeta_real(4.0 * sigma0);
  return spec;
}

DirichletSeriesSpec liouville_series(double sigma0) {
  DirichletSeriesSpec spec;
  spec.name = "liouville";
  spec.coefficients = [](std::uint64_t count) { return to_doubles(liouville_table(count)); };
  spec.sigma0 = sigma0;
  spec.growth = CoefficientGrowth{1.0, 0.0};
  spec.closed_form_F = zeta_real(2.0 * sigma0);
  return spec;
}

DirichletSeriesSpec divisor_series(double sigma0) {
  DirichletSeriesSpec spec;
  spec.name = "divisor";
  spec.coefficients = [](std::uint64_t count) {
    const auto table = divisor_count_table(count);
    return std::vector<double>(table.begin() + 1, table.end());
  };
  spec.sigma0 = sigma0;
  spec.growth = CoefficientGrowth{divisor_growth_constant(kDivisorKappa), kDivisorKappa};
  const double z = zeta_real(2.0 * sigma0);
  spec.closed_form_F = z * z * z * z / zeta_real(4.0 * sigma0);
  return spec;
}

DirichletSeriesSpec finite_series(std::string name, std::vector<double> coefficients,
                                  double sigma0, double kappa) {
  if (coefficients.empty()) throw Error(ErrorKind::domain, "coefficient list is empty");
  double bound = 0.0;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (!std::isfinite(coefficients[i])) {
      throw Error(ErrorKind::domain, "coefficient list contains a non-finite value");
    }
    bound = std::max(bound, std::abs(coefficients[i]) /
                                std::pow(static_cast<double>(i + 1), kappa));
  }
  DirichletSeriesSpec spec;
  spec.name = std::move(name);
  spec.sigma0 = sigma0;
  spec.growth = CoefficientGrowth{bound, kappa};
  spec.length = coefficients.size();
  spec.coefficients = [coeffs = std::move(coefficients)](std::uint64_t count) {
    std::vector<double> out(count, 0.0);
    std::copy_n(coeffs.begin(), std::min<std::uint64_t>(count, coeffs.size()), out.begin());
    return out;
  };
  return spec;
}

DirichletSeriesSpec series_from_token(const std::string& token) {
  const std::string text = trim(token);
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  const std::string rest = colon == std::string::npos ? std::string{} : text.substr(colon + 1);
  if (name == "file") {
    if (rest.empty()) throw Error(ErrorKind::domain, "file: series token needs a path");
    return load_coefficient_file(rest);
  }
  const double sigma0 = rest.empty() ? 2.0 : parse_number(rest, "series '" + text + "'");
  DirichletSeriesSpec spec;
  if (name == "unit") {
    spec = unit_series(sigma0);
  } else if (name == "mobius") {
    spec = mobius_series(sigma0);
  } else if (name == "liouville") {
    spec = liouville_series(sigma0);
  } else if (name == "divisor") {
    spec = divisor_series(sigma0);
  } else {
    throw Error(ErrorKind::domain, "unknown series '" + name +
                                       "' (expected unit, mobius, liouville, divisor or file)");
  }
  validate(spec);
  return spec;
}

DirichletSeriesSpec parse_coefficient_list(std::istream& in, const std::string& name) {
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorKind::domain, name + ": missing header line");
  std::optional<double> sigma0;
  std::optional<double> kappa;
  std::istringstream header(line);
  std::string field;
  while (header >> field) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::domain, name + ": bad header field");
    const std::string key = field.substr(0, eq);
    const double value = parse_number(field.substr(eq + 1), name + " header");
    if (key == "sigma0") {
      sigma0 = value;
    } else if (key == "kappa") {
      kappa = value;
    } else {
      throw Error(ErrorKind::domain, name + ": unknown header key '" + key + "'");
    }
  }
  if (!sigma0 || !kappa) {
    throw Error(ErrorKind::domain, name + ": header must be 'sigma0=<value> kappa=<value>'");
  }
  std::vector<double> coefficients;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string item = trim(line);
    if (item.empty()) continue;
    coefficients.push_back(parse_number(item, name + " line " + std::to_string(line_no)));
  }
  auto spec = finite_series(name, std::move(coefficients), *sigma0, *kappa);
  validate(spec);
  return spec;
}

DirichletSeriesSpec load_coefficient_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io, "cannot open coefficient file " + path.string());
  return parse_coefficient_list(in, "file:" + path.string());
}

void validate(const DirichletSeriesSpec& spec) {
  if (!spec.coefficients) throw Error(ErrorKind::domain, spec.name + ": no coefficients");
  if (!std::isfinite(spec.sigma0)) throw Error(ErrorKind::domain, spec.name + ": bad sigma0");
  if (!spec.growth && !spec.length) {
    throw Error(ErrorKind::tail_bound_unavailable, spec.name + ": no coefficient growth data");
  }
  if (spec.growth && !spec.length && !(spec.sigma0 > spec.growth->kappa + 1.0)) {
    throw Error(ErrorKind::domain,
                spec.name + ": not absolutely convergent at sigma0 = " + std::to_string(spec.sigma0));
  }
  // The growth metadata must hold on an initial stretch of coefficients.
  if (spec.growth) {
    const std::uint64_t probe = spec.length ? std::min<std::uint64_t>(*spec.length, 4096) : 4096;
    const auto a = spec.coefficients(probe);
    for (std::uint64_t n = 1; n <= probe; ++n) {
      const double limit = spec.growth->bound * std::pow(static_cast<double>(n), spec.growth->kappa);
      if (std::abs(a[n - 1]) > limit * (1.0 + 1e-12)) {
        throw Error(ErrorKind::domain, spec.name + ": coefficient " + std::to_string(n) +
                                           " exceeds its growth bound");
      }
    }
  }
  const double F = big_f(spec, 1e-6);
  if (!(F > 0.0) || !std::isfinite(F)) {
    throw Error(ErrorKind::domain, spec.name + ": F(sigma0) must be finite and positive");
  }
}

std::uint64_t truncation_point(const DirichletSeriesSpec& spec, double tol) {
  if (!spec.growth) {
    if (spec.length) return *spec.length;
    throw Error(ErrorKind::tail_bound_unavailable, spec.name + ": no coefficient growth data");
  }
  if (spec.length) {
    const double excess = spec.sigma0 - spec.growth->kappa - 1.0;
    if (!(excess > 0.0) ||
        std::pow(spec.growth->bound / (tol * excess), 1.0 / excess) >= static_cast<double>(*spec.length)) {
      return *spec.length;
    }
  }
  const std::uint64_t N = tail_cutoff(spec.growth->bound, spec.growth->kappa, spec.sigma0, tol);
  return spec.length ? std::min(N, *spec.length) : N;
}

SeriesEvaluator::SeriesEvaluator(const DirichletSeriesSpec& spec, double tol) {
  const std::uint64_t N = truncation_point(spec, tol);
  const auto a = spec.coefficients(N);
  weights_.reserve(N);
  logs_.reserve(N);
  for (std::uint64_t n = 1; n <= N; ++n) {
    const double ln = std::log(static_cast<double>(n));
    weights_.push_back(a[n - 1] * std::exp(-spec.sigma0 * ln));
    logs_.push_back(ln);
  }
}

namespace {

// Neumaier compensated summation.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double t = sum + x;
    carry += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + carry; }
};

}  // namespace

std::complex<double> SeriesEvaluator::operator()(double t) const {
  CompensatedSum re;
  CompensatedSum im;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    const double w = weights_[i];
    if (w == 0.0) continue;
    const double phase = t * logs_[i];
    re.add(w * std::cos(phase));
    im.add(-w * std::sin(phase));
  }
  return {re.value(), im.value()};
}

std::complex<double> eval_series(const DirichletSeriesSpec& spec, double t, double tol) {
  return SeriesEvaluator(spec, tol)(t);
}

double big_f(const DirichletSeriesSpec& spec, double tol) {
  std::uint64_t N = 0;
  double achieved = 0.0;
  if (spec.growth && !(spec.length && 2.0 * spec.sigma0 <= 2.0 * spec.growth->kappa + 1.0)) {
    const double b2 = spec.growth->bound * spec.growth->bound;
    const double k2 = 2.0 * spec.growth->kappa;
    const double s2 = 2.0 * spec.sigma0;
    if (!(s2 - k2 - 1.0 > 0.0)) {
      throw Error(ErrorKind::convergence_failure, spec.name + ": F(sigma0) diverges");
    }
    const double needed = std::pow(b2 / (tol * (s2 - k2 - 1.0)), 1.0 / (s2 - k2 - 1.0));
    if (needed < static_cast<double>(kMaxBigFTerms)) {
      N = tail_cutoff(b2, k2, s2, tol);
      achieved = tol;
    } else {
      N = kMaxBigFTerms;
      achieved = tail_bound(b2, k2, s2, N);
    }
    if (spec.length) {
      N = std::min(N, *spec.length);
      if (N == *spec.length) achieved = 0.0;
    }
  } else if (spec.length) {
    N = *spec.length;
  } else {
    throw Error(ErrorKind::tail_bound_unavailable, spec.name + ": no coefficient growth data");
  }

  const auto a = spec.coefficients(N);
  long double sum = 0.0L;
  for (std::uint64_t n = 1; n <= N; ++n) {
    const long double term = static_cast<long double>(a[n - 1]) * a[n - 1] /
                             std::pow(static_cast<long double>(n), 2.0L * spec.sigma0);
    sum += term;
  }
  const auto partial = static_cast<double>(sum);
  if (spec.closed_form_F) {
    // The partial sum sits below the full sum by at most the tail bound.
    const double closed = *spec.closed_form_F;
    const double slack = 1e-13 * std::max(1.0, closed);
    if (partial > closed + slack || closed - partial > achieved + slack) {
      throw Error(ErrorKind::convergence_failure,
                  spec.name + ": partial sums disagree with the closed form of F(sigma0)");
    }
    if (achieved > tol) return closed;
  } else if (achieved > tol) {
    throw Error(ErrorKind::precision_unreachable,
                spec.name + ": F(sigma0) tolerance needs too many terms");
  }
  return partial;
}

double SeriesFamily::big_f_product() const {
  const auto compute = [this] {
    double product = 1.0;
    for (const auto& m : members) product *= big_f(m);
    return product;
  };
  if (!product_cache) return compute();
  std::call_once(product_cache->once, [&] { product_cache->value = compute(); });
  return product_cache->value;
}

MomentIntegralResult mean_square_integral(const DirichletSeriesSpec& spec, double T,
                                          const MeanSquareOptions& options) {
  if (!(T > 0.0) || !std::isfinite(T)) {
    throw Error(ErrorKind::domain, "mean-square integral requires T > 0");
  }
  const SeriesEvaluator evaluator(spec, options.eval_tol);
  const double scale = big_f(spec, 1e-9) * T;
  return integrate_adaptive([&](double t) { return evaluator.abs_squared(t); }, 0.0, T,
                            options.rel_tol * scale, {}, options.policy);
}

double mean_value_estimate(const DirichletSeriesSpec& spec, double T,
                           const MeanSquareOptions& options) {
  return mean_square_integral(spec, T, options).value / T;
}

SeriesFamily family_from_string(const std::string& text) {
  SeriesFamily family;
  family.product_cache = std::make_shared<SeriesFamily::ProductCache>();
  family.id = trim(text);
  std::istringstream in(family.id);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (trim(token).empty()) throw Error(ErrorKind::domain, "empty member in family '" + text + "'");
    family.members.push_back(series_from_token(token));
  }
  if (family.members.empty()) throw Error(ErrorKind::domain, "series family is empty");
  return family;
}

double family_product_integral(const SeriesFamily& family, double T,
                               const MeanSquareOptions& options) {
  if (family.members.empty()) throw Error(ErrorKind::domain, "series family is empty");
  double product = 1.0;
  for (const auto& member : family.members) {
    product *= mean_square_integral(member, T, options).value;
  }
  return std::pow(product, 1.0 / static_cast<double>(family.members.size()));
}

BoxFactorization box_product_integral(const DirichletSeriesSpec& first,
                                      const DirichletSeriesSpec& second, double T,
                                      const MeanSquareOptions& options) {
  if (!(T > 0.0)) throw Error(ErrorKind::domain, "box integral requires T > 0");
  struct Nodes {
    std::vector<double> weighted;  // w_i f(x_i) over every panel node
    double total = 0.0;
  };
  const auto sample = [&](const DirichletSeriesSpec& spec) {
    const SeriesEvaluator evaluator(spec, options.eval_tol);
    const auto f = [&](double t) { return evaluator.abs_squared(t); };
    const double tol = options.rel_tol * big_f(spec, 1e-9) * T;
    Nodes out;
    std::array<double, 21> x{};
    std::array<double, 21> w{};
    for (const Panel& p : adaptive_panels(f, 0.0, T, tol, {}, options.policy)) {
      kronrod_nodes(p.a, p.b, x, w);
      double panel_sum = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        out.weighted.push_back(w[i] * f(x[i]));
        panel_sum += out.weighted.back();
      }
      out.total += panel_sum;
    }
    return out;
  };
  const Nodes a = sample(first);
  const Nodes b = sample(second);
  double box = 0.0;
  for (const double wa : a.weighted) {
    double row = 0.0;
    for (const double wb : b.weighted) row += wa * wb;
    box += row;
  }
  return {box, a.total * b.total};
}

}  // namespace ladderlab
