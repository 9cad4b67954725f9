#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "ladderlab/analytic.hpp"
#include "ladderlab/constants.hpp"
#include "ladderlab/error.hpp"
#include "oracle_values.hpp"

using namespace ladderlab;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::usage;
}

}  // namespace

TEST_CASE("zeta_em matches the high-precision samples") {
  for (const auto& s : oracle::kZetaSamples) {
    const auto z = zeta_em(s.sigma, s.t);
    CAPTURE(s.sigma);
    CAPTURE(s.t);
    CHECK(std::abs(z - std::complex<double>(s.re, s.im)) < 1e-10);
  }
}

TEST_CASE("zeta_em special values") {
  AnalyticConfig tight;
  tight.precision_target = 1e-15;
  CHECK(zeta_em(2.0, 0.0, tight).real() == doctest::Approx(oracle::kZeta2).epsilon(1e-14));
  CHECK(zeta_em(3.0, 0.0, tight).real() == doctest::Approx(oracle::kZeta3).epsilon(1e-14));
  CHECK(zeta_em(4.0, 0.0, tight).real() == doctest::Approx(oracle::kZeta4).epsilon(1e-14));
  CHECK(std::abs(zeta_em(2.0, 0.0).real() - oracle::kZeta2) < 1e-10);
  CHECK(std::abs(zeta_em(0.5, 0.0).real() - oracle::kZetaHalf) < 1e-10);
  CHECK(zeta_em(2.0, 0.0).imag() == 0.0);
}

TEST_CASE("zeta_em errors") {
  CHECK(kind_of([] { zeta_em(1.0, 0.0); }) == ErrorKind::pole);
  CHECK(kind_of([] { zeta_em(0.4, 10.0); }) == ErrorKind::domain);
  CHECK(kind_of([] { zeta_em(std::nan(""), 1.0); }) == ErrorKind::domain);
  AnalyticConfig tight;
  tight.max_em_terms = 50;
  tight.precision_target = 1e-15;
  CHECK(kind_of([&] { zeta_em(0.5, 5000.0, tight); }) == ErrorKind::precision_unreachable);
}

TEST_CASE("zeta_em Schwarz reflection") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> sig(0.5, 3.0), height(0.0, 200.0);
  for (int i = 0; i < 30; ++i) {
    const double s = sig(rng), t = height(rng);
    CHECK(std::abs(zeta_em(s, -t) - std::conj(zeta_em(s, t))) < 1e-12);
  }
}

TEST_CASE("rs_theta matches the oracle") {
  for (const auto& p : oracle::kTheta) {
    CAPTURE(p.t);
    CHECK(std::abs(rs_theta(p.t) - p.value) < 1e-10 * std::max(1.0, std::abs(p.value)));
  }
}

TEST_CASE("rs_theta asymptotic and log-gamma routes agree") {
  for (double t = 10.0; t < 80.0; t += 3.7) {
    CHECK(std::abs(rs_theta(t) - rs_theta_log_gamma(t)) < 1e-12 * std::max(1.0, t));
  }
}

TEST_CASE("rs_theta has its minimum at the oracle point") {
  const double t0 = oracle::kThetaMinimumAt;
  CHECK(rs_theta(t0 - 0.01) > rs_theta(t0));
  CHECK(rs_theta(t0 + 0.01) > rs_theta(t0));
  CHECK(rs_theta(t0 + 1.0) > rs_theta(t0 + 0.5));
}

TEST_CASE("hardy_z matches the oracle") {
  for (const auto& p : oracle::kHardyZ) {
    CAPTURE(p.t);
    CHECK(std::abs(hardy_z(p.t) - p.value) < 1e-9);
  }
}

TEST_CASE("hardy_z is even, real and equals |zeta| on the critical line") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> height(0.5, 300.0);
  for (int i = 0; i < 40; ++i) {
    const double t = height(rng);
    const double z = hardy_z(t);
    CHECK(hardy_z(-t) == z);
    CHECK(std::abs(std::abs(z) - std::abs(zeta_em(0.5, t))) < 1e-8);
  }
}

TEST_CASE("Riemann-Siegel and Euler-Maclaurin agree above the switch") {
  AnalyticConfig em_only;
  em_only.t_switch = 1e9;
  for (double t = 30.0; t < 400.0; t += 17.3) {
    CAPTURE(t);
    CHECK(std::abs(hardy_z_riemann_siegel(t) - hardy_z(t, em_only)) < 1e-9);
  }
}

TEST_CASE("first zeros and counts") {
  const auto zeros = find_zeros(1.0, 26.0);
  REQUIRE(zeros.ordinates.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(std::abs(zeros.ordinates[i] - oracle::kFirstZeros[i]) < 1e-8);
  }
  CHECK(zero_count(30.0) == oracle::kZeroCount30);
  CHECK(zero_count(100.0) == oracle::kZeroCount100);
  CHECK(zero_count(1000.0) == oracle::kZeroCount1000);
  CHECK(zero_count(5.0) == 0);
}

TEST_CASE("S(t) at t = 30") { CHECK(std::abs(s_of_t(30.0) - oracle::kS30) < 1e-8); }

TEST_CASE("counting identity is integral away from zeros") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> height(1.0, 500.0);
  for (int i = 0; i < 40; ++i) {
    const double t = height(rng);
    const double v = counting_value(t);
    CAPTURE(t);
    CHECK(std::abs(v - std::round(v)) < 1e-6);
    CHECK(static_cast<long>(std::round(v)) == zero_count(t));
  }
}

TEST_CASE("zeros are increasing sign changes of Z") {
  const auto zeros = find_zeros(100.0, 400.0);
  CHECK(static_cast<long>(zeros.ordinates.size()) == zero_count(400.0) - zero_count(100.0));
  for (std::size_t i = 0; i < zeros.ordinates.size(); ++i) {
    const double g = zeros.ordinates[i];
    if (i > 0) CHECK(g > zeros.ordinates[i - 1]);
    CHECK(hardy_z(g - 1e-6) * hardy_z(g + 1e-6) < 0.0);
  }
}

TEST_CASE("S at a zero ordinate is rejected") {
  AnalyticConfig cfg;
  cfg.zero_tol = 1e-6;
  CHECK(kind_of([&] { s_of_t(oracle::kFirstZeros[0], cfg); }) == ErrorKind::on_zero);
}

TEST_CASE("S1 matches the oracle") {
  const S1Profile profile(300.0);
  CHECK(std::abs(profile.s1(10.0) - oracle::kS1At10) < 1e-7);
  CHECK(std::abs(profile.s1(100.0) - oracle::kS1At100) < 1e-7);
  CHECK(std::abs(profile.s1(300.0) - oracle::kS1At300) < 1e-7);
  CHECK(std::abs(s1_of_t(100.0) - oracle::kS1At100) < 1e-7);
  CHECK(profile.s1(0.0) == 0.0);
}

TEST_CASE("S1 profile agrees with pointwise S") {
  const S1Profile profile(200.0);
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> height(1.0, 200.0);
  for (int i = 0; i < 20; ++i) {
    const double t = height(rng);
    CHECK(std::abs(profile.s(t) - s_of_t(t)) < 1e-8);
  }
}
