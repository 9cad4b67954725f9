#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace ladderlab {

/// x^n + y^n == z^n in exact integer arithmetic.
bool is_fermat_equality(const mpz_class& x, const mpz_class& y, const mpz_class& z, unsigned n);

/// The rational (x^n + y^n) / z^n for natural x, y, z and n >= 3.
/// Construction fails when the value would be 1.
class FermatRational {
 public:
  FermatRational(mpz_class x, mpz_class y, mpz_class z, unsigned n);
  FermatRational(std::uint64_t x, std::uint64_t y, std::uint64_t z, unsigned n);

  /// Builds from precomputed powers x^n, y^n, z^n (used by scans).
  static FermatRational from_powers(std::uint64_t x, std::uint64_t y, std::uint64_t z,
                                    unsigned n, const mpz_class& xn, const mpz_class& yn,
                                    const mpz_class& zn);

  const mpz_class& x() const noexcept { return x_; }
  const mpz_class& y() const noexcept { return y_; }
  const mpz_class& z() const noexcept { return z_; }
  unsigned n() const noexcept { return n_; }
  const mpq_class& exact_value() const noexcept { return exact_; }
  double float_value() const noexcept { return float_value_; }
  /// "p/q" in lowest terms.
  std::string exact_string() const;

 private:
  FermatRational() = default;
  void finish(const mpz_class& xn, const mpz_class& yn, const mpz_class& zn);

  mpz_class x_, y_, z_;
  unsigned n_ = 3;
  mpq_class exact_;
  double float_value_ = 0.0;
};

}  // namespace ladderlab
