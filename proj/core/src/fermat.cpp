#include "ladderlab/fermat.hpp"

#include "ladderlab/error.hpp"

namespace ladderlab {
namespace {

mpz_class power(const mpz_class& base, unsigned n) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), n);
  return out;
}

void check_inputs(const mpz_class& x, const mpz_class& y, const mpz_class& z, unsigned n) {
  if (x < 1 || y < 1 || z < 1) throw Error(ErrorKind::domain, "Fermat rational needs x, y, z >= 1");
  if (n < 3) throw Error(ErrorKind::domain, "Fermat rational needs n >= 3");
}

}  // namespace

bool is_fermat_equality(const mpz_class& x, const mpz_class& y, const mpz_class& z, unsigned n) {
  return power(x, n) + power(y, n) == power(z, n);
}

FermatRational::FermatRational(mpz_class x, mpz_class y, mpz_class z, unsigned n)
    : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)), n_(n) {
  check_inputs(x_, y_, z_, n_);
  finish(power(x_, n_), power(y_, n_), power(z_, n_));
}

FermatRational::FermatRational(std::uint64_t x, std::uint64_t y, std::uint64_t z, unsigned n)
    : FermatRational(mpz_class(static_cast<unsigned long>(x)), mpz_class(static_cast<unsigned long>(y)),
                     mpz_class(static_cast<unsigned long>(z)), n) {}

FermatRational FermatRational::from_powers(std::uint64_t x, std::uint64_t y, std::uint64_t z,
                                           unsigned n, const mpz_class& xn, const mpz_class& yn,
                                           const mpz_class& zn) {
  FermatRational r;
  r.x_ = static_cast<unsigned long>(x);
  r.y_ = static_cast<unsigned long>(y);
  r.z_ = static_cast<unsigned long>(z);
  r.n_ = n;
  check_inputs(r.x_, r.y_, r.z_, n);
  r.finish(xn, yn, zn);
  return r;
}

void FermatRational::finish(const mpz_class& xn, const mpz_class& yn, const mpz_class& zn) {
  const mpz_class numerator = xn + yn;
  if (numerator == zn) {
    throw Error(ErrorKind::domain, "x^n + y^n = z^n: not a Fermat rational");
  }
  exact_ = mpq_class(numerator, zn);
  exact_.canonicalize();
  float_value_ = exact_.get_d();
}

std::string FermatRational::exact_string() const { return exact_.get_str(); }

}  // namespace ladderlab
