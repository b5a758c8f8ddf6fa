#include "lpa/field.hpp"

#include <stdexcept>

#include "lpa/error.hpp"

namespace lpa {

Field Field::prime(unsigned long p) {
  if (p < 2 || p >= (1UL << 31)) throw InputError("field characteristic must be a prime below 2^31");
  mpz_class z(p);
  if (mpz_probab_prime_p(z.get_mpz_t(), 30) == 0) {
    throw InputError(std::to_string(p) + " is not prime");
  }
  return Field(z);
}

Field Field::large_prime(const mpz_class& p) {
  if (p < 2) throw std::invalid_argument("large_prime: p < 2");
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "Q" || text == "QQ") return rationals();
  std::string_view digits;
  if (text.starts_with("Fp:")) {
    digits = text.substr(3);
  } else if (text.starts_with("F") && text.size() > 1) {
    digits = text.substr(1);
  }
  if (digits.empty() || digits.size() > 10 || digits.find_first_not_of("0123456789") != std::string_view::npos) {
    throw InputError("unknown field '" + std::string(text) + "' (expected Q or Fp:<prime>)");
  }
  return prime(std::stoul(std::string(digits)));
}

std::string Field::to_string() const { return is_rational() ? "Q" : "Fp:" + p_.get_str(); }

mpq_class Field::reduce(const mpq_class& a) const {
  if (is_rational()) return a;
  mpz_class num = a.get_num() % p_;
  if (num < 0) num += p_;
  if (a.get_den() == 1) return mpq_class(num);
  mpz_class den = a.get_den() % p_, inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p_.get_mpz_t()) == 0) {
    throw InputError("denominator " + a.get_den().get_str() + " vanishes modulo " + p_.get_str());
  }
  return mpq_class(mpz_class(num * inv % p_));
}

mpq_class Field::add(const mpq_class& a, const mpq_class& b) const {
  if (is_rational()) return a + b;
  mpz_class r = a.get_num() + b.get_num();
  if (r >= p_) r -= p_;
  return mpq_class(r);
}

mpq_class Field::sub(const mpq_class& a, const mpq_class& b) const {
  if (is_rational()) return a - b;
  mpz_class r = a.get_num() - b.get_num();
  if (r < 0) r += p_;
  return mpq_class(r);
}

mpq_class Field::mul(const mpq_class& a, const mpq_class& b) const {
  if (is_rational()) return a * b;
  return mpq_class(mpz_class(a.get_num() * b.get_num() % p_));
}

mpq_class Field::neg(const mpq_class& a) const {
  if (is_rational()) return -a;
  return a == 0 ? a : mpq_class(mpz_class(p_ - a.get_num()));
}

mpq_class Field::inv(const mpq_class& a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  if (is_rational()) return 1 / a;
  mpz_class r;
  mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), p_.get_mpz_t());
  return mpq_class(r);
}

}  // namespace lpa
