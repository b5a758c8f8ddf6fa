#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lpa {

/// Coefficient field: the rationals, or Z/p for a prime p.
///
/// Elements are carried as mpq_class in both cases; over F_p they are integers in [0, p).
class Field {
 public:
  static Field rationals() { return Field(); }
  /// F_p for a prime p < 2^31. Throws InputError otherwise.
  static Field prime(unsigned long p);
  /// F_p for an arbitrary (probable) prime; used internally for modular factoring.
  static Field large_prime(const mpz_class& p);
  /// Parses "Q" or "Fp:<p>".
  static Field parse(std::string_view text);

  bool is_rational() const { return p_ == 0; }
  const mpz_class& characteristic() const { return p_; }
  std::string to_string() const;

  mpq_class reduce(const mpq_class& a) const;
  mpq_class add(const mpq_class& a, const mpq_class& b) const;
  mpq_class sub(const mpq_class& a, const mpq_class& b) const;
  mpq_class mul(const mpq_class& a, const mpq_class& b) const;
  mpq_class neg(const mpq_class& a) const;
  /// Throws std::domain_error on zero.
  mpq_class inv(const mpq_class& a) const;
  mpq_class div(const mpq_class& a, const mpq_class& b) const { return mul(a, inv(b)); }
  /// Image of the integer n.
  mpq_class from_int(long n) const { return reduce(mpq_class(n)); }

  bool operator==(const Field& o) const { return p_ == o.p_; }

 private:
  Field() = default;
  explicit Field(mpz_class p) : p_(std::move(p)) {}
  mpz_class p_ = 0;
};

}  // namespace lpa
