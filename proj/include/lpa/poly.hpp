#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lpa/field.hpp"

namespace lpa {

/// Dense univariate polynomial over a Field, coefficients stored constant term first.
class Poly {
 public:
  explicit Poly(Field f) : field_(std::move(f)) {}
  /// Reduces every coefficient into the field and trims leading zeros.
  Poly(Field f, std::vector<mpq_class> coeffs);

  static Poly constant(const Field& f, const mpq_class& c) { return Poly(f, {c}); }
  static Poly one(const Field& f) { return constant(f, 1); }
  /// c * x^k
  static Poly monomial(const Field& f, const mpq_class& c, std::size_t k);
  static Poly x(const Field& f) { return monomial(f, 1, 1); }

  const Field& field() const { return field_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const { return c_.size() <= 1; }
  mpq_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpq_class(0); }
  const mpq_class& leading() const { return c_.back(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const mpq_class& c) const;
  Poly pow(unsigned n) const;
  Poly derivative() const;
  /// f(x^k) -> f; requires all exponents to be multiples of k.
  Poly deflate(std::size_t k) const;

  bool operator==(const Poly& o) const { return field_ == o.field_ && c_ == o.c_; }

  /// "x^2 - 3/2*x + 1"; over F_p coefficients are printed in [0, p).
  std::string to_string() const;

 private:
  void trim();
  Field field_;
  std::vector<mpq_class> c_;
};

/// Quotient and remainder; throws std::domain_error when b is zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& f);
Poly powmod(const Poly& base, const mpz_class& e, const Poly& mod);

/// Total order used for sorting factor lists: by degree, then coefficients from the top.
bool poly_less(const Poly& a, const Poly& b);

Poly monic(const Poly& f);
/// Divides out the largest power of x and makes the result monic. Throws InputError on zero.
Poly normalize(const Poly& f);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
/// Monic lcm; zero if either input is zero.
Poly lcm(const Poly& a, const Poly& b);
/// True iff f and g agree up to a nonzero scalar times a power of x.
bool conjugate(const Poly& f, const Poly& g);

struct FactorPower {
  Poly poly;
  unsigned exponent;
};

/// Square-free decomposition of monic f: pairwise coprime square-free parts with their multiplicities.
std::vector<FactorPower> squarefree_decomposition(const Poly& f);
Poly squarefree_part(const Poly& f);
bool is_squarefree(const Poly& f);

struct FactorOptions {
  /// Largest degree accepted by rational factorization.
  unsigned q_degree_bound = 12;
  std::uint64_t seed = 0x4c50415eedULL;
};

/// Monic irreducible factors with exponents, sorted by poly_less. Requires deg f >= 1.
/// Over Q throws DegreeBoundExceeded when deg f exceeds the bound.
std::vector<FactorPower> factor(const Poly& f, const FactorOptions& opts = {});
bool is_irreducible(const Poly& f, const FactorOptions& opts = {});

/// Parses "x^2 - 3/2*x + 1", "(1+x)^2", "x^2+4x+3 mod 5". A trailing "mod p" selects F_p;
/// otherwise the result lives in `field`.
Poly parse_poly(std::string_view text, const Field& field);

}  // namespace lpa
