#pragma once

#include <optional>
#include <vector>

#include "lpa/ideal.hpp"

namespace lpa {

enum class FactorKind { kPrime, kSemiprime };

/// A factorization whose `verified` flag is only ever set by recomputing the product.
struct FactorizationCert {
  Ideal target;
  std::vector<Ideal> factors;
  FactorKind kind;
  bool verified = false;
};

/// Recomputes the product of the factors and checks each factor has the claimed kind.
FactorizationCert certify(Ideal target, std::vector<Ideal> factors, FactorKind kind, const Config& cfg = {});

/// Graded prime of E lying over gr(I) whose image in the quotient graph is the prime of the tail
/// `tail` (a set of quotient-graph vertex ids).
Ideal lift_tail_prime(const Ideal& graded, const QuotientGraph& q, VertexSet tail);

/// Product of primes built from an irredundant tail cover of the quotient graph, or nullopt when
/// the quotient is not such a union or has more exit-free cycles than tails.
/// Throws VerificationFailure when the construction does not multiply back to I.
std::optional<FactorizationCert> prime_factorization(const Ideal& I, const Config& cfg = {});

/// Product of n semiprime ideals, n the largest multiplicity of an irreducible factor of any f_i.
/// Never nullopt for finite graphs; the optional mirrors prime_factorization.
std::optional<FactorizationCert> semiprime_factorization(const Ideal& I, const Config& cfg = {});

/// Rewrites the intersection of the given primes as a verified product of primes.
/// Throws InputError when an input is not prime or the inputs live in different spaces.
FactorizationCert intersection_to_product(const std::vector<Ideal>& primes, const Config& cfg = {});

/// When (K) fails: a nonzero non-graded prime P with P^2 not semiprime (so P^2 is no intersection
/// of primes). nullopt when (K) holds.
std::optional<Ideal> product_not_intersection_witness(GraphPtr g, Field f, const Config& cfg = {});

}  // namespace lpa
