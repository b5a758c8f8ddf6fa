#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lpa/ideal.hpp"

namespace lpa {

enum class PrimeCase {
  kNone,
  kGradedTail,      ///< S = B_H, no cycles, E^0 \ H downward directed
  kBreakingVertex,  ///< B_H \ S = {u}, no cycles, E^0 \ H = M(u)
  kCycle,           ///< S = B_H, one cycle c without (K), E^0 \ H = M(s(c)), irreducible polynomial
};

struct PrimeReport {
  bool prime = false;
  PrimeCase kind = PrimeCase::kNone;
  std::optional<VertexId> u;
  std::optional<Cycle> cycle;
  std::optional<Poly> poly;
};

/// Throws InputError for the whole algebra.
PrimeReport is_prime(const Ideal& I, const Config& cfg = {});
/// Every cycle polynomial is square-free. Throws InputError for the whole algebra.
bool is_semiprime(const Ideal& I);

/// Primary, quasi-primary, irreducible and prime power coincide; `primary` reports that common
/// value and, when true, I = P^n.
struct PrimaryReport {
  bool primary = false;
  std::optional<Ideal> P;
  unsigned n = 0;
};
PrimaryReport primary_report(const Ideal& I, const Config& cfg = {});

struct EveryPrimeReport {
  bool holds = true;
  std::optional<Cycle> cycle_without_K;
  std::optional<std::pair<AdmissiblePair, AdmissiblePair>> incomparable;
};
EveryPrimeReport every_ideal_prime(const Graph& g, const Config& cfg = {});

/// Same as condition (K); the witness is a cycle without (K).
ConditionKResult every_ideal_semiprime(const Graph& g, const Config& cfg = {});

struct PairCoverEntry {
  AdmissiblePair pair;
  std::size_t max_cover = 0;
  std::vector<std::size_t> cover_sizes;
  std::size_t cycles_without_exits = 0;
  bool ok = false;
};
struct ProductOfPrimesReport {
  bool holds = true;
  std::vector<PairCoverEntry> entries;
  std::optional<AdmissiblePair> failing;
};
/// For each admissible pair with H != E^0: the quotient is an irredundant union of n > 0 maximal
/// tails and has at most n cycles without exits (n the largest irredundant cover).
ProductOfPrimesReport every_ideal_product_of_primes(const Graph& g, const Config& cfg = {});

struct SemiprimeConditionEntry {
  VertexSet H;
  /// Cycles avoiding H whose exits all end in H.
  std::vector<Cycle> cycles;
};
struct ProductOfSemiprimesReport {
  bool holds = true;
  std::vector<SemiprimeConditionEntry> entries;
};
/// Always holds for finite graphs; the report lists the cycle sets the criterion quantifies over.
ProductOfSemiprimesReport every_ideal_product_of_semiprimes(const Graph& g, const Config& cfg = {});

}  // namespace lpa
