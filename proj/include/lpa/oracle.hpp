#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lpa/ideal.hpp"

namespace lpa {

/// Finite acyclic row-finite graph algebra as a direct sum of matrix algebras M_{n(w)}(K), one
/// block per sink w, n(w) the number of paths ending at w. Ideals are sets of blocks.
class MatrixModel {
 public:
  /// Throws InputError for cyclic graphs, omega bundles or more than 6 vertices.
  explicit MatrixModel(const Graph& g);

  const std::vector<VertexId>& sinks() const { return sinks_; }
  const std::vector<std::uint64_t>& block_sizes() const { return sizes_; }
  std::size_t block_count() const { return sinks_.size(); }
  /// Number of two-sided ideals (2^blocks).
  std::uint64_t ideal_count() const { return std::uint64_t{1} << sinks_.size(); }

  /// Blocks (bit i = sinks()[i]) in the support of vertex v.
  std::uint64_t support(VertexId v) const { return support_[v]; }
  /// Vertices lying in the ideal spanned by `blocks`.
  VertexSet vertices_in(std::uint64_t blocks) const;

  static std::uint64_t product(std::uint64_t a, std::uint64_t b) { return a & b; }
  static std::uint64_t intersect(std::uint64_t a, std::uint64_t b) { return a & b; }
  static std::uint64_t sum(std::uint64_t a, std::uint64_t b) { return a | b; }
  static bool contains(std::uint64_t a, std::uint64_t b) { return (b & ~a) == 0; }

 private:
  std::vector<VertexId> sinks_;
  std::vector<std::uint64_t> sizes_;
  std::vector<std::uint64_t> support_;
};

bool is_acyclic(const Graph& g);

/// Ideals of K[x, x^-1] as canonical generators: the zero polynomial is the zero ideal, 1 the whole ring.
namespace laurent {
Poly canonical(const Poly& f);
Poly product(const Poly& f, const Poly& g);
Poly intersect(const Poly& f, const Poly& g);
Poly sum(const Poly& f, const Poly& g);
/// (f) contains (g).
bool contains(const Poly& f, const Poly& g);
}  // namespace laurent

/// The graph is a single cycle through every vertex, so L(E) is Morita equivalent to K[x, x^-1].
std::optional<Cycle> single_cycle(const Graph& g);

/// Greatest lower bound and least upper bound in the admissible-pair poset, by exhaustive search.
AdmissiblePair poset_meet(const std::vector<AdmissiblePair>& pairs, const AdmissiblePair& a, const AdmissiblePair& b);
AdmissiblePair poset_join(const std::vector<AdmissiblePair>& pairs, const AdmissiblePair& a, const AdmissiblePair& b);

struct Mismatch {
  std::string op;
  std::string lhs;
  std::string rhs;
  std::string expected;
  std::string actual;
};

struct CrossCheckReport {
  std::string oracle;  ///< "matrix" or "laurent"
  std::size_t trials = 0;
  std::vector<Mismatch> mismatches;
};

/// Random ideal pairs compared against the matrix model (acyclic graphs) or the Laurent model
/// (single-cycle graphs). Throws InputError for graphs neither oracle covers.
CrossCheckReport cross_check(const GraphPtr& g, const Field& f, std::size_t trials, std::uint64_t seed,
                             unsigned max_degree = 6);

/// Random polynomial of degree <= max_degree with nonzero constant term; about half are products
/// of powers of small factors so repeated factors show up.
Poly random_cycle_poly(const Field& f, std::mt19937_64& rng, unsigned max_degree);

/// Random proper or improper ideal: a random admissible pair plus random polynomials on some of
/// the cycles that are exit-free in its quotient.
Ideal random_ideal(const GraphPtr& g, const Field& f, std::mt19937_64& rng, unsigned max_degree = 4);

/// Random acyclic graph on n <= 6 vertices named a, b, c, ... with multiplicities 1 or 2.
Graph random_acyclic_graph(std::mt19937_64& rng, std::size_t n);

}  // namespace lpa
