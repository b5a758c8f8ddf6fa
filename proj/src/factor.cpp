#include "lpa/factor.hpp"

#include <algorithm>

#include "lpa/classify.hpp"
#include "lpa/error.hpp"

namespace lpa {

namespace {

// Quotient-graph vertices lying in the image of I(p) in L / I(H,S).
VertexSet image_vertices(const Graph& g, const QuotientGraph& q, const AdmissiblePair& base, const AdmissiblePair& p) {
  const VertexSet split = breaking_vertices(g, base.H) - base.S;
  VertexSet out;
  for (VertexId qv = 0; qv < q.graph.vertex_count(); ++qv) {
    const auto [v, primed] = q.vertex_origin[qv];
    bool in;
    if (primed) {
      // v' is the image of v^H.
      in = breaking_element_in(g, v, p);
    } else if (split.contains(v)) {
      // v is the image of the finite sum of ee* over edges from v leaving H.
      in = true;
      for (auto b : g.out_bundles(v)) {
        const VertexId d = g.bundle(b).dst;
        if (!base.H.contains(d) && !p.H.contains(d)) in = false;
      }
    } else {
      in = p.H.contains(v);
    }
    if (in) out.insert(qv);
  }
  return out;
}

}  // namespace

FactorizationCert certify(Ideal target, std::vector<Ideal> factors, FactorKind kind, const Config& cfg) {
  FactorizationCert cert{std::move(target), std::move(factors), kind, false};
  if (cert.factors.empty()) return cert;
  const bool kinds_ok = std::all_of(cert.factors.begin(), cert.factors.end(), [&](const Ideal& f) {
    if (f.is_whole()) return false;
    return kind == FactorKind::kPrime ? is_prime(f, cfg).prime : is_semiprime(f);
  });
  cert.verified = kinds_ok && product_of(cert.factors) == cert.target;
  return cert;
}

Ideal lift_tail_prime(const Ideal& graded, const QuotientGraph& q, VertexSet tail) {
  const Graph& g = graded.graph();
  const VertexSet want = q.graph.all_vertices() - tail;
  std::vector<AdmissiblePair> hits;
  for (const auto& p : admissible_pairs(g)) {
    if (pair_leq(graded.pair(), p) && image_vertices(g, q, graded.pair(), p) == want) hits.push_back(p);
  }
  // The graded prime of the tail is the largest ideal with that vertex image.
  for (const auto& p : hits) {
    if (std::all_of(hits.begin(), hits.end(), [&](const AdmissiblePair& o) { return pair_leq(o, p); })) {
      return Ideal::graded(graded.graph_ptr(), graded.field(), p);
    }
  }
  throw VerificationFailure("no graded ideal of the graph lies over the tail prime of the quotient");
}

std::optional<FactorizationCert> prime_factorization(const Ideal& I, const Config& cfg) {
  if (I.is_whole()) throw InputError("prime factorization needs a proper ideal");
  if (is_prime(I, cfg).prime) return certify(I, {I}, FactorKind::kPrime, cfg);

  const Graph& g = I.graph();
  const QuotientGraph q = quotient_graph(g, I.pair());
  const std::size_t k = I.cycles().size();
  const auto cover = irredundant_tail_cover(q.graph, std::max<std::size_t>(k, 1), cfg.limits);
  if (!cover) return std::nullopt;

  const Ideal gr = I.graded_part();
  std::vector<Ideal> factors;
  std::size_t placed = 0;
  for (const auto& tail : *cover) {
    const Ideal P = lift_tail_prime(gr, q, tail);
    const Cycle* cycle = nullptr;
    const Poly* poly = nullptr;
    for (const auto& [c, f] : I.cycles()) {
      if (!tail.contains(q.graph.id_of(g.name(c.base())))) continue;
      if (cycle != nullptr) throw VerificationFailure("two cycles without exits share a maximal tail");
      cycle = &c;
      poly = &f;
    }
    if (cycle == nullptr) {
      factors.push_back(P);
      continue;
    }
    ++placed;
    for (const auto& [p, m] : factor(*poly, cfg.factor)) {
      const Ideal Q = normal_form(I.graph_ptr(), I.field(), P.pair(), {{*cycle, p}});
      for (unsigned t = 0; t < m; ++t) factors.push_back(Q);
    }
  }
  if (placed != k) throw VerificationFailure("a cycle of the ideal is not covered by the chosen tails");

  auto cert = certify(I, std::move(factors), FactorKind::kPrime, cfg);
  if (!cert.verified) {
    throw VerificationFailure("prime factors do not multiply back: target " + describe(I) + ", product " +
                              describe(product_of(cert.factors)));
  }
  return cert;
}

std::optional<FactorizationCert> semiprime_factorization(const Ideal& I, const Config& cfg) {
  if (I.is_whole()) throw InputError("semiprime factorization needs a proper ideal");
  std::vector<Ideal> factors;
  Ideal J = I;
  while (true) {
    unsigned n = 1;
    std::map<Cycle, std::vector<FactorPower>> parts;
    for (const auto& [c, f] : J.cycles()) {
      auto fs = factor(f, cfg.factor);
      for (const auto& fp : fs) n = std::max(n, fp.exponent);
      parts.emplace(c, std::move(fs));
    }
    if (n == 1) {
      factors.push_back(J);
      break;
    }
    // Cycles carrying a factor of top multiplicity contribute the square-free product of those
    // factors to J1; the others contribute their whole vertex ideal.
    std::vector<std::pair<Cycle, Poly>> first, rest;
    for (const auto& [c, fs] : parts) {
      Poly top = Poly::one(J.field());
      for (const auto& fp : fs) {
        if (fp.exponent == n) top = top * fp.poly;
      }
      const Poly& f = J.cycles().at(c);
      first.emplace_back(c, top);
      rest.emplace_back(c, top.is_one() ? f : f / top);
    }
    factors.push_back(normal_form(J.graph_ptr(), J.field(), J.pair(), std::move(first)));
    J = normal_form(J.graph_ptr(), J.field(), J.pair(), std::move(rest));
  }
  auto cert = certify(I, std::move(factors), FactorKind::kSemiprime, cfg);
  if (!cert.verified) {
    throw VerificationFailure("semiprime factors do not multiply back: target " + describe(I) + ", product " +
                              describe(product_of(cert.factors)));
  }
  return cert;
}

FactorizationCert intersection_to_product(const std::vector<Ideal>& primes, const Config& cfg) {
  if (primes.empty()) throw InputError("intersection of an empty list of ideals");
  std::vector<Ideal> distinct;
  for (const auto& P : primes) {
    if (P.graph_ptr() != primes.front().graph_ptr() || !(P.field() == primes.front().field())) {
      throw InputError("ideals belong to different graphs or fields");
    }
    if (P.is_whole() || !is_prime(P, cfg).prime) throw InputError("input ideal " + describe(P) + " is not prime");
    if (std::find(distinct.begin(), distinct.end(), P) == distinct.end()) distinct.push_back(P);
  }
  Ideal target = distinct.front();
  for (std::size_t i = 1; i < distinct.size(); ++i) target = intersect(target, distinct[i]);

  auto cert = certify(target, distinct, FactorKind::kPrime, cfg);
  if (cert.verified) return cert;
  if (auto alt = prime_factorization(target, cfg)) return *alt;
  throw VerificationFailure("intersection " + describe(target) + " could not be written as a product of primes");
}

std::optional<Ideal> product_not_intersection_witness(GraphPtr g, Field f, const Config& cfg) {
  const auto k = condition_K(*g, cfg.limits);
  if (k.holds) return std::nullopt;
  const Cycle& c = *k.witness;
  const VertexSet h = g->all_vertices() - g->ancestors(c.base());
  const AdmissiblePair p{h, breaking_vertices(*g, h)};
  const Poly x_minus_one = Poly::x(f) - Poly::one(f);
  Ideal P = normal_form(g, f, p, {{c, x_minus_one}});
  if (!is_prime(P, cfg).prime) throw VerificationFailure("constructed witness " + describe(P) + " is not prime");
  const Ideal P2 = product(P, P);
  if (P2 == P || is_semiprime(P2)) throw VerificationFailure("square of the witness prime is semiprime");
  return P;
}

}  // namespace lpa
