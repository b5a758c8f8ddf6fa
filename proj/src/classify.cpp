#include "lpa/classify.hpp"

#include <algorithm>

#include "lpa/error.hpp"

namespace lpa {

namespace {

void require_proper(const Ideal& I) {
  if (I.is_whole()) throw InputError("this query needs a proper ideal");
}

}  // namespace

PrimeReport is_prime(const Ideal& I, const Config& cfg) {
  require_proper(I);
  const Graph& g = I.graph();
  const VertexSet rest = g.all_vertices() - I.H();
  const VertexSet missing = breaking_vertices(g, I.H()) - I.S();
  PrimeReport r;
  if (I.is_graded()) {
    if (missing.empty() && is_downward_directed(g, rest)) {
      r.prime = true;
      r.kind = PrimeCase::kGradedTail;
    } else if (missing.size() == 1) {
      const VertexId u = missing.to_vector().front();
      if (rest == g.ancestors(u)) {
        r.prime = true;
        r.kind = PrimeCase::kBreakingVertex;
        r.u = u;
      }
    }
    return r;
  }
  if (!missing.empty() || I.cycles().size() != 1) return r;
  const auto& [c, f] = *I.cycles().begin();
  if (!is_cycle_without_K(g, c) || rest != g.ancestors(c.base())) return r;
  if (!is_irreducible(f, cfg.factor)) return r;
  r.prime = true;
  r.kind = PrimeCase::kCycle;
  r.cycle = c;
  r.poly = f;
  return r;
}

bool is_semiprime(const Ideal& I) {
  require_proper(I);
  return std::all_of(I.cycles().begin(), I.cycles().end(), [](const auto& kv) { return is_squarefree(kv.second); });
}

PrimaryReport primary_report(const Ideal& I, const Config& cfg) {
  require_proper(I);
  PrimaryReport r;
  if (I.is_graded()) {
    if (is_prime(I, cfg).prime) r = {true, I, 1};
    return r;
  }
  const Graph& g = I.graph();
  if (I.S() != breaking_vertices(g, I.H()) || I.cycles().size() != 1) return r;
  if (!is_downward_directed(g, g.all_vertices() - I.H())) return r;
  const auto& [c, f] = *I.cycles().begin();
  const auto fs = factor(f, cfg.factor);
  if (fs.size() != 1) return r;
  Ideal P = normal_form(I.graph_ptr(), I.field(), I.pair(), {{c, fs.front().poly}});
  r = {true, std::move(P), fs.front().exponent};
  return r;
}

EveryPrimeReport every_ideal_prime(const Graph& g, const Config& cfg) {
  EveryPrimeReport r;
  auto k = condition_K(g, cfg.limits);
  if (!k.holds) {
    r.holds = false;
    r.cycle_without_K = k.witness;
    return r;
  }
  const auto pairs = admissible_pairs(g);
  auto chain = chain_check(pairs);
  if (!chain.is_chain) {
    r.holds = false;
    r.incomparable = chain.incomparable;
  }
  return r;
}

ConditionKResult every_ideal_semiprime(const Graph& g, const Config& cfg) { return condition_K(g, cfg.limits); }

ProductOfPrimesReport every_ideal_product_of_primes(const Graph& g, const Config& cfg) {
  ProductOfPrimesReport r;
  for (const auto& p : admissible_pairs(g)) {
    if (p.H == g.all_vertices()) continue;
    const auto q = quotient_graph(g, p);
    const auto covers = tail_covers(q.graph, cfg.limits);
    PairCoverEntry e;
    e.pair = p;
    e.max_cover = covers.max_size();
    e.cover_sizes = covers.sizes;
    e.cycles_without_exits = cycles_without_exits(q.graph).size();
    e.ok = e.max_cover > 0 && e.cycles_without_exits <= e.max_cover;
    if (!e.ok && r.holds) {
      r.holds = false;
      r.failing = p;
    }
    r.entries.push_back(std::move(e));
  }
  return r;
}

ProductOfSemiprimesReport every_ideal_product_of_semiprimes(const Graph& g, const Config& cfg) {
  ProductOfSemiprimesReport r;
  const auto cycles = simple_cycles(g, cfg.limits);
  for (auto h : hereditary_saturated_sets(g)) {
    SemiprimeConditionEntry e{h, {}};
    for (const auto& c : cycles) {
      if (c.vertex_set().intersects(h)) continue;
      bool exits_into_h = true;
      for (const auto& ce : c.edges()) {
        for (auto b : g.out_bundles(g.source(ce))) {
          const auto& bd = g.bundle(b);
          const bool is_cycle_edge = b == ce.bundle && bd.mult == Multiplicity::finite(1);
          if (!is_cycle_edge && !h.contains(bd.dst)) exits_into_h = false;
        }
      }
      if (exits_into_h) e.cycles.push_back(c);
    }
    r.entries.push_back(std::move(e));
  }
  return r;
}

}  // namespace lpa
