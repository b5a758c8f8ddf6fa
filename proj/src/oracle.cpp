#include "lpa/oracle.hpp"

#include <algorithm>
#include <functional>

#include "lpa/error.hpp"

namespace lpa {

bool is_acyclic(const Graph& g) {
  return std::none_of(g.bundles().begin(), g.bundles().end(),
                      [&](const Bundle& b) { return g.descendants(b.dst).contains(b.src); });
}

MatrixModel::MatrixModel(const Graph& g) {
  if (g.vertex_count() > 6) throw InputError("matrix model is limited to 6 vertices");
  if (!is_acyclic(g)) throw InputError("matrix model needs an acyclic graph");
  for (const auto& b : g.bundles()) {
    if (b.mult.is_omega()) throw InputError("matrix model does not cover infinite emitters");
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.is_sink(v)) sinks_.push_back(v);
  }
  // paths[v][i] = number of paths from v to sinks_[i], counted edge by edge.
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::uint64_t>> paths(n);
  std::vector<bool> done(n, false);
  std::function<void(VertexId)> count = [&](VertexId v) {
    if (done[v]) return;
    paths[v].assign(sinks_.size(), 0);
    for (std::size_t i = 0; i < sinks_.size(); ++i) {
      if (sinks_[i] == v) paths[v][i] = 1;
    }
    for (auto b : g.out_bundles(v)) {
      const auto& bd = g.bundle(b);
      count(bd.dst);
      for (std::size_t i = 0; i < sinks_.size(); ++i) paths[v][i] += bd.mult.count() * paths[bd.dst][i];
    }
    done[v] = true;
  };
  sizes_.assign(sinks_.size(), 0);
  support_.assign(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    count(v);
    for (std::size_t i = 0; i < sinks_.size(); ++i) {
      sizes_[i] += paths[v][i];
      if (paths[v][i] > 0) support_[v] |= std::uint64_t{1} << i;
    }
  }
}

VertexSet MatrixModel::vertices_in(std::uint64_t blocks) const {
  VertexSet out;
  for (VertexId v = 0; v < support_.size(); ++v) {
    if ((support_[v] & ~blocks) == 0) out.insert(v);
  }
  return out;
}

namespace laurent {

Poly canonical(const Poly& f) { return f.is_zero() ? f : normalize(f); }

Poly product(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return Poly(f.field());
  return canonical(f * g);
}

Poly intersect(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return Poly(f.field());
  return canonical(lcm(f, g));
}

Poly sum(const Poly& f, const Poly& g) {
  if (f.is_zero()) return canonical(g);
  if (g.is_zero()) return canonical(f);
  return canonical(gcd(f, g));
}

bool contains(const Poly& f, const Poly& g) {
  if (g.is_zero()) return true;
  if (f.is_zero()) return false;
  return divides(canonical(f), canonical(g));
}

}  // namespace laurent

std::optional<Cycle> single_cycle(const Graph& g) {
  if (g.vertex_count() == 0 || g.bundles().size() != g.vertex_count()) return std::nullopt;
  const auto cs = cycles_without_exits(g);
  if (cs.size() != 1 || cs.front().length() != g.vertex_count()) return std::nullopt;
  return cs.front();
}

namespace {

AdmissiblePair extreme(const std::vector<AdmissiblePair>& candidates, bool greatest) {
  for (const auto& p : candidates) {
    const bool ok = std::all_of(candidates.begin(), candidates.end(), [&](const AdmissiblePair& o) {
      return greatest ? pair_leq(o, p) : pair_leq(p, o);
    });
    if (ok) return p;
  }
  throw Error("admissible-pair poset has no extreme element for the requested bound");
}

}  // namespace

AdmissiblePair poset_meet(const std::vector<AdmissiblePair>& pairs, const AdmissiblePair& a, const AdmissiblePair& b) {
  std::vector<AdmissiblePair> lower;
  for (const auto& p : pairs) {
    if (pair_leq(p, a) && pair_leq(p, b)) lower.push_back(p);
  }
  return extreme(lower, true);
}

AdmissiblePair poset_join(const std::vector<AdmissiblePair>& pairs, const AdmissiblePair& a, const AdmissiblePair& b) {
  std::vector<AdmissiblePair> upper;
  for (const auto& p : pairs) {
    if (pair_leq(a, p) && pair_leq(b, p)) upper.push_back(p);
  }
  return extreme(upper, false);
}

namespace {

std::string block_names(const Graph& g, const MatrixModel& m, std::uint64_t blocks) {
  std::string out = "{";
  for (std::size_t i = 0; i < m.block_count(); ++i) {
    if ((blocks >> i) & 1U) out += (out.size() > 1 ? "," : "") + g.name(m.sinks()[i]);
  }
  return out + "}";
}

std::uint64_t blocks_of(const MatrixModel& m, const Ideal& I) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < m.block_count(); ++i) {
    if (I.H().contains(m.sinks()[i])) out |= std::uint64_t{1} << i;
  }
  return out;
}

CrossCheckReport check_matrix(const GraphPtr& g, const Field& f, std::size_t trials, std::mt19937_64& rng) {
  const MatrixModel m(*g);
  CrossCheckReport rep{"matrix", trials, {}};
  const auto pairs = admissible_pairs(*g);
  if (pairs.size() != m.ideal_count()) {
    rep.mismatches.push_back({"lattice-size", "", "", std::to_string(m.ideal_count()), std::to_string(pairs.size())});
  }
  auto ideal_of = [&](std::uint64_t blocks) -> std::optional<Ideal> {
    const VertexSet h = m.vertices_in(blocks);
    if (!is_hereditary_saturated(*g, h)) return std::nullopt;
    return Ideal::graded(g, f, {h, {}});
  };
  std::uniform_int_distribution<std::uint64_t> pick(0, m.ideal_count() - 1);
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t a = pick(rng), b = pick(rng);
    const auto A = ideal_of(a), B = ideal_of(b);
    const std::string la = block_names(*g, m, a), lb = block_names(*g, m, b);
    if (!A || !B) {
      rep.mismatches.push_back({"vertex-image", la, lb, "hereditary saturated", "not hereditary saturated"});
      continue;
    }
    auto compare = [&](const std::string& op, std::uint64_t want, const Ideal& got) {
      const std::uint64_t have = blocks_of(m, got);
      if (have != want || got.H() != m.vertices_in(want) || !got.S().empty() || !got.is_graded()) {
        rep.mismatches.push_back({op, la, lb, block_names(*g, m, want), describe(got)});
      }
    };
    compare("product", MatrixModel::product(a, b), product(*A, *B));
    compare("intersect", MatrixModel::intersect(a, b), intersect(*A, *B));
    compare("sum", MatrixModel::sum(a, b), sum(*A, *B));
    if (contains(*A, *B) != MatrixModel::contains(a, b)) {
      rep.mismatches.push_back({"contains", la, lb, MatrixModel::contains(a, b) ? "true" : "false",
                                contains(*A, *B) ? "true" : "false"});
    }
  }
  return rep;
}

CrossCheckReport check_laurent(const GraphPtr& g, const Field& f, const Cycle& c, std::size_t trials,
                               std::mt19937_64& rng, unsigned max_degree) {
  CrossCheckReport rep{"laurent", trials, {}};
  auto ideal_of = [&](const Poly& p) {
    if (p.is_zero()) return Ideal::zero(g, f);
    return make_ideal(g, f, {}, {}, {{c, p}});
  };
  auto poly_of = [&](const Ideal& I) {
    if (I.is_whole()) return Poly::one(f);
    if (I.is_zero()) return Poly(f);
    if (!I.S().empty() || !I.H().empty() || I.cycles().size() != 1 || !I.cycles().contains(c)) {
      throw VerificationFailure("ideal " + describe(I) + " has no single-cycle shape");
    }
    return I.cycles().at(c);
  };
  std::uniform_int_distribution<int> zero_pick(0, 9);
  for (std::size_t t = 0; t < trials; ++t) {
    const Poly p = zero_pick(rng) == 0 ? Poly(f) : random_cycle_poly(f, rng, max_degree);
    const Poly q = zero_pick(rng) == 0 ? Poly(f) : random_cycle_poly(f, rng, max_degree);
    const Ideal A = ideal_of(p), B = ideal_of(q);
    const std::string lp = p.to_string(), lq = q.to_string();
    auto compare = [&](const std::string& op, const Poly& want, const Ideal& got) {
      const Poly have = poly_of(got);
      if (!(have == want)) rep.mismatches.push_back({op, lp, lq, want.to_string(), have.to_string()});
    };
    compare("product", laurent::product(p, q), product(A, B));
    compare("intersect", laurent::intersect(p, q), intersect(A, B));
    compare("sum", laurent::sum(p, q), sum(A, B));
    for (const auto& [x, y, X, Y] : {std::tuple{p, q, A, B}, std::tuple{q, p, B, A}}) {
      if (contains(X, Y) != laurent::contains(x, y)) {
        rep.mismatches.push_back({"contains", x.to_string(), y.to_string(), laurent::contains(x, y) ? "true" : "false",
                                  contains(X, Y) ? "true" : "false"});
      }
    }
  }
  return rep;
}

mpq_class random_coeff(const Field& f, std::mt19937_64& rng) {
  if (f.is_rational()) return mpq_class(std::uniform_int_distribution<int>(-4, 4)(rng));
  const unsigned long p = f.characteristic().get_ui();
  return mpq_class(std::uniform_int_distribution<unsigned long>(0, p - 1)(rng));
}

// Random polynomial of exact degree d with nonzero constant term.
Poly random_exact(const Field& f, std::mt19937_64& rng, unsigned d) {
  std::vector<mpq_class> c(d + 1);
  for (auto& a : c) a = random_coeff(f, rng);
  while (f.reduce(c.front()) == 0) c.front() = random_coeff(f, rng);
  while (f.reduce(c.back()) == 0) c.back() = random_coeff(f, rng);
  return Poly(f, std::move(c));
}

}  // namespace

CrossCheckReport cross_check(const GraphPtr& g, const Field& f, std::size_t trials, std::uint64_t seed,
                             unsigned max_degree) {
  std::mt19937_64 rng(seed);
  const bool finite_only = std::none_of(g->bundles().begin(), g->bundles().end(),
                                        [](const Bundle& b) { return b.mult.is_omega(); });
  if (finite_only && g->vertex_count() <= 6 && is_acyclic(*g)) return check_matrix(g, f, trials, rng);
  if (auto c = single_cycle(*g)) return check_laurent(g, f, *c, trials, rng, max_degree);
  throw InputError("graph is neither acyclic (at most 6 vertices, no infinite emitters) nor a single cycle");
}

Poly random_cycle_poly(const Field& f, std::mt19937_64& rng, unsigned max_degree) {
  if (max_degree == 0) return Poly::one(f);
  if (std::bernoulli_distribution(0.5)(rng)) {
    Poly out = Poly::one(f);
    while (true) {
      const unsigned room = max_degree - static_cast<unsigned>(out.degree());
      if (room == 0) break;
      const unsigned d = std::uniform_int_distribution<unsigned>(1, std::min(2U, room))(rng);
      const unsigned e = std::uniform_int_distribution<unsigned>(1, std::max(1U, std::min(3U, room / d)))(rng);
      out = out * random_exact(f, rng, d).pow(e);
      if (out.degree() >= 1 && std::bernoulli_distribution(0.4)(rng)) break;
    }
    return out;
  }
  const unsigned d = std::uniform_int_distribution<unsigned>(1, max_degree)(rng);
  return random_exact(f, rng, d);
}

Ideal random_ideal(const GraphPtr& g, const Field& f, std::mt19937_64& rng, unsigned max_degree) {
  const auto pairs = admissible_pairs(*g);
  const auto& p = pairs[std::uniform_int_distribution<std::size_t>(0, pairs.size() - 1)(rng)];
  if (p.H == g->all_vertices()) return Ideal::whole(g, f);
  std::vector<std::pair<Cycle, Poly>> parts;
  for (const auto& c : exit_free_cycles(*g, p)) {
    if (max_degree > 0 && std::bernoulli_distribution(0.6)(rng)) parts.emplace_back(c, random_cycle_poly(f, rng, max_degree));
  }
  return make_ideal(g, f, p.H, p.S, std::move(parts));
}

Graph random_acyclic_graph(std::mt19937_64& rng, std::size_t n) {
  if (n == 0 || n > 6) throw InputError("random acyclic graphs have 1 to 6 vertices");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  // Shuffle the topological order so that name order and edge direction are unrelated.
  std::vector<std::string> order = names;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Graph::BundleSpec> bundles;
  std::bernoulli_distribution edge(0.4), doubled(0.2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (edge(rng)) bundles.push_back({order[i], order[j], Multiplicity::finite(doubled(rng) ? 2 : 1), ""});
    }
  }
  return Graph(names, std::move(bundles));
}

}  // namespace lpa
