#include "lpa/graph.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "lpa/error.hpp"

namespace lpa {

Multiplicity Multiplicity::finite(std::uint32_t n) {
  if (n == 0) throw InputError("edge multiplicity must be at least 1");
  return Multiplicity(n);
}

Graph::Graph(std::vector<std::string> vertices, std::vector<BundleSpec> bundles) {
  if (vertices.size() > kMaxVertices) {
    throw InputError("graph has " + std::to_string(vertices.size()) + " vertices; at most " +
                     std::to_string(kMaxVertices) + " are supported");
  }
  std::sort(vertices.begin(), vertices.end());
  if (auto dup = std::adjacent_find(vertices.begin(), vertices.end()); dup != vertices.end()) {
    throw InputError("duplicate vertex '" + *dup + "'");
  }
  names_ = std::move(vertices);
  for (VertexId v = 0; v < names_.size(); ++v) {
    if (names_[v].empty()) throw InputError("empty vertex name");
    vertex_index_.emplace(names_[v], v);
  }

  out_.resize(names_.size());
  in_.resize(names_.size());
  bundles_.reserve(bundles.size());
  for (std::size_t k = 0; k < bundles.size(); ++k) {
    auto& spec = bundles[k];
    std::string id = spec.id.empty() ? "e" + std::to_string(k) : std::move(spec.id);
    if (id.find('#') != std::string::npos) throw InputError("edge id '" + id + "' must not contain '#'");
    const auto b = static_cast<std::uint32_t>(bundles_.size());
    if (!bundle_index_.emplace(id, b).second) throw InputError("duplicate edge id '" + id + "'");
    const VertexId s = id_of(spec.src), d = id_of(spec.dst);
    bundles_.push_back(Bundle{std::move(id), s, d, spec.mult});
    out_[s].push_back(b);
    in_[d].push_back(b);
  }

  const std::size_t n = names_.size();
  down_.assign(n, VertexSet{});
  up_.assign(n, VertexSet{});
  for (VertexId v = 0; v < n; ++v) {
    VertexSet seen = VertexSet::single(v);
    std::vector<VertexId> stack{v};
    while (!stack.empty()) {
      const VertexId u = stack.back();
      stack.pop_back();
      for (auto b : out_[u]) {
        const VertexId w = bundles_[b].dst;
        if (!seen.contains(w)) {
          seen.insert(w);
          stack.push_back(w);
        }
      }
    }
    down_[v] = seen;
  }
  for (VertexId v = 0; v < n; ++v) {
    for (auto w : down_[v].to_vector()) up_[w].insert(v);
  }
}

std::optional<VertexId> Graph::find(std::string_view name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

VertexId Graph::id_of(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw InputError("unknown vertex '" + std::string(name) + "'");
}

VertexSet Graph::vertex_set(std::span<const std::string> names) const {
  VertexSet s;
  for (const auto& n : names) s.insert(id_of(n));
  return s;
}

std::vector<std::string> Graph::names_of(VertexSet s) const {
  std::vector<std::string> out;
  for (auto v : s.to_vector()) out.push_back(names_.at(v));
  return out;
}

std::optional<std::uint32_t> Graph::find_bundle(std::string_view id) const {
  auto it = bundle_index_.find(id);
  if (it == bundle_index_.end()) return std::nullopt;
  return it->second;
}

bool Graph::is_infinite_emitter(VertexId v) const {
  return std::any_of(out_[v].begin(), out_[v].end(),
                     [&](std::uint32_t b) { return bundles_[b].mult.is_omega(); });
}

Cycle Cycle::from_edges(const Graph& g, std::vector<EdgeRef> edges) {
  if (edges.empty()) throw InputError("a cycle needs at least one edge");
  for (const auto& e : edges) {
    if (e.bundle >= g.bundles().size()) throw InputError("cycle uses an unknown edge");
    const auto& m = g.bundle(e.bundle).mult;
    if (!m.is_omega() && e.index >= m.count()) {
      throw InputError("edge index " + std::to_string(e.index) + " out of range for '" +
                       g.bundle(e.bundle).id + "'");
    }
  }
  Cycle c;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& next = edges[(i + 1) % edges.size()];
    if (g.target(edges[i]) != g.source(next)) throw InputError("cycle edges are not consecutive");
    const VertexId s = g.source(edges[i]);
    if (c.set_.contains(s)) throw InputError("cycle repeats vertex '" + g.name(s) + "'");
    c.set_.insert(s);
  }
  auto least = std::min_element(edges.begin(), edges.end(), [&](const EdgeRef& a, const EdgeRef& b) {
    return g.source(a) < g.source(b);
  });
  std::rotate(edges.begin(), least, edges.end());
  c.edges_ = std::move(edges);
  for (const auto& e : c.edges_) c.vertices_.push_back(g.source(e));
  return c;
}

std::vector<std::string> edge_tokens(const Graph& g, const Cycle& c) {
  std::vector<std::string> out;
  for (const auto& e : c.edges()) out.push_back(g.bundle(e.bundle).id + "#" + std::to_string(e.index));
  return out;
}

bool is_hereditary(const Graph& g, VertexSet h) {
  for (auto v : h.to_vector()) {
    if (!g.descendants(v).subset_of(h)) return false;
  }
  return true;
}

namespace {

bool all_ranges_in(const Graph& g, VertexId v, VertexSet h) {
  for (auto b : g.out_bundles(v)) {
    if (!h.contains(g.bundle(b).dst)) return false;
  }
  return true;
}

VertexSet require_hs(const Graph& g, VertexSet h) {
  if (!h.subset_of(g.all_vertices())) throw InputError("vertex set refers to unknown vertices");
  if (!is_hereditary_saturated(g, h)) throw InputError("vertex set is not hereditary saturated");
  return h;
}

}  // namespace

bool is_saturated(const Graph& g, VertexSet h) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!h.contains(v) && g.is_regular(v) && all_ranges_in(g, v, h)) return false;
  }
  return true;
}

VertexSet hereditary_saturated_closure(const Graph& g, VertexSet x) {
  if (!x.subset_of(g.all_vertices())) throw InputError("vertex set refers to unknown vertices");
  VertexSet h;
  for (auto v : x.to_vector()) h |= g.descendants(v);
  for (bool grew = true; grew;) {
    grew = false;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (!h.contains(v) && g.is_regular(v) && all_ranges_in(g, v, h)) {
        h.insert(v);
        grew = true;
      }
    }
  }
  return h;
}

std::optional<std::uint64_t> edges_leaving(const Graph& g, VertexId v, VertexSet h) {
  std::uint64_t n = 0;
  for (auto b : g.out_bundles(v)) {
    const auto& bd = g.bundle(b);
    if (h.contains(bd.dst)) continue;
    if (bd.mult.is_omega()) return std::nullopt;
    n += bd.mult.count();
  }
  return n;
}

VertexSet breaking_vertices(const Graph& g, VertexSet h) {
  require_hs(g, h);
  VertexSet out;
  for (VertexId w = 0; w < g.vertex_count(); ++w) {
    if (h.contains(w) || !g.is_infinite_emitter(w)) continue;
    auto n = edges_leaving(g, w, h);
    if (n && *n > 0) out.insert(w);
  }
  return out;
}

std::vector<VertexSet> hereditary_saturated_sets(const Graph& g) {
  std::vector<VertexSet> found{hereditary_saturated_closure(g, {})};
  std::set<std::uint64_t> seen{found.front().bits()};
  std::vector<VertexSet> frontier = found;
  while (!frontier.empty()) {
    std::vector<VertexSet> next;
    for (auto h : frontier) {
      for (auto v : h.complement(g.vertex_count()).to_vector()) {
        auto k = hereditary_saturated_closure(g, h | VertexSet::single(v));
        if (seen.insert(k.bits()).second) {
          found.push_back(k);
          next.push_back(k);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(found.begin(), found.end(), [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return found;
}

bool is_downward_directed(const Graph& g, VertexSet d) {
  const auto vs = d.to_vector();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if ((g.descendants(vs[i]) & g.descendants(vs[j]) & d).empty()) return false;
    }
  }
  return true;
}

std::vector<VertexSet> maximal_tails(const Graph& g) {
  std::vector<VertexSet> out;
  const auto all = g.all_vertices();
  for (auto h : hereditary_saturated_sets(g)) {
    const auto m = all - h;
    if (!m.empty() && is_downward_directed(g, m)) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Calls fn with the bundle sequence of every simple cycle, started at its least vertex.
void for_each_bundle_cycle(const Graph& g, std::size_t cap,
                           const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
  std::size_t count = 0;
  std::vector<std::uint32_t> path;
  VertexSet on_path;
  std::function<void(VertexId, VertexId)> dfs = [&](VertexId start, VertexId u) {
    for (auto b : g.out_bundles(u)) {
      const VertexId w = g.bundle(b).dst;
      if (w == start) {
        if (++count > cap) {
          throw CycleCapExceeded("simple-cycle enumeration exceeded the cap of " + std::to_string(cap));
        }
        path.push_back(b);
        fn(path);
        path.pop_back();
      } else if (w > start && !on_path.contains(w)) {
        path.push_back(b);
        on_path.insert(w);
        dfs(start, w);
        on_path.erase(w);
        path.pop_back();
      }
    }
  };
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    on_path = VertexSet::single(s);
    dfs(s, s);
  }
}

}  // namespace

std::vector<Cycle> simple_cycles(const Graph& g, const Limits& limits) {
  std::vector<Cycle> out;
  for_each_bundle_cycle(g, limits.max_cycles, [&](const std::vector<std::uint32_t>& bs) {
    std::vector<EdgeRef> edges(bs.size());
    for (std::size_t i = 0; i < bs.size(); ++i) edges[i] = EdgeRef{bs[i], 0};
    // Odometer over the materialized parallel edges of each bundle.
    while (true) {
      if (out.size() >= limits.max_cycles) {
        throw CycleCapExceeded("simple-cycle enumeration exceeded the cap of " +
                               std::to_string(limits.max_cycles));
      }
      out.push_back(Cycle::from_edges(g, edges));
      std::size_t i = 0;
      for (; i < edges.size(); ++i) {
        if (++edges[i].index < g.bundle(edges[i].bundle).mult.materialized()) break;
        edges[i].index = 0;
      }
      if (i == edges.size()) break;
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

ConditionKResult condition_K(const Graph& g, const Limits& limits) {
  std::vector<std::vector<std::uint32_t>> cycles;
  for_each_bundle_cycle(g, limits.max_cycles,
                        [&](const std::vector<std::uint32_t>& bs) { cycles.push_back(bs); });
  // Number of edge-level simple cycles through each vertex, saturating at 2.
  std::vector<std::uint32_t> through(g.vertex_count(), 0);
  for (const auto& bs : cycles) {
    std::uint32_t weight = 1;
    for (auto b : bs) weight = std::min<std::uint32_t>(2, weight * g.bundle(b).mult.materialized());
    for (auto b : bs) {
      auto& t = through[g.bundle(b).src];
      t = std::min<std::uint32_t>(2, t + weight);
    }
  }
  std::vector<Cycle> bad;
  for (const auto& bs : cycles) {
    const bool lonely = std::all_of(bs.begin(), bs.end(), [&](std::uint32_t b) {
      return through[g.bundle(b).src] == 1;
    });
    if (!lonely) continue;
    std::vector<EdgeRef> edges;
    for (auto b : bs) edges.push_back(EdgeRef{b, 0});
    bad.push_back(Cycle::from_edges(g, std::move(edges)));
  }
  if (bad.empty()) return {};
  return ConditionKResult{false, *std::min_element(bad.begin(), bad.end())};
}

bool is_cycle_without_K(const Graph& g, const Cycle& c) {
  const VertexSet on = c.vertex_set();
  for (const auto& e : c.edges()) {
    for (auto b : g.out_bundles(g.source(e))) {
      const auto& bd = g.bundle(b);
      const bool returns = g.descendants(bd.dst).intersects(on);
      if (!returns) continue;
      // An edge off the cycle that leads back onto it closes a second cycle.
      if (b != e.bundle || bd.mult != Multiplicity::finite(1)) return false;
    }
  }
  return true;
}

std::vector<Cycle> cycles_without_exits(const Graph& g) {
  auto single_edge = [&](VertexId v) -> std::optional<std::uint32_t> {
    const auto& out = g.out_bundles(v);
    if (out.size() != 1 || g.bundle(out[0]).mult != Multiplicity::finite(1)) return std::nullopt;
    return out[0];
  };
  std::vector<Cycle> out;
  for (VertexId start = 0; start < g.vertex_count(); ++start) {
    std::vector<EdgeRef> edges;
    VertexId u = start;
    bool closed = false;
    for (std::size_t step = 0; step < g.vertex_count(); ++step) {
      auto b = single_edge(u);
      if (!b) break;
      edges.push_back(EdgeRef{*b, 0});
      u = g.bundle(*b).dst;
      if (u < start) break;  // found (or will find) from the smaller vertex
      if (u == start) {
        closed = true;
        break;
      }
    }
    if (closed) out.push_back(Cycle::from_edges(g, std::move(edges)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_admissible(const Graph& g, const AdmissiblePair& p) {
  if (!p.H.subset_of(g.all_vertices()) || !p.S.subset_of(g.all_vertices())) return false;
  if (!is_hereditary_saturated(g, p.H)) return false;
  return p.S.subset_of(breaking_vertices(g, p.H));
}

void require_admissible(const Graph& g, const AdmissiblePair& p) {
  require_hs(g, p.H);
  if (!p.S.subset_of(g.all_vertices())) throw InputError("S refers to unknown vertices");
  const auto bad = p.S - breaking_vertices(g, p.H);
  if (!bad.empty()) {
    throw InputError("S contains '" + g.name(bad.to_vector().front()) + "', which is not a breaking vertex of H");
  }
}

bool pair_leq(const AdmissiblePair& a, const AdmissiblePair& b) {
  return a.H.subset_of(b.H) && a.S.subset_of(b.H | b.S);
}

QuotientGraph quotient_graph(const Graph& g, const AdmissiblePair& p) {
  require_admissible(g, p);
  const auto primed = breaking_vertices(g, p.H) - p.S;
  auto prime_name = [&](VertexId v) { return g.name(v) + "'"; };

  std::vector<std::string> names;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!p.H.contains(v)) names.push_back(g.name(v));
  }
  for (auto v : primed.to_vector()) {
    if (g.find(prime_name(v))) throw InputError("vertex name '" + prime_name(v) + "' clashes with a primed copy");
    names.push_back(prime_name(v));
  }

  std::vector<Graph::BundleSpec> specs;
  std::vector<QuotientGraph::BundleOrigin> bundle_origin;
  for (std::uint32_t b = 0; b < g.bundles().size(); ++b) {
    const auto& bd = g.bundle(b);
    if (p.H.contains(bd.dst)) continue;
    specs.push_back({g.name(bd.src), g.name(bd.dst), bd.mult, bd.id});
    bundle_origin.push_back({b, false});
  }
  for (std::uint32_t b = 0; b < g.bundles().size(); ++b) {
    const auto& bd = g.bundle(b);
    if (!primed.contains(bd.dst)) continue;
    specs.push_back({g.name(bd.src), prime_name(bd.dst), bd.mult, bd.id + "'"});
    bundle_origin.push_back({b, true});
  }

  Graph q(names, std::move(specs));
  std::vector<QuotientGraph::VertexOrigin> vertex_origin(q.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!p.H.contains(v)) vertex_origin[q.id_of(g.name(v))] = {v, false};
    if (primed.contains(v)) vertex_origin[q.id_of(prime_name(v))] = {v, true};
  }
  return QuotientGraph{std::move(q), std::move(vertex_origin), std::move(bundle_origin)};
}

Cycle lift_cycle(const Graph& g, const QuotientGraph& q, const Cycle& c) {
  std::vector<EdgeRef> edges;
  for (const auto& e : c.edges()) {
    const auto& o = q.bundle_origin.at(e.bundle);
    if (o.primed) throw InputError("a cycle cannot use a primed edge");
    edges.push_back(EdgeRef{o.bundle, e.index});
  }
  return Cycle::from_edges(g, std::move(edges));
}

bool exit_free_in_quotient(const Graph& g, const AdmissiblePair& p, const Cycle& c) {
  if (c.vertex_set().intersects(p.H)) return false;
  const auto primed = breaking_vertices(g, p.H) - p.S;
  for (const auto& e : c.edges()) {
    const VertexId u = g.source(e);
    for (auto b : g.out_bundles(u)) {
      const auto& bd = g.bundle(b);
      if (p.H.contains(bd.dst)) continue;
      // Any edge from the cycle into a primed vertex leaves through its primed copy.
      if (primed.contains(bd.dst)) return false;
      if (b != e.bundle || bd.mult != Multiplicity::finite(1)) return false;
    }
  }
  return true;
}

std::vector<Cycle> exit_free_cycles(const Graph& g, const AdmissiblePair& p) {
  const auto q = quotient_graph(g, p);
  std::vector<Cycle> out;
  for (const auto& c : cycles_without_exits(q.graph)) out.push_back(lift_cycle(g, q, c));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AdmissiblePair> admissible_pairs(const Graph& g) {
  std::vector<AdmissiblePair> out;
  for (auto h : hereditary_saturated_sets(g)) {
    const std::uint64_t b = breaking_vertices(g, h).bits();
    for (std::uint64_t s = b;; s = (s - 1) & b) {
      out.push_back({h, VertexSet(s)});
      if (s == 0) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ChainCheck chain_check(std::span<const AdmissiblePair> pairs) {
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      if (!pair_leq(pairs[i], pairs[j]) && !pair_leq(pairs[j], pairs[i])) {
        return ChainCheck{false, std::make_pair(pairs[i], pairs[j])};
      }
    }
  }
  return {};
}

TailCoverReport tail_covers(const Graph& g, const Limits& limits) {
  TailCoverReport report;
  report.tails = maximal_tails(g);
  const auto& tails = report.tails;
  if (tails.size() > limits.max_tails) {
    throw InputError("graph has " + std::to_string(tails.size()) + " maximal tails; the cover search is limited to " +
                     std::to_string(limits.max_tails));
  }
  const auto all = g.all_vertices();
  if (all.empty()) return report;

  // suffix[i] = union of tails[i..]
  std::vector<VertexSet> suffix(tails.size() + 1);
  for (std::size_t i = tails.size(); i-- > 0;) suffix[i] = suffix[i + 1] | tails[i];

  std::vector<std::size_t> chosen;
  std::vector<std::vector<VertexSet>> best;
  std::vector<std::size_t> sizes;
  auto irredundant = [&]() {
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      VertexSet others;
      for (std::size_t j = 0; j < chosen.size(); ++j) {
        if (j != i) others |= tails[chosen[j]];
      }
      if (tails[chosen[i]].subset_of(others)) return false;
    }
    return true;
  };
  std::function<void(std::size_t, VertexSet)> search = [&](std::size_t i, VertexSet covered) {
    if (covered == all) {
      if (irredundant()) {
        sizes.push_back(chosen.size());
        std::vector<VertexSet> cover;
        for (auto k : chosen) cover.push_back(tails[k]);
        if (best.empty() || cover.size() > best.front().size()) best.clear();
        if (best.empty() || cover.size() == best.front().size()) best.push_back(std::move(cover));
      }
      // Adding more tails to a cover can still yield an irredundant family only if the
      // newcomer has a private vertex, which is impossible once everything is covered.
      return;
    }
    if (i == tails.size() || (covered | suffix[i]) != all) return;
    if (!tails[i].subset_of(covered)) {
      chosen.push_back(i);
      search(i + 1, covered | tails[i]);
      chosen.pop_back();
    }
    search(i + 1, covered);
  };
  search(0, VertexSet{});

  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  std::sort(best.begin(), best.end());
  report.maximum_covers = std::move(best);
  report.sizes = std::move(sizes);
  return report;
}

std::optional<std::vector<VertexSet>> irredundant_tail_cover(const Graph& g, std::size_t required_min,
                                                             const Limits& limits) {
  auto report = tail_covers(g, limits);
  if (report.maximum_covers.empty() || report.max_size() < required_min) return std::nullopt;
  return report.maximum_covers.front();
}

}  // namespace lpa
