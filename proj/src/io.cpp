#include "lpa/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "lpa/error.hpp"

namespace lpa::io {

namespace {

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(where + ": missing \"" + key + "\"");
  return *it;
}

std::vector<std::string> string_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw InputError(where + ": expected an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

Multiplicity mult_from_json(const json& j, const std::string& where) {
  if (j.is_string() && (j == "omega" || j == "ω")) return Multiplicity::omega();
  if (j.is_number_unsigned() && j.get<std::uint64_t>() >= 1 && j.get<std::uint64_t>() <= 1000000) {
    return Multiplicity::finite(j.get<std::uint32_t>());
  }
  throw InputError(where + ": multiplicity must be a positive integer or \"omega\"");
}

Poly poly_from_json(const json& j, const Field& f, const std::string& where) {
  if (j.is_string()) return parse_poly(j.get<std::string>(), f);
  if (j.is_array()) {
    std::vector<mpq_class> c;
    for (const auto& e : j) {
      try {
        if (e.is_number_integer()) {
          c.emplace_back(e.get<long>());
        } else if (e.is_string()) {
          mpq_class q(e.get<std::string>());
          q.canonicalize();
          if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
          c.push_back(q);
        } else {
          throw std::invalid_argument("bad coefficient");
        }
      } catch (const std::invalid_argument&) {
        throw InputError(where + ": coefficients must be integers or strings like \"-3/2\"");
      }
    }
    if (!f.is_rational()) {
      for (const auto& q : c) {
        if (q.get_den() != 1) throw InputError(where + ": fractional coefficient over " + f.to_string());
      }
    }
    return Poly(f, std::move(c));
  }
  throw InputError(where + ": polynomial must be a string or a coefficient list");
}

std::string quote_dot(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

json pair_to_json(const Graph& g, const AdmissiblePair& p) {
  return {{"H", vertex_set_to_json(g, p.H)}, {"S", vertex_set_to_json(g, p.S)}};
}

json optional_cycle(const Graph& g, const std::optional<Cycle>& c) {
  return c ? cycle_to_json(g, *c) : json(nullptr);
}

}  // namespace

json parse_json(std::string_view text, const std::string& origin) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::string what = e.what();
    // Drop the library's "[json.exception.parse_error.101] " prefix.
    if (auto pos = what.find("] "); pos != std::string::npos) what = what.substr(pos + 2);
    if (what.find(" at line ") == std::string::npos) what = "at " + line_column(text, e.byte) + ": " + what;
    throw InputError(origin + ": JSON " + what);
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

json vertex_set_to_json(const Graph& g, VertexSet s) { return g.names_of(s); }

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& b : g.bundles()) {
    json m = b.mult.is_omega() ? json("omega") : json(b.mult.count());
    edges.push_back({{"src", g.name(b.src)}, {"dst", g.name(b.dst)}, {"mult", m}, {"id", b.id}});
  }
  return {{"vertices", g.names()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
  auto vertices = string_list(member(j, "vertices", "graph"), "graph.vertices");
  if (vertices.empty()) throw InputError("graph.vertices: a graph needs at least one vertex");
  std::vector<Graph::BundleSpec> bundles;
  if (auto it = j.find("edges"); it != j.end()) {
    if (!it->is_array()) throw InputError("graph.edges: expected an array");
    for (std::size_t k = 0; k < it->size(); ++k) {
      const json& e = (*it)[k];
      const std::string where = "graph.edges[" + std::to_string(k) + "]";
      const json& src = member(e, "src", where);
      const json& dst = member(e, "dst", where);
      if (!src.is_string() || !dst.is_string()) throw InputError(where + ": src and dst must be strings");
      Graph::BundleSpec spec{src.get<std::string>(), dst.get<std::string>(), Multiplicity::finite(1), ""};
      if (auto m = e.find("mult"); m != e.end()) spec.mult = mult_from_json(*m, where + ".mult");
      if (auto id = e.find("id"); id != e.end()) {
        if (!id->is_string() || id->get<std::string>().empty()) throw InputError(where + ".id: expected a nonempty string");
        spec.id = id->get<std::string>();
      }
      bundles.push_back(std::move(spec));
    }
  }
  return Graph(std::move(vertices), std::move(bundles));
}

json cycle_to_json(const Graph& g, const Cycle& c) { return edge_tokens(g, c); }

Cycle cycle_from_json(const json& j, const Graph& g) {
  auto tokens = string_list(j, "cycle");
  if (tokens.empty()) throw InputError("cycle: empty edge list");
  std::vector<EdgeRef> edges;
  const bool by_edge = std::any_of(tokens.begin(), tokens.end(),
                                   [](const std::string& t) { return t.find('#') != std::string::npos; });
  if (by_edge) {
    for (const auto& t : tokens) {
      const auto hash = t.find('#');
      if (hash == std::string::npos) throw InputError("cycle: mixes edge tokens and vertex names");
      const auto b = g.find_bundle(std::string_view(t).substr(0, hash));
      if (!b) throw InputError("cycle: unknown edge id '" + t.substr(0, hash) + "'");
      std::uint32_t index = 0;
      try {
        std::size_t used = 0;
        const unsigned long v = std::stoul(t.substr(hash + 1), &used);
        if (used != t.size() - hash - 1 || v > 0xffffffffUL) throw std::invalid_argument("index");
        index = static_cast<std::uint32_t>(v);
      } catch (const std::logic_error&) {
        throw InputError("cycle: bad edge index in '" + t + "'");
      }
      const Multiplicity m = g.bundle(*b).mult;
      if (!m.is_omega() && index >= m.count()) throw InputError("cycle: edge index out of range in '" + t + "'");
      edges.push_back({*b, index});
    }
  } else {
    if (tokens.size() >= 2 && tokens.front() == tokens.back()) tokens.pop_back();
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      const VertexId s = g.id_of(tokens[i]);
      const VertexId d = g.id_of(tokens[(i + 1) % tokens.size()]);
      std::optional<std::uint32_t> found;
      for (auto b : g.out_bundles(s)) {
        if (g.bundle(b).dst != d) continue;
        if (found || g.bundle(b).mult != Multiplicity::finite(1)) {
          throw InputError("cycle: several edges from '" + tokens[i] + "' to '" + g.name(d) +
                           "'; give the cycle as edge tokens");
        }
        found = b;
      }
      if (!found) throw InputError("cycle: no edge from '" + tokens[i] + "' to '" + g.name(d) + "'");
      edges.push_back({*found, 0});
    }
  }
  return Cycle::from_edges(g, std::move(edges));
}

json ideal_to_json(const Ideal& I) {
  const Graph& g = I.graph();
  json cycles = json::array();
  for (const auto& [c, f] : I.cycles()) cycles.push_back({{"cycle", cycle_to_json(g, c)}, {"poly", f.to_string()}});
  return {{"H", vertex_set_to_json(g, I.H())},
          {"S", vertex_set_to_json(g, I.S())},
          {"cycles", cycles},
          {"field", I.field().to_string()}};
}

Ideal ideal_from_json(const json& j, const GraphPtr& g, const Field& default_field) {
  if (!j.is_object()) throw InputError("ideal: expected an object");
  Field f = default_field;
  if (auto it = j.find("field"); it != j.end()) {
    if (!it->is_string()) throw InputError("ideal.field: expected \"Q\" or \"Fp:<p>\"");
    f = Field::parse(it->get<std::string>());
  }
  auto set_of = [&](const char* key) {
    auto it = j.find(key);
    if (it == j.end()) return VertexSet{};
    return g->vertex_set(string_list(*it, std::string("ideal.") + key));
  };
  const VertexSet H = set_of("H"), S = set_of("S");
  std::vector<std::pair<Cycle, Poly>> parts;
  if (auto it = j.find("cycles"); it != j.end()) {
    if (!it->is_array()) throw InputError("ideal.cycles: expected an array");
    for (std::size_t k = 0; k < it->size(); ++k) {
      const std::string where = "ideal.cycles[" + std::to_string(k) + "]";
      const json& e = (*it)[k];
      Cycle c = cycle_from_json(member(e, "cycle", where), *g);
      Poly p = poly_from_json(member(e, "poly", where), f, where + ".poly");
      if (!(p.field() == f)) {
        throw InputError(where + ".poly: polynomial over " + p.field().to_string() + " in an ideal over " + f.to_string());
      }
      parts.emplace_back(std::move(c), std::move(p));
    }
  }
  return make_ideal(g, f, H, S, std::move(parts));
}

json certificate_to_json(const FactorizationCert& cert) {
  json factors = json::array();
  for (const auto& f : cert.factors) factors.push_back(ideal_to_json(f));
  return {{"target", ideal_to_json(cert.target)},
          {"kind", cert.kind == FactorKind::kPrime ? "prime" : "semiprime"},
          {"factors", factors},
          {"verified", cert.verified}};
}

FactorizationCert certificate_from_json(const json& j, const GraphPtr& g, const Field& default_field,
                                        const Config& cfg) {
  const json& kind = member(j, "kind", "certificate");
  if (kind != "prime" && kind != "semiprime") throw InputError("certificate.kind: expected \"prime\" or \"semiprime\"");
  Ideal target = ideal_from_json(member(j, "target", "certificate"), g, default_field);
  const json& fs = member(j, "factors", "certificate");
  if (!fs.is_array() || fs.empty()) throw InputError("certificate.factors: expected a nonempty array");
  std::vector<Ideal> factors;
  for (const auto& f : fs) factors.push_back(ideal_from_json(f, g, default_field));
  return certify(std::move(target), std::move(factors), kind == "prime" ? FactorKind::kPrime : FactorKind::kSemiprime,
                 cfg);
}

json prime_report_to_json(const Graph& g, const PrimeReport& r) {
  static const char* kCase[] = {nullptr, "graded-tail", "breaking-vertex", "cycle"};
  json out{{"prime", r.prime}};
  out["case"] = r.kind == PrimeCase::kNone ? json(nullptr) : json(kCase[static_cast<int>(r.kind)]);
  out["u"] = r.u ? json(g.name(*r.u)) : json(nullptr);
  out["cycle"] = optional_cycle(g, r.cycle);
  out["poly"] = r.poly ? json(r.poly->to_string()) : json(nullptr);
  return out;
}

json primary_report_to_json(const PrimaryReport& r) {
  return {{"primary", r.primary}, {"P", r.P ? ideal_to_json(*r.P) : json(nullptr)}, {"n", r.n}};
}

json cross_check_to_json(const CrossCheckReport& r) {
  json mm = json::array();
  for (const auto& m : r.mismatches) {
    mm.push_back({{"op", m.op}, {"lhs", m.lhs}, {"rhs", m.rhs}, {"expected", m.expected}, {"actual", m.actual}});
  }
  return {{"oracle", r.oracle}, {"trials", r.trials}, {"mismatches", mm}};
}

json analysis_report(const Graph& g, const Config& cfg) {
  json out;
  out["vertices"] = g.names();
  VertexSet sinks, regular, infinite;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.is_sink(v)) sinks.insert(v);
    else if (g.is_infinite_emitter(v)) infinite.insert(v);
    else regular.insert(v);
  }
  out["sinks"] = vertex_set_to_json(g, sinks);
  out["regular"] = vertex_set_to_json(g, regular);
  out["infinite_emitters"] = vertex_set_to_json(g, infinite);

  const auto k = condition_K(g, cfg.limits);
  out["condition_K"] = {{"holds", k.holds}, {"witness", optional_cycle(g, k.witness)}};
  out["condition_L"] = condition_L(g);

  json tails = json::array();
  for (auto t : maximal_tails(g)) tails.push_back(vertex_set_to_json(g, t));
  out["maximal_tails"] = tails;
  json hs = json::array();
  for (auto h : hereditary_saturated_sets(g)) hs.push_back(vertex_set_to_json(g, h));
  out["hereditary_saturated_count"] = hs.size();
  out["hereditary_saturated_sets"] = hs;

  const auto pairs = admissible_pairs(g);
  const auto chain = chain_check(pairs);
  out["admissible_pairs"] = {
      {"count", pairs.size()},
      {"chain", chain.is_chain},
      {"incomparable", chain.incomparable ? json::array({pair_to_json(g, chain.incomparable->first),
                                                         pair_to_json(g, chain.incomparable->second)})
                                          : json(nullptr)}};

  const auto ep = every_ideal_prime(g, cfg);
  out["every_ideal_prime"] = {
      {"holds", ep.holds},
      {"cycle_without_K", optional_cycle(g, ep.cycle_without_K)},
      {"incomparable", ep.incomparable ? json::array({pair_to_json(g, ep.incomparable->first),
                                                      pair_to_json(g, ep.incomparable->second)})
                                       : json(nullptr)}};
  out["every_ideal_semiprime"] = {{"holds", k.holds}, {"witness", optional_cycle(g, k.witness)}};

  const auto pp = every_ideal_product_of_primes(g, cfg);
  json entries = json::array();
  for (const auto& e : pp.entries) {
    json row = pair_to_json(g, e.pair);
    row["max_cover"] = e.max_cover;
    row["cover_sizes"] = e.cover_sizes;
    row["cycles_without_exits"] = e.cycles_without_exits;
    row["ok"] = e.ok;
    entries.push_back(row);
  }
  out["every_ideal_product_of_primes"] = {
      {"holds", pp.holds}, {"failing", pp.failing ? pair_to_json(g, *pp.failing) : json(nullptr)}, {"pairs", entries}};

  const auto ps = every_ideal_product_of_semiprimes(g, cfg);
  json conds = json::array();
  for (const auto& e : ps.entries) {
    json cs = json::array();
    for (const auto& c : e.cycles) cs.push_back(cycle_to_json(g, c));
    conds.push_back({{"H", vertex_set_to_json(g, e.H)}, {"cycles", cs}});
  }
  out["every_ideal_product_of_semiprimes"] = {{"holds", ps.holds}, {"conditions", conds}};
  return out;
}

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << quote_dot(name) << " {\n";
  for (const auto& v : g.names()) out << "  " << quote_dot(v) << ";\n";
  for (const auto& b : g.bundles()) {
    out << "  " << quote_dot(g.name(b.src)) << " -> " << quote_dot(g.name(b.dst)) << " [tooltip=" << quote_dot(b.id);
    if (b.mult.is_omega()) {
      out << ", label=\"ω\"";
    } else if (b.mult.count() > 1) {
      out << ", label=\"" << b.mult.count() << "\"";
    }
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace lpa::io
