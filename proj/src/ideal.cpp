#include "lpa/ideal.hpp"

#include <algorithm>
#include <optional>

#include "lpa/error.hpp"

namespace lpa {

namespace {

void require_same_space(const Ideal& a, const Ideal& b) {
  if (a.graph_ptr() != b.graph_ptr()) throw InputError("ideals belong to different graphs");
  if (!(a.field() == b.field())) {
    throw InputError("ideals are over different fields (" + a.field().to_string() + " vs " + b.field().to_string() + ")");
  }
}

// The image of an ideal in the corner of a cycle c, viewed as an ideal of K[x, x^-1].
struct Local {
  enum Kind { kZero, kPoly, kWhole } kind;
  std::optional<Poly> poly;
};

Local local_at(const Ideal& I, const Cycle& c) {
  if (I.is_whole() || c.vertex_set().subset_of(I.H())) return {Local::kWhole, std::nullopt};
  auto it = I.cycles().find(c);
  if (it != I.cycles().end()) return {Local::kPoly, it->second};
  return {Local::kZero, std::nullopt};
}

std::vector<Cycle> cycle_union(const Ideal& I, const Ideal& J) {
  std::vector<Cycle> out = I.cycle_set();
  for (const auto& [c, f] : J.cycles()) {
    if (!I.cycles().contains(c)) out.push_back(c);
  }
  return out;
}

}  // namespace

Ideal Ideal::zero(GraphPtr g, Field f) { return Ideal(std::move(g), std::move(f)); }

Ideal Ideal::whole(GraphPtr g, Field f) {
  Ideal I(std::move(g), std::move(f));
  I.whole_ = true;
  I.pair_ = {I.graph_->all_vertices(), {}};
  return I;
}

Ideal Ideal::graded(GraphPtr g, Field f, AdmissiblePair p) {
  require_admissible(*g, p);
  if (p.H == g->all_vertices()) return whole(std::move(g), std::move(f));
  Ideal I(std::move(g), std::move(f));
  I.pair_ = p;
  return I;
}

std::vector<Cycle> Ideal::cycle_set() const {
  std::vector<Cycle> out;
  for (const auto& [c, f] : cycles_) out.push_back(c);
  return out;
}

Ideal Ideal::graded_part() const {
  Ideal I(graph_, field_);
  I.whole_ = whole_;
  I.pair_ = pair_;
  return I;
}

bool Ideal::operator==(const Ideal& o) const {
  return graph_ == o.graph_ && field_ == o.field_ && whole_ == o.whole_ && pair_ == o.pair_ && cycles_ == o.cycles_;
}

std::string describe(const Ideal& I) {
  if (I.is_whole()) return "whole algebra";
  if (I.is_zero()) return "0";
  const Graph& g = I.graph();
  auto set = [&](VertexSet s) {
    std::string out = "{";
    for (const auto& n : g.names_of(s)) out += (out.size() > 1 ? "," : "") + n;
    return out + "}";
  };
  std::string out = "I(H=" + set(I.H()) + ", S=" + set(I.S()) + ")";
  for (const auto& [c, f] : I.cycles()) {
    std::string path;
    for (const auto& t : edge_tokens(g, c)) path += (path.empty() ? "" : ",") + t;
    out += " + <" + f.to_string() + " @ " + path + ">";
  }
  return out;
}

bool breaking_element_in(const Graph&, VertexId v, const AdmissiblePair& p) {
  // v^H differs from v^{H'} by terms ee* with r(e) in H' \ H, all inside I(H',S');
  // so membership reduces to v in H' or v in S'.
  return p.H.contains(v) || p.S.contains(v);
}

AdmissiblePair pair_join(const Graph& g, const AdmissiblePair& a, const AdmissiblePair& b) {
  VertexSet h = hereditary_saturated_closure(g, a.H | b.H);
  const VertexSet candidates = a.S | b.S;
  for (bool grew = true; grew;) {
    grew = false;
    for (auto v : (candidates - h).to_vector()) {
      // v^H = v once v emits nothing outside H, so v itself joins the ideal.
      if (edges_leaving(g, v, h) == std::optional<std::uint64_t>(0)) {
        h = hereditary_saturated_closure(g, h | VertexSet::single(v));
        grew = true;
      }
    }
  }
  return {h, (candidates - h) & breaking_vertices(g, h)};
}

AdmissiblePair pair_meet(const Graph& g, const AdmissiblePair& a, const AdmissiblePair& b) {
  const VertexSet h = a.H & b.H;
  VertexSet s;
  for (auto v : breaking_vertices(g, h).to_vector()) {
    if (breaking_element_in(g, v, a) && breaking_element_in(g, v, b)) s.insert(v);
  }
  return {h, s};
}

Ideal normal_form(GraphPtr g, Field f, AdmissiblePair p, std::vector<std::pair<Cycle, Poly>> parts) {
  require_admissible(*g, p);
  Ideal::CycleMap cyc;
  for (auto& [c, poly] : parts) {
    if (!(poly.field() == f)) {
      throw InputError("polynomial over " + poly.field().to_string() + " in an ideal over " + f.to_string());
    }
    if (poly.is_zero()) throw InputError("cycle polynomial must be nonzero");
    Poly n = normalize(poly);
    auto it = cyc.find(c);
    if (it == cyc.end()) {
      cyc.emplace(c, std::move(n));
    } else {
      it->second = gcd(it->second, n);
    }
  }

  while (true) {
    VertexSet absorbed;
    for (auto it = cyc.begin(); it != cyc.end();) {
      const VertexSet cv = it->first.vertex_set();
      if (cv.intersects(p.H)) {
        it = cyc.erase(it);
      } else if (it->second.is_constant()) {
        absorbed |= cv;
        it = cyc.erase(it);
      } else {
        ++it;
      }
    }
    if (absorbed.empty()) break;
    p = pair_join(*g, p, {hereditary_saturated_closure(*g, absorbed), {}});
  }

  if (p.H == g->all_vertices()) return Ideal::whole(std::move(g), std::move(f));
  for (const auto& [c, poly] : cyc) {
    if (!exit_free_in_quotient(*g, p, c)) {
      throw InputError("cycle at '" + g->name(c.base()) + "' has an exit in the quotient graph");
    }
  }
  Ideal I = Ideal::graded(std::move(g), std::move(f), p);
  I.cycles_ = std::move(cyc);
  return I;
}

Ideal make_ideal(GraphPtr g, Field f, VertexSet H, VertexSet S, std::vector<std::pair<Cycle, Poly>> parts) {
  const AdmissiblePair p{H, S};
  require_admissible(*g, p);
  for (const auto& [c, poly] : parts) {
    if (poly.is_zero()) throw InputError("cycle polynomial must be nonzero");
    if (c.vertex_set().intersects(H)) {
      throw InputError("cycle at '" + g->name(c.base()) + "' meets H");
    }
    if (!exit_free_in_quotient(*g, p, c)) {
      throw InputError("cycle at '" + g->name(c.base()) + "' has an exit in the quotient graph");
    }
  }
  return normal_form(std::move(g), std::move(f), p, std::move(parts));
}

bool contains(const Ideal& I, const Ideal& J) {
  require_same_space(I, J);
  if (I.is_whole()) return true;
  if (J.is_whole()) return false;
  if (!pair_leq(J.pair(), I.pair())) return false;
  for (const auto& [d, g] : J.cycles()) {
    if (d.vertex_set().subset_of(I.H())) continue;
    auto it = I.cycles().find(d);
    if (it == I.cycles().end() || !divides(it->second, g)) return false;
  }
  return true;
}

Ideal sum(const Ideal& I, const Ideal& J) {
  require_same_space(I, J);
  if (I.is_whole()) return I;
  if (J.is_whole()) return J;
  const AdmissiblePair p = pair_join(I.graph(), I.pair(), J.pair());
  std::vector<std::pair<Cycle, Poly>> parts;
  for (const auto& c : cycle_union(I, J)) {
    const Local a = local_at(I, c), b = local_at(J, c);
    if (a.kind == Local::kWhole || b.kind == Local::kWhole) continue;  // c already lies in H
    if (a.kind == Local::kPoly && b.kind == Local::kPoly) {
      parts.emplace_back(c, gcd(*a.poly, *b.poly));
    } else {
      parts.emplace_back(c, a.kind == Local::kPoly ? *a.poly : *b.poly);
    }
  }
  return normal_form(I.graph_ptr(), I.field(), p, std::move(parts));
}

namespace {

template <typename Combine>
Ideal meet_like(const Ideal& I, const Ideal& J, Combine combine) {
  const AdmissiblePair p = pair_meet(I.graph(), I.pair(), J.pair());
  std::vector<std::pair<Cycle, Poly>> parts;
  for (const auto& c : cycle_union(I, J)) {
    const Local a = local_at(I, c), b = local_at(J, c);
    if (a.kind == Local::kZero || b.kind == Local::kZero) continue;
    if (a.kind == Local::kWhole && b.kind == Local::kWhole) continue;
    if (a.kind == Local::kWhole) {
      parts.emplace_back(c, *b.poly);
    } else if (b.kind == Local::kWhole) {
      parts.emplace_back(c, *a.poly);
    } else {
      parts.emplace_back(c, combine(*a.poly, *b.poly));
    }
  }
  return normal_form(I.graph_ptr(), I.field(), p, std::move(parts));
}

}  // namespace

Ideal product(const Ideal& I, const Ideal& J) {
  require_same_space(I, J);
  if (I.is_whole()) return J;
  if (J.is_whole()) return I;
  return meet_like(I, J, [](const Poly& a, const Poly& b) { return a * b; });
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  require_same_space(I, J);
  if (I.is_whole()) return J;
  if (J.is_whole()) return I;
  return meet_like(I, J, [](const Poly& a, const Poly& b) { return lcm(a, b); });
}

Ideal power(const Ideal& I, unsigned n) {
  Ideal r = Ideal::whole(I.graph_ptr(), I.field());
  for (unsigned k = 0; k < n; ++k) r = product(r, I);
  return r;
}

Ideal product_of(const std::vector<Ideal>& factors) {
  if (factors.empty()) throw InputError("product of an empty list of ideals");
  Ideal r = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) r = product(r, factors[i]);
  return r;
}

Ideal radical(const Ideal& I) {
  if (I.is_whole()) throw InputError("the radical is only defined for proper ideals");
  std::vector<std::pair<Cycle, Poly>> parts;
  for (const auto& [c, f] : I.cycles()) parts.emplace_back(c, squarefree_part(f));
  return normal_form(I.graph_ptr(), I.field(), I.pair(), std::move(parts));
}

}  // namespace lpa
