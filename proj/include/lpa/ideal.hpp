#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "lpa/field.hpp"
#include "lpa/graph.hpp"
#include "lpa/poly.hpp"

namespace lpa {

using GraphPtr = std::shared_ptr<const Graph>;

/// Knobs shared by every ideal-level computation.
struct Config {
  Limits limits;
  FactorOptions factor;
};

/// Two-sided ideal in normal form I(H,S) + sum <f_i(c_i)>.
///
/// Every c_i avoids H and has no exit in E \ (H,S); every f_i is monic with nonzero constant term
/// and degree >= 1. The whole algebra is a distinguished value whose pair reads (E^0, {}).
class Ideal {
 public:
  using CycleMap = std::map<Cycle, Poly>;

  static Ideal zero(GraphPtr g, Field f);
  static Ideal whole(GraphPtr g, Field f);
  /// Throws InputError when p is not admissible.
  static Ideal graded(GraphPtr g, Field f, AdmissiblePair p);

  const Graph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }
  const Field& field() const { return field_; }

  bool is_whole() const { return whole_; }
  bool is_proper() const { return !whole_; }
  bool is_zero() const { return !whole_ && pair_.H.empty() && pair_.S.empty() && cycles_.empty(); }
  bool is_graded() const { return cycles_.empty(); }

  const AdmissiblePair& pair() const { return pair_; }
  VertexSet H() const { return pair_.H; }
  VertexSet S() const { return pair_.S; }
  const CycleMap& cycles() const { return cycles_; }
  std::vector<Cycle> cycle_set() const;

  /// gr(I) = I(H,S).
  Ideal graded_part() const;

  bool operator==(const Ideal& o) const;

 private:
  Ideal(GraphPtr g, Field f) : graph_(std::move(g)), field_(std::move(f)) {}

  GraphPtr graph_;
  Field field_;
  bool whole_ = false;
  AdmissiblePair pair_;
  CycleMap cycles_;

  friend Ideal make_ideal(GraphPtr, Field, VertexSet, VertexSet, std::vector<std::pair<Cycle, Poly>>);
  friend Ideal normal_form(GraphPtr, Field, AdmissiblePair, std::vector<std::pair<Cycle, Poly>>);
};

/// Validating constructor: (H,S) must be admissible, each cycle must avoid H and be exit-free in
/// the quotient, each polynomial nonzero. Constant polynomials pull their cycle into H;
/// repeated cycles combine by gcd.
Ideal make_ideal(GraphPtr g, Field f, VertexSet H, VertexSet S, std::vector<std::pair<Cycle, Poly>> parts);

/// Normal form of I(p) + sum <f(c)> where every cycle is known to be exit-free in E \ p or
/// to meet H. Runs absorption to a fixed point.
Ideal normal_form(GraphPtr g, Field f, AdmissiblePair p, std::vector<std::pair<Cycle, Poly>> parts);

/// Admissible pair of I(a) + I(b).
AdmissiblePair pair_join(const Graph& g, const AdmissiblePair& a, const AdmissiblePair& b);
/// Admissible pair of I(a) ∩ I(b).
AdmissiblePair pair_meet(const Graph& g, const AdmissiblePair& a, const AdmissiblePair& b);
/// For v in B_H with H inside p.H: whether v^H lies in I(p).
bool breaking_element_in(const Graph& g, VertexId v, const AdmissiblePair& p);

/// Compact one-line rendering, e.g. "I(H={v1}, S={}) + <x + 1 @ c1#0>".
std::string describe(const Ideal& I);

/// J ⊆ I.
bool contains(const Ideal& I, const Ideal& J);
Ideal sum(const Ideal& I, const Ideal& J);
Ideal product(const Ideal& I, const Ideal& J);
Ideal intersect(const Ideal& I, const Ideal& J);
Ideal power(const Ideal& I, unsigned n);
/// Product of a nonempty list, multiplied left to right.
Ideal product_of(const std::vector<Ideal>& factors);
/// Replaces each f_i by its square-free part. Throws InputError for the whole algebra.
Ideal radical(const Ideal& I);

}  // namespace lpa
