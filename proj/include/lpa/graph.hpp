#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lpa/vertex_set.hpp"

namespace lpa {

/// Number of parallel edges in a bundle: a positive count or omega (countably many).
class Multiplicity {
 public:
  static Multiplicity finite(std::uint32_t n);
  static constexpr Multiplicity omega() { return Multiplicity(0); }

  constexpr bool is_omega() const { return n_ == 0; }
  /// Finite count; only meaningful when !is_omega().
  constexpr std::uint32_t count() const { return n_; }
  /// Count of edges that get materialized when enumerating (two stand in for omega).
  constexpr std::uint32_t materialized() const { return n_ == 0 ? 2 : n_; }

  constexpr bool operator==(const Multiplicity&) const = default;

 private:
  constexpr explicit Multiplicity(std::uint32_t n) : n_(n) {}
  std::uint32_t n_;
};

struct Bundle {
  std::string id;
  VertexId src;
  VertexId dst;
  Multiplicity mult;
};

/// A concrete edge: the index-th parallel edge of a bundle.
struct EdgeRef {
  std::uint32_t bundle = 0;
  std::uint32_t index = 0;
  auto operator<=>(const EdgeRef&) const = default;
};

/// Finite directed graph whose parallel edges are grouped into bundles.
///
/// Vertices are stored sorted by name, so vertex ids order like the names do.
/// Bundles keep their input order. The vertex set may only be empty for quotient graphs.
/// Values are immutable after construction.
class Graph {
 public:
  struct BundleSpec {
    std::string src;
    std::string dst;
    Multiplicity mult = Multiplicity::finite(1);
    std::string id;  ///< empty: assigned "e<k>" from the position
  };

  Graph(std::vector<std::string> vertices, std::vector<BundleSpec> bundles);

  std::size_t vertex_count() const { return names_.size(); }
  VertexSet all_vertices() const { return VertexSet::all(names_.size()); }
  const std::string& name(VertexId v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<VertexId> find(std::string_view name) const;
  /// Throws InputError for an unknown name.
  VertexId id_of(std::string_view name) const;
  VertexSet vertex_set(std::span<const std::string> names) const;
  std::vector<std::string> names_of(VertexSet s) const;

  const std::vector<Bundle>& bundles() const { return bundles_; }
  const Bundle& bundle(std::uint32_t b) const { return bundles_.at(b); }
  std::optional<std::uint32_t> find_bundle(std::string_view id) const;
  const std::vector<std::uint32_t>& out_bundles(VertexId v) const { return out_[v]; }
  const std::vector<std::uint32_t>& in_bundles(VertexId v) const { return in_[v]; }

  VertexId source(EdgeRef e) const { return bundles_.at(e.bundle).src; }
  VertexId target(EdgeRef e) const { return bundles_.at(e.bundle).dst; }

  bool is_sink(VertexId v) const { return out_[v].empty(); }
  bool is_infinite_emitter(VertexId v) const;
  bool is_regular(VertexId v) const { return !is_sink(v) && !is_infinite_emitter(v); }

  /// {w : v >= w}, i.e. everything reachable from v by a path (v included).
  VertexSet descendants(VertexId v) const { return down_[v]; }
  /// M(v) = {w : w >= v}.
  VertexSet ancestors(VertexId v) const { return up_[v]; }

 private:
  std::vector<std::string> names_;
  std::vector<Bundle> bundles_;
  std::vector<std::vector<std::uint32_t>> out_;
  std::vector<std::vector<std::uint32_t>> in_;
  std::vector<VertexSet> down_;
  std::vector<VertexSet> up_;
  std::map<std::string, VertexId, std::less<>> vertex_index_;
  std::map<std::string, std::uint32_t, std::less<>> bundle_index_;
};

/// A cycle e_1...e_n, kept rotated so that its least vertex is the source of e_1.
class Cycle {
 public:
  /// Validates connectivity and distinct sources, then canonicalizes the rotation.
  static Cycle from_edges(const Graph& g, std::vector<EdgeRef> edges);

  const std::vector<EdgeRef>& edges() const { return edges_; }
  const std::vector<VertexId>& vertices() const { return vertices_; }
  VertexId base() const { return vertices_.front(); }
  VertexSet vertex_set() const { return set_; }
  std::size_t length() const { return edges_.size(); }

  bool operator==(const Cycle& o) const { return edges_ == o.edges_; }
  std::strong_ordering operator<=>(const Cycle& o) const { return edges_ <=> o.edges_; }

 private:
  std::vector<EdgeRef> edges_;
  std::vector<VertexId> vertices_;
  VertexSet set_;
};

/// "bundleId#index" for each edge of c, in order.
std::vector<std::string> edge_tokens(const Graph& g, const Cycle& c);

struct AdmissiblePair {
  VertexSet H;
  VertexSet S;
  auto operator<=>(const AdmissiblePair&) const = default;
};

/// Limits that keep the combinatorial searches bounded.
struct Limits {
  std::size_t max_cycles = 100000;
  std::size_t max_tails = 24;
};

bool is_hereditary(const Graph& g, VertexSet h);
bool is_saturated(const Graph& g, VertexSet h);
inline bool is_hereditary_saturated(const Graph& g, VertexSet h) {
  return is_hereditary(g, h) && is_saturated(g, h);
}

/// Least hereditary saturated superset of x.
VertexSet hereditary_saturated_closure(const Graph& g, VertexSet x);

/// Number of edges from v whose range lies outside h; nullopt when infinite.
std::optional<std::uint64_t> edges_leaving(const Graph& g, VertexId v, VertexSet h);

/// B_H. Throws InputError when h is not hereditary saturated.
VertexSet breaking_vertices(const Graph& g, VertexSet h);

/// Every hereditary saturated subset, found by walking the closure lattice upward from cl(empty).
std::vector<VertexSet> hereditary_saturated_sets(const Graph& g);

bool is_downward_directed(const Graph& g, VertexSet d);

/// Maximal tails: downward-directed complements of hereditary saturated sets.
std::vector<VertexSet> maximal_tails(const Graph& g);

/// Simple cycles with parallel edges expanded (omega bundles contribute two representatives).
std::vector<Cycle> simple_cycles(const Graph& g, const Limits& limits = {});

struct ConditionKResult {
  bool holds = true;
  std::optional<Cycle> witness;  ///< a cycle without (K) when !holds
};
ConditionKResult condition_K(const Graph& g, const Limits& limits = {});

/// True iff no vertex of c is the source of a cycle other than c.
bool is_cycle_without_K(const Graph& g, const Cycle& c);

/// Cycles none of whose vertices emits an edge off the cycle.
std::vector<Cycle> cycles_without_exits(const Graph& g);

/// Condition (L): every cycle has an exit.
inline bool condition_L(const Graph& g) { return cycles_without_exits(g).empty(); }

bool is_admissible(const Graph& g, const AdmissiblePair& p);
/// Throws InputError describing why p is not admissible.
void require_admissible(const Graph& g, const AdmissiblePair& p);

/// (H1,S1) <= (H2,S2) iff H1 is inside H2 and S1 inside H2 union S2.
bool pair_leq(const AdmissiblePair& a, const AdmissiblePair& b);

/// E \ (H,S) together with the provenance of each vertex and bundle.
struct QuotientGraph {
  struct VertexOrigin {
    VertexId vertex;
    bool primed;
  };
  struct BundleOrigin {
    std::uint32_t bundle;
    bool primed;
  };
  Graph graph;
  std::vector<VertexOrigin> vertex_origin;
  std::vector<BundleOrigin> bundle_origin;
};

QuotientGraph quotient_graph(const Graph& g, const AdmissiblePair& p);

/// Maps a cycle of the quotient graph back to the same edges of g.
Cycle lift_cycle(const Graph& g, const QuotientGraph& q, const Cycle& c);

/// True iff c avoids H and has no exit in E \ (H,S).
bool exit_free_in_quotient(const Graph& g, const AdmissiblePair& p, const Cycle& c);

/// Cycles of g that avoid H and have no exit in E \ (H,S), found in the quotient graph.
std::vector<Cycle> exit_free_cycles(const Graph& g, const AdmissiblePair& p);

/// All admissible pairs, ordered by (H,S).
std::vector<AdmissiblePair> admissible_pairs(const Graph& g);

struct ChainCheck {
  bool is_chain = true;
  std::optional<std::pair<AdmissiblePair, AdmissiblePair>> incomparable;
};
ChainCheck chain_check(std::span<const AdmissiblePair> pairs);

struct TailCoverReport {
  std::vector<VertexSet> tails;
  /// Every irredundant cover of maximum size, each sorted; sorted lexicographically.
  std::vector<std::vector<VertexSet>> maximum_covers;
  /// Sizes of all irredundant covers found (ascending, distinct).
  std::vector<std::size_t> sizes;
  std::size_t max_size() const { return maximum_covers.empty() ? 0 : maximum_covers.front().size(); }
};

/// Exhaustive search for irredundant covers of the vertex set by maximal tails.
TailCoverReport tail_covers(const Graph& g, const Limits& limits = {});

/// Lexicographically least irredundant cover of maximum size n, or nullopt if none or n < required_min.
std::optional<std::vector<VertexSet>> irredundant_tail_cover(const Graph& g, std::size_t required_min,
                                                             const Limits& limits = {});

}  // namespace lpa
