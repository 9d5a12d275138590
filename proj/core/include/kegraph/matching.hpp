#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kegraph/budget.hpp"
#include "kegraph/graph.hpp"

namespace kegraph {

/// A set of pairwise vertex-disjoint edges over a fixed vertex range.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::size_t n) : mate_(n, -1) {}
  static Matching from_edges(std::size_t n, const std::vector<Edge>& edges);

  std::size_t universe() const { return mate_.size(); }
  std::size_t size() const { return size_; }

  std::optional<Vertex> mate(Vertex v) const;
  bool is_saturated(Vertex v) const { return mate(v).has_value(); }
  bool contains(const Edge& e) const;

  void add(const Edge& e);
  void remove(const Edge& e);

  VertexSet saturated() const;
  EdgeSet edges() const;
  /// mate per vertex, -1 when unsaturated.
  const std::vector<Vertex>& mates() const { return mate_; }

  friend bool operator==(const Matching& a, const Matching& b) { return a.mate_ == b.mate_; }

 private:
  std::vector<Vertex> mate_;
  std::size_t size_ = 0;
};

/// Maximum matching by Edmonds' blossom algorithm. Free vertices are grown in
/// increasing index order, so the result is reproducible.
Matching max_matching(const Graph& g);
/// Maximum matching obtained by augmenting `seed` (which must be a matching
/// of g).
Matching max_matching(const Graph& g, Matching seed);
int matching_number(const Graph& g);

/// Maximum matching using only edges between `left` and `right`
/// (Hopcroft-Karp). The parts must be disjoint.
Matching max_matching_bipartite(const Graph& g, const VertexSet& left, const VertexSet& right);

/// mu(G - v) for every v and mu(G - e) for every e (in g.edges() order).
/// Each value comes from re-augmenting the canonical maximum matching with
/// the deleted element removed.
struct MatchingDeletionProfile {
  int mu = 0;
  Matching maximum;
  std::vector<int> without_vertex;
  std::vector<Edge> edges;
  std::vector<int> without_edge;
};
MatchingDeletionProfile matching_deletion_profile(const Graph& g);

/// {v : mu(G - v) < mu(G)}: vertices saturated by every maximum matching.
VertexSet mu_critical_vertices(const Graph& g);
/// {e : mu(G - e) < mu(G)}: edges lying in every maximum matching.
EdgeSet mu_critical_edges(const Graph& g);

enum class PerfectMatchingKind {
  None,            // a or b nonempty, but no edge joins them
  NonPerfect,      // maximum (a,b)-matching leaves a vertex of a or b exposed
  UniquePerfect,   // exactly one perfect (a,b)-matching (empty one when a, b empty)
  MultiplePerfect  // at least two perfect (a,b)-matchings
};

struct PerfectMatchingVerdict {
  PerfectMatchingKind kind = PerfectMatchingKind::None;
  Matching maximum;                 // a maximum (a,b)-matching
  std::optional<Matching> second;   // a different perfect matching (MultiplePerfect)
};

/// Decides whether the edges between disjoint sets a and b carry a unique
/// perfect matching. A perfect matching is unique iff it has no alternating
/// cycle; the cycle search is a reachability pass on a, with an arc x -> y'
/// whenever x is adjacent to mate(y') by a non-matching edge.
PerfectMatchingVerdict unique_perfect_matching_between(const Graph& g, const VertexSet& a,
                                                       const VertexSet& b);

/// Desk-scale enumerations (used as oracles and by the theorem suite).
std::vector<Matching> enumerate_maximum_matchings(const Graph& g, Budget budget = {});
std::size_t count_perfect_matchings_between(const Graph& g, const VertexSet& a, const VertexSet& b,
                                            Budget budget = {});
/// Some maximum matching, chosen by running the blossom algorithm on a
/// randomly relabelled copy of g.
Matching random_maximum_matching(const Graph& g, std::uint64_t seed);

const char* to_string(PerfectMatchingKind kind);

}  // namespace kegraph
