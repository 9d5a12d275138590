#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "kegraph/budget.hpp"
#include "kegraph/graph.hpp"

namespace kegraph {

/// d(G), ker(G) and one critical independent set.
struct CriticalProfile {
  int d = 0;
  VertexSet ker;
  int epsilon = 0;                    // |ker|
  VertexSet witness;                  // critical independent set containing ker
  std::optional<int> max_crit_size;   // size of a maximum critical independent set
};

/// d(G) = max |A| - |N(A)| over vertex subsets, computed as n - mu(B(G)) where
/// B(G) is the bipartite double cover (u adjacent to v' for every edge uv).
int critical_difference(const Graph& g);
/// d of the subgraph induced by the vertices not in `removed`.
int critical_difference_without(const Graph& g, const VertexSet& removed);

struct BruteCriticalDifference {
  int d = 0;
  VertexSet witness;  // lexicographically least independent set attaining d
};
/// d(G) by enumerating independent sets (n <= 64, budgeted).
BruteCriticalDifference critical_difference_bruteforce(const Graph& g, Budget budget = {});

/// ker(G) = {v : d(G - v) = d(G) - 1}.
VertexSet ker(const Graph& g);
/// ker(G) as the intersection of all critical independent sets (enumeration).
VertexSet ker_by_intersection(const Graph& g, Budget budget = {});

/// True iff some critical independent set contains v, i.e.
/// 1 - deg(v) + d(G - N[v]) = d(G).
bool in_some_critical_independent_set(const Graph& g, Vertex v);

/// Grows ker(G) greedily in increasing vertex order, keeping the set
/// extendable to a critical independent set at every step. The result is an
/// inclusion-maximal critical independent set.
VertexSet find_critical_independent_set(const Graph& g);

/// Every critical independent set, in increasing lexicographic order.
std::vector<VertexSet> critical_independent_sets(const Graph& g, Budget budget = {});
/// Every maximum critical independent set, in increasing lexicographic order.
std::vector<VertexSet> maximum_critical_independent_sets(const Graph& g, Budget budget = {});
/// The lexicographically least maximum critical independent set.
VertexSet max_critical_independent_set_bruteforce(const Graph& g, Budget budget = {});

/// True iff the empty set is the only critical independent set, i.e.
/// |N(A)| > |A| for every nonempty independent A.
bool has_only_empty_critical(const Graph& g);

/// True iff a is independent and |a| - |N(a)| = d(G).
bool is_critical_independent(const Graph& g, const VertexSet& a);

CriticalProfile critical_profile(const Graph& g, bool with_max_size = false, Budget budget = {});

}  // namespace kegraph
