#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "kegraph/budget.hpp"
#include "kegraph/graph.hpp"

namespace kegraph {

/// Exact independence data for one graph.
struct IndependenceSummary {
  int alpha = 0;
  std::optional<std::size_t> omega_count;  // |Omega(G)|, when enumerated
  VertexSet core;                          // intersection of all maximum independent sets
  int xi = 0;                              // |core|
  EdgeSet alpha_critical_edges;
  int eta = 0;                             // |alpha_critical_edges|
  VertexSet alpha_critical_vertices;       // equals core
};

// All routines below are exact. They support graphs with at most 64
// vertices and throw BudgetExceeded when the search outgrows `budget`.

/// alpha(G) by branch and bound: greedy clique cover bound, max-degree
/// branching, degree <= 1 vertices taken eagerly.
int independence_number(const Graph& g, Budget budget = {});

/// Omega(G): every maximum independent set, in increasing lexicographic order.
std::vector<VertexSet> enumerate_maximum_independent_sets(const Graph& g, Budget budget = {});

/// Ind(G): visits every independent set exactly once, including the empty set.
void for_each_independent_set(const Graph& g, const std::function<void(const VertexSet&)>& visit,
                              Budget budget = {});
std::size_t count_independent_sets(const Graph& g, Budget budget = {});

/// core(G) = {v : alpha(G - v) < alpha(G)}.
VertexSet core(const Graph& g, Budget budget = {});
/// core(G) as the intersection of Omega(G); used to cross-check core().
VertexSet core_by_intersection(const Graph& g, Budget budget = {});

/// Edges e with alpha(G - e) > alpha(G).
EdgeSet alpha_critical_edges(const Graph& g, Budget budget = {});

IndependenceSummary summarize_independence(const Graph& g, bool enumerate_omega = false,
                                           Budget budget = {});

}  // namespace kegraph
