#include "kegraph/critical.hpp"

#include <algorithm>

#include "kegraph/detail/bipartite.hpp"
#include "kegraph/detail/dense_graph.hpp"

namespace kegraph {

using detail::DenseGraph;
using detail::Mask;

namespace {

void require_universe(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.n()) throw DomainError("vertex set universe does not match graph order");
}

// Deficiency of the double cover restricted to vertices not in `removed`.
int cover_deficiency(const Graph& g, const std::vector<char>& removed) {
  const int n = static_cast<int>(g.n());
  std::vector<std::vector<int>> adj(g.n());
  int alive = 0;
  for (int u = 0; u < n; ++u) {
    if (removed[static_cast<std::size_t>(u)]) continue;
    ++alive;
    for (Vertex w : g.neighbors(u)) {
      if (!removed[static_cast<std::size_t>(w)]) adj[static_cast<std::size_t>(u)].push_back(w);
    }
  }
  std::vector<int> mate_left;
  std::vector<int> mate_right;
  const int matched = detail::hopcroft_karp(
      n, n, [&](int u) -> const std::vector<int>& { return adj[static_cast<std::size_t>(u)]; },
      mate_left, mate_right);
  return alive - matched;
}

std::vector<char> removal_flags(const Graph& g, const VertexSet& removed) {
  std::vector<char> flags(g.n(), 0);
  removed.for_each([&](Vertex v) { flags[static_cast<std::size_t>(v)] = 1; });
  return flags;
}

// Lexicographic order on the sorted member lists of two masks.
bool mask_lex_less(Mask a, Mask b) {
  const Mask diff = a ^ b;
  if (diff == 0) return false;
  const int v = detail::lowest(diff);
  const Mask at_or_above = ~(detail::bit(v) - 1);
  if (a & detail::bit(v)) return (b & at_or_above) != 0;
  return (a & at_or_above) == 0;
}

std::vector<VertexSet> sorted_sets(const Graph& g, std::vector<Mask> masks) {
  std::sort(masks.begin(), masks.end(), mask_lex_less);
  std::vector<VertexSet> out;
  out.reserve(masks.size());
  for (Mask m : masks) out.push_back(VertexSet::from_mask(g.n(), m));
  return out;
}

}  // namespace

int critical_difference(const Graph& g) {
  return cover_deficiency(g, std::vector<char>(g.n(), 0));
}

int critical_difference_without(const Graph& g, const VertexSet& removed) {
  require_universe(g, removed);
  return cover_deficiency(g, removal_flags(g, removed));
}

BruteCriticalDifference critical_difference_bruteforce(const Graph& g, Budget budget) {
  const DenseGraph dense(g);
  WorkMeter meter(budget, "critical_difference_bruteforce");
  int best = 0;
  Mask witness = 0;
  detail::for_each_independent(dense, dense.all(), meter, [&](Mask chosen, Mask nbrs) {
    const int diff = detail::popcount(chosen) - detail::popcount(nbrs);
    if (diff > best || (diff == best && mask_lex_less(chosen, witness))) {
      best = diff;
      witness = chosen;
    }
  });
  return {best, VertexSet::from_mask(g.n(), witness)};
}

VertexSet ker(const Graph& g) {
  std::vector<char> removed(g.n(), 0);
  const int d = cover_deficiency(g, removed);
  VertexSet out(g.n());
  for (Vertex v = 0; v < static_cast<Vertex>(g.n()); ++v) {
    removed[static_cast<std::size_t>(v)] = 1;
    if (cover_deficiency(g, removed) == d - 1) out.insert(v);
    removed[static_cast<std::size_t>(v)] = 0;
  }
  return out;
}

VertexSet ker_by_intersection(const Graph& g, Budget budget) {
  const DenseGraph dense(g);
  const int d = critical_difference(g);
  WorkMeter meter(budget, "ker_by_intersection");
  Mask meet = dense.all();
  detail::for_each_independent(dense, dense.all(), meter, [&](Mask chosen, Mask nbrs) {
    if (detail::popcount(chosen) - detail::popcount(nbrs) == d) meet &= chosen;
  });
  return VertexSet::from_mask(g.n(), meet);
}

bool in_some_critical_independent_set(const Graph& g, Vertex v) {
  if (!g.has_vertex(v)) throw DomainError("vertex " + std::to_string(v) + " out of range");
  VertexSet closed(g.n());
  closed.insert(v);
  closed = closed_neighborhood(g, closed);
  return 1 - static_cast<int>(g.degree(v)) + critical_difference_without(g, closed) ==
         critical_difference(g);
}

VertexSet find_critical_independent_set(const Graph& g) {
  const int d = critical_difference(g);
  VertexSet chosen = ker(g);
  VertexSet blocked = closed_neighborhood(g, chosen);
  for (Vertex v = 0; v < static_cast<Vertex>(g.n()); ++v) {
    if (blocked.contains(v)) continue;
    VertexSet trial = chosen;
    trial.insert(v);
    const VertexSet trial_closed = closed_neighborhood(g, trial);
    if (difference(g, trial) + critical_difference_without(g, trial_closed) == d) {
      chosen = std::move(trial);
      blocked = trial_closed;
    }
  }
  return chosen;
}

std::vector<VertexSet> critical_independent_sets(const Graph& g, Budget budget) {
  const DenseGraph dense(g);
  const int d = critical_difference(g);
  WorkMeter meter(budget, "critical_independent_sets");
  std::vector<Mask> found;
  detail::for_each_independent(dense, dense.all(), meter, [&](Mask chosen, Mask nbrs) {
    if (detail::popcount(chosen) - detail::popcount(nbrs) == d) found.push_back(chosen);
  });
  return sorted_sets(g, std::move(found));
}

std::vector<VertexSet> maximum_critical_independent_sets(const Graph& g, Budget budget) {
  const DenseGraph dense(g);
  const int d = critical_difference(g);
  WorkMeter meter(budget, "maximum_critical_independent_sets");
  std::vector<Mask> found;
  int best = -1;
  detail::for_each_independent(dense, dense.all(), meter, [&](Mask chosen, Mask nbrs) {
    const int size = detail::popcount(chosen);
    if (size - detail::popcount(nbrs) != d || size < best) return;
    if (size > best) {
      best = size;
      found.clear();
    }
    found.push_back(chosen);
  });
  return sorted_sets(g, std::move(found));
}

VertexSet max_critical_independent_set_bruteforce(const Graph& g, Budget budget) {
  return maximum_critical_independent_sets(g, budget).front();
}

bool has_only_empty_critical(const Graph& g) {
  if (critical_difference(g) != 0) return false;
  for (Vertex v = 0; v < static_cast<Vertex>(g.n()); ++v) {
    if (in_some_critical_independent_set(g, v)) return false;
  }
  return true;
}

bool is_critical_independent(const Graph& g, const VertexSet& a) {
  require_universe(g, a);
  return is_independent(g, a) && difference(g, a) == critical_difference(g);
}

CriticalProfile critical_profile(const Graph& g, bool with_max_size, Budget budget) {
  CriticalProfile p;
  p.d = critical_difference(g);
  p.ker = ker(g);
  p.epsilon = static_cast<int>(p.ker.size());
  p.witness = find_critical_independent_set(g);
  if (with_max_size) {
    p.max_crit_size = static_cast<int>(max_critical_independent_set_bruteforce(g, budget).size());
  }
  return p;
}

}  // namespace kegraph
