#include "kegraph/independence.hpp"

#include <algorithm>

#include "kegraph/detail/dense_graph.hpp"

namespace kegraph {

namespace detail {

DenseGraph::DenseGraph(const Graph& g) {
  if (g.n() > kMaxDense) {
    throw BudgetExceeded("exact independence routines support at most 64 vertices (n=" +
                         std::to_string(g.n()) + ")");
  }
  n = static_cast<int>(g.n());
  for (const Edge& e : g.edges()) add_edge(e.u, e.v);
}

namespace {

int clique_cover_bound(const DenseGraph& g, Mask p) {
  int cliques = 0;
  while (p != 0) {
    const int v = lowest(p);
    Mask clique = bit(v);
    Mask cand = p & g.adj[static_cast<std::size_t>(v)];
    while (cand != 0) {
      const int u = lowest(cand);
      clique |= bit(u);
      cand &= g.adj[static_cast<std::size_t>(u)];
    }
    p &= ~clique;
    ++cliques;
  }
  return cliques;
}

class MisSearch {
 public:
  MisSearch(const DenseGraph& g, WorkMeter& meter) : g_(g), meter_(meter) {}

  int run(Mask p) {
    best_ = 0;
    solve(p, 0);
    return best_;
  }

 private:
  void solve(Mask p, int size) {
    meter_.tick();
    // Vertices of degree 0 or 1 inside P belong to some maximum independent set.
    bool reduced = true;
    while (reduced && p != 0) {
      reduced = false;
      for (Mask s = p; s != 0; s &= s - 1) {
        const int v = lowest(s);
        const Mask nb = g_.adj[static_cast<std::size_t>(v)] & p;
        if (popcount(nb) <= 1) {
          p &= ~(nb | bit(v));
          ++size;
          reduced = true;
          break;
        }
      }
    }
    if (p == 0) {
      best_ = std::max(best_, size);
      return;
    }
    if (size + clique_cover_bound(g_, p) <= best_) return;

    int pivot = -1;
    int pivot_degree = -1;
    for (Mask s = p; s != 0; s &= s - 1) {
      const int v = lowest(s);
      const int d = popcount(g_.adj[static_cast<std::size_t>(v)] & p);
      if (d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    }
    solve(p & ~(g_.adj[static_cast<std::size_t>(pivot)] | bit(pivot)), size + 1);
    solve(p & ~bit(pivot), size);
  }

  const DenseGraph& g_;
  WorkMeter& meter_;
  int best_ = 0;
};

}  // namespace

int max_independent_size(const DenseGraph& g, Mask candidates, WorkMeter& meter) {
  return MisSearch(g, meter).run(candidates);
}

}  // namespace detail

using detail::DenseGraph;
using detail::Mask;

int independence_number(const Graph& g, Budget budget) {
  const DenseGraph dense(g);
  WorkMeter meter(budget, "independence_number");
  return detail::max_independent_size(dense, dense.all(), meter);
}

std::vector<VertexSet> enumerate_maximum_independent_sets(const Graph& g, Budget budget) {
  const DenseGraph dense(g);
  WorkMeter meter(budget, "enumerate_maximum_independent_sets");
  std::vector<VertexSet> out;
  detail::for_each_maximum_independent(dense, dense.all(), meter, [&](Mask m) {
    out.push_back(VertexSet::from_mask(g.n(), m));
  });
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) { return a.lex_less(b); });
  return out;
}

void for_each_independent_set(const Graph& g, const std::function<void(const VertexSet&)>& visit,
                              Budget budget) {
  const DenseGraph dense(g);
  WorkMeter meter(budget, "for_each_independent_set");
  detail::for_each_independent(dense, dense.all(), meter,
                               [&](Mask chosen, Mask) { visit(VertexSet::from_mask(g.n(), chosen)); });
}

std::size_t count_independent_sets(const Graph& g, Budget budget) {
  const DenseGraph dense(g);
  WorkMeter meter(budget, "count_independent_sets");
  std::size_t count = 0;
  detail::for_each_independent(dense, dense.all(), meter, [&](Mask, Mask) { ++count; });
  return count;
}

VertexSet core(const Graph& g, Budget budget) {
  const DenseGraph dense(g);
  WorkMeter meter(budget, "core");
  const int alpha = detail::max_independent_size(dense, dense.all(), meter);
  VertexSet out(g.n());
  for (int v = 0; v < dense.n; ++v) {
    if (detail::max_independent_size(dense, dense.all() & ~detail::bit(v), meter) < alpha) out.insert(v);
  }
  return out;
}

VertexSet core_by_intersection(const Graph& g, Budget budget) {
  const DenseGraph dense(g);
  WorkMeter meter(budget, "core_by_intersection");
  Mask meet = dense.all();
  detail::for_each_maximum_independent(dense, dense.all(), meter, [&](Mask m) { meet &= m; });
  return VertexSet::from_mask(g.n(), meet);
}

EdgeSet alpha_critical_edges(const Graph& g, Budget budget) {
  DenseGraph dense(g);
  WorkMeter meter(budget, "alpha_critical_edges");
  const int alpha = detail::max_independent_size(dense, dense.all(), meter);
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    dense.remove_edge(e.u, e.v);
    if (detail::max_independent_size(dense, dense.all(), meter) > alpha) out.push_back(e);
    dense.add_edge(e.u, e.v);
  }
  return EdgeSet(std::move(out));
}

IndependenceSummary summarize_independence(const Graph& g, bool enumerate_omega, Budget budget) {
  IndependenceSummary s;
  s.alpha = independence_number(g, budget);
  s.core = core(g, budget);
  s.xi = static_cast<int>(s.core.size());
  s.alpha_critical_vertices = s.core;
  s.alpha_critical_edges = alpha_critical_edges(g, budget);
  s.eta = static_cast<int>(s.alpha_critical_edges.size());
  if (enumerate_omega) s.omega_count = enumerate_maximum_independent_sets(g, budget).size();
  return s;
}

}  // namespace kegraph
