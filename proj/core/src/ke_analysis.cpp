#include "kegraph/ke_analysis.hpp"

#include <algorithm>
#include <deque>

#include "kegraph/critical.hpp"
#include "kegraph/detail/dense_graph.hpp"
#include "kegraph/independence.hpp"

namespace kegraph {

using detail::DenseGraph;
using detail::Mask;

namespace {

// Two-colors g without `skip_vertex` and `skip_edge`.
bool two_colorable(const Graph& g, Vertex skip_vertex, std::optional<Edge> skip_edge) {
  std::vector<int> color(g.n(), -1);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < static_cast<Vertex>(g.n()); ++s) {
    if (s == skip_vertex || color[static_cast<std::size_t>(s)] >= 0) continue;
    color[static_cast<std::size_t>(s)] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (Vertex w : g.neighbors(u)) {
        if (w == skip_vertex || (skip_edge && Edge(u, w) == *skip_edge)) continue;
        if (color[static_cast<std::size_t>(w)] < 0) {
          color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(u)];
          queue.push_back(w);
        } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(u)]) {
          return false;
        }
      }
    }
  }
  return true;
}

// alpha and mu of G, G - v and G - e, plus the classes they induce.
struct DeletionScan {
  int n = 0;
  int alpha = 0;
  int mu = 0;
  KEClass klass;
  MatchingDeletionProfile matching;
  std::vector<int> alpha_without_vertex;
  std::vector<int> alpha_without_edge;
  std::vector<KEClass> vertex_class;
  std::vector<KEClass> edge_class;
  VertexSet core;

  DeletionScan(const Graph& g, Budget budget) : n(static_cast<int>(g.n())) {
    DenseGraph dense(g);
    WorkMeter meter(budget, "deletion scan");
    alpha = detail::max_independent_size(dense, dense.all(), meter);
    matching = matching_deletion_profile(g);
    mu = matching.mu;
    klass = classify_counts(n, alpha, mu, two_colorable(g, -1, std::nullopt));

    core = VertexSet(g.n());
    for (Vertex v = 0; v < n; ++v) {
      const int a = detail::max_independent_size(dense, dense.all() & ~detail::bit(v), meter);
      alpha_without_vertex.push_back(a);
      if (a < alpha) core.insert(v);
      vertex_class.push_back(classify_counts(n - 1, a, matching.without_vertex[static_cast<std::size_t>(v)],
                                             two_colorable(g, v, std::nullopt)));
    }
    for (std::size_t i = 0; i < matching.edges.size(); ++i) {
      const Edge e = matching.edges[i];
      dense.remove_edge(e.u, e.v);
      const int a = detail::max_independent_size(dense, dense.all(), meter);
      dense.add_edge(e.u, e.v);
      alpha_without_edge.push_back(a);
      edge_class.push_back(classify_counts(n, a, matching.without_edge[i], two_colorable(g, -1, e)));
    }
  }

  int rho_v() const {
    return static_cast<int>(std::count_if(vertex_class.begin(), vertex_class.end(),
                                          [](const KEClass& c) { return c.is_ke(); }));
  }
  int rho_e() const {
    return static_cast<int>(std::count_if(edge_class.begin(), edge_class.end(),
                                          [](const KEClass& c) { return c.is_ke(); }));
  }
};

void require_ke(const KEClass& c, const char* what) {
  if (!c.is_ke()) {
    throw DomainError(std::string(what) + " requires a König-Egerváry graph (alpha + mu = " +
                      std::to_string(c.alpha + c.mu) + ", n = " + std::to_string(c.n) + ")");
  }
}

VertexZone zone_of(Vertex v, const VertexSet& core_set, const VertexSet& ker_set) {
  if (ker_set.contains(v)) return VertexZone::Ker;
  if (core_set.contains(v)) return VertexZone::CoreMinusKer;
  return VertexZone::OutsideCore;
}

EdgeLocation location_of(const Edge& e, const VertexSet& core_set, const VertexSet& ker_set,
                         const VertexSet& ker_nbrs) {
  Vertex inner = -1;
  if (core_set.contains(e.u)) {
    inner = e.u;
  } else if (core_set.contains(e.v)) {
    inner = e.v;
  } else {
    return EdgeLocation::OutsideCorePocket;
  }
  if (ker_set.contains(inner)) return EdgeLocation::KerPocket;
  return ker_nbrs.contains(e.other(inner)) ? EdgeLocation::CoreMinusKerToKerN : EdgeLocation::CrossPocket;
}

std::vector<VertexVerdict> vertex_verdicts(const DeletionScan& scan, const VertexSet& ker_set) {
  std::vector<VertexVerdict> out;
  for (Vertex v = 0; v < scan.n; ++v) {
    out.push_back({v, zone_of(v, scan.core, ker_set), scan.vertex_class[static_cast<std::size_t>(v)]});
  }
  return out;
}

std::vector<EdgeVerdict> edge_verdicts(const Graph& g, const DeletionScan& scan, const VertexSet& ker_set) {
  const VertexSet ker_nbrs = neighborhood(g, ker_set);
  std::vector<EdgeVerdict> out;
  for (std::size_t i = 0; i < scan.matching.edges.size(); ++i) {
    const Edge e = scan.matching.edges[i];
    EdgeVerdict verdict;
    verdict.edge = e;
    verdict.location = location_of(e, scan.core, ker_set, ker_nbrs);
    verdict.mu_critical = scan.matching.without_edge[i] < scan.mu;
    verdict.alpha_critical = scan.alpha_without_edge[i] > scan.alpha;
    verdict.deletion_is_ke = scan.edge_class[i].is_ke();
    out.push_back(verdict);
  }
  return out;
}

}  // namespace

KEClass classify_counts(int n, int alpha, int mu, bool bipartite) {
  KEClass c;
  c.n = n;
  c.alpha = alpha;
  c.mu = mu;
  if (bipartite) {
    c.kind = KEKind::Bipartite;
  } else if (alpha + mu == n) {
    c.kind = KEKind::KE_NonBipartite;
  } else if (alpha + mu == n - 1) {
    c.kind = KEKind::OneKE;
  } else {
    c.kind = KEKind::Other;
  }
  return c;
}

KEClass ke_class(const Graph& g, Budget budget) {
  return classify_counts(static_cast<int>(g.n()), independence_number(g, budget), matching_number(g),
                         is_bipartite(g));
}

bool is_ke(const Graph& g, Budget budget) { return ke_class(g, budget).is_ke(); }

bool is_bipartite(const Graph& g) { return two_colorable(g, -1, std::nullopt); }

std::size_t count_odd_cycles(const Graph& g, std::size_t stop_at, Budget budget) {
  WorkMeter meter(budget, "count_odd_cycles");
  const Vertex n = static_cast<Vertex>(g.n());
  std::vector<char> on_path(g.n(), 0);
  std::vector<Vertex> path;
  std::size_t count = 0;
  // Each cycle is found from its least vertex s, once per direction; keep the
  // direction whose second vertex is smaller than its last.
  const auto extend = [&](auto&& self, Vertex s, Vertex u) -> void {
    meter.tick();
    for (Vertex w : g.neighbors(u)) {
      if (count >= stop_at) return;
      if (w == s && path.size() >= 3 && path[1] < path.back()) {
        if (path.size() % 2 == 1) ++count;
      } else if (w > s && !on_path[static_cast<std::size_t>(w)]) {
        on_path[static_cast<std::size_t>(w)] = 1;
        path.push_back(w);
        self(self, s, w);
        path.pop_back();
        on_path[static_cast<std::size_t>(w)] = 0;
      }
    }
  };
  for (Vertex s = 0; s < n && count < stop_at; ++s) {
    on_path[static_cast<std::size_t>(s)] = 1;
    path.assign(1, s);
    extend(extend, s, s);
    on_path[static_cast<std::size_t>(s)] = 0;
  }
  return count;
}

bool is_almost_bipartite(const Graph& g, Budget budget) {
  if (is_bipartite(g)) return false;
  return count_odd_cycles(g, 2, budget) == 1;
}

std::optional<std::vector<Vertex>> shortest_odd_cycle(const Graph& g) {
  const Vertex n = static_cast<Vertex>(g.n());
  std::optional<std::vector<Vertex>> best;
  std::vector<int> dist(g.n());
  std::vector<Vertex> parent(g.n());
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(s)] = 0;
    parent[static_cast<std::size_t>(s)] = -1;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
          parent[static_cast<std::size_t>(w)] = u;
          queue.push_back(w);
        } else if (u < w && dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(u)]) {
          const std::size_t length = 2 * static_cast<std::size_t>(dist[static_cast<std::size_t>(u)]) + 1;
          if (best && best->size() <= length) continue;
          // A shortest closed odd walk through s is a cycle.
          std::vector<Vertex> left;
          for (Vertex x = u; x >= 0; x = parent[static_cast<std::size_t>(x)]) left.push_back(x);
          std::vector<Vertex> right;
          for (Vertex x = w; x != s; x = parent[static_cast<std::size_t>(x)]) right.push_back(x);
          std::vector<Vertex> cyc(left.rbegin(), left.rend());
          cyc.insert(cyc.end(), right.begin(), right.end());
          best = std::move(cyc);
        }
      }
    }
  }
  if (best) {
    // Walks from a non-minimal root may repeat vertices; keep only true cycles.
    std::vector<Vertex> sorted = *best;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::logic_error("shortest_odd_cycle produced a repeated vertex");
    }
  }
  return best;
}

int rho_v(const Graph& g, Budget budget) { return DeletionScan(g, budget).rho_v(); }

int rho_v_formula(const Graph& g, Budget budget) {
  require_ke(ke_class(g, budget), "rho_v_formula");
  return static_cast<int>(g.n()) - static_cast<int>(core(g, budget).size()) +
         static_cast<int>(ker(g).size());
}

int rho_e(const Graph& g, Budget budget) { return DeletionScan(g, budget).rho_e(); }

int rho_e_bound(const Graph& g, Budget budget) {
  require_ke(ke_class(g, budget), "rho_e_bound");
  return static_cast<int>(g.m()) - static_cast<int>(core(g, budget).size()) +
         static_cast<int>(ker(g).size());
}

std::vector<VertexVerdict> classify_vertices(const Graph& g, Budget budget) {
  const DeletionScan scan(g, budget);
  require_ke(scan.klass, "classify_vertices");
  return vertex_verdicts(scan, ker(g));
}

std::vector<EdgeVerdict> classify_edges(const Graph& g, Budget budget) {
  const DeletionScan scan(g, budget);
  return edge_verdicts(g, scan, ker(g));
}

CriticalDecomposition critical_decomposition(const Graph& g, const VertexSet& a, Budget budget) {
  if (a.universe() != g.n()) throw DomainError("vertex set universe does not match graph order");
  if (!is_independent(g, a)) throw DomainError("critical_decomposition: set is not independent");
  if (difference(g, a) != critical_difference(g)) {
    throw DomainError("critical_decomposition: set is not critical");
  }
  CriticalDecomposition out;
  const VertexSet nbrs = neighborhood(g, a);
  out.x = a | nbrs;
  out.inside = induced_subgraph(g, out.x);
  out.outside = delete_vertices(g, out.x);
  const KEClass in = ke_class(out.inside.graph, budget);
  const KEClass rest = ke_class(out.outside.graph, budget);
  const int alpha = independence_number(g, budget);
  const int mu = matching_number(g);
  out.inside_is_ke = in.is_ke();
  out.outside_alpha_at_most_mu = rest.alpha <= rest.mu;
  out.alpha_additive = alpha == in.alpha + rest.alpha;
  out.mu_additive = mu == in.mu + rest.mu;
  out.inside_alpha_is_a = in.alpha == static_cast<int>(a.size());
  out.inside_mu_is_na = in.mu == static_cast<int>(nbrs.size());
  return out;
}

KEReport analyze(const Graph& g, Budget budget) {
  const DeletionScan scan(g, budget);
  KEReport r;
  r.n = scan.n;
  r.m = static_cast<int>(g.m());
  r.alpha = scan.alpha;
  r.mu = scan.mu;
  r.d = critical_difference(g);
  r.core = scan.core;
  r.xi = static_cast<int>(r.core.size());
  r.ker = ker(g);
  r.epsilon = static_cast<int>(r.ker.size());
  r.ke_class = scan.klass;
  r.rho_v = scan.rho_v();
  r.rho_e = scan.rho_e();
  r.mu_critical_vertices = VertexSet(g.n());
  for (Vertex v = 0; v < r.n; ++v) {
    if (scan.matching.without_vertex[static_cast<std::size_t>(v)] < r.mu) r.mu_critical_vertices.insert(v);
  }
  r.vertices = vertex_verdicts(scan, r.ker);
  r.edges = edge_verdicts(g, scan, r.ker);
  r.eta = static_cast<int>(std::count_if(r.edges.begin(), r.edges.end(),
                                         [](const EdgeVerdict& e) { return e.alpha_critical; }));
  if (r.ke_class.is_ke()) {
    r.rho_v_formula = r.n - r.xi + r.epsilon;
    r.rho_e_bound = r.m - r.xi + r.epsilon;
    r.rho_v_equality = r.rho_v == *r.rho_v_formula;
    r.rho_e_lower_bound = r.rho_e >= *r.rho_e_bound;
    r.gap_matching = unique_perfect_matching_between(
                         g, r.core - r.ker, neighborhood(g, r.core) - neighborhood(g, r.ker))
                         .kind;
  }
  return r;
}

const char* to_string(KEKind kind) {
  switch (kind) {
    case KEKind::Bipartite: return "Bipartite";
    case KEKind::KE_NonBipartite: return "KE_NonBipartite";
    case KEKind::OneKE: return "OneKE";
    case KEKind::Other: return "Other";
  }
  return "?";
}

const char* to_string(VertexZone zone) {
  switch (zone) {
    case VertexZone::OutsideCore: return "OutsideCore";
    case VertexZone::CoreMinusKer: return "CoreMinusKer";
    case VertexZone::Ker: return "Ker";
  }
  return "?";
}

const char* to_string(EdgeLocation location) {
  switch (location) {
    case EdgeLocation::OutsideCorePocket: return "OutsideCorePocket";
    case EdgeLocation::KerPocket: return "KerPocket";
    case EdgeLocation::CoreMinusKerToKerN: return "CoreMinusKerToKerN";
    case EdgeLocation::CrossPocket: return "CrossPocket";
  }
  return "?";
}

}  // namespace kegraph
