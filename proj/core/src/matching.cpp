#include "kegraph/matching.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "kegraph/detail/bipartite.hpp"

namespace kegraph {

// ----------------------------------------------------------------- Matching

Matching Matching::from_edges(std::size_t n, const std::vector<Edge>& edges) {
  Matching m(n);
  for (const Edge& e : edges) m.add(e);
  return m;
}

std::optional<Vertex> Matching::mate(Vertex v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= mate_.size()) {
    throw DomainError("vertex " + std::to_string(v) + " outside matching universe");
  }
  const Vertex w = mate_[static_cast<std::size_t>(v)];
  if (w < 0) return std::nullopt;
  return w;
}

bool Matching::contains(const Edge& e) const {
  if (e.u < 0 || static_cast<std::size_t>(e.v) >= mate_.size()) return false;
  return mate_[static_cast<std::size_t>(e.u)] == e.v;
}

void Matching::add(const Edge& e) {
  if (is_saturated(e.u) || is_saturated(e.v)) {
    throw DomainError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      ") shares a vertex with the matching");
  }
  mate_[static_cast<std::size_t>(e.u)] = e.v;
  mate_[static_cast<std::size_t>(e.v)] = e.u;
  ++size_;
}

void Matching::remove(const Edge& e) {
  if (!contains(e)) throw DomainError("edge not in matching");
  mate_[static_cast<std::size_t>(e.u)] = -1;
  mate_[static_cast<std::size_t>(e.v)] = -1;
  --size_;
}

VertexSet Matching::saturated() const {
  VertexSet s(mate_.size());
  for (std::size_t v = 0; v < mate_.size(); ++v) {
    if (mate_[v] >= 0) s.insert(static_cast<Vertex>(v));
  }
  return s;
}

EdgeSet Matching::edges() const {
  std::vector<Edge> out;
  for (std::size_t v = 0; v < mate_.size(); ++v) {
    if (mate_[v] > static_cast<Vertex>(v)) out.emplace_back(static_cast<Vertex>(v), mate_[v]);
  }
  return EdgeSet(std::move(out));
}

const char* to_string(PerfectMatchingKind kind) {
  switch (kind) {
    case PerfectMatchingKind::None: return "None";
    case PerfectMatchingKind::NonPerfect: return "NonPerfect";
    case PerfectMatchingKind::UniquePerfect: return "UniquePerfect";
    case PerfectMatchingKind::MultiplePerfect: return "MultiplePerfect";
  }
  return "?";
}

// ------------------------------------------------------------------ blossom

namespace {

/// Edmonds' algorithm with explicit blossom bases (O(n^3)). A vertex and an
/// edge may be masked out so deletion scans reuse the parent graph.
class Blossom {
 public:
  Blossom(const Graph& g, std::vector<Vertex> mate, Vertex skip_vertex = -1,
          std::optional<Edge> skip_edge = std::nullopt)
      : g_(g),
        n_(static_cast<int>(g.n())),
        match_(std::move(mate)),
        parent_(g.n()),
        base_(g.n()),
        used_(g.n()),
        blossom_(g.n()),
        lca_mark_(g.n()),
        skip_vertex_(skip_vertex),
        skip_edge_(skip_edge) {}

  /// Tries one augmentation from `root`; returns true on success.
  bool augment_from(Vertex root) {
    if (root == skip_vertex_ || match_[static_cast<std::size_t>(root)] >= 0) return false;
    Vertex v = find_path(root);
    if (v < 0) return false;
    while (v >= 0) {
      const Vertex pv = parent_[static_cast<std::size_t>(v)];
      const Vertex ppv = match_[static_cast<std::size_t>(pv)];
      match_[static_cast<std::size_t>(v)] = pv;
      match_[static_cast<std::size_t>(pv)] = v;
      v = ppv;
    }
    return true;
  }

  void augment_all() {
    for (Vertex v = 0; v < n_; ++v) augment_from(v);
  }

  const std::vector<Vertex>& mates() const { return match_; }

 private:
  bool usable(Vertex v, Vertex to) const {
    if (to == skip_vertex_) return false;
    if (skip_edge_ && Edge(v, to) == *skip_edge_) return false;
    return true;
  }

  Vertex lca(Vertex a, Vertex b) {
    std::fill(lca_mark_.begin(), lca_mark_.end(), 0);
    for (;;) {
      a = base_[static_cast<std::size_t>(a)];
      lca_mark_[static_cast<std::size_t>(a)] = 1;
      if (match_[static_cast<std::size_t>(a)] < 0) break;
      a = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(a)])];
    }
    for (;;) {
      b = base_[static_cast<std::size_t>(b)];
      if (lca_mark_[static_cast<std::size_t>(b)]) return b;
      b = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(b)])];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[static_cast<std::size_t>(v)] != b) {
      const Vertex mv = match_[static_cast<std::size_t>(v)];
      blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = 1;
      blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(mv)])] = 1;
      parent_[static_cast<std::size_t>(v)] = child;
      child = mv;
      v = parent_[static_cast<std::size_t>(mv)];
    }
  }

  Vertex find_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    queue_.clear();
    used_[static_cast<std::size_t>(root)] = 1;
    queue_.push_back(root);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const Vertex v = queue_[head];
      for (Vertex to : g_.neighbors(v)) {
        if (!usable(v, to)) continue;
        if (base_[static_cast<std::size_t>(v)] == base_[static_cast<std::size_t>(to)] ||
            match_[static_cast<std::size_t>(v)] == to) {
          continue;
        }
        const Vertex mt = match_[static_cast<std::size_t>(to)];
        if (to == root || (mt >= 0 && parent_[static_cast<std::size_t>(mt)] >= 0)) {
          const Vertex cur = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(i)])]) {
              base_[static_cast<std::size_t>(i)] = cur;
              if (!used_[static_cast<std::size_t>(i)]) {
                used_[static_cast<std::size_t>(i)] = 1;
                queue_.push_back(i);
              }
            }
          }
        } else if (parent_[static_cast<std::size_t>(to)] < 0) {
          parent_[static_cast<std::size_t>(to)] = v;
          if (mt < 0) return to;
          used_[static_cast<std::size_t>(mt)] = 1;
          queue_.push_back(mt);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<Vertex> match_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<char> used_;
  std::vector<char> blossom_;
  std::vector<char> lca_mark_;
  std::vector<Vertex> queue_;
  Vertex skip_vertex_;
  std::optional<Edge> skip_edge_;
};

Matching from_mates(const std::vector<Vertex>& mates) {
  Matching m(mates.size());
  for (std::size_t v = 0; v < mates.size(); ++v) {
    if (mates[v] > static_cast<Vertex>(v)) m.add(Edge(static_cast<Vertex>(v), mates[v]));
  }
  return m;
}

void require_matching_of(const Graph& g, const Matching& m) {
  if (m.universe() != g.n()) throw DomainError("matching universe does not match graph order");
  for (const Edge& e : m.edges()) {
    if (!g.has_edge(e)) throw DomainError("matching uses an edge that is not in the graph");
  }
}

}  // namespace

Matching max_matching(const Graph& g) { return max_matching(g, Matching(g.n())); }

Matching max_matching(const Graph& g, Matching seed) {
  require_matching_of(g, seed);
  Blossom b(g, seed.mates());
  b.augment_all();
  return from_mates(b.mates());
}

int matching_number(const Graph& g) { return static_cast<int>(max_matching(g).size()); }

MatchingDeletionProfile matching_deletion_profile(const Graph& g) {
  MatchingDeletionProfile p;
  p.maximum = max_matching(g);
  p.mu = static_cast<int>(p.maximum.size());
  const auto& mates = p.maximum.mates();

  p.without_vertex.assign(g.n(), p.mu);
  for (Vertex v = 0; v < static_cast<Vertex>(g.n()); ++v) {
    const Vertex w = mates[static_cast<std::size_t>(v)];
    if (w < 0) continue;
    std::vector<Vertex> seed = mates;
    seed[static_cast<std::size_t>(v)] = -1;
    seed[static_cast<std::size_t>(w)] = -1;
    Blossom b(g, std::move(seed), v);
    p.without_vertex[static_cast<std::size_t>(v)] = p.mu - 1 + (b.augment_from(w) ? 1 : 0);
  }

  p.edges = g.edges();
  p.without_edge.assign(p.edges.size(), p.mu);
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    const Edge& e = p.edges[i];
    if (mates[static_cast<std::size_t>(e.u)] != e.v) continue;
    std::vector<Vertex> seed = mates;
    seed[static_cast<std::size_t>(e.u)] = -1;
    seed[static_cast<std::size_t>(e.v)] = -1;
    // Any augmenting path for the reduced matching ends at u or v.
    Blossom b(g, std::move(seed), -1, e);
    const bool restored = b.augment_from(e.u) || b.augment_from(e.v);
    p.without_edge[i] = p.mu - 1 + (restored ? 1 : 0);
  }
  return p;
}

VertexSet mu_critical_vertices(const Graph& g) {
  const auto p = matching_deletion_profile(g);
  VertexSet out(g.n());
  for (Vertex v = 0; v < static_cast<Vertex>(g.n()); ++v) {
    if (p.without_vertex[static_cast<std::size_t>(v)] < p.mu) out.insert(v);
  }
  return out;
}

EdgeSet mu_critical_edges(const Graph& g) {
  const auto p = matching_deletion_profile(g);
  std::vector<Edge> out;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (p.without_edge[i] < p.mu) out.push_back(p.edges[i]);
  }
  return EdgeSet(std::move(out));
}

// ---------------------------------------------------------------- bipartite

Matching max_matching_bipartite(const Graph& g, const VertexSet& left, const VertexSet& right) {
  if (left.universe() != g.n() || right.universe() != g.n()) {
    throw DomainError("vertex set universe does not match graph order");
  }
  if (left.intersects(right)) throw DomainError("bipartite parts overlap");
  const std::vector<Vertex> lv = left.members();
  const std::vector<Vertex> rv = right.members();
  std::vector<int> right_index(g.n(), -1);
  for (std::size_t i = 0; i < rv.size(); ++i) right_index[static_cast<std::size_t>(rv[i])] = static_cast<int>(i);
  std::vector<std::vector<int>> adj(lv.size());
  for (std::size_t i = 0; i < lv.size(); ++i) {
    for (Vertex w : g.neighbors(lv[i])) {
      const int r = right_index[static_cast<std::size_t>(w)];
      if (r >= 0) adj[i].push_back(r);
    }
  }
  std::vector<int> mate_left;
  std::vector<int> mate_right;
  detail::hopcroft_karp(
      static_cast<int>(lv.size()), static_cast<int>(rv.size()),
      [&](int u) -> const std::vector<int>& { return adj[static_cast<std::size_t>(u)]; }, mate_left,
      mate_right);
  Matching m(g.n());
  for (std::size_t i = 0; i < lv.size(); ++i) {
    if (mate_left[i] >= 0) m.add(Edge(lv[i], rv[static_cast<std::size_t>(mate_left[i])]));
  }
  return m;
}

// ----------------------------------------------------- perfect (a,b) matchings

PerfectMatchingVerdict unique_perfect_matching_between(const Graph& g, const VertexSet& a,
                                                       const VertexSet& b) {
  PerfectMatchingVerdict verdict;
  verdict.maximum = max_matching_bipartite(g, a, b);
  const std::size_t size = verdict.maximum.size();
  if (a.empty() && b.empty()) {
    verdict.kind = PerfectMatchingKind::UniquePerfect;
    return verdict;
  }
  if (size == 0) {
    verdict.kind = PerfectMatchingKind::None;
    return verdict;
  }
  if (size != a.size() || size != b.size()) {
    verdict.kind = PerfectMatchingKind::NonPerfect;
    return verdict;
  }

  // Arc x -> x' (x, x' in a) when x is adjacent to mate(x') by a non-matching
  // edge. A directed cycle is exactly an alternating cycle.
  const auto& mates = verdict.maximum.mates();
  const std::vector<Vertex> av = a.members();
  std::vector<char> color(g.n(), 0);
  std::vector<Vertex> via(g.n(), -1);
  std::vector<Vertex> cycle;
  const auto arcs = [&](Vertex x) {
    std::vector<Vertex> out;
    for (Vertex y : g.neighbors(x)) {
      if (b.contains(y) && mates[static_cast<std::size_t>(x)] != y) out.push_back(mates[static_cast<std::size_t>(y)]);
    }
    return out;
  };
  const auto dfs = [&](auto&& self, Vertex x) -> bool {
    color[static_cast<std::size_t>(x)] = 1;
    for (Vertex next : arcs(x)) {
      if (color[static_cast<std::size_t>(next)] == 1) {
        cycle.push_back(next);
        for (Vertex cur = x; cur != next; cur = via[static_cast<std::size_t>(cur)]) cycle.push_back(cur);
        std::reverse(cycle.begin(), cycle.end());
        return true;
      }
      if (color[static_cast<std::size_t>(next)] == 0) {
        via[static_cast<std::size_t>(next)] = x;
        if (self(self, next)) return true;
      }
    }
    color[static_cast<std::size_t>(x)] = 2;
    return false;
  };
  for (Vertex x : av) {
    if (color[static_cast<std::size_t>(x)] == 0 && dfs(dfs, x)) break;
  }

  if (cycle.empty()) {
    verdict.kind = PerfectMatchingKind::UniquePerfect;
    return verdict;
  }
  // cycle = x_0 -> x_1 -> ... -> x_k-1 -> x_0; rematch x_i with mate(x_{i+1}).
  std::vector<Vertex> new_mate(cycle.size());
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    new_mate[i] = mates[static_cast<std::size_t>(cycle[(i + 1) % cycle.size()])];
  }
  Matching second = verdict.maximum;
  for (Vertex x : cycle) second.remove(Edge(x, mates[static_cast<std::size_t>(x)]));
  for (std::size_t i = 0; i < cycle.size(); ++i) second.add(Edge(cycle[i], new_mate[i]));
  verdict.kind = PerfectMatchingKind::MultiplePerfect;
  verdict.second = std::move(second);
  return verdict;
}

// ------------------------------------------------------------ enumerations

std::vector<Matching> enumerate_maximum_matchings(const Graph& g, Budget budget) {
  const int mu = matching_number(g);
  WorkMeter meter(budget, "enumerate_maximum_matchings");
  std::vector<Matching> out;
  Matching current(g.n());
  const Vertex n = static_cast<Vertex>(g.n());
  // Each vertex is either matched to a later free neighbor or left exposed;
  // prune when even a perfect completion cannot reach mu.
  const auto rec = [&](auto&& self, Vertex v, int free_ahead) -> void {
    meter.tick();
    while (v < n && current.is_saturated(v)) ++v;
    if (static_cast<int>(current.size()) == mu) {
      out.push_back(current);
      return;
    }
    if (v >= n) return;
    const int remaining = free_ahead;  // free vertices at index >= v
    if (static_cast<int>(current.size()) + remaining / 2 < mu) return;
    for (Vertex w : g.neighbors(v)) {
      if (w <= v || current.is_saturated(w)) continue;
      current.add(Edge(v, w));
      self(self, v + 1, remaining - 2);
      current.remove(Edge(v, w));
    }
    self(self, v + 1, remaining - 1);
  };
  rec(rec, 0, static_cast<int>(g.n()));
  return out;
}

std::size_t count_perfect_matchings_between(const Graph& g, const VertexSet& a, const VertexSet& b,
                                            Budget budget) {
  if (a.intersects(b)) throw DomainError("parts overlap");
  if (a.size() != b.size()) return 0;
  WorkMeter meter(budget, "count_perfect_matchings_between");
  const std::vector<Vertex> av = a.members();
  std::vector<char> taken(g.n(), 0);
  const auto rec = [&](auto&& self, std::size_t i) -> std::size_t {
    meter.tick();
    if (i == av.size()) return 1;
    std::size_t total = 0;
    for (Vertex y : g.neighbors(av[i])) {
      if (!b.contains(y) || taken[static_cast<std::size_t>(y)]) continue;
      taken[static_cast<std::size_t>(y)] = 1;
      total += self(self, i + 1);
      taken[static_cast<std::size_t>(y)] = 0;
    }
    return total;
  };
  return rec(rec, 0);
}

Matching random_maximum_matching(const Graph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Vertex> perm(g.n());
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = perm.size(); i > 1; --i) {
    std::swap(perm[i - 1], perm[static_cast<std::size_t>(rng() % i)]);
  }
  std::vector<Edge> relabelled;
  for (const Edge& e : g.edges()) {
    relabelled.emplace_back(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
  }
  const Matching m = max_matching(Graph(g.n(), relabelled));
  std::vector<Vertex> inverse(g.n());
  for (std::size_t v = 0; v < perm.size(); ++v) inverse[static_cast<std::size_t>(perm[v])] = static_cast<Vertex>(v);
  Matching out(g.n());
  for (const Edge& e : m.edges()) {
    out.add(Edge(inverse[static_cast<std::size_t>(e.u)], inverse[static_cast<std::size_t>(e.v)]));
  }
  return out;
}

}  // namespace kegraph
