#pragma once

#include <optional>
#include <vector>

#include "kegraph/budget.hpp"
#include "kegraph/graph.hpp"
#include "kegraph/matching.hpp"

namespace kegraph {

enum class KEKind {
  Bipartite,        // bipartite, hence alpha + mu = n
  KE_NonBipartite,  // alpha + mu = n, not bipartite
  OneKE,            // alpha + mu = n - 1
  Other
};

struct KEClass {
  KEKind kind = KEKind::Other;
  int n = 0;
  int alpha = 0;
  int mu = 0;

  bool is_ke() const { return kind == KEKind::Bipartite || kind == KEKind::KE_NonBipartite; }
  bool is_one_ke() const { return kind == KEKind::OneKE; }
  friend bool operator==(const KEClass&, const KEClass&) = default;
};

KEClass classify_counts(int n, int alpha, int mu, bool bipartite);
KEClass ke_class(const Graph& g, Budget budget = {});
bool is_ke(const Graph& g, Budget budget = {});

bool is_bipartite(const Graph& g);
/// Number of cycles (as subgraphs) of odd length, counting stops once
/// `stop_at` is reached.
std::size_t count_odd_cycles(const Graph& g, std::size_t stop_at, Budget budget = {});
/// Exactly one odd cycle, counting every cycle subgraph. Meant for n <= 16.
bool is_almost_bipartite(const Graph& g, Budget budget = {});
/// A shortest odd cycle (always induced), or nullopt for bipartite graphs.
std::optional<std::vector<Vertex>> shortest_odd_cycle(const Graph& g);

/// Number of vertices v with G - v König-Egerváry (direct deletion scan).
int rho_v(const Graph& g, Budget budget = {});
/// n - xi + epsilon. Throws DomainError unless g is König-Egerváry.
int rho_v_formula(const Graph& g, Budget budget = {});
/// Number of edges e with G - e König-Egerváry (direct deletion scan).
int rho_e(const Graph& g, Budget budget = {});
/// m - xi + epsilon. Throws DomainError unless g is König-Egerváry.
int rho_e_bound(const Graph& g, Budget budget = {});

enum class VertexZone { OutsideCore, CoreMinusKer, Ker };

struct VertexVerdict {
  Vertex vertex = 0;
  VertexZone zone = VertexZone::OutsideCore;
  KEClass deletion_class;  // class of G - v
};

/// Zone and deletion class of every vertex. Throws DomainError unless g is
/// König-Egerváry.
std::vector<VertexVerdict> classify_vertices(const Graph& g, Budget budget = {});

enum class EdgeLocation {
  OutsideCorePocket,   // not in (core, N(core))
  KerPocket,           // (ker, N(ker))
  CoreMinusKerToKerN,  // (core - ker, N(ker))
  CrossPocket          // (core - ker, N(core) - N(ker))
};

struct EdgeVerdict {
  Edge edge;
  EdgeLocation location = EdgeLocation::OutsideCorePocket;
  bool mu_critical = false;
  bool alpha_critical = false;
  bool deletion_is_ke = false;
};

/// Per-edge deletion flags and location, in g.edges() order. Works on any
/// graph; the location rules only carry meaning for König-Egerváry input.
std::vector<EdgeVerdict> classify_edges(const Graph& g, Budget budget = {});

/// Split of G along X = A u N(A) for a critical independent set A.
struct CriticalDecomposition {
  VertexSet x;
  Subgraph inside;   // G[X]
  Subgraph outside;  // G - X
  bool inside_is_ke = false;
  bool outside_alpha_at_most_mu = false;
  bool alpha_additive = false;      // alpha(G) = alpha(G[X]) + alpha(G - X)
  bool mu_additive = false;         // mu(G) = mu(G[X]) + mu(G - X)
  bool inside_alpha_is_a = false;   // alpha(G[X]) = |A|
  bool inside_mu_is_na = false;     // mu(G[X]) = |N(A)|

  bool all_hold() const {
    return inside_is_ke && outside_alpha_at_most_mu && alpha_additive && mu_additive &&
           inside_alpha_is_a && inside_mu_is_na;
  }
};

/// Throws DomainError when a is not a critical independent set.
CriticalDecomposition critical_decomposition(const Graph& g, const VertexSet& a, Budget budget = {});

struct KEReport {
  int n = 0;
  int m = 0;
  int alpha = 0;
  int mu = 0;
  int d = 0;
  VertexSet core;
  int xi = 0;
  VertexSet ker;
  int epsilon = 0;
  int eta = 0;
  int rho_v = 0;
  int rho_e = 0;
  KEClass ke_class;
  VertexSet mu_critical_vertices;
  std::vector<VertexVerdict> vertices;
  std::vector<EdgeVerdict> edges;

  // Set only for König-Egerváry graphs.
  std::optional<int> rho_v_formula;         // n - xi + epsilon
  std::optional<int> rho_e_bound;           // m - xi + epsilon
  std::optional<bool> rho_v_equality;       // rho_v == n - xi + epsilon
  std::optional<bool> rho_e_lower_bound;    // rho_e >= m - xi + epsilon
  std::optional<PerfectMatchingKind> gap_matching;  // (core - ker, N(core) - N(ker))
};

/// Full invariant record from a single deletion scan.
KEReport analyze(const Graph& g, Budget budget = {});

const char* to_string(KEKind kind);
const char* to_string(VertexZone zone);
const char* to_string(EdgeLocation location);

}  // namespace kegraph
