#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kegraph {

using Vertex = std::int32_t;

/// Thrown when an operation receives a vertex, edge or set that does not
/// belong to the graph it is applied to, or when a precondition on the
/// graph class (e.g. "must be König-Egerváry") is violated.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr bool touches(Vertex x) const { return u == x || v == x; }
  constexpr Vertex other(Vertex x) const { return x == u ? v : u; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Subset of the vertex range [0, universe) with bitset semantics.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
  VertexSet(std::size_t universe, std::span<const Vertex> members);

  static VertexSet full(std::size_t universe);
  static VertexSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const { return universe_; }
  std::size_t size() const;
  bool empty() const;

  bool contains(Vertex v) const;
  void insert(Vertex v);
  void erase(Vertex v);

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Members in increasing order.
  std::vector<Vertex> members() const;
  /// Only valid for universe <= 64.
  std::uint64_t mask() const;

  /// Lexicographic comparison of the sorted member sequences.
  bool lex_less(const VertexSet& other) const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = __builtin_ctzll(bits);
        fn(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

 private:
  void check(Vertex v) const;
  void require_same_universe(const VertexSet& other) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Sorted, duplicate-free collection of edges.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::vector<Edge> edges);

  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  bool contains(const Edge& e) const;
  void insert(const Edge& e);
  const std::vector<Edge>& edges() const { return edges_; }
  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::vector<Edge> edges_;
};

/// Result of induced_subgraph / delete_vertex: the subgraph plus, for every
/// subgraph vertex, the parent vertex it came from.
struct Subgraph;

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  /// Builds a graph from an edge list. Loops and out-of-range endpoints throw
  /// DomainError; repeated edges are collapsed.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges);

  std::size_t n() const { return adj_.size(); }
  std::size_t m() const { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool has_vertex(Vertex v) const { return v >= 0 && static_cast<std::size_t>(v) < n(); }
  bool has_edge(Vertex u, Vertex v) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }
  /// All edges in increasing (u, v) order.
  std::vector<Edge> edges() const;
  VertexSet vertices() const { return VertexSet::full(n()); }

  /// Optional display names (e.g. "a", "v1"); empty when unlabeled.
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Vertex v) const;
  std::optional<Vertex> find_label(std::string_view name) const;
  Graph with_labels(std::vector<std::string> labels) const;

  /// Number of duplicate edges collapsed at construction time.
  std::size_t collapsed_duplicates() const { return collapsed_; }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::string> labels_;
  std::size_t m_ = 0;
  std::size_t collapsed_ = 0;
};

struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;

  VertexSet lift(const VertexSet& s, std::size_t parent_n) const;
};

// Neighborhoods.
VertexSet neighborhood(const Graph& g, const VertexSet& a);
VertexSet neighborhood(const Graph& g, Vertex v);
VertexSet closed_neighborhood(const Graph& g, const VertexSet& a);

bool is_independent(const Graph& g, const VertexSet& s);
/// |A| - |N(A)|.
int difference(const Graph& g, const VertexSet& a);
/// Edges with one endpoint in a and the other in b (a, b disjoint).
EdgeSet edges_between(const Graph& g, const VertexSet& a, const VertexSet& b);

// Mutation by copy.
Subgraph induced_subgraph(const Graph& g, const VertexSet& keep);
Subgraph delete_vertex(const Graph& g, Vertex v);
Subgraph delete_vertices(const Graph& g, const VertexSet& drop);
Graph delete_edge(const Graph& g, const Edge& e);

}  // namespace kegraph
