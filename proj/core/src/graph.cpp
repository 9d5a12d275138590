#include "kegraph/graph.hpp"

#include <algorithm>
#include <bit>

namespace kegraph {

namespace {

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

}  // namespace

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
  if (universe % 64 != 0 && !s.words_.empty()) {
    s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  }
  return s;
}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > 64) throw DomainError("VertexSet::from_mask requires universe <= 64");
  if (universe < 64 && (mask >> universe) != 0) throw DomainError("mask has bits outside universe");
  VertexSet s(universe);
  if (!s.words_.empty()) s.words_[0] = mask;
  return s;
}

std::size_t VertexSet::size() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

void VertexSet::check(Vertex v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= universe_) {
    throw DomainError("vertex " + std::to_string(v) + " outside universe of size " +
                      std::to_string(universe_));
  }
}

bool VertexSet::contains(Vertex v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= universe_) return false;
  return (words_[static_cast<std::size_t>(v) / 64] >> (static_cast<std::size_t>(v) % 64)) & 1U;
}

void VertexSet::insert(Vertex v) {
  check(v);
  words_[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (static_cast<std::size_t>(v) % 64);
}

void VertexSet::erase(Vertex v) {
  check(v);
  words_[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t{1} << (static_cast<std::size_t>(v) % 64));
}

void VertexSet::require_same_universe(const VertexSet& other) const {
  if (universe_ != other.universe_) {
    throw DomainError("vertex sets over different universes (" + std::to_string(universe_) +
                      " vs " + std::to_string(other.universe_) + ")");
  }
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  require_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  require_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  require_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  require_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  require_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

std::uint64_t VertexSet::mask() const {
  if (universe_ > 64) throw DomainError("VertexSet::mask requires universe <= 64");
  return words_.empty() ? 0 : words_[0];
}

bool VertexSet::lex_less(const VertexSet& other) const {
  const auto a = members();
  const auto b = other.members();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// ------------------------------------------------------------------ EdgeSet

EdgeSet::EdgeSet(std::vector<Edge> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool EdgeSet::contains(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

void EdgeSet::insert(const Edge& e) {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) edges_.insert(it, e);
}

// -------------------------------------------------------------------- Graph

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adj_(n) {
  for (const Edge& e : edges) {
    if (e.u == e.v) throw DomainError("loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || static_cast<std::size_t>(e.v) >= n) {
      throw DomainError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                        ") outside vertex range 0.." + std::to_string(n == 0 ? 0 : n - 1));
    }
    adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::size_t degree_sum = 0;
  std::size_t raw = 0;
  for (auto& list : adj_) {
    raw += list.size();
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    degree_sum += list.size();
  }
  m_ = degree_sum / 2;
  collapsed_ = (raw - degree_sum) / 2;
}

Graph::Graph(std::size_t n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  if (!has_vertex(v)) throw DomainError("vertex " + std::to_string(v) + " not in graph");
  return adj_[static_cast<std::size_t>(v)];
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  const auto& list = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (static_cast<std::size_t>(v) > u) out.emplace_back(static_cast<Vertex>(u), v);
    }
  }
  return out;
}

std::string Graph::label(Vertex v) const {
  if (!has_vertex(v)) throw DomainError("vertex " + std::to_string(v) + " not in graph");
  if (labels_.empty() || labels_[static_cast<std::size_t>(v)].empty()) return std::to_string(v);
  return labels_[static_cast<std::size_t>(v)];
}

std::optional<Vertex> Graph::find_label(std::string_view name) const {
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    if (labels_[v] == name) return static_cast<Vertex>(v);
  }
  return std::nullopt;
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != n()) {
    throw DomainError("label count " + std::to_string(labels.size()) + " does not match n=" +
                      std::to_string(n()));
  }
  Graph copy = *this;
  copy.labels_ = std::move(labels);
  return copy;
}

VertexSet Subgraph::lift(const VertexSet& s, std::size_t parent_n) const {
  VertexSet out(parent_n);
  s.for_each([&](Vertex v) { out.insert(to_parent.at(static_cast<std::size_t>(v))); });
  return out;
}

// ------------------------------------------------------------ neighborhoods

VertexSet neighborhood(const Graph& g, const VertexSet& a) {
  if (a.universe() != g.n()) throw DomainError("vertex set universe does not match graph order");
  VertexSet out(g.n());
  a.for_each([&](Vertex v) {
    for (Vertex w : g.neighbors(v)) out.insert(w);
  });
  return out;
}

VertexSet neighborhood(const Graph& g, Vertex v) {
  return VertexSet(g.n(), g.neighbors(v));
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& a) { return a | neighborhood(g, a); }

bool is_independent(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.n()) throw DomainError("vertex set universe does not match graph order");
  bool ok = true;
  s.for_each([&](Vertex v) {
    for (Vertex w : g.neighbors(v)) {
      if (s.contains(w)) ok = false;
    }
  });
  return ok;
}

int difference(const Graph& g, const VertexSet& a) {
  return static_cast<int>(a.size()) - static_cast<int>(neighborhood(g, a).size());
}

EdgeSet edges_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
  if (a.intersects(b)) throw DomainError("edges_between requires disjoint vertex sets");
  std::vector<Edge> out;
  a.for_each([&](Vertex v) {
    for (Vertex w : g.neighbors(v)) {
      if (b.contains(w)) out.emplace_back(v, w);
    }
  });
  return EdgeSet(std::move(out));
}

// ---------------------------------------------------------------- deletions

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  if (keep.universe() != g.n()) throw DomainError("vertex set universe does not match graph order");
  std::vector<Vertex> to_parent = keep.members();
  std::vector<Vertex> to_child(g.n(), -1);
  for (std::size_t i = 0; i < to_parent.size(); ++i) {
    to_child[static_cast<std::size_t>(to_parent[i])] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const Vertex cu = to_child[static_cast<std::size_t>(e.u)];
    const Vertex cv = to_child[static_cast<std::size_t>(e.v)];
    if (cu >= 0 && cv >= 0) edges.emplace_back(cu, cv);
  }
  Graph sub(to_parent.size(), edges);
  if (!g.labels().empty()) {
    std::vector<std::string> labels;
    labels.reserve(to_parent.size());
    for (Vertex p : to_parent) labels.push_back(g.labels()[static_cast<std::size_t>(p)]);
    sub = sub.with_labels(std::move(labels));
  }
  return Subgraph{std::move(sub), std::move(to_parent)};
}

Subgraph delete_vertex(const Graph& g, Vertex v) {
  if (!g.has_vertex(v)) throw DomainError("cannot delete nonexistent vertex " + std::to_string(v));
  VertexSet keep = g.vertices();
  keep.erase(v);
  return induced_subgraph(g, keep);
}

Subgraph delete_vertices(const Graph& g, const VertexSet& drop) {
  return induced_subgraph(g, g.vertices() - drop);
}

Graph delete_edge(const Graph& g, const Edge& e) {
  if (!g.has_edge(e)) {
    throw DomainError("cannot delete nonexistent edge (" + std::to_string(e.u) + "," +
                      std::to_string(e.v) + ")");
  }
  std::vector<Edge> edges = g.edges();
  edges.erase(std::find(edges.begin(), edges.end(), e));
  return Graph(g.n(), edges).with_labels(g.labels());
}

}  // namespace kegraph
