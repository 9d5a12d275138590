#include "kegraph/census.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <vector>

namespace kegraph {

namespace {

using Row = std::uint16_t;
constexpr int kMax = kCensusMaxOrder;

int popcount(unsigned x) { return std::popcount(x); }

// Ordered partition of the vertex range into cells (bitmasks).
struct Partition {
  std::array<Row, kMax> cells{};
  int count = 0;

  bool discrete(int n) const { return count == n; }
};

// Canonical labelling by partition refinement and exhaustive branching.
// The certificate of a labelling packs its upper-triangle adjacency bits;
// the canonical one is the largest over all leaves of the search tree.
// Twin vertices (same neighbours apart from each other) are exchanged by a
// transposition fixing the whole search state, so only one of each twin
// class is branched on.
class Canonizer {
 public:
  Canonizer(const Row* adj, int n) : adj_(adj), n_(n) {}

  // Splits cells by neighbour counts into every other cell until stable.
  void refine(Partition& p) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int s = 0; s < p.count && !changed; ++s) {
        const Row splitter = p.cells[static_cast<std::size_t>(s)];
        for (int c = 0; c < p.count; ++c) {
          const Row cell = p.cells[static_cast<std::size_t>(c)];
          if (popcount(cell) == 1) continue;
          std::array<Row, kMax + 1> by_count{};
          int lo = kMax + 1;
          int hi = -1;
          for (Row rest = cell; rest != 0; rest &= static_cast<Row>(rest - 1)) {
            const int v = std::countr_zero(rest);
            const int k = popcount(adj_[v] & splitter);
            by_count[static_cast<std::size_t>(k)] |= static_cast<Row>(1u << v);
            lo = std::min(lo, k);
            hi = std::max(hi, k);
          }
          if (lo == hi) continue;
          std::array<Row, kMax> pieces{};
          int pieces_n = 0;
          for (int k = lo; k <= hi; ++k) {
            if (by_count[static_cast<std::size_t>(k)] != 0) {
              pieces[static_cast<std::size_t>(pieces_n++)] = by_count[static_cast<std::size_t>(k)];
            }
          }
          for (int i = p.count - 1; i > c; --i) {
            p.cells[static_cast<std::size_t>(i + pieces_n - 1)] = p.cells[static_cast<std::size_t>(i)];
          }
          for (int i = 0; i < pieces_n; ++i) p.cells[static_cast<std::size_t>(c + i)] = pieces[static_cast<std::size_t>(i)];
          p.count += pieces_n - 1;
          changed = true;
          break;
        }
      }
    }
  }

  std::uint64_t certificate(Partition p) {
    best_ = 0;
    have_ = false;
    search(p);
    return best_;
  }

  // Certificate with vertex v placed in a cell of its own ahead of the rest.
  std::uint64_t rooted_certificate(int v) {
    Partition p;
    const Row all = static_cast<Row>((1u << n_) - 1);
    p.cells[0] = static_cast<Row>(1u << v);
    p.cells[1] = static_cast<Row>(all & ~(1u << v));
    p.count = n_ > 1 ? 2 : 1;
    return certificate(p);
  }

  std::uint64_t plain_certificate() {
    Partition p;
    p.cells[0] = static_cast<Row>((1u << n_) - 1);
    p.count = n_ > 0 ? 1 : 0;
    return certificate(p);
  }

 private:
  bool twins(int u, int v) const {
    const Row mask = static_cast<Row>(~((1u << u) | (1u << v)));
    return (adj_[u] & mask) == (adj_[v] & mask);
  }

  std::uint64_t leaf_certificate(const Partition& p) const {
    std::array<int, kMax> label{};
    for (int i = 0; i < n_; ++i) label[static_cast<std::size_t>(i)] = std::countr_zero(p.cells[static_cast<std::size_t>(i)]);
    std::uint64_t cert = 0;
    for (int j = 1; j < n_; ++j) {
      const Row row = adj_[label[static_cast<std::size_t>(j)]];
      for (int i = 0; i < j; ++i) cert = (cert << 1) | ((row >> label[static_cast<std::size_t>(i)]) & 1u);
    }
    return cert;
  }

  void search(Partition p) {
    refine(p);
    if (p.discrete(n_)) {
      const std::uint64_t cert = leaf_certificate(p);
      if (!have_ || cert > best_) best_ = cert;
      have_ = true;
      return;
    }
    int target = 0;
    while (popcount(p.cells[static_cast<std::size_t>(target)]) == 1) ++target;
    const Row cell = p.cells[static_cast<std::size_t>(target)];
    Row tried = 0;
    for (Row rest = cell; rest != 0; rest &= static_cast<Row>(rest - 1)) {
      const int v = std::countr_zero(rest);
      bool redundant = false;
      for (Row t = tried; t != 0 && !redundant; t &= static_cast<Row>(t - 1)) redundant = twins(std::countr_zero(t), v);
      if (redundant) continue;
      tried |= static_cast<Row>(1u << v);
      Partition child = p;
      for (int i = child.count; i > target + 1; --i) child.cells[static_cast<std::size_t>(i)] = child.cells[static_cast<std::size_t>(i - 1)];
      child.cells[static_cast<std::size_t>(target)] = static_cast<Row>(1u << v);
      child.cells[static_cast<std::size_t>(target + 1)] = static_cast<Row>(cell & ~(1u << v));
      ++child.count;
      search(child);
    }
  }

  const Row* adj_;
  int n_;
  std::uint64_t best_ = 0;
  bool have_ = false;
};

class Generator {
 public:
  Generator(int target, const std::function<void(CensusRows)>& visit) : target_(target), visit_(visit) {}

  void run() {
    std::array<Row, kMax> rows{};
    grow(rows, 0);
  }

 private:
  void grow(std::array<Row, kMax>& rows, int k) {
    if (k == target_) {
      visit_(CensusRows(rows.data(), static_cast<std::size_t>(k)));
      return;
    }
    // Parents whose refined unit partition is discrete have no nontrivial
    // automorphism, so accepted children are pairwise non-isomorphic.
    bool rigid = k <= 1;
    if (!rigid) {
      Canonizer c(rows.data(), k);
      Partition p;
      p.cells[0] = static_cast<Row>((1u << k) - 1);
      p.count = 1;
      c.refine(p);
      rigid = p.discrete(k);
    }
    std::vector<std::uint64_t> seen;
    std::array<int, kMax> parent_degree{};
    for (int u = 0; u < k; ++u) parent_degree[static_cast<std::size_t>(u)] = popcount(rows[static_cast<std::size_t>(u)]);

    const Row bit = static_cast<Row>(1u << k);
    for (unsigned s = 0; s < (1u << k); ++s) {
      const int deg = popcount(s);
      bool minimal = true;
      for (int u = 0; u < k && minimal; ++u) {
        minimal = deg <= parent_degree[static_cast<std::size_t>(u)] + static_cast<int>((s >> u) & 1u);
      }
      if (!minimal) continue;

      std::array<Row, kMax> child = rows;
      child[static_cast<std::size_t>(k)] = static_cast<Row>(s);
      for (int u = 0; u < k; ++u) {
        if ((s >> u) & 1u) child[static_cast<std::size_t>(u)] |= bit;
      }
      const int n = k + 1;
      std::uint64_t root_cert = 0;
      if (!accepted(child.data(), n, root_cert)) continue;
      if (!rigid) {
        if (root_cert == 0 && !root_known_) root_cert = Canonizer(child.data(), n).rooted_certificate(k);
        if (std::find(seen.begin(), seen.end(), root_cert) != seen.end()) continue;
        seen.push_back(root_cert);
      }
      grow(child, n);
    }
  }

  // The new vertex n-1 must be, up to automorphism, the vertex with the
  // smallest (degree, neighbour-degree sum) and the largest rooted
  // certificate among ties.
  bool accepted(const Row* adj, int n, std::uint64_t& root_cert) {
    root_known_ = false;
    std::array<int, kMax> deg{};
    for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = popcount(adj[v]);
    const auto key = [&](int v) {
      int sum = 0;
      for (Row r = adj[v]; r != 0; r &= static_cast<Row>(r - 1)) sum += deg[static_cast<std::size_t>(std::countr_zero(r))];
      return deg[static_cast<std::size_t>(v)] * 256 + sum;
    };
    const int x = n - 1;
    const int x_key = key(x);
    Row ties = 0;
    for (int v = 0; v < x; ++v) {
      const int k = key(v);
      if (k < x_key) return false;
      if (k == x_key) ties |= static_cast<Row>(1u << v);
    }
    if (ties == 0) return true;
    Canonizer c(adj, n);
    root_cert = c.rooted_certificate(x);
    root_known_ = true;
    for (Row t = ties; t != 0; t &= static_cast<Row>(t - 1)) {
      if (c.rooted_certificate(std::countr_zero(t)) > root_cert) return false;
    }
    return true;
  }

  int target_;
  const std::function<void(CensusRows)>& visit_;
  bool root_known_ = false;
};

}  // namespace

void for_each_census_rows(int n, const std::function<void(CensusRows)>& visit) {
  if (n < 0 || n > kMax) {
    throw DomainError("census order must lie in [0, " + std::to_string(kMax) + "], got " + std::to_string(n));
  }
  Generator(n, visit).run();
}

void for_each_census_graph(int n, const std::function<void(const Graph&)>& visit) {
  for_each_census_rows(n, [&](CensusRows rows) { visit(graph_from_rows(rows)); });
}

std::uint64_t census_count(int n) {
  std::uint64_t count = 0;
  for_each_census_rows(n, [&](CensusRows) { ++count; });
  return count;
}

Graph graph_from_rows(CensusRows rows) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < rows.size(); ++u) {
    for (Row r = static_cast<Row>(rows[u] >> (u + 1)); r != 0; r &= static_cast<Row>(r - 1)) {
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(u + 1 + static_cast<std::size_t>(std::countr_zero(r))));
    }
  }
  return Graph(rows.size(), edges);
}

std::uint64_t canonical_certificate(const Graph& g) {
  if (g.n() > static_cast<std::size_t>(kMax)) {
    throw DomainError("canonical_certificate supports n <= " + std::to_string(kMax));
  }
  std::array<Row, kMax> rows{};
  for (const Edge& e : g.edges()) {
    rows[static_cast<std::size_t>(e.u)] |= static_cast<Row>(1u << e.v);
    rows[static_cast<std::size_t>(e.v)] |= static_cast<Row>(1u << e.u);
  }
  return Canonizer(rows.data(), static_cast<int>(g.n())).plain_certificate();
}

}  // namespace kegraph
