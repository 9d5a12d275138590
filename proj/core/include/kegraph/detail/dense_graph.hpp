#pragma once

#include <array>
#include <bit>
#include <cstdint>

#include "kegraph/budget.hpp"
#include "kegraph/graph.hpp"

namespace kegraph::detail {

using Mask = std::uint64_t;

inline constexpr std::size_t kMaxDense = 64;

inline Mask bit(int v) { return Mask{1} << v; }
inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest(Mask m) { return std::countr_zero(m); }

/// Adjacency bitmasks for graphs with at most 64 vertices. Copying is cheap,
/// so deletion scans work on modified copies.
struct DenseGraph {
  int n = 0;
  std::array<Mask, kMaxDense> adj{};

  DenseGraph() = default;
  explicit DenseGraph(const Graph& g);

  Mask all() const { return n == 64 ? ~Mask{0} : (bit(n) - 1); }
  Mask neighbors(Mask set) const {
    Mask out = 0;
    for (Mask s = set; s != 0; s &= s - 1) out |= adj[static_cast<std::size_t>(lowest(s))];
    return out;
  }
  void remove_edge(int u, int v) {
    adj[static_cast<std::size_t>(u)] &= ~bit(v);
    adj[static_cast<std::size_t>(v)] &= ~bit(u);
  }
  void add_edge(int u, int v) {
    adj[static_cast<std::size_t>(u)] |= bit(v);
    adj[static_cast<std::size_t>(v)] |= bit(u);
  }
};

/// Exact independence number of the subgraph induced by `candidates`.
int max_independent_size(const DenseGraph& g, Mask candidates, WorkMeter& meter);

/// Visits every maximum independent set (as a mask) of G[candidates].
/// Returns alpha.
template <typename Fn>
int for_each_maximum_independent(const DenseGraph& g, Mask candidates, WorkMeter& meter, Fn&& fn);

/// Visits every independent subset of G[candidates], including the empty
/// set, together with its open neighborhood in g.
template <typename Fn>
void for_each_independent(const DenseGraph& g, Mask candidates, WorkMeter& meter, Fn&& fn) {
  struct Frame {
    static void run(const DenseGraph& g, Mask chosen, Mask nbrs, Mask rest, WorkMeter& meter, Fn& fn) {
      meter.tick();
      fn(chosen, nbrs);
      while (rest != 0) {
        const int v = 63 - std::countl_zero(rest);
        rest &= ~bit(v);
        run(g, chosen | bit(v), nbrs | g.adj[static_cast<std::size_t>(v)],
            rest & ~g.adj[static_cast<std::size_t>(v)], meter, fn);
      }
    }
  };
  Frame::run(g, 0, 0, candidates, meter, fn);
}

template <typename Fn>
int for_each_maximum_independent(const DenseGraph& g, Mask candidates, WorkMeter& meter, Fn&& fn) {
  const int alpha = max_independent_size(g, candidates, meter);
  struct Frame {
    static void run(const DenseGraph& g, Mask chosen, int size, Mask rest, int alpha, WorkMeter& meter,
                    Fn& fn) {
      meter.tick();
      if (size + popcount(rest) < alpha) return;
      if (rest == 0) {
        fn(chosen);
        return;
      }
      const int v = lowest(rest);
      const Mask without = rest & ~bit(v);
      run(g, chosen | bit(v), size + 1, without & ~g.adj[static_cast<std::size_t>(v)], alpha, meter, fn);
      run(g, chosen, size, without, alpha, meter, fn);
    }
  };
  Frame::run(g, 0, 0, candidates, alpha, meter, fn);
  return alpha;
}

}  // namespace kegraph::detail
