#pragma once

#include <cstdint>

#include "kegraph/graph.hpp"

namespace kegraph {

// Named families. Vertices are numbered 0..k-1 along the path/cycle.
Graph cycle(int k);                // C_k, k >= 3
Graph path(int k);                 // P_k on k vertices, k >= 1
Graph complete(int k);             // K_k, k >= 1
Graph complete_minus_edge(int k);  // K_k without the edge {0,1}, k >= 2
Graph star(int k);                 // K_{1,k}: center 0, leaves 1..k, k >= 1
Graph complete_bipartite(int a, int b);  // parts 0..a-1 and a..a+b-1
Graph petersen();

/// Random König-Egerváry graph G = S*A. S = {0..s-1} is independent,
/// A = {s..s+a-1}; a random injection of A into S supplies a matching of
/// size |A|, and every other (S,A) pair and every A-internal pair becomes an
/// edge with probability extra_edge_prob. Deterministic for a fixed seed.
Graph gen_random_ke(int s, int a, double extra_edge_prob, std::uint64_t seed);

/// Member of the G_p^q family (p >= q >= 2). Vertices 0..p-1 are a_1..a_p
/// (a clique), p..2p-1 are b_1..b_p (independent). Edges: b_i a_i for all i;
/// b_i a_{i mod q + 1} for i <= q, closing the first q columns into one
/// alternating 2q-cycle; a_j b_1 and a_j b_q for j > q.
/// core = {b_1..b_p}, ker = {}, and exactly p-q edges of (core, N(core)) are
/// mu-critical.
Graph gen_gpq(int p, int q);

/// H_k: the odd cycle C_{2k+1} on 0..2k with a pendant vertex w = 2k+1
/// attached to v = 0 (k >= 1).
Graph gen_hk(int k);

}  // namespace kegraph
