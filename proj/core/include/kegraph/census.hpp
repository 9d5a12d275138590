#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "kegraph/graph.hpp"

namespace kegraph {

/// Largest order the census generator supports (the canonical certificate
/// packs the upper triangle of the adjacency matrix into 64 bits).
inline constexpr int kCensusMaxOrder = 11;

/// Adjacency rows of a census graph: bit j of rows[i] is the edge ij.
using CensusRows = std::span<const std::uint16_t>;

/// Visits one representative of every isomorphism class of graphs on exactly
/// n vertices (0 <= n <= kCensusMaxOrder), in a deterministic order. Graphs
/// are grown one vertex at a time by canonical augmentation.
void for_each_census_rows(int n, const std::function<void(CensusRows)>& visit);
void for_each_census_graph(int n, const std::function<void(const Graph&)>& visit);

/// Number of isomorphism classes on n vertices, by running the generator.
std::uint64_t census_count(int n);

Graph graph_from_rows(CensusRows rows);

/// Canonical certificate: two graphs of the same order (at most
/// kCensusMaxOrder) get equal certificates iff they are isomorphic.
std::uint64_t canonical_certificate(const Graph& g);

}  // namespace kegraph
