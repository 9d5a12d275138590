#include <gtest/gtest.h>

#include <random>
#include <set>

#include "kegraph/census.hpp"
#include "kegraph/generators.hpp"
#include "kegraph/graph_io.hpp"
#include "oracles.hpp"

using namespace kegraph;

TEST(Census, CountsMatchKnownValuesUpToEightVertices) {
  const std::uint64_t expected[] = {1, 1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(census_count(n), expected[n]) << n;
}

TEST(Census, RepresentativesArePairwiseNonIsomorphic) {
  for (int n = 1; n <= 7; ++n) {
    std::set<std::uint64_t> certs;
    std::size_t visited = 0;
    for_each_census_graph(n, [&](const Graph& g) {
      ASSERT_EQ(g.n(), static_cast<std::size_t>(n));
      certs.insert(canonical_certificate(g));
      ++visited;
    });
    EXPECT_EQ(certs.size(), visited) << n;
  }
}

TEST(Census, EveryLabelledGraphOnFiveVerticesIsRepresented) {
  std::set<std::uint64_t> census;
  for_each_census_graph(5, [&](const Graph& g) { census.insert(canonical_certificate(g)); });
  for (std::uint32_t bits = 0; bits < (1u << 10); ++bits) {
    std::vector<Edge> edges;
    int k = 0;
    for (int u = 0; u < 5; ++u) {
      for (int v = u + 1; v < 5; ++v, ++k) {
        if ((bits >> k) & 1) edges.emplace_back(u, v);
      }
    }
    ASSERT_TRUE(census.count(canonical_certificate(Graph(5, edges))));
  }
}

TEST(Census, OrderIsDeterministic) {
  std::vector<std::string> first;
  std::vector<std::string> second;
  for_each_census_graph(6, [&](const Graph& g) { first.push_back(encode_graph6(g)); });
  for_each_census_graph(6, [&](const Graph& g) { second.push_back(encode_graph6(g)); });
  EXPECT_EQ(first, second);
}

TEST(Census, RowsAndGraphsAgree) {
  std::vector<Graph> from_rows;
  for_each_census_rows(5, [&](CensusRows rows) { from_rows.push_back(graph_from_rows(rows)); });
  std::vector<Graph> graphs;
  for_each_census_graph(5, [&](const Graph& g) { graphs.push_back(g); });
  EXPECT_EQ(from_rows, graphs);
}

TEST(Census, RejectsOrdersOutOfRange) {
  EXPECT_THROW(census_count(-1), DomainError);
  EXPECT_THROW(census_count(kCensusMaxOrder + 1), DomainError);
  EXPECT_THROW((void)canonical_certificate(path(kCensusMaxOrder + 1)), DomainError);
}

TEST(Certificate, InvariantUnderRelabelling) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % kCensusMaxOrder);
    const Graph g = oracle::random_graph(n, 0.4, rng);
    const Graph h = oracle::relabel(g, oracle::random_permutation(g.n(), rng));
    ASSERT_EQ(canonical_certificate(g), canonical_certificate(h)) << encode_graph6(g);
  }
}

TEST(Certificate, SeparatesSmallNonIsomorphicPairs) {
  EXPECT_NE(canonical_certificate(cycle(6)),
            canonical_certificate(Graph(6, {Edge(0, 1), Edge(1, 2), Edge(2, 0), Edge(3, 4), Edge(4, 5), Edge(5, 3)})));
  EXPECT_NE(canonical_certificate(path(4)), canonical_certificate(star(3)));
  EXPECT_EQ(canonical_certificate(petersen()), canonical_certificate(parse_graph6("IheA@GUAo")));
}
