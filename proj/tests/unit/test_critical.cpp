#include <gtest/gtest.h>

#include <random>

#include "kegraph/census.hpp"
#include "kegraph/critical.hpp"
#include "kegraph/gallery.hpp"
#include "kegraph/generators.hpp"
#include "kegraph/graph_io.hpp"
#include "kegraph/ke_analysis.hpp"
#include "oracles.hpp"

using namespace kegraph;

namespace {

const Graph& fixture(std::string_view name) { return gallery_fixture(name).graph; }

}  // namespace

TEST(CriticalDifference, NamedFamilies) {
  EXPECT_EQ(critical_difference(Graph()), 0);
  EXPECT_EQ(critical_difference(Graph(3, {})), 3);
  EXPECT_EQ(critical_difference(cycle(5)), 0);
  EXPECT_EQ(critical_difference(star(4)), 3);
  EXPECT_EQ(critical_difference(complete_bipartite(2, 5)), 3);
  EXPECT_EQ(critical_difference(fixture("Fig1444-G1")), 1);
  EXPECT_EQ(critical_difference(fixture("Fig1444-G2")), 1);
  EXPECT_EQ(critical_difference(fixture("fig24")), 2);
}

TEST(CriticalDifference, MatchingRouteAgreesWithSubsetOracleUpToEightVertices) {
  for (int n = 0; n <= 8; ++n) {
    for_each_census_graph(n, [&](const Graph& g) {
      const int d = oracle::critical_difference(g);
      ASSERT_EQ(critical_difference(g), d) << encode_graph6(g);
      const BruteCriticalDifference brute = critical_difference_bruteforce(g);
      ASSERT_EQ(brute.d, d);
      ASSERT_TRUE(is_critical_independent(g, brute.witness));
    });
  }
}

TEST(CriticalDifference, WithoutAgreesWithInducedSubgraph) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(10, 0.3, rng);
    const VertexSet drop = VertexSet::from_mask(10, rng() & 0x3ff);
    ASSERT_EQ(critical_difference_without(g, drop),
              oracle::critical_difference(delete_vertices(g, drop).graph));
  }
}

TEST(Ker, AgreesWithIntersectionOracleUpToEightVertices) {
  for (int n = 0; n <= 8; ++n) {
    for_each_census_graph(n, [&](const Graph& g) {
      const oracle::Mask expected = oracle::ker(g);
      ASSERT_EQ(ker(g).mask(), expected) << encode_graph6(g);
      ASSERT_EQ(ker_by_intersection(g).mask(), expected) << encode_graph6(g);
    });
  }
}

TEST(Ker, AgreesWithOracleOnRandomGraphsUpToFourteen) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = oracle::random_graph(6 + static_cast<int>(rng() % 9), 0.2, rng);
    ASSERT_EQ(ker(g).mask(), oracle::ker(g)) << encode_graph6(g);
  }
}

TEST(Ker, GalleryValues) {
  const Graph& g = fixture("fig24");
  EXPECT_EQ(ker(g), parse_vertex_set(g, "{a,b,c}"));
  const Graph& h = fixture("fig2-G1");
  EXPECT_EQ(ker(h), parse_vertex_set(h, "{x,y}"));
  const Graph& f = fixture("fig45");
  EXPECT_EQ(ker(f), parse_vertex_set(f, "{a,b}"));
}

TEST(Ker, Fig24MembershipInCriticalSets) {
  const Graph& g = fixture("fig24");
  EXPECT_TRUE(in_some_critical_independent_set(g, *g.find_label("v")));
  EXPECT_FALSE(in_some_critical_independent_set(g, *g.find_label("u")));
  EXPECT_FALSE(is_critical_independent(g, parse_vertex_set(g, "{a,b,c,u}")));
}

TEST(Ker, MembershipTestAgreesWithEnumeration) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(9, 0.25, rng);
    oracle::Mask covered = 0;
    for (oracle::Mask s : oracle::critical_independent_sets(g)) covered |= s;
    for (Vertex v = 0; v < 9; ++v) {
      ASSERT_EQ(in_some_critical_independent_set(g, v), ((covered >> v) & 1) != 0) << encode_graph6(g);
    }
  }
}

TEST(GreedyCriticalSet, IsCriticalMaximalAndContainsKer) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(2 + static_cast<int>(rng() % 12), 0.25, rng);
    const VertexSet s = find_critical_independent_set(g);
    ASSERT_TRUE(is_critical_independent(g, s)) << encode_graph6(g);
    ASSERT_TRUE(ker(g).is_subset_of(s));
    for (Vertex v = 0; v < static_cast<Vertex>(g.n()); ++v) {
      if (s.contains(v)) continue;
      VertexSet bigger = s;
      bigger.insert(v);
      ASSERT_FALSE(is_critical_independent(g, bigger)) << encode_graph6(g);
    }
  }
}

TEST(GreedyCriticalSet, Fig24FindsSizeFour) {
  const Graph& g = fixture("fig24");
  const VertexSet s = find_critical_independent_set(g);
  EXPECT_EQ(s.size(), 4u);
  EXPECT_TRUE(parse_vertex_set(g, "{a,b,c}").is_subset_of(s));
  EXPECT_EQ(max_critical_independent_set_bruteforce(g).size(), 4u);
  EXPECT_EQ(max_critical_independent_set_bruteforce(g), parse_vertex_set(g, "{a,b,c,v}"));
}

TEST(CriticalSets, EnumerationMatchesOracle) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = oracle::random_graph(8, 0.3, rng);
    const auto sets = critical_independent_sets(g);
    const auto expected = oracle::critical_independent_sets(g);
    ASSERT_EQ(sets.size(), expected.size());
    for (std::size_t i = 1; i < sets.size(); ++i) ASSERT_TRUE(sets[i - 1].lex_less(sets[i]));
    std::size_t best = 0;
    for (oracle::Mask s : expected) best = std::max<std::size_t>(best, oracle::pop(s));
    for (const VertexSet& s : maximum_critical_independent_sets(g)) ASSERT_EQ(s.size(), best);
  }
}

TEST(CriticalSets, OnlyEmptyCriticalSet) {
  EXPECT_TRUE(has_only_empty_critical(cycle(5)));
  EXPECT_TRUE(has_only_empty_critical(complete(4)));
  EXPECT_FALSE(has_only_empty_critical(cycle(4)));
  EXPECT_FALSE(has_only_empty_critical(path(3)));
}

TEST(CriticalProfile, FieldsAreConsistent) {
  const Graph& g = fixture("fig24");
  const CriticalProfile p = critical_profile(g, true);
  EXPECT_EQ(p.d, 2);
  EXPECT_EQ(p.epsilon, 3);
  EXPECT_TRUE(p.ker.is_subset_of(p.witness));
  EXPECT_EQ(p.max_crit_size, 4);
}

// Two critical independent sets A and B whose closed neighbourhood N[A-B]
// reaches into N(B): the subgraph it induces is C7, which is not König-
// Egerváry. The set (A-B) u (N(A)-N(B)) is.
TEST(CriticalSets, ClosedNeighbourhoodOfDifferenceNeedNotBeKe) {
  const Graph g = parse_graph6("GqGO[?");
  const VertexSet a(8, {1, 2, 5, 7});
  const VertexSet b(8, {7});
  ASSERT_TRUE(is_critical_independent(g, a));
  ASSERT_TRUE(is_critical_independent(g, b));
  const VertexSet diff = a - b;
  const Graph closed = induced_subgraph(g, closed_neighborhood(g, diff)).graph;
  EXPECT_EQ(closed.n(), 7u);
  EXPECT_EQ(canonical_certificate(closed), canonical_certificate(cycle(7)));
  EXPECT_FALSE(oracle::is_ke(closed));
  const VertexSet gap = neighborhood(g, a) - neighborhood(g, b);
  EXPECT_TRUE(oracle::is_ke(induced_subgraph(g, diff | gap).graph));
  EXPECT_EQ(unique_perfect_matching_between(g, diff, gap).kind != PerfectMatchingKind::None, true);
}
