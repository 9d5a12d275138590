#include <gtest/gtest.h>

#include <random>
#include <set>

#include "kegraph/census.hpp"
#include "kegraph/gallery.hpp"
#include "kegraph/graph_io.hpp"
#include "kegraph/generators.hpp"
#include "kegraph/ke_analysis.hpp"
#include "kegraph/matching.hpp"
#include "oracles.hpp"

using namespace kegraph;

namespace {

bool is_matching_of(const Graph& g, const Matching& mm) {
  std::vector<int> used(g.n(), 0);
  for (const Edge& e : mm.edges()) {
    if (!g.has_edge(e)) return false;
    if (used[static_cast<std::size_t>(e.u)]++ || used[static_cast<std::size_t>(e.v)]++) return false;
  }
  return mm.edges().size() == mm.size();
}

VertexSet named(const Graph& g, std::initializer_list<const char*> names) {
  VertexSet s(g.n());
  for (const char* name : names) s.insert(*g.find_label(name));
  return s;
}

}  // namespace

TEST(Matching, AddRemoveAndQueries) {
  Matching mm(4);
  mm.add(Edge(0, 1));
  EXPECT_EQ(mm.size(), 1u);
  EXPECT_EQ(mm.mate(1), 0);
  EXPECT_FALSE(mm.mate(2).has_value());
  EXPECT_TRUE(mm.contains(Edge(1, 0)));
  EXPECT_THROW(mm.add(Edge(1, 2)), DomainError);
  mm.remove(Edge(0, 1));
  EXPECT_EQ(mm.size(), 0u);
  EXPECT_THROW((void)Matching::from_edges(3, {Edge(0, 1), Edge(1, 2)}), DomainError);
}

TEST(Matching, NamedFamilies) {
  EXPECT_EQ(matching_number(Graph()), 0);
  EXPECT_EQ(matching_number(cycle(5)), 2);
  EXPECT_EQ(matching_number(cycle(6)), 3);
  EXPECT_EQ(matching_number(path(7)), 3);
  EXPECT_EQ(matching_number(complete(7)), 3);
  EXPECT_EQ(matching_number(star(5)), 1);
  EXPECT_EQ(matching_number(petersen()), 5);
  EXPECT_EQ(matching_number(complete_bipartite(3, 5)), 3);
}

TEST(Matching, BlossomAgreesWithOracleOnEveryGraphUpToEightVertices) {
  for (int n = 0; n <= 8; ++n) {
    for_each_census_graph(n, [&](const Graph& g) {
      const Matching mm = max_matching(g);
      ASSERT_TRUE(is_matching_of(g, mm));
      ASSERT_EQ(static_cast<int>(mm.size()), oracle::mu(g)) << encode_graph6(g);
    });
  }
}

TEST(Matching, BlossomAgreesWithOracleOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 17);
    const double p = 0.05 + 0.6 * static_cast<double>(rng() % 100) / 100.0;
    const Graph g = oracle::random_graph(n, p, rng);
    const Matching mm = max_matching(g);
    ASSERT_TRUE(is_matching_of(g, mm));
    ASSERT_EQ(static_cast<int>(mm.size()), oracle::mu(g)) << encode_graph6(g);
  }
}

TEST(Matching, SeededAugmentationReachesMaximum) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(12, 0.3, rng);
    Matching seed(g.n());
    for (const Edge& e : g.edges()) {
      if (!seed.is_saturated(e.u) && !seed.is_saturated(e.v)) seed.add(e);
    }
    const Matching mm = max_matching(g, seed);
    ASSERT_TRUE(is_matching_of(g, mm));
    ASSERT_EQ(static_cast<int>(mm.size()), oracle::mu(g));
  }
}

TEST(Matching, IsDeterministic) {
  const Graph g = petersen();
  EXPECT_EQ(max_matching(g), max_matching(g));
}

TEST(Matching, DeletionProfileAgreesWithBruteForce) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = oracle::random_graph(3 + static_cast<int>(rng() % 9), 0.35, rng);
    const MatchingDeletionProfile prof = matching_deletion_profile(g);
    ASSERT_EQ(prof.mu, oracle::mu(g));
    ASSERT_EQ(prof.edges, g.edges());
    for (Vertex v = 0; v < static_cast<Vertex>(g.n()); ++v) {
      ASSERT_EQ(prof.without_vertex[static_cast<std::size_t>(v)], oracle::mu(oracle::without_vertex(g, v)));
    }
    for (std::size_t i = 0; i < prof.edges.size(); ++i) {
      ASSERT_EQ(prof.without_edge[i], oracle::mu(oracle::without_edge(g, prof.edges[i])));
    }
    ASSERT_EQ(static_cast<int>(mu_critical_edges(g).size()), oracle::count_mu_critical_edges(g));
  }
}

TEST(Matching, MuCriticalVerticesAreSaturatedByEveryMaximumMatching) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = oracle::random_graph(8, 0.3, rng);
    VertexSet always = VertexSet::full(g.n());
    for (const Matching& mm : enumerate_maximum_matchings(g)) always &= mm.saturated();
    ASSERT_EQ(mu_critical_vertices(g), always);
  }
}

TEST(Matching, EnumerationCountsAndSizes) {
  const auto c6 = enumerate_maximum_matchings(cycle(6));
  EXPECT_EQ(c6.size(), 2u);
  EXPECT_EQ(enumerate_maximum_matchings(complete(4)).size(), 3u);
  EXPECT_EQ(enumerate_maximum_matchings(cycle(5)).size(), 5u);
  std::set<std::vector<Vertex>> distinct;
  for (const Matching& mm : enumerate_maximum_matchings(petersen())) {
    EXPECT_EQ(mm.size(), 5u);
    distinct.insert(mm.mates());
  }
  EXPECT_EQ(distinct.size(), 6u);
}

TEST(Matching, RandomMaximumMatchingIsMaximum) {
  const Graph g = petersen();
  std::set<std::vector<Vertex>> seen;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Matching mm = random_maximum_matching(g, seed);
    ASSERT_TRUE(is_matching_of(g, mm));
    ASSERT_EQ(mm.size(), 5u);
    seen.insert(mm.mates());
  }
  EXPECT_GT(seen.size(), 1u);
  EXPECT_EQ(random_maximum_matching(g, 3), random_maximum_matching(g, 3));
}

TEST(HopcroftKarp, UsesOnlyCrossEdges) {
  // Triangle 0-1-2 plus pendant 3 on 2; only 0 and 1 sit on the left.
  const Graph g(4, {Edge(0, 1), Edge(1, 2), Edge(0, 2), Edge(2, 3)});
  const Matching mm = max_matching_bipartite(g, VertexSet(4, {0, 1}), VertexSet(4, {2, 3}));
  EXPECT_EQ(mm.size(), 1u);
  EXPECT_THROW((void)max_matching_bipartite(g, VertexSet(4, {0, 1}), VertexSet(4, {1, 2})), DomainError);
}

TEST(HopcroftKarp, AgreesWithBlossomOnBipartiteGraphs) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int a = 1 + static_cast<int>(rng() % 8);
    const int b = 1 + static_cast<int>(rng() % 8);
    std::bernoulli_distribution coin(0.3);
    std::vector<Edge> edges;
    for (int u = 0; u < a; ++u) {
      for (int v = a; v < a + b; ++v) {
        if (coin(rng)) edges.emplace_back(u, v);
      }
    }
    const Graph g(static_cast<std::size_t>(a + b), edges);
    VertexSet left(g.n());
    for (int u = 0; u < a; ++u) left.insert(u);
    const Matching mm = max_matching_bipartite(g, left, g.vertices() - left);
    ASSERT_TRUE(is_matching_of(g, mm));
    ASSERT_EQ(static_cast<int>(mm.size()), oracle::mu(g));
  }
}

TEST(UniquePerfectMatching, Verdicts) {
  const Graph c4 = cycle(4);
  EXPECT_EQ(unique_perfect_matching_between(c4, VertexSet(4, {0, 2}), VertexSet(4, {1, 3})).kind,
            PerfectMatchingKind::MultiplePerfect);
  const Graph p4 = path(4);
  EXPECT_EQ(unique_perfect_matching_between(p4, VertexSet(4, {0, 2}), VertexSet(4, {1, 3})).kind,
            PerfectMatchingKind::UniquePerfect);
  EXPECT_EQ(unique_perfect_matching_between(p4, VertexSet(4), VertexSet(4)).kind,
            PerfectMatchingKind::UniquePerfect);
  EXPECT_EQ(unique_perfect_matching_between(p4, VertexSet(4, {0}), VertexSet(4, {2})).kind,
            PerfectMatchingKind::None);
  EXPECT_EQ(unique_perfect_matching_between(star(3), VertexSet(4, {1, 2}), VertexSet(4, {0})).kind,
            PerfectMatchingKind::NonPerfect);
}

TEST(UniquePerfectMatching, SecondMatchingIsPerfectAndDifferent) {
  const Graph c6 = cycle(6);
  const VertexSet a(6, {0, 2, 4});
  const VertexSet b(6, {1, 3, 5});
  const PerfectMatchingVerdict v = unique_perfect_matching_between(c6, a, b);
  ASSERT_EQ(v.kind, PerfectMatchingKind::MultiplePerfect);
  ASSERT_TRUE(v.second.has_value());
  EXPECT_EQ(v.second->size(), 3u);
  EXPECT_FALSE(*v.second == v.maximum);
}

TEST(UniquePerfectMatching, AgreesWithPerfectMatchingCount) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 5);
    const Graph g = oracle::random_graph(2 * k + 2, 0.45, rng);
    VertexSet a(g.n());
    VertexSet b(g.n());
    for (int i = 0; i < k; ++i) {
      a.insert(i);
      b.insert(k + i);
    }
    const std::size_t count = count_perfect_matchings_between(g, a, b);
    const PerfectMatchingKind kind = unique_perfect_matching_between(g, a, b).kind;
    if (count == 0) {
      ASSERT_TRUE(kind == PerfectMatchingKind::None || kind == PerfectMatchingKind::NonPerfect);
    } else if (count == 1) {
      ASSERT_EQ(kind, PerfectMatchingKind::UniquePerfect);
    } else {
      ASSERT_EQ(kind, PerfectMatchingKind::MultiplePerfect);
    }
  }
}

TEST(UniquePerfectMatching, Fig45GapHasSeveralPerfectMatchings) {
  const Graph& g = gallery_fixture("fig45").graph;
  const VertexSet gap = named(g, {"c", "d"});
  const KEReport r = analyze(g);
  EXPECT_EQ(r.core - r.ker, gap);
  const VertexSet other = neighborhood(g, r.core) - neighborhood(g, r.ker);
  EXPECT_EQ(unique_perfect_matching_between(g, gap, other).kind, PerfectMatchingKind::MultiplePerfect);
  EXPECT_GE(count_perfect_matchings_between(g, gap, other), 2u);
  EXPECT_EQ(r.gap_matching, PerfectMatchingKind::MultiplePerfect);
}

TEST(UniquePerfectMatching, RejectsOverlappingParts) {
  EXPECT_THROW((void)unique_perfect_matching_between(cycle(4), VertexSet(4, {0, 1}), VertexSet(4, {1})),
               DomainError);
}
