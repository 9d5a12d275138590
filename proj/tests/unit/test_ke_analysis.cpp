#include <gtest/gtest.h>

#include <random>

#include "kegraph/census.hpp"
#include "kegraph/critical.hpp"
#include "kegraph/gallery.hpp"
#include "kegraph/generators.hpp"
#include "kegraph/graph_io.hpp"
#include "kegraph/independence.hpp"
#include "kegraph/ke_analysis.hpp"
#include "oracles.hpp"

using namespace kegraph;

namespace {

const Graph& fixture(std::string_view name) { return gallery_fixture(name).graph; }

Vertex at(const Graph& g, std::string_view label) { return *g.find_label(label); }

const EdgeVerdict& verdict_for(const std::vector<EdgeVerdict>& all, const Edge& e) {
  for (const EdgeVerdict& v : all) {
    if (v.edge == e) return v;
  }
  throw std::logic_error("edge not found");
}

Edge named_edge(const GalleryFixture& f, std::string_view name) {
  for (const auto& [label, e] : f.named_edges) {
    if (label == name) return e;
  }
  throw std::logic_error("edge name not found");
}

}  // namespace

TEST(KEClass, CountsAndKinds) {
  EXPECT_EQ(classify_counts(4, 2, 2, true).kind, KEKind::Bipartite);
  EXPECT_EQ(classify_counts(5, 3, 2, false).kind, KEKind::KE_NonBipartite);
  EXPECT_EQ(classify_counts(5, 2, 2, false).kind, KEKind::OneKE);
  EXPECT_EQ(classify_counts(6, 2, 2, false).kind, KEKind::Other);
  EXPECT_EQ(ke_class(cycle(6)).kind, KEKind::Bipartite);
  EXPECT_EQ(ke_class(cycle(5)).kind, KEKind::OneKE);
  EXPECT_EQ(ke_class(complete(4)).kind, KEKind::OneKE);
  EXPECT_EQ(ke_class(complete(6)).kind, KEKind::Other);
  EXPECT_EQ(ke_class(gen_hk(2)).kind, KEKind::KE_NonBipartite);
  EXPECT_EQ(ke_class(fixture("Fig123-G1")).kind, KEKind::OneKE);
  EXPECT_EQ(ke_class(fixture("Fig123-G2")).kind, KEKind::OneKE);
}

TEST(KEClass, AgreesWithOracleUpToEightVertices) {
  for (int n = 0; n <= 8; ++n) {
    for_each_census_graph(n, [&](const Graph& g) { ASSERT_EQ(is_ke(g), oracle::is_ke(g)) << encode_graph6(g); });
  }
}

TEST(OddCycles, BipartiteAndAlmostBipartite) {
  EXPECT_TRUE(is_bipartite(cycle(6)));
  EXPECT_FALSE(is_bipartite(cycle(5)));
  EXPECT_FALSE(is_almost_bipartite(cycle(6)));
  EXPECT_TRUE(is_almost_bipartite(cycle(5)));
  EXPECT_TRUE(is_almost_bipartite(gen_hk(3)));
  EXPECT_FALSE(is_almost_bipartite(complete(4)));
  EXPECT_EQ(count_odd_cycles(complete(4), 100), 4u);
  EXPECT_EQ(count_odd_cycles(complete(5), 100), 10u + 12u);
  EXPECT_EQ(count_odd_cycles(complete(5), 3), 3u);
  EXPECT_FALSE(shortest_odd_cycle(path(5)).has_value());
  EXPECT_EQ(shortest_odd_cycle(gen_hk(2))->size(), 5u);
  EXPECT_EQ(shortest_odd_cycle(petersen())->size(), 5u);
}

TEST(Heredity, DeletionScansAgreeWithOracleOnRandomGraphs) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(2 + static_cast<int>(rng() % 9), 0.3, rng);
    ASSERT_EQ(rho_v(g), oracle::rho_v(g)) << encode_graph6(g);
    ASSERT_EQ(rho_e(g), oracle::rho_e(g)) << encode_graph6(g);
  }
}

TEST(Heredity, VertexFormulaHoldsOnRandomKeGraphs) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int s = 1 + static_cast<int>(seed % 6);
    const int a = 1 + static_cast<int>(seed % static_cast<std::uint64_t>(s));
    const Graph g = gen_random_ke(s, a, 0.35, seed);
    const int xi = oracle::pop(oracle::core(g));
    const int eps = oracle::pop(oracle::ker(g));
    ASSERT_EQ(oracle::rho_v(g), static_cast<int>(g.n()) - xi + eps) << encode_graph6(g);
    ASSERT_EQ(rho_v_formula(g), static_cast<int>(g.n()) - xi + eps);
    ASSERT_GE(oracle::rho_e(g), static_cast<int>(g.m()) - xi + eps) << encode_graph6(g);
    ASSERT_EQ(rho_e_bound(g), static_cast<int>(g.m()) - xi + eps);
  }
}

TEST(Heredity, FormulasRequireKeInput) {
  EXPECT_THROW((void)rho_v_formula(cycle(5)), DomainError);
  EXPECT_THROW((void)rho_e_bound(complete(4)), DomainError);
  EXPECT_THROW((void)classify_vertices(cycle(5)), DomainError);
}

TEST(Heredity, GalleryValues) {
  EXPECT_EQ(rho_v(fixture("fig9-G2")), 3);
  const Graph& f45 = fixture("fig45");
  EXPECT_EQ(rho_e(f45), 8);
  EXPECT_EQ(static_cast<int>(f45.m()), 8);
  EXPECT_EQ(rho_e_bound(f45), 6);
  EXPECT_EQ(rho_e(fixture("fig33-G3")), 6);
  EXPECT_EQ(rho_e_bound(fixture("fig33-G3")), 6);
  const Graph& g2 = fixture("fig2-G2");
  EXPECT_EQ(rho_v(g2), static_cast<int>(g2.n()));
  EXPECT_EQ(rho_e(g2), static_cast<int>(g2.m()));
}

TEST(Heredity, KnownCliqueValues) {
  EXPECT_EQ(rho_v(complete(3)), 3);
  EXPECT_EQ(rho_v(complete(4)), 0);
  EXPECT_EQ(rho_v(complete(5)), 0);
}

TEST(ClassifyVertices, Fig55Zones) {
  const Graph& g1 = fixture("fig55-G1");
  const auto verdicts = classify_vertices(g1);
  for (const VertexVerdict& v : verdicts) {
    if (v.vertex == at(g1, "v1")) {
      EXPECT_EQ(v.zone, VertexZone::CoreMinusKer);
      EXPECT_FALSE(v.deletion_class.is_ke());
    } else if (v.vertex == at(g1, "v2") || v.vertex == at(g1, "v3") || v.vertex == at(g1, "v4")) {
      EXPECT_TRUE(v.deletion_class.is_ke());
    }
  }
  for (const VertexVerdict& v : classify_vertices(fixture("fig55-G3"))) EXPECT_TRUE(v.deletion_class.is_ke());
}

TEST(ClassifyVertices, ZonesMatchCoreAndKer) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = gen_random_ke(5, 3, 0.3, seed);
    const oracle::Mask c = oracle::core(g);
    const oracle::Mask k = oracle::ker(g);
    for (const VertexVerdict& v : classify_vertices(g)) {
      const bool in_core = (c >> v.vertex) & 1;
      const bool in_ker = (k >> v.vertex) & 1;
      const VertexZone expected =
          in_ker ? VertexZone::Ker : (in_core ? VertexZone::CoreMinusKer : VertexZone::OutsideCore);
      ASSERT_EQ(v.zone, expected);
      ASSERT_EQ(v.deletion_class.is_ke(), oracle::is_ke(oracle::without_vertex(g, v.vertex)));
      ASSERT_EQ(v.deletion_class.is_ke(), v.zone != VertexZone::CoreMinusKer);
    }
  }
}

TEST(ClassifyEdges, NamedEdgeDeletions) {
  const GalleryFixture& f333 = gallery_fixture("fig333-G2");
  EXPECT_FALSE(verdict_for(classify_edges(f333.graph), named_edge(f333, "ab")).deletion_is_ke);
  const GalleryFixture& f123 = gallery_fixture("Fig123-G2");
  const auto edges = classify_edges(f123.graph);
  EXPECT_TRUE(verdict_for(edges, named_edge(f123, "e2")).deletion_is_ke);
  EXPECT_FALSE(verdict_for(edges, named_edge(f123, "e1")).deletion_is_ke);
}

TEST(ClassifyEdges, FlagsAgreeWithOracle) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(3 + static_cast<int>(rng() % 7), 0.35, rng);
    const int a = oracle::alpha(g);
    const int m = oracle::mu(g);
    const auto verdicts = classify_edges(g);
    ASSERT_EQ(verdicts.size(), g.m());
    for (const EdgeVerdict& v : verdicts) {
      const Graph h = oracle::without_edge(g, v.edge);
      ASSERT_EQ(v.mu_critical, oracle::mu(h) < m);
      ASSERT_EQ(v.alpha_critical, oracle::alpha(h) > a);
      ASSERT_EQ(v.deletion_is_ke, oracle::is_ke(h));
    }
  }
}

TEST(CriticalDecomposition, Fig24AllChecksHold) {
  const Graph& g = fixture("fig24");
  const CriticalDecomposition dec = critical_decomposition(g, parse_vertex_set(g, "{a,b,c,v}"));
  EXPECT_TRUE(dec.all_hold());
  EXPECT_EQ(dec.inside.graph.n() + dec.outside.graph.n(), g.n());
  EXPECT_THROW((void)critical_decomposition(g, parse_vertex_set(g, "{a,b,c,u}")), DomainError);
}

TEST(CriticalDecomposition, HoldsForEveryGreedyCriticalSet) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = oracle::random_graph(2 + static_cast<int>(rng() % 12), 0.25, rng);
    ASSERT_TRUE(critical_decomposition(g, find_critical_independent_set(g)).all_hold()) << encode_graph6(g);
  }
}

TEST(Analyze, ReportIsConsistentWithOracles) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Graph g = gen_random_ke(4, 3, 0.3, seed);
    const KEReport r = analyze(g);
    ASSERT_EQ(r.alpha, oracle::alpha(g));
    ASSERT_EQ(r.mu, oracle::mu(g));
    ASSERT_EQ(r.d, oracle::critical_difference(g));
    ASSERT_EQ(r.core.mask(), oracle::core(g));
    ASSERT_EQ(r.ker.mask(), oracle::ker(g));
    ASSERT_EQ(r.rho_v, oracle::rho_v(g));
    ASSERT_EQ(r.rho_e, oracle::rho_e(g));
    ASSERT_EQ(r.eta, oracle::count_alpha_critical_edges(g));
    ASSERT_TRUE(r.rho_v_equality.value());
    ASSERT_TRUE(r.rho_e_lower_bound.value());
    ASSERT_EQ(r.rho_e == *r.rho_e_bound, r.gap_matching == PerfectMatchingKind::UniquePerfect);
  }
}

TEST(Analyze, NonKeGraphsLeaveFormulaFieldsEmpty) {
  const KEReport r = analyze(cycle(5));
  EXPECT_TRUE(r.ke_class.is_one_ke());
  EXPECT_FALSE(r.rho_v_formula.has_value());
  EXPECT_FALSE(r.gap_matching.has_value());
  EXPECT_EQ(r.rho_v, 5);
  EXPECT_EQ(r.rho_e, 5);
}

TEST(Families, HkHasOneMuCriticalCoreEdge) {
  for (int k = 1; k <= 5; ++k) {
    const Graph h = gen_hk(k);
    ASSERT_TRUE(is_ke(h));
    const KEReport r = analyze(h);
    EXPECT_EQ(r.xi - r.epsilon, 1) << k;
    const EdgeSet pocket = edges_between(h, r.core, neighborhood(h, r.core));
    int critical = 0;
    for (const Edge& e : mu_critical_edges(h)) critical += pocket.contains(e);
    EXPECT_EQ(critical, 1) << k;
    EXPECT_TRUE(mu_critical_edges(h).contains(Edge(0, 2 * k + 1)));
    EXPECT_EQ(r.rho_e, static_cast<int>(h.m()) - 1) << k;
    EXPECT_EQ(r.rho_e, *r.rho_e_bound) << k;
  }
}

TEST(Families, GpqHasPMinusQMuCriticalCoreEdges) {
  for (int p = 2; p <= 6; ++p) {
    for (int q = 2; q <= p; ++q) {
      const Graph g = gen_gpq(p, q);
      ASSERT_TRUE(is_ke(g));
      const KEReport r = analyze(g);
      ASSERT_EQ(static_cast<int>(r.core.size()), p);
      ASSERT_TRUE(r.ker.empty());
      const EdgeSet pocket = edges_between(g, r.core, neighborhood(g, r.core));
      int critical = 0;
      for (const Edge& e : mu_critical_edges(g)) critical += pocket.contains(e);
      ASSERT_EQ(critical, p - q) << p << "," << q;
      ASSERT_EQ(oracle::count_mu_critical_edges(g), critical);
    }
  }
}

TEST(ToString, NamesAreStable) {
  EXPECT_STREQ(to_string(KEKind::OneKE), "OneKE");
  EXPECT_STREQ(to_string(VertexZone::Ker), "Ker");
  EXPECT_STREQ(to_string(PerfectMatchingKind::UniquePerfect), "UniquePerfect");
}
