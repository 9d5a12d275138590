#include <gtest/gtest.h>

#include <random>

#include "kegraph/census.hpp"
#include "kegraph/gallery.hpp"
#include "kegraph/generators.hpp"
#include "kegraph/graph.hpp"
#include "kegraph/graph_io.hpp"
#include "kegraph/ke_analysis.hpp"
#include "oracles.hpp"

using namespace kegraph;

namespace {

bool symmetric_and_loopless(const Graph& g) {
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < static_cast<Vertex>(g.n()); ++v) {
    degree_sum += g.degree(v);
    for (Vertex w : g.neighbors(v)) {
      if (w == v || !g.has_edge(w, v)) return false;
    }
  }
  return degree_sum == 2 * g.m();
}

}  // namespace

TEST(Graph, CollapsesDuplicateEdgesAndCountsThem) {
  const Graph g(3, {Edge(0, 1), Edge(1, 0), Edge(1, 2)});
  EXPECT_EQ(g.m(), 2u);
  EXPECT_EQ(g.collapsed_duplicates(), 1u);
  EXPECT_TRUE(symmetric_and_loopless(g));
}

TEST(Graph, RejectsLoopsAndOutOfRangeEndpoints) {
  EXPECT_THROW(Graph(3, {Edge(1, 1)}), DomainError);
  EXPECT_THROW(Graph(3, {Edge(0, 3)}), DomainError);
}

TEST(Graph, LabelsFallBackToIndices) {
  const Graph g = path(3).with_labels({"x", "", "z"});
  EXPECT_EQ(g.label(0), "x");
  EXPECT_EQ(g.label(1), "1");
  EXPECT_EQ(g.find_label("z"), 2);
  EXPECT_FALSE(g.find_label("q").has_value());
  EXPECT_THROW(path(3).with_labels({"a"}), DomainError);
}

TEST(VertexSet, SetAlgebraAndOrdering) {
  VertexSet a(70, {1, 5, 66});
  VertexSet b(70, {5, 7});
  EXPECT_EQ((a | b).members(), (std::vector<Vertex>{1, 5, 7, 66}));
  EXPECT_EQ((a & b).members(), (std::vector<Vertex>{5}));
  EXPECT_EQ((a - b).members(), (std::vector<Vertex>{1, 66}));
  EXPECT_TRUE(VertexSet(70, {1, 5}).is_subset_of(a));
  EXPECT_TRUE(a.lex_less(b));
  EXPECT_THROW(a.insert(70), DomainError);
  EXPECT_THROW((void)(a | VertexSet(5)), DomainError);
}

TEST(Graph6, DecodesReferenceStrings) {
  const Graph k1 = parse_graph6("@");
  EXPECT_EQ(k1.n(), 1u);
  EXPECT_EQ(k1.m(), 0u);
  const Graph k2 = parse_graph6("A_");
  EXPECT_EQ(k2.n(), 2u);
  EXPECT_TRUE(k2.has_edge(0, 1));
  const Graph k4 = parse_graph6("C~");
  EXPECT_EQ(k4.n(), 4u);
  EXPECT_EQ(k4.m(), 6u);
  EXPECT_EQ(parse_graph6(">>graph6<<C~\n"), k4);
}

TEST(Graph6, EncodesReferenceStrings) {
  EXPECT_EQ(encode_graph6(complete(2)), "A_");
  EXPECT_EQ(encode_graph6(Graph(1, std::vector<Edge>{})), "@");
  EXPECT_EQ(encode_graph6(cycle(5)), "Dhc");
  // Reference string from the usual Petersen numbering; ours may differ.
  EXPECT_EQ(canonical_certificate(parse_graph6("IheA@GUAo")), canonical_certificate(petersen()));
}

TEST(Graph6, LongHeaderRoundTrips) {
  std::mt19937_64 rng(3);
  for (int n : {63, 64, 100}) {
    const Graph g = oracle::random_graph(n, 0.1, rng);
    const std::string text = encode_graph6(g);
    EXPECT_EQ(text[0], '~');
    EXPECT_EQ(parse_graph6(text), g);
  }
}

TEST(Graph6, MalformedInputNamesTheByteOffset) {
  try {
    (void)parse_graph6("Dh");
    FAIL() << "truncated input accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.where(), ParseError::Where::ByteOffset);
  }
  EXPECT_THROW((void)parse_graph6("Dhcc"), ParseError);  // trailing garbage
  EXPECT_THROW((void)parse_graph6(" "), ParseError);     // header byte below 63
  EXPECT_THROW((void)parse_graph6(""), ParseError);
}

TEST(Graph6, RoundTripsEveryGraphUpToEightVertices) {
  for (int n = 0; n <= 8; ++n) {
    for_each_census_graph(n, [&](const Graph& g) { ASSERT_EQ(parse_graph6(encode_graph6(g)), g) << n; });
  }
}

TEST(EdgeList, ParsesPlainAndDimacs) {
  EXPECT_EQ(parse_edge_list("3 2\n0 1\n1 2"), path(3));
  const EdgeListParse dimacs = parse_edge_list_detailed("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  EXPECT_TRUE(dimacs.dimacs);
  EXPECT_EQ(dimacs.graph, complete(3));
  EXPECT_EQ(parse_edge_list_detailed("2 2\n0 1\n1 0\n").duplicate_edges, 1u);
}

TEST(EdgeList, ErrorsCarryLineNumbers) {
  const auto line_of = [](const char* text) -> std::size_t {
    try {
      (void)parse_edge_list(text);
    } catch (const ParseError& e) {
      EXPECT_EQ(e.where(), ParseError::Where::Line);
      return e.position();
    }
    return 0;
  };
  EXPECT_EQ(line_of("2 1\n0 0"), 2u);
  EXPECT_EQ(line_of("2 1\n0 2"), 2u);
  EXPECT_EQ(line_of("3 2\n0 1\n1 x"), 3u);
}

TEST(EdgeList, EncodeRoundTrips) {
  const Graph g = petersen();
  EXPECT_EQ(parse_edge_list(encode_edge_list(g)), g);
}

TEST(Neighborhood, BasicCases) {
  const Graph c5 = cycle(5);
  EXPECT_EQ(neighborhood(c5, VertexSet(5, {0})).members(), (std::vector<Vertex>{1, 4}));
  EXPECT_TRUE(neighborhood(c5, VertexSet(5)).empty());
  EXPECT_EQ(closed_neighborhood(c5, VertexSet(5, {0})).members(), (std::vector<Vertex>{0, 1, 4}));
  EXPECT_THROW((void)neighborhood(c5, VertexSet(6, {0})), DomainError);
}

TEST(Neighborhood, Fig24KerSharesOneNeighbour) {
  const GalleryFixture& f = gallery_fixture("fig24");
  const VertexSet abc = parse_vertex_set(f.graph, "{a,b,c}");
  EXPECT_EQ(neighborhood(f.graph, abc).size(), 1u);
  EXPECT_EQ(difference(f.graph, abc), 2);
}

TEST(Neighborhood, IsMonotone) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = oracle::random_graph(n, 0.3, rng);
    const std::uint64_t b = rng() & oracle::all(g);
    const std::uint64_t a = b & rng();
    const VertexSet na = neighborhood(g, VertexSet::from_mask(g.n(), a));
    const VertexSet nb = neighborhood(g, VertexSet::from_mask(g.n(), b));
    EXPECT_TRUE(na.is_subset_of(nb));
  }
}

// N(A) = N(A - C) whenever C is a subset of B, B of A, and N(B) = N(B - C).
TEST(Neighborhood, RedundantPartDropsOutOnGalleryGraphs) {
  std::mt19937_64 rng(5);
  int checked = 0;
  for (const GalleryFixture& f : figure_gallery()) {
    const Graph& g = f.graph;
    for (int trial = 0; trial < 400; ++trial) {
      const std::uint64_t a = rng() & oracle::all(g);
      const std::uint64_t b = a & rng();
      const std::uint64_t c = b & rng();
      const auto set = [&](std::uint64_t m) { return VertexSet::from_mask(g.n(), m); };
      if (!is_independent(g, set(a))) continue;
      if (neighborhood(g, set(b)) != neighborhood(g, set(b & ~c))) continue;
      ++checked;
      EXPECT_EQ(neighborhood(g, set(a)), neighborhood(g, set(a & ~c))) << f.name;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(Mutation, DeletionsAndInducedSubgraphs) {
  const Subgraph p4 = delete_vertex(cycle(5), 2);
  EXPECT_EQ(p4.graph.n(), 4u);
  EXPECT_EQ(p4.graph.m(), 3u);
  EXPECT_EQ(p4.to_parent, (std::vector<Vertex>{0, 1, 3, 4}));
  EXPECT_TRUE(is_bipartite(p4.graph));

  const Graph k4e = delete_edge(complete(4), Edge(0, 1));
  EXPECT_EQ(k4e.m(), 5u);
  EXPECT_THROW((void)delete_edge(k4e, Edge(0, 1)), DomainError);
  EXPECT_THROW((void)delete_vertex(k4e, 4), DomainError);

  const Subgraph p3 = induced_subgraph(cycle(5), VertexSet(5, {0, 1, 2}));
  EXPECT_EQ(p3.graph, path(3));
  EXPECT_EQ(p3.lift(VertexSet(3, {2}), 5).members(), (std::vector<Vertex>{2}));
}

TEST(Mutation, ResultsStaySymmetricAndLoopless) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(2 + static_cast<int>(rng() % 10), 0.4, rng);
    const Vertex v = static_cast<Vertex>(rng() % g.n());
    EXPECT_TRUE(symmetric_and_loopless(delete_vertex(g, v).graph));
    EXPECT_TRUE(symmetric_and_loopless(induced_subgraph(g, VertexSet::from_mask(g.n(), rng() & oracle::all(g))).graph));
    if (g.m() > 0) {
      EXPECT_TRUE(symmetric_and_loopless(delete_edge(g, g.edges()[rng() % g.m()])));
    }
  }
}

TEST(Generators, NamedFamilies) {
  EXPECT_EQ(cycle(5).m(), 5u);
  EXPECT_EQ(complete_minus_edge(4).m(), 5u);
  EXPECT_EQ(path(1).n(), 1u);
  EXPECT_EQ(star(3).m(), 3u);
  EXPECT_EQ(complete_bipartite(2, 3).m(), 6u);
  EXPECT_EQ(petersen().m(), 15u);
  EXPECT_THROW((void)cycle(2), DomainError);
  EXPECT_THROW((void)path(0), DomainError);
}

TEST(Generators, RandomKeSmallCases) {
  // With no extra edges, (3,1) is a single matching edge plus isolated S
  // vertices: a forest, hence bipartite and König-Egerváry.
  const Graph sparse = gen_random_ke(3, 1, 0.0, 42);
  EXPECT_EQ(sparse.n(), 4u);
  EXPECT_EQ(sparse.m(), 1u);
  EXPECT_TRUE(is_bipartite(sparse));
  EXPECT_TRUE(is_ke(sparse));

  const Graph matching = gen_random_ke(4, 4, 0.0, 1);
  EXPECT_EQ(oracle::alpha(matching), 4);
  EXPECT_EQ(oracle::mu(matching), 4);

  EXPECT_TRUE(is_ke(gen_random_ke(5, 3, 0.5, 7)));
  EXPECT_THROW((void)gen_random_ke(2, 3, 0.5, 0), DomainError);
  EXPECT_THROW((void)gen_random_ke(3, 0, 0.5, 0), DomainError);
}

TEST(Generators, RandomKeIsDeterministicAndAlwaysKe) {
  EXPECT_EQ(gen_random_ke(6, 4, 0.5, 99), gen_random_ke(6, 4, 0.5, 99));
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int s = 1 + static_cast<int>(rng() % 10);
    const int a = 1 + static_cast<int>(rng() % static_cast<unsigned>(s));
    const double p = static_cast<double>(rng() % 101) / 100.0;
    const Graph g = gen_random_ke(s, a, p, rng());
    ASSERT_EQ(oracle::alpha(g) + oracle::mu(g), s + a) << encode_graph6(g);
  }
}

TEST(Generators, HkShape) {
  const Graph h1 = gen_hk(1);
  EXPECT_EQ(h1.n(), 4u);
  EXPECT_EQ(h1.m(), 4u);
  EXPECT_EQ(h1.label(3), "w");
  EXPECT_THROW((void)gen_hk(0), DomainError);
}

TEST(Generators, GpqShape) {
  const Graph g = gen_gpq(4, 2);
  EXPECT_EQ(g.n(), 8u);
  EXPECT_EQ(g.label(4), "b1");
  EXPECT_THROW((void)gen_gpq(2, 3), DomainError);
  EXPECT_THROW((void)gen_gpq(3, 1), DomainError);
}
