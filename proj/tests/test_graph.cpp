#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wscm/fixtures.hpp"
#include "wscm/graph.hpp"
#include "wscm/graph_io.hpp"

using namespace wscm;

namespace {

VertexSet labels_to_set(const Graph& g, std::initializer_list<const char*> names) {
  VertexSet s;
  for (auto name : names)
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (g.label(v) == name) s.insert(v);
  return s;
}

}  // namespace

TEST(IndexSet, LexicographicOrder) {
  EXPECT_LT((IndexSet{0, 1, 3}), (IndexSet{0, 2}));
  EXPECT_LT((IndexSet{0, 1}), (IndexSet{0, 1, 2}));
  EXPECT_LT((IndexSet{}), (IndexSet{5}));
  EXPECT_GT((IndexSet{1, 2}), (IndexSet{0, 4}));
  EXPECT_EQ((IndexSet{2, 7}), (IndexSet{7, 2}));
}

TEST(IndexSet, LexOrderMatchesSortedVectors) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 2000; ++t) {
    IndexSet a(rng() & 0xFFF), b(rng() & 0xFFF);
    EXPECT_EQ(a < b, a.members() < b.members());
  }
}

TEST(InducedSubgraph, ConsecutiveCycleVertices) {
  const auto h = induced_subgraph(fixtures::cycle(5), IndexSet{0, 1, 2});
  EXPECT_EQ(h, fixtures::path(3));
}

TEST(InducedSubgraph, WholeVertexSetIsIdentity) {
  const auto g = fixtures::square_with_tail();
  EXPECT_EQ(induced_subgraph(g, g.vertices()), g);
}

TEST(InducedSubgraph, SquareInsideExample) {
  const auto g = fixtures::square_with_tail();
  EXPECT_EQ(induced_subgraph(g, IndexSet{0, 1, 2, 3}), fixtures::cycle(4));
}

TEST(InducedSubgraph, OutOfRangeIsInputError) {
  EXPECT_THROW(induced_subgraph(fixtures::cycle(4), IndexSet{0, 9}), InputError);
  EXPECT_THROW(delete_vertices(fixtures::cycle(4), IndexSet{4}), InputError);
}

TEST(DeleteVertices, CycleMinusVertexIsPath) {
  for (std::size_t n = 4; n <= 8; ++n) {
    auto h = delete_vertices(fixtures::cycle(n), IndexSet{n - 1});
    EXPECT_EQ(h, fixtures::path(n - 1));
  }
}

TEST(DeleteVertices, EmptySetIsIdentity) {
  const auto g = fixtures::square_with_two_triangles();
  EXPECT_EQ(delete_vertices(g, IndexSet{}), g);
}

TEST(DeleteVertices, PendantRemovalLeavesSquare) {
  const auto g = fixtures::square_with_pendant();
  const auto h = delete_vertices(g, fixtures::last_vertex(g));
  EXPECT_EQ(h.edges(), fixtures::cycle(4).edges());
}

TEST(AddWhiskers, SingleEdgeBothEnds) {
  const auto w = add_whiskers(fixtures::path(2), IndexSet{0, 1});
  ASSERT_EQ(w.graph.vertex_count(), 4U);
  EXPECT_EQ(w.graph.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}}));
  EXPECT_EQ(w.whiskers, (WhiskerMap{{0, 2}, {1, 3}}));
}

TEST(AddWhiskers, OneWhiskerOnFiveCycle) {
  const auto w = add_whiskers(fixtures::cycle(5), IndexSet{2});
  EXPECT_EQ(w.graph.vertex_count(), 6U);
  EXPECT_EQ(w.graph.edge_count(), 6U);
  EXPECT_EQ(w.graph.degree(5), 1U);
  EXPECT_TRUE(w.graph.adjacent(5, 2));
}

TEST(AddWhiskers, ExampleTailGetsVertexSeven) {
  const auto g = fixtures::square_with_tail();
  const auto w = add_whiskers(g, fixtures::last_vertex(g));
  EXPECT_EQ(w.graph.vertex_count(), 7U);
  EXPECT_EQ(w.graph.label(6), "x7");
  EXPECT_TRUE(w.graph.adjacent(5, 6));
  EXPECT_EQ(w.graph.degree(6), 1U);
}

TEST(AddWhiskers, DeletingTipsAndBasesRecoversRemainder) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto n = 1 + rng() % 8;
    const auto g = oracle::random_graph(rng, n, 0.4);
    const auto s = oracle::random_subset(rng, n);
    const auto w = add_whiskers(g, s);
    EXPECT_EQ(delete_vertices(w.graph, s | w.tips()), delete_vertices(g, s));
    for (auto pair : w.whiskers) {
      EXPECT_EQ(w.graph.neighbors(pair.tip), VertexSet{pair.base});
      EXPECT_TRUE(s.contains(pair.base));
    }
  }
}

TEST(Chordality, ForestsAreChordal) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const auto n = 1 + rng() % 12;
    Graph g(n);
    for (std::size_t v = 1; v < n; ++v)
      if (rng() % 4 != 0) g.add_edge(v, rng() % v);
    const auto r = is_chordal(g);
    ASSERT_TRUE(r.chordal);
    EXPECT_TRUE(is_perfect_elimination_order(g, r.elimination_order));
  }
}

TEST(Chordality, FourCycleWitness) {
  const auto r = is_chordal(fixtures::cycle(4));
  ASSERT_FALSE(r.chordal);
  EXPECT_EQ(r.chordless_cycle, (std::vector<Vertex>{0, 1, 2, 3}));
}

TEST(Chordality, FourCycleWithChord) {
  auto g = fixtures::cycle(4);
  g.add_edge(0, 2);
  EXPECT_TRUE(is_chordal(g).chordal);
}

TEST(Chordality, CertificatesSelfValidate) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 500; ++t) {
    const auto n = 1 + rng() % 10;
    const auto g = oracle::random_graph(rng, n, 0.2 + 0.2 * static_cast<double>(rng() % 3));
    const auto r = is_chordal(g);
    if (r.chordal) {
      EXPECT_TRUE(is_perfect_elimination_order(g, r.elimination_order));
    } else {
      EXPECT_TRUE(is_chordless_cycle(g, r.chordless_cycle));
    }
  }
}

TEST(Chordality, LongCyclesAreNot) {
  for (std::size_t n = 4; n <= 9; ++n) {
    const auto r = is_chordal(fixtures::cycle(n));
    ASSERT_FALSE(r.chordal);
    EXPECT_EQ(r.chordless_cycle.size(), n);
  }
  EXPECT_TRUE(is_chordal(fixtures::cycle(3)).chordal);
}

TEST(ClassifyRemainder, Cases) {
  EXPECT_EQ(classify_remainder(fixtures::cycle(5), IndexSet{}), RemainderClass::kFiveCycle);
  // S a vertex cover: nothing but isolated vertices remain.
  EXPECT_EQ(classify_remainder(fixtures::cycle(6), IndexSet{0, 2, 4}), RemainderClass::kChordal);
  EXPECT_EQ(classify_remainder(fixtures::cycle(6), IndexSet{}), RemainderClass::kOther);
  EXPECT_EQ(classify_remainder(fixtures::cycle(4), IndexSet{0, 1, 2, 3}), RemainderClass::kChordal);
}

TEST(ClassifyRemainder, FiveCycleWithIsolatedVertices) {
  // C5 on 0..4 plus vertices 5, 6 joined only to the whisker set {7}.
  auto g = Graph(8);
  for (std::size_t i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
  g.add_edge(5, 7);
  g.add_edge(6, 7);
  g.add_edge(0, 7);
  EXPECT_EQ(classify_remainder(g, IndexSet{7}), RemainderClass::kFiveCycle);
  EXPECT_EQ(classify_remainder(g, IndexSet{}), RemainderClass::kOther);
}

TEST(VertexCovers, FiveCycleTriples) {
  const auto covers = vertex_covers_of_size(fixtures::cycle(5), 3);
  const std::vector<IndexSet> expected{{0, 1, 3}, {0, 2, 3}, {0, 2, 4}, {1, 2, 4}, {1, 3, 4}};
  EXPECT_EQ(covers, expected);
}

TEST(VertexCovers, FiveCycleQuadruplesMatchBruteForce) {
  const auto g = fixtures::cycle(5);
  const auto covers = vertex_covers_of_size(g, 4);
  EXPECT_EQ(covers.size(), 5U);
  EXPECT_EQ(covers, oracle::covers_of_size(g, 4));
}

TEST(VertexCovers, BelowMinimumIsEmpty) {
  EXPECT_TRUE(vertex_covers_of_size(fixtures::cycle(5), 2).empty());
  EXPECT_TRUE(vertex_covers_of_size(fixtures::complete(5), 3).empty());
}

TEST(VertexCovers, MatchBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 300; ++t) {
    const auto n = rng() % 11;
    const auto g = oracle::random_graph(rng, n, 0.4);
    for (std::size_t d = 0; d <= n; ++d) ASSERT_EQ(vertex_covers_of_size(g, d), oracle::covers_of_size(g, d));
  }
}

TEST(VertexCovers, WhiskerDecomposition) {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 200; ++t) {
    const auto n = 1 + rng() % 6;
    auto s = oracle::random_subset(rng, n);
    if (s.empty()) s.insert(0);
    const auto w = add_whiskers(oracle::random_graph(rng, n, 0.5), s);
    const auto& g = w.graph;
    const auto x = w.whiskers.back().tip;
    const auto y = w.whiskers.back().base;
    const auto all = g.vertices();
    for (std::size_t d = 1; d <= g.vertex_count(); ++d) {
      std::vector<IndexSet> rebuilt;
      for (auto c : vertex_covers_of_size(g, all.without(x), d - 1)) rebuilt.push_back(c.with(x));
      for (auto c : vertex_covers_of_size(g, all - IndexSet{x, y}, d - 1)) rebuilt.push_back(c.with(y));
      std::sort(rebuilt.begin(), rebuilt.end());
      rebuilt.erase(std::unique(rebuilt.begin(), rebuilt.end()), rebuilt.end());
      EXPECT_EQ(rebuilt, vertex_covers_of_size(g, d));
    }
  }
}

TEST(VertexCovers, GeneralNeighbourhoodDecomposition) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 200; ++t) {
    const auto n = 1 + rng() % 8;
    const auto g = oracle::random_graph(rng, n, 0.4);
    const Vertex x = rng() % n;
    const auto nbrs = g.neighbors(x);
    for (std::size_t d = 0; d <= n; ++d)
      for (auto c : vertex_covers_of_size(g, d)) {
        const bool with_x = c.contains(x) && is_vertex_cover(g, c.without(x), g.vertices().without(x));
        const bool with_nbrs = nbrs.is_subset_of(c) &&
                               is_vertex_cover(g, c - nbrs, g.vertices() - nbrs.with(x));
        EXPECT_TRUE(with_x || with_nbrs);
      }
  }
}

TEST(MinimalCovers, SingleEdge) {
  EXPECT_EQ(minimal_vertex_covers(fixtures::path(2)), (std::vector<IndexSet>{{0}, {1}}));
}

TEST(MinimalCovers, FourCycle) {
  const auto g = fixtures::cycle(4);
  EXPECT_EQ(minimal_vertex_covers(g), (std::vector<IndexSet>{{0, 2}, {1, 3}}));
  EXPECT_EQ(minimal_vertex_covers(g), oracle::minimal_covers(g));
}

TEST(MinimalCovers, SquareWithPendantWhiskered) {
  const auto g = fixtures::square_with_pendant();
  const auto w = add_whiskers(g, fixtures::last_vertex(g), {"x"});
  const auto& h = w.graph;
  const std::vector<IndexSet> expected{labels_to_set(h, {"y1", "y3", "y"}), labels_to_set(h, {"y2", "y4", "y"}),
                                       labels_to_set(h, {"y1", "y3", "x"}),
                                       labels_to_set(h, {"y1", "y2", "y4", "x"})};
  auto got = minimal_vertex_covers(h);
  EXPECT_TRUE(std::is_sorted(got.begin(), got.end(), DegreeLexLess{}));
  auto want = expected;
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  EXPECT_EQ(got, want);
}

TEST(MinimalCovers, AntichainAndMatchBruteForce) {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 300; ++t) {
    const auto n = rng() % 11;
    const auto g = oracle::random_graph(rng, n, 0.2 + 0.2 * static_cast<double>(rng() % 3));
    const auto mins = minimal_vertex_covers(g);
    ASSERT_EQ(mins, oracle::minimal_covers(g));
    for (auto a : mins)
      for (auto b : mins)
        if (a != b) { EXPECT_FALSE(a.is_subset_of(b)); }
    for (auto c : mins) EXPECT_FALSE(c.intersects(g.isolated_vertices()));
    for (std::size_t d = 0; d <= n; ++d)
      for (auto c : vertex_covers_of_size(g, d))
        EXPECT_TRUE(std::any_of(mins.begin(), mins.end(), [&](IndexSet m) { return m.is_subset_of(c); }));
  }
}

TEST(Unmixed, Cases) {
  EXPECT_FALSE(is_unmixed(fixtures::path(3)));
  EXPECT_TRUE(is_unmixed(fixtures::cycle(4)));
  EXPECT_TRUE(is_unmixed(Graph(3)));
}

TEST(Unmixed, FullyWhiskeredGraphs) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    const auto n = 1 + rng() % 7;
    const auto g = oracle::random_graph(rng, n, 0.5);
    const auto w = add_whiskers(g, g.vertices());
    EXPECT_TRUE(is_unmixed(w.graph));
    for (auto c : minimal_vertex_covers(w.graph)) EXPECT_EQ(c.size(), n);
  }
}

TEST(GraphFormat, ParsesCommentsAndEdges) {
  const auto g = parse_graph("# five-cycle\n5 5\n1 2\n2 3\n# mid comment\n3 4\n4 5\n5 1\n");
  EXPECT_EQ(g, fixtures::cycle(5));
  EXPECT_EQ(parse_graph(format_graph(g)), g);
}

TEST(GraphFormat, RejectsBadInput) {
  EXPECT_THROW(parse_graph("3 1\n1 1\n"), InputError);
  EXPECT_THROW(parse_graph("3 2\n1 2\n2 1\n"), InputError);
  EXPECT_THROW(parse_graph("3 1\n1 4\n"), InputError);
  EXPECT_THROW(parse_graph("3 2\n1 2\n"), InputError);
  EXPECT_THROW(parse_graph("3 1\n1 2\n2 3\n"), InputError);
  EXPECT_THROW(parse_graph("3 1\n1 x\n"), InputError);
  EXPECT_THROW(parse_graph("3 1\n1 2 3\n"), InputError);
  EXPECT_THROW(parse_graph(""), InputError);
  EXPECT_THROW(parse_graph("65 0\n"), InputError);
}

TEST(GraphFormat, VertexLists) {
  EXPECT_EQ(parse_vertex_list("1,3", 4), (IndexSet{0, 2}));
  EXPECT_EQ(parse_vertex_list("", 4), IndexSet{});
  EXPECT_THROW(parse_vertex_list("0", 4), InputError);
  EXPECT_THROW(parse_vertex_list("5", 4), InputError);
  EXPECT_THROW(parse_vertex_list("1,,2", 4), InputError);
}
