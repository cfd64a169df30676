#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wscm/fixtures.hpp"
#include "wscm/monomial.hpp"

using namespace wscm;
using oracle::mono;

TEST(EdgeIdeal, FourCycle) {
  const auto i = edge_ideal(fixtures::cycle(4));
  EXPECT_EQ(i.ambient(), 4U);
  EXPECT_EQ(i.generators(), (std::vector<IndexSet>{mono({1, 2}), mono({1, 4}), mono({2, 3}), mono({3, 4})}));
}

TEST(EdgeIdeal, SquareWithTail) {
  const auto i = edge_ideal(fixtures::square_with_tail());
  const MonomialIdeal expected(6, {mono({1, 2}), mono({2, 3}), mono({3, 4}), mono({1, 4}), mono({3, 5}),
                                   mono({4, 5}), mono({5, 6})});
  EXPECT_EQ(i, expected);
  EXPECT_EQ(i.size(), 7U);
}

TEST(EdgeIdeal, EdgelessIsZero) {
  const auto i = edge_ideal(Graph(4));
  EXPECT_TRUE(i.is_zero());
  EXPECT_EQ(i.ambient(), 4U);
}

TEST(MonomialIdeal, CanonicalOrderAndConventions) {
  const MonomialIdeal i(5, {mono({3, 4}), mono({1, 2, 5}), mono({1, 5}), mono({3, 4})});
  EXPECT_EQ(i.generators(), (std::vector<IndexSet>{mono({1, 5}), mono({3, 4})}));
  EXPECT_TRUE(MonomialIdeal::unit(3).is_unit());
  EXPECT_TRUE(MonomialIdeal::unit(3).contains(IndexSet{}));
  EXPECT_FALSE(MonomialIdeal::zero(3).contains(IndexSet{0, 1, 2}));
  EXPECT_THROW(MonomialIdeal(2, {mono({3})}), InputError);
}

TEST(DualOfEdgeIdeal, FiveCycle) {
  const auto dual = alexander_dual_of_edge_ideal(fixtures::cycle(5));
  EXPECT_EQ(dual.generators(), (std::vector<IndexSet>{mono({1, 2, 4}), mono({1, 3, 4}), mono({1, 3, 5}),
                                                      mono({2, 3, 5}), mono({2, 4, 5})}));
}

TEST(DualOfEdgeIdeal, SquareWithTailRemainder) {
  const auto g = fixtures::square_with_tail();
  const auto h = delete_vertices(g, fixtures::last_vertex(g));
  const MonomialIdeal expected(5, {mono({1, 3, 4}), mono({2, 3, 4}), mono({1, 3, 5}), mono({2, 4, 5})});
  EXPECT_EQ(alexander_dual_of_edge_ideal(h), expected);
}

TEST(DualOfEdgeIdeal, TwoTrianglesWhiskered) {
  const auto g = fixtures::square_with_two_triangles();
  const auto w = add_whiskers(g, fixtures::last_vertex(g));
  const MonomialIdeal expected(7, {mono({1, 3, 4, 6}), mono({2, 3, 4, 6}), mono({1, 3, 5, 6}), mono({2, 4, 5, 6}),
                                   mono({2, 3, 4, 7}), mono({1, 2, 3, 5, 7})});
  EXPECT_EQ(alexander_dual_of_edge_ideal(w.graph), expected);
}

TEST(AlexanderDual, InvolutionOnGraphDuals) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 300; ++t) {
    const auto n = rng() % 9;
    const auto g = oracle::random_graph(rng, n, 0.2 + 0.2 * static_cast<double>(rng() % 3));
    const auto dual = alexander_dual(edge_ideal(g));
    EXPECT_EQ(dual, MonomialIdeal(n, oracle::minimal_covers(g)));
    EXPECT_EQ(dual, alexander_dual_of_edge_ideal(g));
    if (g.edge_count() > 0) { EXPECT_EQ(alexander_dual(dual), edge_ideal(g)); }
  }
}

TEST(AlexanderDual, ZeroAndUnitSwap) {
  EXPECT_TRUE(alexander_dual(MonomialIdeal::zero(3)).is_unit());
  EXPECT_TRUE(alexander_dual(MonomialIdeal::unit(3)).is_zero());
}

TEST(DegreeComponent, PendantExampleDegreeThree) {
  const auto g = fixtures::square_with_pendant();
  const auto w = add_whiskers(g, fixtures::last_vertex(g), {"x"});
  // y1..y4 = 0..3, y = 4, x = 5
  const auto comp = squarefree_degree_component(alexander_dual_of_edge_ideal(w.graph), 3);
  const MonomialIdeal expected(6, {IndexSet{0, 2, 4}, IndexSet{1, 3, 4}, IndexSet{0, 2, 5}});
  EXPECT_EQ(comp, expected);
}

TEST(DegreeComponent, BelowLeastDegreeIsZero) {
  const auto dual = alexander_dual_of_edge_ideal(fixtures::cycle(5));
  EXPECT_TRUE(squarefree_degree_component(dual, 2).is_zero());
  EXPECT_EQ(squarefree_degree_component(dual, 3), dual);
  EXPECT_EQ(squarefree_degree_component(dual, 5).generators(), (std::vector<IndexSet>{IndexSet::range(5)}));
}

TEST(DegreeComponent, MatchesCoversOfSize) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 200; ++t) {
    const auto n = rng() % 11;
    const auto g = oracle::random_graph(rng, n, 0.4);
    const auto dual = alexander_dual_of_edge_ideal(g);
    for (std::size_t d = 0; d <= n; ++d) {
      const auto comp = squarefree_degree_component(dual, d);
      auto brute = oracle::covers_of_size(g, d);
      std::sort(brute.begin(), brute.end(), DegreeLexLess{});
      ASSERT_EQ(comp.generators(), brute);
      EXPECT_EQ(comp, dual_component(g, g.vertices(), d));
    }
  }
}

TEST(DegreeComponent, Monotone) {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 100; ++t) {
    const auto n = 1 + rng() % 8;
    const MonomialIdeal ideal(n, {oracle::random_subset(rng, n), oracle::random_subset(rng, n)});
    for (std::size_t d = 0; d < n; ++d) {
      const auto lower = squarefree_degree_component(ideal, d);
      const auto upper = squarefree_degree_component(ideal, d + 1);
      for (auto g : lower.generators())
        for (std::size_t v = 0; v < n; ++v)
          if (!g.contains(v)) { EXPECT_TRUE(upper.contains(g.with(v))); }
    }
  }
}

TEST(Colon, GcdExamples) {
  const MonomialIdeal a(5, {mono({1, 2, 4})});
  EXPECT_EQ(colon_by_monomial(a, mono({1, 3, 4})).generators(), (std::vector<IndexSet>{mono({2})}));
  const MonomialIdeal b(5, {mono({1, 2, 4}), mono({1, 3, 4}), mono({1, 3, 5}), mono({2, 3, 5})});
  EXPECT_EQ(colon_by_monomial(b, mono({2, 4, 5})).generators(), (std::vector<IndexSet>{mono({1}), mono({3})}));
}

TEST(Colon, MemberGivesUnit) {
  const MonomialIdeal i(4, {mono({1, 2}), mono({3})});
  EXPECT_TRUE(colon_by_monomial(i, mono({1, 2, 4})).is_unit());
  EXPECT_TRUE(colon_by_monomial(i, mono({3})).is_unit());
}

TEST(Colon, ContainsImageAndIsMinimal) {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 200; ++t) {
    const auto n = 1 + rng() % 8;
    std::vector<IndexSet> gens;
    for (int k = 0; k < 4; ++k) gens.push_back(oracle::random_subset(rng, n));
    const MonomialIdeal ideal(n, gens);
    const auto u = oracle::random_subset(rng, n);
    const auto colon = colon_by_monomial(ideal, u);
    for (auto g : ideal.generators()) EXPECT_TRUE(colon.contains(g));
    for (auto g : ideal.generators()) EXPECT_TRUE(colon.contains(g - u));
    for (auto p : colon.generators())
      for (auto q : colon.generators())
        if (p != q) { EXPECT_FALSE(p.is_subset_of(q)); }
  }
}

TEST(Minimalize, Examples) {
  EXPECT_EQ(minimalize(2, {mono({1}), mono({1, 2})}).generators(), (std::vector<IndexSet>{mono({1})}));
  EXPECT_EQ(minimalize(4, {mono({2, 4}), mono({4})}).generators(), (std::vector<IndexSet>{mono({4})}));
  const std::vector<IndexSet> antichain{mono({1, 2}), mono({1, 3}), mono({2, 3})};
  EXPECT_EQ(minimalize(3, antichain).generators(), antichain);
}
