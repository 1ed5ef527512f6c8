#include "cuntz/cuntz.hpp"

#include <gtest/gtest.h>

using namespace cuntz;

TEST(Divisibility, OrderAndJoin) {
  EXPECT_TRUE(leq(3, 12));
  EXPECT_FALSE(leq(12, 3));
  EXPECT_TRUE(leq(7, 7));
  EXPECT_EQ(join(4, 6), 12u);
  EXPECT_THROW(leq(0, 3), Error);
  EXPECT_TRUE(leq(ExtendedNatural{5}, ExtendedNatural::top()));
  EXPECT_FALSE(leq(ExtendedNatural::top(), ExtendedNatural{5}));
}

TEST(Divisibility, Chains) {
  Chain c({1, 2, 2, 6, 12});
  EXPECT_EQ(c.top(), 12u);
  EXPECT_THROW(Chain({2, 3}), Error);
  EXPECT_THROW(Chain({}), Error);
  std::vector<Natural> enumeration{2, 3, 4, 5, 6};
  EXPECT_EQ(cofinal_chain(enumeration, 5).elements(), (std::vector<Natural>{2, 6, 12, 60, 60}));
  EXPECT_EQ(cofinal_chain(enumeration, 2).elements(), (std::vector<Natural>{2, 6}));
}

TEST(Divisibility, OrderHomomorphism) {
  std::vector<Natural> sample{1, 2, 3, 4, 6, 12};
  auto rank = [](Natural n) { return n; };
  EXPECT_TRUE(check_order_hom<Natural>(sample, rank, [](Natural a, Natural b) { return leq(a, b); }));
  auto bad = find_order_violation<Natural>(sample, [](Natural n) { return n == 4 ? Natural{5} : n; },
                                           [](Natural a, Natural b) { return leq(a, b); });
  ASSERT_TRUE(bad);
  EXPECT_EQ(*bad, std::make_pair(Natural{2}, Natural{4}));
}

TEST(Graphs, EmbeddabilityUpToEight) {
  const Digraph g = embeddability_graph(8);
  const std::vector<std::pair<Natural, Natural>> expected{{3, 2}, {4, 2}, {5, 3}, {6, 2},
                                                          {7, 3}, {7, 4}, {8, 2}};
  EXPECT_EQ(g.edges, expected);
  const Digraph rev = relabel_reverse(g, -1);
  EXPECT_EQ(rev, divisibility_graph(7));
  const std::vector<std::pair<Natural, Natural>> hasse{{1, 2}, {1, 3}, {1, 5}, {1, 7}, {2, 4}, {2, 6}, {3, 6}};
  EXPECT_EQ(rev.edges, hasse);
}

TEST(Graphs, FullRelation) {
  const Digraph g = embeddability_graph(5, false);
  // O5 -> O3 and O5 -> O2 both exist; the full relation keeps the transitive edge
  EXPECT_NE(std::find(g.edges.begin(), g.edges.end(), std::make_pair(Natural{5}, Natural{2})), g.edges.end());
  const Digraph cover = embeddability_graph(5);
  EXPECT_EQ(std::find(cover.edges.begin(), cover.edges.end(), std::make_pair(Natural{5}, Natural{2})),
            cover.edges.end());
}

TEST(Graphs, Dot) {
  Digraph g{{1, 2}, {{1, 2}}};
  EXPECT_EQ(to_dot(g, "d", "O"), "digraph d {\n  \"O1\";\n  \"O2\";\n  \"O1\" -> \"O2\";\n}\n");
}
