#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "support.hpp"

using namespace arbnet;
using namespace arbnet::families;
using namespace testing_support;

TEST(Merge, TwoEdges) {
  const auto a = explain_dh(path(2), {"a", "b"});
  const auto b = explain_dh(path(2), {"c", "d"});
  const auto m = merge_disjoint(a, b);
  EXPECT_EQ(m.network().roots().size(), 1u);
  EXPECT_EQ(explained_graph(m), disjoint_union(path(2), path(2)));
  // The clashing v0 of the second network was renamed.
  EXPECT_TRUE(m.network().find("v0_1"));
  EXPECT_EQ(m.label("top"), 0);
}

TEST(Merge, BareLeaf) {
  const auto m = merge_disjoint(explain_dh(path(2)), std::string("z"));
  EXPECT_EQ(m.network().roots().size(), 1u);
  EXPECT_EQ(explained_graph(m), disjoint_union(path(2), UndirectedGraph(1)));
  EXPECT_THROW(merge_disjoint(explain_dh(path(2)), std::string("0")), PreconditionError);
}

TEST(Merge, RootCounts) {
  const auto p4 = p4_network();
  const auto k2 = explain_dh(path(2), {"x", "y"});
  EXPECT_EQ(merge_disjoint(p4, k2).network().roots().size(), 3u);
  EXPECT_EQ(merge_disjoint(k2, p4).network().roots().size(), 3u);
  EXPECT_THROW(merge_disjoint(p4, p4), PreconditionError);
}

TEST(Restrict, UndoesMerge) {
  const auto p4 = p4_network();
  const auto k3 = explain_dh(complete(3), {"x", "y", "z"});
  const auto m = merge_disjoint(p4, k3);
  EXPECT_EQ(explained_graph(restrict_to(m, {0, 1, 2, 3})), path(4));
  EXPECT_EQ(explained_graph(restrict_to(m, {4, 5, 6})), complete(3));
}

TEST(Restrict, EverythingKeepsTheNetwork) {
  const auto ln = p4_network();
  EXPECT_EQ(restrict_to(ln, {0, 1, 2, 3}), ln);
}

TEST(Restrict, Preconditions) {
  const auto ln = p4_network();
  EXPECT_THROW(restrict_to(ln, {0, 1}), PreconditionError);
  EXPECT_THROW(restrict_to(ln, {0}), PreconditionError);
  EXPECT_THROW(restrict_to(ln, {0, 9}), PreconditionError);
}

TEST(RemoveLeaf, DropsTheEndOfP4) {
  const auto r = remove_leaf(p4_network(), 3);
  EXPECT_EQ(explained_graph(r), path(3));
  EXPECT_TRUE(root_hybrid_equality(r.network()));
  EXPECT_FALSE(r.network().find("d"));
}

TEST(RemoveLeaf, Preconditions) {
  // Leaf c hangs below v2, which has outdegree 1.
  EXPECT_THROW(remove_leaf(p4_network(), 2), PreconditionError);
  EXPECT_THROW(remove_leaf(explain_dh(path(2)), 0), PreconditionError);
  EXPECT_THROW(remove_leaf(p4_network(), 7), PreconditionError);
}

TEST(RemoveLeaf, ExplainsTheInducedSubgraph) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    const auto ln = oracle::random_labelling(oracle::random_arboreal_network(3 + i % 6, rng), rng);
    const auto& net = ln.network();
    for (Vertex x = 0; x < net.leaf_count(); ++x) {
      if (net.outdegree(net.parents(net.leaf(x)).front()) < 2) continue;
      const auto r = remove_leaf(ln, x);
      std::vector<Vertex> rest;
      for (Vertex y = 0; y < net.leaf_count(); ++y)
        if (y != x) rest.push_back(y);
      EXPECT_EQ(explained_graph(r), induced_subgraph(explained_graph(ln), rest).graph);
      EXPECT_TRUE(root_hybrid_equality(r.network()));
    }
  }
}

TEST(LeafMap, Renumbering) {
  const auto ln = with_leaf_map(p4_network(), {{"a", 3}, {"b", 2}, {"c", 1}, {"d", 0}});
  EXPECT_EQ(explained_graph(ln), path(4));  // the path reversed is the same path
  EXPECT_THROW(with_leaf_map(p4_network(), {{"a", 0}}), InvalidNetwork);
}
