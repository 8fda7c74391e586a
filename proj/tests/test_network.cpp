#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support.hpp"

using namespace arbnet;
using namespace arbnet::families;
using namespace testing_support;

TEST(Validate, SmallestTree) {
  const auto net = network({"v0", "a", "b"}, {{"v0", "a"}, {"v0", "b"}});
  EXPECT_EQ(net.roots(), std::vector<Vertex>{net.at("v0")});
  EXPECT_EQ(net.leaves(), (std::vector<Vertex>{net.at("a"), net.at("b")}));
  EXPECT_EQ(*net.taxon(net.at("b")), 1u);
}

static bool rejects(const NetworkSpec& s, ViolationKind k) {
  try {
    validate_network(s);
  } catch (const InvalidNetwork& e) {
    return e.has(k);
  }
  return false;
}

TEST(Validate, Violations) {
  using V = ViolationKind;
  EXPECT_TRUE(rejects({{"a", "b"}, {{"a", "b"}, {"b", "a"}}, {}}, V::DirectedCycle));
  EXPECT_TRUE(rejects({{"v0", "a"}, {{"v0", "a"}}, {}}, V::RootOutdegree));
  EXPECT_TRUE(rejects({{}, {}, {}}, V::Empty));
  EXPECT_TRUE(rejects({{"a", "a"}, {}, {}}, V::DuplicateVertex));
  EXPECT_TRUE(rejects({{"r", "a"}, {{"r", "a"}, {"r", "z"}}, {}}, V::UnknownVertex));
  EXPECT_TRUE(rejects({{"r", "a", "b"}, {{"r", "a"}, {"r", "a"}, {"r", "b"}}, {}}, V::DuplicateArc));
  EXPECT_TRUE(rejects({{"r", "a", "b"}, {{"r", "r"}, {"r", "a"}, {"r", "b"}}, {}}, V::SelfLoop));
  EXPECT_TRUE(rejects({{"r", "a", "b", "s", "c", "d"}, {{"r", "a"}, {"r", "b"}, {"s", "c"}, {"s", "d"}}, {}},
                      V::Disconnected));
  EXPECT_TRUE(rejects({{"r", "w", "a", "b"}, {{"r", "w"}, {"r", "b"}, {"w", "a"}}, {}}, V::Subdivision));
  EXPECT_TRUE(rejects({{"r", "s", "a", "b", "c"}, {{"r", "a"}, {"r", "b"}, {"s", "a"}, {"s", "c"}}, {}},
                      V::LeafIndegree));
  EXPECT_TRUE(rejects({{"r", "a", "b"}, {{"r", "a"}, {"r", "b"}}, {{"a", 0}, {"b", 0}}}, V::LeafMapping));
  EXPECT_TRUE(rejects({{"r", "a", "b"}, {{"r", "a"}, {"r", "b"}}, {{"a", 0}}}, V::LeafMapping));
}

TEST(Validate, InvalidNetworkListsEveryProblem) {
  try {
    validate_network({{"r", "w", "a", "x", "y"}, {{"r", "w"}, {"r", "a"}, {"w", "x"}, {"y", "a"}}, {}});
    FAIL();
  } catch (const InvalidNetwork& e) {
    EXPECT_GE(e.violations().size(), 2u);
    EXPECT_TRUE(e.has(ViolationKind::Subdivision));
    EXPECT_TRUE(e.has(ViolationKind::RootOutdegree));
  }
}

TEST(Arboreal, P4Network) {
  const auto net = p4_network().network();
  EXPECT_TRUE(is_arboreal(net));
  EXPECT_EQ(net.roots().size(), 3u);
  EXPECT_EQ(hybrid_excess(net), 2u);
  EXPECT_TRUE(root_hybrid_equality(net));
  EXPECT_TRUE(is_binary(net));
}

TEST(Arboreal, TreesHaveNoHybrids) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const auto net = oracle::random_arboreal_network(2 + i % 8, rng, 1);
    EXPECT_TRUE(is_arboreal(net));
    EXPECT_TRUE(net.hybrids().empty());
  }
}

// Three roots, each pair sharing one hybrid: the underlying graph has a 6-cycle.
static DirectedNetwork triangle_of_hybrids() {
  return network({"r1", "r2", "r3", "h1", "h2", "h3", "a", "b", "c"},
                 {{"r1", "h1"}, {"r2", "h1"}, {"r2", "h2"}, {"r3", "h2"}, {"r3", "h3"}, {"r1", "h3"},
                  {"h1", "a"}, {"h2", "b"}, {"h3", "c"}});
}

TEST(Arboreal, CycleInUnderlyingGraph) {
  const auto net = triangle_of_hybrids();
  EXPECT_FALSE(is_arboreal(net));
  EXPECT_FALSE(root_hybrid_equality(net));
  EXPECT_EQ(hybrid_excess(net), 3u);
}

TEST(Arboreal, UniquePathsDoNotImplyArboreal) {
  const auto net = triangle_of_hybrids();
  EXPECT_TRUE(has_unique_paths(net));
  EXPECT_FALSE(is_arboreal(net));
}

TEST(Arboreal, ArborealImpliesUniquePaths) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) EXPECT_TRUE(has_unique_paths(oracle::random_arboreal_network(2 + i % 9, rng)));
  const auto diamond = network({"r", "x", "y", "h", "a", "b", "c"},
                               {{"r", "x"}, {"r", "y"}, {"x", "h"}, {"y", "h"}, {"x", "a"}, {"y", "b"}, {"h", "c"}});
  EXPECT_FALSE(has_unique_paths(diamond));
}

TEST(Descendants, Examples) {
  const auto ln = p4_network();
  const auto& net = ln.network();
  EXPECT_EQ(leaf_descendants(net, net.at("a")), std::vector<Vertex>{net.at("a")});
  const auto tree = network({"r", "x", "a", "b", "c"}, {{"r", "x"}, {"r", "c"}, {"x", "a"}, {"x", "b"}});
  EXPECT_EQ(leaf_taxa_below(tree, tree.at("r")), (std::vector<Vertex>{0, 1, 2}));
  // v0 and u1 share the descendant v1, yet the leaf sets of the incomparable
  // vertices a and v2 below them are disjoint.
  const auto la = leaf_taxa_below(net, net.at("a")), lv2 = leaf_taxa_below(net, net.at("v2"));
  for (Vertex x : la) EXPECT_EQ(std::count(lv2.begin(), lv2.end(), x), 0);
  EXPECT_EQ(leaf_taxa_below(net, net.at("u1")), (std::vector<Vertex>{1, 2}));
}

// Least common ancestors from explicit ancestor sets.
static std::optional<Vertex> lca_by_ancestor_sets(const DirectedNetwork& net, Vertex x, Vertex y) {
  auto ancestors = [&](Vertex v) {
    std::set<Vertex> seen{v};
    std::vector<Vertex> stack{v};
    while (!stack.empty()) {
      Vertex w = stack.back();
      stack.pop_back();
      for (Vertex p : net.parents(w))
        if (seen.insert(p).second) stack.push_back(p);
    }
    return seen;
  };
  const auto ax = ancestors(x), ay = ancestors(y);
  std::vector<Vertex> common;
  for (Vertex v : ax)
    if (ay.count(v)) common.push_back(v);
  std::vector<Vertex> minimal;
  for (Vertex u : common) {
    bool lowest = true;
    for (Vertex w : common)
      if (w != u && ancestors(w).count(u)) lowest = false;
    if (lowest) minimal.push_back(u);
  }
  if (minimal.empty()) return std::nullopt;
  EXPECT_EQ(minimal.size(), 1u);
  return minimal.front();
}

TEST(Lca, P4Network) {
  const auto net = p4_network().network();
  auto leaf = [&](const char* n) { return net.at(n); };
  EXPECT_EQ(lca(net, leaf("a"), leaf("b")), net.at("v0"));
  EXPECT_EQ(lca(net, leaf("b"), leaf("c")), net.at("u1"));
  EXPECT_EQ(lca(net, leaf("c"), leaf("d")), net.at("u2"));
  EXPECT_EQ(lca(net, leaf("a"), leaf("d")), std::nullopt);
  for (Vertex x : net.leaves())
    for (Vertex y : net.leaves())
      if (x != y) {
        EXPECT_EQ(lca(net, x, y), lca_by_ancestor_sets(net, x, y));
      }
}

TEST(Lca, Cherry) {
  const auto net = network({"r", "p", "a", "b", "c"}, {{"r", "p"}, {"r", "c"}, {"p", "a"}, {"p", "b"}});
  EXPECT_EQ(lca(net, net.at("a"), net.at("b")), net.at("p"));
}

TEST(Lca, MatchesAncestorSetsOnRandomNetworks) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 150; ++i) {
    const auto net = oracle::random_arboreal_network(2 + i % 8, rng);
    for (Vertex x : net.leaves())
      for (Vertex y : net.leaves())
        if (x != y) {
          ASSERT_EQ(lca(net, x, y), lca_by_ancestor_sets(net, x, y));
        }
  }
}

TEST(Lca, Preconditions) {
  const auto net = p4_network().network();
  EXPECT_THROW(lca(net, net.at("a"), net.at("a")), PreconditionError);
  EXPECT_THROW(lca(net, net.at("v0"), net.at("a")), PreconditionError);
}

TEST(SharedAncestry, Examples) {
  EXPECT_EQ(shared_ancestry_graph(p4_network().network()), path(4));
  const auto tree = network({"r", "x", "a", "b", "c"}, {{"r", "x"}, {"r", "c"}, {"x", "a"}, {"x", "b"}});
  EXPECT_EQ(shared_ancestry_graph(tree), complete(3));
  // Two roots: a and b never share an ancestor.
  const auto a = shared_ancestry_graph(two_root_example().network());
  EXPECT_FALSE(a.adjacent(0, 1));
  EXPECT_NE(a, complete(3));
}

TEST(Explained, Examples) {
  EXPECT_EQ(explained_graph(p4_network()), path(4));
  const auto cherry = network({"v0", "a", "b"}, {{"v0", "a"}, {"v0", "b"}});
  EXPECT_EQ(explained_graph(LabelledNetwork(cherry, {{"v0", 0}})), edgeless(2));
  EXPECT_EQ(explained_graph(LabelledNetwork(cherry, {{"v0", 1}})), path(2));
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    const auto ln = oracle::random_labelling(oracle::random_arboreal_network(2 + i % 8, rng), rng);
    EXPECT_EQ(explained_graph(with_uniform_labels(ln, 1)), shared_ancestry_graph(ln.network()));
    EXPECT_EQ(LcaTable(ln.network()).explained(std::vector<int>(ln.network().size(), 1)),
              shared_ancestry_graph(ln.network()));
  }
}

TEST(Explained, SpecExampleOnTwoRoots) {
  const auto c = explained_graph(two_root_example(1, 0));
  EXPECT_EQ(c.edges(), (std::vector<Edge>{{0, 2}}));
}

TEST(Labels, DomainIsExactlyTheBranchingVertices) {
  const auto cherry = network({"v0", "a", "b"}, {{"v0", "a"}, {"v0", "b"}});
  EXPECT_THROW(LabelledNetwork(cherry, {}), PreconditionError);
  EXPECT_THROW(LabelledNetwork(cherry, {{"v0", 1}, {"a", 1}}), PreconditionError);
  EXPECT_THROW(LabelledNetwork(cherry, {{"v0", 2}}), PreconditionError);
  EXPECT_THROW(LabelledNetwork(cherry, {{"v0", 1}, {"zz", 0}}), PreconditionError);
  const auto ln = p4_network();
  EXPECT_THROW(ln.label("v1"), PreconditionError);
  EXPECT_THROW(LabelledArborealNetwork(triangle_of_hybrids(), {{"r1", 1}, {"r2", 1}, {"r3", 1}}),
               PreconditionError);
}

TEST(Verify, Examples) {
  const auto ln = explain_dh(path(4));
  EXPECT_TRUE(verify_explains(ln, path(4)));
  EXPECT_FALSE(verify_explains(ln, cycle(4)));
  EXPECT_TRUE(verify_explains(with_uniform_labels(ln, 1), shared_ancestry_graph(ln.network())));
  EXPECT_THROW(verify_explains(ln, path(3)), PreconditionError);
}

TEST(Subdivide, SuppressUndoesIt) {
  const auto net = p4_network().network();
  std::string w;
  const auto spec = subdivide(net, net.at("v0"), net.at("a"), &w);
  EXPECT_EQ(spec.vertices.back(), w);
  EXPECT_FALSE(network_violations(spec).empty());
  int in = 0, out = 0;
  for (const auto& [p, c] : spec.arcs) in += c == w, out += p == w;
  EXPECT_EQ(in, 1);
  EXPECT_EQ(out, 1);
  EXPECT_EQ(validate_network(suppress(spec, w)), net);
  EXPECT_THROW(suppress(net, net.at("v0")), PreconditionError);
  EXPECT_THROW(subdivide(net, net.at("a"), net.at("v0")), PreconditionError);
}

TEST(Binary, Examples) {
  EXPECT_TRUE(is_binary(p4_network().network()));
  const auto star = network({"r", "a", "b", "c"}, {{"r", "a"}, {"r", "b"}, {"r", "c"}});
  EXPECT_FALSE(is_binary(star));
}

TEST(Connectivity, Examples) {
  EXPECT_TRUE(connectivity_check(p4_network()));
  EXPECT_TRUE(all_roots_labelled_one(p4_network()));
  auto net = p4_network().network();
  for (const char* root : {"v0", "u1", "u2"}) {
    std::map<std::string, int> labels{{"v0", 1}, {"u1", 1}, {"u2", 1}};
    labels[root] = 0;
    EXPECT_FALSE(connectivity_check(LabelledNetwork(net, labels))) << root;
  }
  const auto cherry = network({"v0", "a", "b"}, {{"v0", "a"}, {"v0", "b"}});
  EXPECT_TRUE(connectivity_check(LabelledNetwork(cherry, {{"v0", 1}})));
}
