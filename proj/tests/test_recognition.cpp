#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"

using namespace arbnet;
using namespace arbnet::families;
using namespace testing_support;

// Four vertices induce a P4 iff they span three edges with degrees 1,1,2,2.
static bool has_p4_by_subsets(const UndirectedGraph& g) {
  const std::size_t n = g.size();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        for (Vertex d = c + 1; d < n; ++d) {
          const Vertex q[] = {a, b, c, d};
          std::vector<int> deg(4, 0);
          int edges = 0;
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
              if (g.adjacent(q[i], q[j])) ++deg[i], ++deg[j], ++edges;
          std::sort(deg.begin(), deg.end());
          if (edges == 3 && deg == std::vector<int>{1, 1, 2, 2}) return true;
        }
  return false;
}

// Chordal iff repeatedly deleting simplicial vertices empties the graph.
static bool chordal_by_elimination(const UndirectedGraph& g) {
  std::vector<char> alive(g.size(), 1);
  for (std::size_t left = g.size(); left > 0; --left) {
    bool removed = false;
    for (Vertex v = 0; v < g.size() && !removed; ++v) {
      if (!alive[v]) continue;
      std::vector<Vertex> nb;
      for (Vertex w : g.neighbors(v))
        if (alive[w]) nb.push_back(w);
      bool clique = true;
      for (std::size_t i = 0; i < nb.size() && clique; ++i)
        for (std::size_t j = i + 1; j < nb.size() && clique; ++j) clique = g.adjacent(nb[i], nb[j]);
      if (clique) alive[v] = 0, removed = true;
    }
    if (!removed) return false;
  }
  return true;
}

TEST(Cograph, P4IsNotACograph) {
  const auto w = find_induced_p4(path(4));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->kind, ForbiddenKind::P4);
  EXPECT_EQ(w->vertices.size(), 4u);
  EXPECT_TRUE(witness_replays(path(4), *w));
  EXPECT_FALSE(is_cograph(path(4)));
}

TEST(Cograph, SmallCases) {
  EXPECT_TRUE(is_cograph(UndirectedGraph(1)));
  EXPECT_TRUE(is_cograph(cycle(4)));
  EXPECT_TRUE(is_cograph(UndirectedGraph()));
}

TEST(Cograph, AgreesWithSubsetOracle) {
  for_each_graph(0, 6, [](const UndirectedGraph& g) {
    const auto w = find_induced_p4(g);
    ASSERT_EQ(w.has_value(), has_p4_by_subsets(g)) << io::serialize_graph6(g);
    if (w) {
      EXPECT_TRUE(witness_replays(g, *w));
    }
  });
}

TEST(Chordal, C4) {
  EXPECT_FALSE(is_chordal(cycle(4)));
  EXPECT_TRUE(is_hole_free(cycle(4)));
}

TEST(Chordal, C5HasAHole) {
  const auto w = find_induced_cycle(cycle(5), 5);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->kind, ForbiddenKind::Hole);
  EXPECT_FALSE(is_hole_free(cycle(5)));
}

TEST(Chordal, TreesAreChordal) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 2 + i % 10;
    UndirectedGraph t(n);
    for (Vertex v = 1; v < n; ++v) t.add_edge(v, std::uniform_int_distribution<Vertex>(0, v - 1)(rng));
    EXPECT_TRUE(is_chordal(t));
  }
}

TEST(Chordal, AgreesWithSimplicialElimination) {
  for_each_graph(0, 6, [](const UndirectedGraph& g) {
    const auto w = find_induced_cycle(g, 4);
    ASSERT_EQ(!w, chordal_by_elimination(g)) << io::serialize_graph6(g);
    if (w) {
      EXPECT_TRUE(witness_replays(g, *w));
    }
  });
}

TEST(Forbidden, Templates) {
  auto gw = find_house_gem_domino(gem());
  ASSERT_TRUE(gw);
  EXPECT_EQ(gw->kind, ForbiddenKind::Gem);
  EXPECT_TRUE(witness_replays(gem(), *gw));
  auto hw = find_house_gem_domino(house());
  ASSERT_TRUE(hw);
  EXPECT_EQ(hw->kind, ForbiddenKind::House);
  auto dw = find_house_gem_domino(domino());
  ASSERT_TRUE(dw);
  EXPECT_EQ(dw->kind, ForbiddenKind::Domino);
}

TEST(Forbidden, NothingOnFourVertices) {
  for_each_graph(0, 4, [](const UndirectedGraph& g) {
    EXPECT_FALSE(find_house_gem_domino(g));
    EXPECT_TRUE(is_distance_hereditary(g));
  });
}

TEST(DistanceHereditary, Examples) {
  const auto w = find_dh_obstruction(cycle(5));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->kind, ForbiddenKind::Hole);
  EXPECT_TRUE(is_distance_hereditary(cycle(4)));
  EXPECT_FALSE(is_distance_hereditary(domino()));
  EXPECT_FALSE(is_distance_hereditary(house()));
  EXPECT_FALSE(is_distance_hereditary(gem()));
}

// Straight from the definition: connected induced subgraphs keep all distances.
static bool dh_by_definition(const UndirectedGraph& g) {
  const auto d = distance_matrix(g);
  const std::size_t n = g.size();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v)
      if (mask >> v & 1) s.push_back(v);
    const auto sub = induced_subgraph(g, s);
    if (!is_connected(sub.graph)) continue;
    const auto ds = distance_matrix(sub.graph);
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (ds.at(i, j) != d.at(s[i], s[j])) return false;
  }
  return true;
}

TEST(DistanceHereditary, AgreesWithDefinition) {
  for_each_graph(0, 6, [](const UndirectedGraph& g) {
    ASSERT_EQ(is_distance_hereditary(g), dh_by_definition(g)) << io::serialize_graph6(g);
  });
}

TEST(Ptolemaic, Examples) {
  EXPECT_TRUE(is_ptolemaic(complete(3)));
  EXPECT_TRUE(satisfies_ptolemy_inequality(complete(3)));
  EXPECT_FALSE(is_ptolemaic(cycle(4)));
  EXPECT_FALSE(satisfies_ptolemy_inequality(cycle(4)));
  EXPECT_TRUE(is_ptolemaic(path(4)));
  EXPECT_TRUE(satisfies_ptolemy_inequality(path(4)));
  EXPECT_FALSE(is_ptolemaic(gem()));
}

TEST(Ptolemaic, C4ViolationIsTheSquare) {
  const auto q = find_ptolemy_violation(cycle(4));
  ASSERT_TRUE(q);
  std::array<Vertex, 4> s = *q;
  std::sort(s.begin(), s.end());
  EXPECT_EQ(s, (std::array<Vertex, 4>{0, 1, 2, 3}));
}

TEST(Classify, ReportCarriesWitnesses) {
  const auto r = classify(path(4));
  EXPECT_FALSE(r.cograph);
  EXPECT_TRUE(r.cograph_witness);
  EXPECT_TRUE(r.chordal && r.hole_free && r.ptolemaic && r.distance_hereditary);
  const auto c5 = classify(cycle(5));
  EXPECT_FALSE(c5.distance_hereditary);
  ASSERT_TRUE(c5.dh_witness);
  EXPECT_EQ(c5.dh_witness->kind, ForbiddenKind::Hole);
}
