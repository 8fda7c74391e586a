#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace arbnet {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

// Finite simple undirected graph on the dense vertex range [0, n).
// Adjacency is kept both as a matrix (O(1) queries) and as sorted lists.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(std::size_t n) : n_(n), matrix_(n * n, 0), adj_(n) {}

  UndirectedGraph(std::size_t n, std::span<const Edge> edges) : UndirectedGraph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }
  UndirectedGraph(std::size_t n, std::initializer_list<Edge> edges)
      : UndirectedGraph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t size() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return m_; }

  bool adjacent(Vertex u, Vertex v) const {
    check(u);
    check(v);
    return matrix_[u * n_ + v] != 0;
  }
  const std::vector<Vertex>& neighbors(Vertex v) const {
    check(v);
    return adj_[v];
  }
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  // Adds {u,v}; returns false if the edge already existed.
  bool add_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    if (u == v) throw PreconditionError("self-loop on vertex " + std::to_string(u));
    if (matrix_[u * n_ + v]) return false;
    matrix_[u * n_ + v] = matrix_[v * n_ + u] = 1;
    adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++m_;
    return true;
  }

  bool remove_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    if (!matrix_[u * n_ + v]) return false;
    matrix_[u * n_ + v] = matrix_[v * n_ + u] = 0;
    adj_[u].erase(std::lower_bound(adj_[u].begin(), adj_[u].end(), v));
    adj_[v].erase(std::lower_bound(adj_[v].begin(), adj_[v].end(), u));
    --m_;
    return true;
  }

  // Edges as (u,v) with u<v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b) {
    return a.n_ == b.n_ && a.matrix_ == b.matrix_;
  }

 private:
  void check(Vertex v) const {
    if (v >= n_)
      throw PreconditionError("vertex " + std::to_string(v) + " out of range [0," +
                              std::to_string(n_) + ")");
  }

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint8_t> matrix_;
  std::vector<std::vector<Vertex>> adj_;
};

struct InducedSubgraph {
  UndirectedGraph graph;
  // mapping[i] is the vertex of the source graph that became vertex i.
  std::vector<Vertex> mapping;
};

// G[s]. Vertex i of the result is s[i], so the order of s is the new order.
inline InducedSubgraph induced_subgraph(const UndirectedGraph& g, std::span<const Vertex> s) {
  std::vector<char> seen(g.size(), 0);
  for (Vertex v : s) {
    if (v >= g.size())
      throw PreconditionError("induced_subgraph: vertex " + std::to_string(v) + " out of range");
    if (seen[v]) throw PreconditionError("induced_subgraph: duplicate vertex " + std::to_string(v));
    seen[v] = 1;
  }
  InducedSubgraph out{UndirectedGraph(s.size()), std::vector<Vertex>(s.begin(), s.end())};
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) out.graph.add_edge(i, j);
  return out;
}

inline InducedSubgraph induced_subgraph(const UndirectedGraph& g, std::initializer_list<Vertex> s) {
  return induced_subgraph(g, std::span<const Vertex>(s.begin(), s.size()));
}

inline UndirectedGraph complement(const UndirectedGraph& g) {
  UndirectedGraph out(g.size());
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v = u + 1; v < g.size(); ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

// Vertices of g2 are shifted by |V(g1)|.
inline UndirectedGraph disjoint_union(const UndirectedGraph& g1, const UndirectedGraph& g2) {
  UndirectedGraph out(g1.size() + g2.size());
  for (auto [u, v] : g1.edges()) out.add_edge(u, v);
  for (auto [u, v] : g2.edges()) out.add_edge(u + g1.size(), v + g1.size());
  return out;
}

// Components as sorted vertex lists, ordered by their smallest vertex.
inline std::vector<std::vector<Vertex>> connected_components(const UndirectedGraph& g) {
  std::vector<std::vector<Vertex>> comps;
  std::vector<char> seen(g.size(), 0);
  for (Vertex s = 0; s < g.size(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex w : g.neighbors(comp[i]))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline bool is_connected(const UndirectedGraph& g) { return connected_components(g).size() <= 1; }

// Shortest-path distances; unreachable pairs hold std::nullopt.
class DistanceMatrix {
 public:
  static constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, kUnreachable) {}

  std::size_t size() const noexcept { return n_; }
  std::optional<std::size_t> at(Vertex x, Vertex y) const {
    std::size_t d = d_[x * n_ + y];
    if (d == kUnreachable) return std::nullopt;
    return d;
  }
  bool reachable(Vertex x, Vertex y) const { return d_[x * n_ + y] != kUnreachable; }
  // Raw access; kUnreachable marks different components.
  std::size_t raw(Vertex x, Vertex y) const { return d_[x * n_ + y]; }
  void set(Vertex x, Vertex y, std::size_t d) { d_[x * n_ + y] = d; }

 private:
  std::size_t n_;
  std::vector<std::size_t> d_;
};

inline DistanceMatrix distance_matrix(const UndirectedGraph& g) {
  DistanceMatrix dm(g.size());
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < g.size(); ++s) {
    dm.set(s, s, 0);
    queue.assign(1, s);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Vertex u = queue[i];
      for (Vertex w : g.neighbors(u))
        if (!dm.reachable(s, w)) {
          dm.set(s, w, dm.raw(s, u) + 1);
          queue.push_back(w);
        }
    }
  }
  return dm;
}

}  // namespace arbnet
