#pragma once

#include "graph.hpp"

// Small named graphs used as templates and fixtures.
namespace arbnet::families {

inline UndirectedGraph edgeless(std::size_t n) { return UndirectedGraph(n); }

inline UndirectedGraph complete(std::size_t n) {
  UndirectedGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

// 0-1-...-(n-1)
inline UndirectedGraph path(std::size_t n) {
  UndirectedGraph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

// 0-1-...-(n-1)-0, n >= 3
inline UndirectedGraph cycle(std::size_t n) {
  UndirectedGraph g = path(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

// a-b-c-d-e-a plus chord b-e (a=0 .. e=4): triangle a,b,e on top of square b,c,d,e.
inline UndirectedGraph house() {
  UndirectedGraph g = cycle(5);
  g.add_edge(1, 4);
  return g;
}

// Path a-b-c-d plus apex e adjacent to all four.
inline UndirectedGraph gem() {
  return UndirectedGraph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
}

// a-b-c-d-e-f-a plus chord b-e: two squares sharing the edge b-e.
inline UndirectedGraph domino() {
  UndirectedGraph g = cycle(6);
  g.add_edge(1, 4);
  return g;
}

}  // namespace arbnet::families
