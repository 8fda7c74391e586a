#pragma once

#include <string>
#include <vector>

#include <arbnet/arbnet.hpp>

namespace testing_support {

using namespace arbnet;

inline DirectedNetwork network(std::vector<std::string> vertices,
                               std::vector<std::pair<std::string, std::string>> arcs,
                               std::map<std::string, std::size_t> leaves = {}) {
  return validate_network(NetworkSpec{std::move(vertices), std::move(arcs), std::move(leaves)});
}

// The three-root network explaining the path a-b-c-d.
inline LabelledArborealNetwork p4_network() {
  auto net = network({"v0", "a", "b", "v1", "c", "u1", "v2", "d", "u2"},
                     {{"v0", "a"}, {"v0", "v1"}, {"v1", "b"}, {"u1", "v1"},
                      {"u1", "v2"}, {"v2", "c"}, {"u2", "v2"}, {"u2", "d"}},
                     {{"a", 0}, {"b", 1}, {"c", 2}, {"d", 3}});
  return LabelledArborealNetwork(net, {{"v0", 1}, {"u1", 1}, {"u2", 1}});
}

// Two roots sharing the hybrid h: r1 -> a, r1 -> h, r2 -> h, r2 -> b, h -> c.
inline LabelledArborealNetwork two_root_example(int r1 = 1, int r2 = 0) {
  auto net = network({"r1", "r2", "h", "a", "b", "c"},
                     {{"r1", "a"}, {"r1", "h"}, {"r2", "h"}, {"r2", "b"}, {"h", "c"}},
                     {{"a", 0}, {"b", 1}, {"c", 2}});
  return LabelledArborealNetwork(net, {{"r1", r1}, {"r2", r2}});
}

inline UndirectedGraph graph(std::size_t n, std::vector<Edge> edges) {
  return UndirectedGraph(n, std::span<const Edge>(edges));
}

template <class F>
void for_each_graph(std::size_t lo, std::size_t hi, F f) {
  for (std::size_t n = lo; n <= hi; ++n)
    oracle::enumerate_graphs(n, [&](const UndirectedGraph& g) {
      f(g);
      return true;
    });
}

}  // namespace testing_support
