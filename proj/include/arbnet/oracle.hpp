#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "extension.hpp"
#include "graph.hpp"
#include "labelled.hpp"
#include "network.hpp"
#include "recognition.hpp"

namespace arbnet::oracle {

class Truncated : public Error {
 public:
  using Error::Error;
};

// Every labelled graph on n <= 7 vertices, in order of the edge bitmask over the
// pairs (0,1), (0,2), ..., (n-2,n-1). Return false from visit to stop early.
inline void enumerate_graphs(std::size_t n, const std::function<bool(const UndirectedGraph&)>& visit) {
  if (n > 7) throw PreconditionError("enumerate_graphs: n must be at most 7");
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    UndirectedGraph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
    if (!visit(g)) return;
  }
}

inline std::vector<UndirectedGraph> all_graphs(std::size_t n) {
  std::vector<UndirectedGraph> out;
  enumerate_graphs(n, [&](const UndirectedGraph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

struct EnumerationBudget {
  std::size_t max_leaves = 5;
  std::size_t max_internal = 0;  // 0: 3n-5 for n leaves
  std::size_t max_networks = 1'000'000;
  double time_cap = 600.0;  // seconds
};

enum class EnumerationStatus { Complete, Truncated };

struct EnumerationResult {
  EnumerationStatus status = EnumerationStatus::Complete;
  std::size_t networks = 0;
  std::size_t internal_bound = 0;
  std::string reason;  // why it was truncated
};

namespace detail {

// Unrooted tree on leaves 0..n-1 (degree 1) and internal vertices n.. (degree >= 3).
struct XTree {
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;
};

// Every leaf-labelled tree without degree-2 vertices, each produced once: leaf k is
// inserted into an edge or attached to an internal vertex of a tree on 0..k-1.
inline void enumerate_xtrees(std::size_t n, const std::function<void(const XTree&)>& visit) {
  // Internal ids are assigned after the leaves, so trees are built with leaf slots reserved.
  std::function<void(XTree&, std::size_t)> grow = [&](XTree& t, std::size_t k) {
    if (k == n) {
      visit(t);
      return;
    }
    const std::size_t m = t.edges.size();
    for (std::size_t i = 0; i < m; ++i) {
      const Edge e = t.edges[i];
      const Vertex w = t.vertex_count++;
      t.edges[i] = {e.first, w};
      t.edges.push_back({w, e.second});
      t.edges.push_back({w, k});
      grow(t, k + 1);
      t.edges.pop_back();
      t.edges.pop_back();
      t.edges[i] = e;
      --t.vertex_count;
    }
    for (Vertex w = n; w < t.vertex_count; ++w) {
      t.edges.push_back({w, k});
      grow(t, k + 1);
      t.edges.pop_back();
    }
  };
  XTree t;
  t.vertex_count = n;
  t.edges.push_back({0, 1});
  grow(t, 2);
}

// Canonical string of a tree-shaped network with fixed leaves: rooted at leaf 0,
// every subtree is encoded from the sorted codes of its children, each tagged with
// the direction of the connecting arc.
inline std::string canonical_form(const DirectedNetwork& net) {
  const std::size_t n = net.size();
  std::vector<std::vector<std::pair<Vertex, char>>> adj(n);
  for (auto [u, v] : net.arcs()) {
    adj[u].emplace_back(v, 'v');  // arc points away from u
    adj[v].emplace_back(u, '^');
  }
  std::function<std::string(Vertex, Vertex)> code = [&](Vertex v, Vertex from) -> std::string {
    if (net.is_leaf(v) && from != v) return "L" + std::to_string(*net.taxon(v));
    std::vector<std::string> parts;
    for (auto [w, dir] : adj[v])
      if (w != from) parts.push_back(std::string(1, dir) + code(w, v));
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (const auto& p : parts) s += p;
    return s + ")";
  };
  const Vertex start = net.leaf(0);
  return "L0" + code(start, start);
}

}  // namespace detail

// Every arboreal network on n leaves (named "0".."n-1") with at most
// budget.max_internal internal vertices, in a deterministic order. Vertices of
// degree 2 in an arboreal network are roots with two children and are never
// adjacent, so each network is an unrooted tree without degree-2 vertices with a
// subset of edges subdivided by such roots and the remaining edges oriented.
inline EnumerationResult enumerate_arboreal_networks(std::size_t n, const EnumerationBudget& budget,
                                                     const std::function<bool(const DirectedNetwork&)>& visit) {
  if (n < 2) throw PreconditionError("arboreal networks need at least two leaves");
  if (n > budget.max_leaves)
    throw PreconditionError("enumerate_arboreal_networks: " + std::to_string(n) + " leaves exceeds the budget of " +
                            std::to_string(budget.max_leaves));
  EnumerationResult result;
  result.internal_bound = budget.max_internal ? budget.max_internal : 3 * n - 5;
  const auto started = std::chrono::steady_clock::now();
  std::set<std::string> seen;
  bool stop = false;

  detail::enumerate_xtrees(n, [&](const detail::XTree& t) {
    if (stop) return;
    const std::size_t m = t.edges.size();
    // Per edge: 0 = subdivided by a root, 1 = first->second, 2 = second->first.
    // Edges at a leaf always point into the leaf unless subdivided.
    std::vector<int> state(m, 0);
    std::vector<int> radix(m);
    for (std::size_t i = 0; i < m; ++i) {
      const bool leaf_edge = t.edges[i].first < n || t.edges[i].second < n;
      radix[i] = leaf_edge ? 2 : 3;
    }
    while (!stop) {
      std::size_t subdivided = std::count(state.begin(), state.end(), 0);
      const std::size_t internal = (t.vertex_count - n) + subdivided;
      bool ok = internal <= result.internal_bound;
      std::vector<std::size_t> outdeg(t.vertex_count, 0);
      NetworkSpec spec;
      if (ok) {
        for (Vertex v = 0; v < t.vertex_count; ++v)
          spec.vertices.push_back(v < n ? std::to_string(v) : "i" + std::to_string(v - n));
        std::size_t next_root = 0;
        for (std::size_t i = 0; i < m && ok; ++i) {
          auto [a, b] = t.edges[i];
          const std::string na = spec.vertices[a], nb = spec.vertices[b];
          if (state[i] == 0) {
            const std::string r = "s" + std::to_string(next_root++);
            spec.vertices.push_back(r);
            spec.arcs.emplace_back(r, na);
            spec.arcs.emplace_back(r, nb);
          } else if (a < n && b < n) {
            ok = false;  // two leaves joined directly
          } else if (a < n || b < n) {
            Vertex leaf = a < n ? a : b, other = a < n ? b : a;
            spec.arcs.emplace_back(spec.vertices[other], spec.vertices[leaf]);
            ++outdeg[other];
          } else if (state[i] == 1) {
            spec.arcs.emplace_back(na, nb);
            ++outdeg[a];
          } else {
            spec.arcs.emplace_back(nb, na);
            ++outdeg[b];
          }
        }
        for (Vertex v = n; v < t.vertex_count && ok; ++v) ok = outdeg[v] > 0;
      }
      if (ok && network_violations(spec).empty()) {
        DirectedNetwork net = validate_network(spec);
        if (is_arboreal(net) && seen.insert(detail::canonical_form(net)).second) {
          if (result.networks >= budget.max_networks) {
            result.status = EnumerationStatus::Truncated;
            result.reason = "network cap of " + std::to_string(budget.max_networks) + " reached";
            stop = true;
            break;
          }
          ++result.networks;
          if (!visit(net)) {
            stop = true;
            break;
          }
        }
      }
      const double elapsed =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
      if (elapsed > budget.time_cap) {
        result.status = EnumerationStatus::Truncated;
        result.reason = "time cap of " + std::to_string(budget.time_cap) + " s reached";
        stop = true;
        break;
      }
      std::size_t i = 0;
      while (i < m && ++state[i] == radix[i]) state[i++] = 0;
      if (i == m) break;
    }
  });
  return result;
}

struct BruteforceResult {
  bool explainable = false;
  std::size_t networks_checked = 0;
  std::optional<LabelledNetwork> witness;  // first explaining network found
  std::set<std::size_t> witness_root_counts;  // filled when exhaustive
};

// Tries every {0,1} labelling of every enumerated network. With exhaustive set, keeps
// going after the first hit to collect the root counts of all explaining networks.
// Throws Truncated if a budget cap ends the search before an answer is certain.
inline BruteforceResult explainable_bruteforce(const UndirectedGraph& g, const EnumerationBudget& budget,
                                               bool exhaustive = false) {
  BruteforceResult r;
  const std::size_t k = g.size();
  auto enumeration = enumerate_arboreal_networks(k, budget, [&](const DirectedNetwork& net) {
    ++r.networks_checked;
    const LcaTable table(net);
    const auto branching = net.branching();
    std::vector<int> label(net.size(), -1);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << branching.size()); ++mask) {
      for (std::size_t i = 0; i < branching.size(); ++i) label[branching[i]] = mask >> i & 1;
      bool match = true;
      for (Vertex a = 0; a < k && match; ++a)
        for (Vertex b = a + 1; b < k && match; ++b) {
          auto u = table(a, b);
          match = g.adjacent(a, b) == (u && label[*u] == 1);
        }
      if (!match) continue;
      r.explainable = true;
      r.witness_root_counts.insert(net.roots().size());
      if (!r.witness) {
        std::map<std::string, int> named;
        for (Vertex v : branching) named[net.name(v)] = label[v];
        r.witness = LabelledNetwork(net, named);
      }
      if (!exhaustive) return false;
    }
    return true;
  });
  if (enumeration.status == EnumerationStatus::Truncated && (!r.explainable || exhaustive))
    throw Truncated("explainable_bruteforce: " + enumeration.reason);
  return r;
}

// --- random instances -------------------------------------------------------

// Random extension sequence on n vertices, replayed and relabelled by a random permutation.
template <class Rng>
UndirectedGraph random_dh_graph(std::size_t n, Rng& rng) {
  if (n == 0) return UndirectedGraph();
  ExtensionSequence seq{{ExtensionKind::Initial, 0, 0}};
  for (Vertex v = 1; v < n; ++v) {
    const auto kind = static_cast<ExtensionKind>(1 + std::uniform_int_distribution<int>(0, 2)(rng));
    seq.push_back({kind, v, std::uniform_int_distribution<Vertex>(0, v - 1)(rng)});
  }
  const UndirectedGraph g = replay(seq);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return induced_subgraph(g, perm).graph;
}

template <class Rng>
UndirectedGraph random_graph(std::size_t n, double p, Rng& rng) {
  UndirectedGraph g(n);
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

// Random arboreal network on n >= 2 leaves: a random tree without degree-2
// vertices, random edges subdivided by roots, the rest randomly oriented; retried
// until the result is a network (and has `roots` roots when that is nonzero).
template <class Rng>
DirectedNetwork random_arboreal_network(std::size_t n, Rng& rng, std::size_t roots = 0,
                                        const std::string& leaf_prefix = "", std::size_t max_attempts = 100000) {
  if (n < 2) throw PreconditionError("random_arboreal_network needs at least two leaves");
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    detail::XTree t;
    t.vertex_count = n;
    t.edges.push_back({0, 1});
    for (Vertex k = 2; k < n; ++k) {
      const std::size_t internal = t.vertex_count - n;
      const std::size_t choice = std::uniform_int_distribution<std::size_t>(0, t.edges.size() + internal - 1)(rng);
      if (choice < t.edges.size()) {
        const Edge e = t.edges[choice];
        const Vertex w = t.vertex_count++;
        t.edges[choice] = {e.first, w};
        t.edges.push_back({w, e.second});
        t.edges.push_back({w, k});
      } else {
        t.edges.push_back({n + (choice - t.edges.size()), k});
      }
    }
    NetworkSpec spec;
    for (Vertex v = 0; v < t.vertex_count; ++v)
      spec.vertices.push_back(v < n ? leaf_prefix + std::to_string(v) : "i" + std::to_string(v - n));
    std::bernoulli_distribution coin(0.5);
    std::bernoulli_distribution split(roots == 0 ? 0.3 : 0.15);
    std::size_t next_root = 0;
    for (auto [a, b] : t.edges) {
      const bool leaf_edge = a < n || b < n;
      if ((a < n && b < n) || split(rng)) {
        const std::string r = "s" + std::to_string(next_root++);
        spec.vertices.push_back(r);
        spec.arcs.emplace_back(r, spec.vertices[a]);
        spec.arcs.emplace_back(r, spec.vertices[b]);
      } else if (leaf_edge) {
        const Vertex leaf = a < n ? a : b, other = a < n ? b : a;
        spec.arcs.emplace_back(spec.vertices[other], spec.vertices[leaf]);
      } else if (coin(rng)) {
        spec.arcs.emplace_back(spec.vertices[a], spec.vertices[b]);
      } else {
        spec.arcs.emplace_back(spec.vertices[b], spec.vertices[a]);
      }
    }
    if (!network_violations(spec).empty()) continue;
    DirectedNetwork net = validate_network(spec);
    if (roots && net.roots().size() != roots) continue;
    return net;
  }
  throw Error("random_arboreal_network: no valid network after " + std::to_string(max_attempts) + " attempts");
}

template <class Rng>
LabelledArborealNetwork random_labelling(const DirectedNetwork& net, Rng& rng) {
  std::bernoulli_distribution coin(0.5);
  std::map<std::string, int> labels;
  for (Vertex v : net.branching()) labels[net.name(v)] = coin(rng) ? 1 : 0;
  return LabelledArborealNetwork(net, labels);
}

}  // namespace arbnet::oracle
