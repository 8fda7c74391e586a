#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "network.hpp"

namespace arbnet {

// A network with a 0/1 label on each vertex of outdegree >= 2, and on nothing else.
class LabelledNetwork {
 public:
  LabelledNetwork(DirectedNetwork net, const std::map<std::string, int>& labels)
      : net_(std::move(net)), labels_(net_.size(), -1) {
    for (const auto& [name, value] : labels) {
      auto v = net_.find(name);
      if (!v) throw PreconditionError("label on unknown vertex '" + name + "'");
      if (!net_.is_branching(*v))
        throw PreconditionError("label on '" + name + "', which has outdegree below 2");
      if (value != 0 && value != 1)
        throw PreconditionError("label of '" + name + "' must be 0 or 1");
      labels_[*v] = static_cast<std::int8_t>(value);
    }
    for (Vertex v : net_.branching())
      if (labels_[v] < 0) throw PreconditionError("missing label on '" + net_.name(v) + "'");
  }

  const DirectedNetwork& network() const noexcept { return net_; }

  int label(Vertex v) const {
    if (v >= labels_.size() || labels_[v] < 0)
      throw PreconditionError("vertex " + std::to_string(v) + " carries no label");
    return labels_[v];
  }
  int label(std::string_view name) const { return label(net_.at(name)); }

  std::map<std::string, int> labels() const {
    std::map<std::string, int> out;
    for (Vertex v = 0; v < labels_.size(); ++v)
      if (labels_[v] >= 0) out[net_.name(v)] = labels_[v];
    return out;
  }

  friend bool operator==(const LabelledNetwork& a, const LabelledNetwork& b) {
    return a.net_ == b.net_ && a.labels_ == b.labels_;
  }

 private:
  DirectedNetwork net_;
  std::vector<std::int8_t> labels_;
};

// Same, certified arboreal on construction.
class LabelledArborealNetwork : public LabelledNetwork {
 public:
  explicit LabelledArborealNetwork(LabelledNetwork ln) : LabelledNetwork(std::move(ln)) {
    if (!is_arboreal(network()))
      throw PreconditionError("network is not arboreal (underlying graph has a cycle)");
    if (!root_hybrid_equality(network()))
      throw InvariantViolation("arboreal network breaks the root/hybrid count identity");
  }
  LabelledArborealNetwork(DirectedNetwork net, const std::map<std::string, int>& labels)
      : LabelledArborealNetwork(LabelledNetwork(std::move(net), labels)) {}
};

// Least common ancestor by the definition: a common ancestor none of whose children
// is a common ancestor. nullopt when x and y share no ancestor; throws if several
// candidates exist (cannot happen on arboreal networks or basic galled trees).
inline std::optional<Vertex> lca(const DirectedNetwork& net, Vertex x, Vertex y) {
  if (x >= net.size() || y >= net.size()) throw PreconditionError("lca: unknown vertex");
  if (x == y) throw PreconditionError("lca: the two leaves must differ");
  if (!net.is_leaf(x) || !net.is_leaf(y)) throw PreconditionError("lca: arguments must be leaves");
  std::optional<Vertex> found;
  for (Vertex u = 0; u < net.size(); ++u) {
    if (!net.is_ancestor(u, x) || !net.is_ancestor(u, y)) continue;
    bool least = true;
    for (Vertex c : net.children(u))
      if (net.is_ancestor(c, x) && net.is_ancestor(c, y)) least = false;
    if (!least) continue;
    if (found)
      throw InvariantViolation("leaves " + net.name(x) + " and " + net.name(y) +
                               " have more than one least common ancestor");
    found = u;
  }
  return found;
}

// Graph on the leaves (vertex i = the leaf mapped to i) joining leaves that share an ancestor.
inline UndirectedGraph shared_ancestry_graph(const DirectedNetwork& net) {
  const std::size_t k = net.leaf_count();
  UndirectedGraph g(k);
  for (Vertex u = 0; u < net.size(); ++u) {
    if (!net.is_root(u)) continue;
    std::vector<Vertex> below = leaf_taxa_below(net, u);
    for (std::size_t i = 0; i < below.size(); ++i)
      for (std::size_t j = i + 1; j < below.size(); ++j) g.add_edge(below[i], below[j]);
  }
  return g;
}

// Leaves joined when their lca exists and is labelled 1.
inline UndirectedGraph explained_graph(const LabelledNetwork& ln) {
  const auto& net = ln.network();
  const std::size_t k = net.leaf_count();
  UndirectedGraph g(k);
  for (Vertex a = 0; a < k; ++a)
    for (Vertex b = a + 1; b < k; ++b)
      if (auto u = lca(net, net.leaf(a), net.leaf(b)); u && ln.label(*u) == 1) g.add_edge(a, b);
  return g;
}

// lca of every leaf pair, computed once; for evaluating many labellings of one network.
class LcaTable {
 public:
  explicit LcaTable(const DirectedNetwork& net) : k_(net.leaf_count()), table_(k_ * k_, kNone) {
    for (Vertex a = 0; a < k_; ++a)
      for (Vertex b = a + 1; b < k_; ++b)
        if (auto u = lca(net, net.leaf(a), net.leaf(b))) table_[a * k_ + b] = table_[b * k_ + a] = *u;
  }

  std::size_t leaf_count() const noexcept { return k_; }
  std::optional<Vertex> operator()(Vertex a, Vertex b) const {
    Vertex u = table_.at(a * k_ + b);
    if (u == kNone) return std::nullopt;
    return u;
  }

  // Explained graph for labels indexed by network vertex (entries on unlabelled vertices are ignored).
  template <class Labels>
  UndirectedGraph explained(const Labels& label_of) const {
    UndirectedGraph g(k_);
    for (Vertex a = 0; a < k_; ++a)
      for (Vertex b = a + 1; b < k_; ++b) {
        Vertex u = table_[a * k_ + b];
        if (u != kNone && label_of[u] == 1) g.add_edge(a, b);
      }
    return g;
  }

 private:
  static constexpr Vertex kNone = static_cast<Vertex>(-1);
  std::size_t k_;
  std::vector<Vertex> table_;
};

inline bool verify_explains(const LabelledNetwork& ln, const UndirectedGraph& g) {
  if (ln.network().leaf_count() != g.size())
    throw PreconditionError("network has " + std::to_string(ln.network().leaf_count()) +
                            " leaves but the graph has " + std::to_string(g.size()) + " vertices");
  return explained_graph(ln) == g;
}

// Same network, every vertex of outdegree >= 2 relabelled to `value`.
inline LabelledNetwork with_uniform_labels(const LabelledNetwork& ln, int value) {
  std::map<std::string, int> labels = ln.labels();
  for (auto& [name, v] : labels) v = value;
  return LabelledNetwork(ln.network(), labels);
}

inline bool all_roots_labelled_one(const LabelledNetwork& ln) {
  for (Vertex r : ln.network().roots())
    if (ln.label(r) != 1) return false;
  return true;
}

// Whether the explained graph is connected.
inline bool connectivity_check(const LabelledNetwork& ln) {
  if (ln.network().leaf_count() < 2)
    throw PreconditionError("connectivity_check needs at least two leaves");
  return is_connected(explained_graph(ln));
}

}  // namespace arbnet
