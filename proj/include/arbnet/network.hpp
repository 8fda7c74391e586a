#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace arbnet {

// Uncertified network description, as read from a file or assembled by hand.
struct NetworkSpec {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> arcs;
  // Leaf name -> graph vertex. Left empty, leaves are numbered in vertex order.
  std::map<std::string, std::size_t> leaves;

  friend bool operator==(const NetworkSpec&, const NetworkSpec&) = default;
};

enum class ViolationKind {
  Empty,
  DuplicateVertex,
  UnknownVertex,
  SelfLoop,
  DuplicateArc,
  DirectedCycle,
  Disconnected,
  RootOutdegree,   // indegree 0 with outdegree < 2
  LeafIndegree,    // outdegree 0 with indegree != 1
  Subdivision,     // indegree 1 and outdegree 1
  LeafMapping,     // `leaves` is not a bijection from the leaves onto [0, |L|)
};

struct Violation {
  ViolationKind kind;
  std::vector<std::string> vertices;
};

inline std::string describe(const Violation& v) {
  std::string who;
  for (const auto& s : v.vertices) who += (who.empty() ? "" : ", ") + s;
  switch (v.kind) {
    case ViolationKind::Empty: return "network has no vertices";
    case ViolationKind::DuplicateVertex: return "duplicate vertex id: " + who;
    case ViolationKind::UnknownVertex: return "arc references unknown vertex: " + who;
    case ViolationKind::SelfLoop: return "self-loop at: " + who;
    case ViolationKind::DuplicateArc: return "duplicate arc: " + who;
    case ViolationKind::DirectedCycle: return "directed cycle through: " + who;
    case ViolationKind::Disconnected: return "disconnected; component representatives: " + who;
    case ViolationKind::RootOutdegree: return "root with outdegree below 2: " + who;
    case ViolationKind::LeafIndegree: return "leaf with indegree other than 1: " + who;
    case ViolationKind::Subdivision: return "vertex with indegree 1 and outdegree 1: " + who;
    case ViolationKind::LeafMapping: return "bad leaf mapping: " + who;
  }
  return "?";
}

class InvalidNetwork : public Error {
 public:
  explicit InvalidNetwork(std::vector<Violation> violations)
      : Error(summary(violations)), violations_(std::move(violations)) {}
  const std::vector<Violation>& violations() const noexcept { return violations_; }

  bool has(ViolationKind k) const {
    return std::any_of(violations_.begin(), violations_.end(),
                       [k](const Violation& v) { return v.kind == k; });
  }

 private:
  static std::string summary(const std::vector<Violation>& vs) {
    std::string s = "invalid network";
    for (const auto& v : vs) s += "; " + describe(v);
    return s;
  }
  std::vector<Violation> violations_;
};

class DirectedNetwork;
DirectedNetwork validate_network(const NetworkSpec& spec);

// Certified network: connected, acyclic, roots of outdegree >= 2, leaves of
// indegree 1, no vertex with indegree and outdegree 1. Only validate_network and
// the editing operations below create values of this type.
class DirectedNetwork {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Vertex v) const { return names_.at(v); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<Vertex> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  Vertex at(std::string_view name) const {
    if (auto v = find(name)) return *v;
    throw PreconditionError("unknown vertex '" + std::string(name) + "'");
  }

  const std::vector<Vertex>& children(Vertex v) const { return children_.at(v); }
  const std::vector<Vertex>& parents(Vertex v) const { return parents_.at(v); }
  std::size_t indegree(Vertex v) const { return parents(v).size(); }
  std::size_t outdegree(Vertex v) const { return children(v).size(); }

  bool is_root(Vertex v) const { return indegree(v) == 0; }
  bool is_leaf(Vertex v) const { return outdegree(v) == 0; }
  bool is_hybrid(Vertex v) const { return indegree(v) >= 2; }
  // Outdegree 2 or more; exactly the vertices that carry labels.
  bool is_branching(Vertex v) const { return outdegree(v) >= 2; }

  std::vector<Vertex> roots() const { return select([this](Vertex v) { return is_root(v); }); }
  std::vector<Vertex> hybrids() const { return select([this](Vertex v) { return is_hybrid(v); }); }
  std::vector<Vertex> branching() const {
    return select([this](Vertex v) { return is_branching(v); });
  }

  std::size_t leaf_count() const noexcept { return leaf_by_taxon_.size(); }
  // Leaves ordered by the graph vertex they stand for.
  const std::vector<Vertex>& leaves() const noexcept { return leaf_by_taxon_; }
  Vertex leaf(std::size_t taxon) const { return leaf_by_taxon_.at(taxon); }
  std::optional<std::size_t> taxon(Vertex v) const {
    if (taxon_.at(v) == npos) return std::nullopt;
    return taxon_[v];
  }

  std::size_t arc_count() const noexcept { return arc_count_; }
  std::vector<std::pair<Vertex, Vertex>> arcs() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(arc_count_);
    for (Vertex u = 0; u < size(); ++u)
      for (Vertex c : children_[u]) out.emplace_back(u, c);
    return out;
  }

  // Reflexive: every vertex is its own ancestor.
  bool is_ancestor(Vertex u, Vertex v) const {
    return (reach_[u * words_ + v / 64] >> (v % 64)) & 1u;
  }

  NetworkSpec spec() const {
    NetworkSpec s;
    s.vertices = names_;
    for (auto [u, v] : arcs()) s.arcs.emplace_back(names_[u], names_[v]);
    for (std::size_t t = 0; t < leaf_by_taxon_.size(); ++t) s.leaves[names_[leaf_by_taxon_[t]]] = t;
    return s;
  }

  // A name starting with `prefix` that is not used by this network; numbering is
  // monotone across networks derived from this one, so ids are never recycled.
  std::string fresh_name(const std::string& prefix) const {
    for (;; ++fresh_counter_) {
      std::string candidate = prefix + std::to_string(fresh_counter_);
      if (!index_.count(candidate)) {
        ++fresh_counter_;
        return candidate;
      }
    }
  }

  friend bool operator==(const DirectedNetwork& a, const DirectedNetwork& b) {
    return a.names_ == b.names_ && a.children_ == b.children_ && a.taxon_ == b.taxon_;
  }

 private:
  friend DirectedNetwork validate_network(const NetworkSpec& spec);

  template <class Pred>
  std::vector<Vertex> select(Pred p) const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < size(); ++v)
      if (p(v)) out.push_back(v);
    return out;
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<std::vector<Vertex>> children_, parents_;
  std::vector<std::size_t> taxon_;
  std::vector<Vertex> leaf_by_taxon_;
  std::size_t arc_count_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> reach_;
  mutable std::size_t fresh_counter_ = 0;
};

// Checks every network axiom and returns all breaches found. Structural problems
// (unknown ids, duplicates, self-loops) stop the check early.
inline std::vector<Violation> network_violations(const NetworkSpec& spec) {
  std::vector<Violation> out;
  const std::size_t n = spec.vertices.size();
  if (n == 0) return {{ViolationKind::Empty, {}}};

  std::unordered_map<std::string, Vertex> index;
  for (Vertex v = 0; v < n; ++v)
    if (!index.emplace(spec.vertices[v], v).second)
      out.push_back({ViolationKind::DuplicateVertex, {spec.vertices[v]}});

  std::vector<std::set<Vertex>> children(n), parents(n);
  for (const auto& [p, c] : spec.arcs) {
    auto ip = index.find(p), ic = index.find(c);
    if (ip == index.end() || ic == index.end()) {
      out.push_back({ViolationKind::UnknownVertex, {ip == index.end() ? p : c}});
      continue;
    }
    if (ip->second == ic->second) {
      out.push_back({ViolationKind::SelfLoop, {p}});
      continue;
    }
    if (!children[ip->second].insert(ic->second).second)
      out.push_back({ViolationKind::DuplicateArc, {p, c}});
    parents[ic->second].insert(ip->second);
  }
  if (!out.empty()) return out;

  // Kahn's algorithm; whatever is left over lies on or below a directed cycle.
  std::vector<std::size_t> indeg(n);
  std::vector<Vertex> order;
  for (Vertex v = 0; v < n; ++v)
    if ((indeg[v] = parents[v].size()) == 0) order.push_back(v);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Vertex c : children[order[i]])
      if (--indeg[c] == 0) order.push_back(c);
  if (order.size() != n) {
    Violation cyc{ViolationKind::DirectedCycle, {}};
    for (Vertex v = 0; v < n; ++v)
      if (indeg[v] > 0) cyc.vertices.push_back(spec.vertices[v]);
    out.push_back(std::move(cyc));
  }

  UndirectedGraph underlying(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex c : children[u]) underlying.add_edge(u, c);
  auto comps = connected_components(underlying);
  if (comps.size() > 1) {
    Violation dis{ViolationKind::Disconnected, {}};
    for (const auto& comp : comps) dis.vertices.push_back(spec.vertices[comp.front()]);
    out.push_back(std::move(dis));
  }

  Violation roots{ViolationKind::RootOutdegree, {}}, leaves{ViolationKind::LeafIndegree, {}},
      subdiv{ViolationKind::Subdivision, {}};
  std::vector<Vertex> leaf_vertices;
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t in = parents[v].size(), outd = children[v].size();
    if (in == 0 && outd < 2) roots.vertices.push_back(spec.vertices[v]);
    if (outd == 0 && in != 1) leaves.vertices.push_back(spec.vertices[v]);
    if (in == 1 && outd == 1) subdiv.vertices.push_back(spec.vertices[v]);
    if (outd == 0) leaf_vertices.push_back(v);
  }
  for (auto* v : {&roots, &leaves, &subdiv})
    if (!v->vertices.empty()) out.push_back(std::move(*v));

  if (!spec.leaves.empty()) {
    Violation bad{ViolationKind::LeafMapping, {}};
    std::vector<char> used(leaf_vertices.size(), 0);
    for (const auto& [name, taxon] : spec.leaves) {
      auto it = index.find(name);
      if (it == index.end() || !children[it->second].empty() || taxon >= used.size() ||
          used[taxon]) {
        bad.vertices.push_back(name);
        continue;
      }
      used[taxon] = 1;
    }
    for (Vertex v : leaf_vertices)
      if (!spec.leaves.count(spec.vertices[v])) bad.vertices.push_back(spec.vertices[v]);
    if (!bad.vertices.empty()) out.push_back(std::move(bad));
  }
  return out;
}

inline DirectedNetwork validate_network(const NetworkSpec& spec) {
  if (auto violations = network_violations(spec); !violations.empty())
    throw InvalidNetwork(std::move(violations));

  DirectedNetwork net;
  const std::size_t n = spec.vertices.size();
  net.names_ = spec.vertices;
  for (Vertex v = 0; v < n; ++v) net.index_.emplace(spec.vertices[v], v);
  net.children_.assign(n, {});
  net.parents_.assign(n, {});
  for (const auto& [p, c] : spec.arcs) {
    net.children_[net.index_[p]].push_back(net.index_[c]);
    net.parents_[net.index_[c]].push_back(net.index_[p]);
  }
  for (auto* lists : {&net.children_, &net.parents_})
    for (auto& l : *lists) std::sort(l.begin(), l.end());
  net.arc_count_ = spec.arcs.size();

  net.taxon_.assign(n, DirectedNetwork::npos);
  std::size_t next = 0;
  for (Vertex v = 0; v < n; ++v)
    if (net.children_[v].empty())
      net.taxon_[v] = spec.leaves.empty() ? next++ : spec.leaves.at(spec.vertices[v]);
  next = std::count_if(net.taxon_.begin(), net.taxon_.end(),
                       [](std::size_t t) { return t != DirectedNetwork::npos; });
  net.leaf_by_taxon_.assign(next, 0);
  for (Vertex v = 0; v < n; ++v)
    if (net.taxon_[v] != DirectedNetwork::npos) net.leaf_by_taxon_[net.taxon_[v]] = v;

  // Descendant sets, filled in reverse topological order.
  net.words_ = (n + 63) / 64;
  net.reach_.assign(n * net.words_, 0);
  std::vector<std::size_t> outdeg(n);
  std::vector<Vertex> order;
  for (Vertex v = 0; v < n; ++v)
    if ((outdeg[v] = net.children_[v].size()) == 0) order.push_back(v);
  for (std::size_t i = 0; i < order.size(); ++i) {
    Vertex v = order[i];
    net.reach_[v * net.words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    for (Vertex c : net.children_[v])
      for (std::size_t w = 0; w < net.words_; ++w)
        net.reach_[v * net.words_ + w] |= net.reach_[c * net.words_ + w];
    for (Vertex p : net.parents_[v])
      if (--outdeg[p] == 0) order.push_back(p);
  }
  return net;
}

inline UndirectedGraph underlying_graph(const DirectedNetwork& net) {
  UndirectedGraph g(net.size());
  for (auto [u, v] : net.arcs()) g.add_edge(u, v);
  return g;
}

// Underlying undirected graph is a tree. Networks are connected and never hold
// anti-parallel arcs, so counting arcs suffices.
inline bool is_arboreal(const DirectedNetwork& net) { return net.arc_count() + 1 == net.size(); }

// Sum over hybrids of (indegree - 1).
inline std::size_t hybrid_excess(const DirectedNetwork& net) {
  std::size_t h = 0;
  for (Vertex v : net.hybrids()) h += net.indegree(v) - 1;
  return h;
}

// The excess is always >= |R| - 1, with equality exactly on arboreal networks.
inline bool root_hybrid_equality(const DirectedNetwork& net) {
  return hybrid_excess(net) + 1 == net.roots().size();
}

inline bool is_binary(const DirectedNetwork& net) {
  for (Vertex v = 0; v < net.size(); ++v) {
    if (net.is_branching(v) && (net.outdegree(v) != 2 || net.indegree(v) > 1)) return false;
    if (net.is_hybrid(v) && (net.indegree(v) != 2 || net.outdegree(v) != 1)) return false;
  }
  return true;
}

// Leaves below v.
inline std::vector<Vertex> leaf_descendants(const DirectedNetwork& net, Vertex v) {
  if (v >= net.size()) throw PreconditionError("leaf_descendants: unknown vertex");
  std::vector<Vertex> out;
  for (Vertex l : net.leaves())
    if (net.is_ancestor(v, l)) out.push_back(l);
  return out;
}

// Same, as graph vertices (taxa), sorted.
inline std::vector<Vertex> leaf_taxa_below(const DirectedNetwork& net, Vertex v) {
  std::vector<Vertex> out;
  for (std::size_t t = 0; t < net.leaf_count(); ++t)
    if (net.is_ancestor(v, net.leaf(t))) out.push_back(t);
  return out;
}

// True when every ancestor/descendant pair is joined by exactly one directed path.
inline bool has_unique_paths(const DirectedNetwork& net) {
  const std::size_t n = net.size();
  // paths[u][v] saturates at 2.
  std::vector<std::uint8_t> paths(n * n, 0);
  std::vector<std::size_t> outdeg(n);
  std::vector<Vertex> order;
  for (Vertex v = 0; v < n; ++v)
    if ((outdeg[v] = net.outdegree(v)) == 0) order.push_back(v);
  for (std::size_t i = 0; i < order.size(); ++i) {
    Vertex v = order[i];
    paths[v * n + v] = 1;
    for (Vertex c : net.children(v))
      for (Vertex w = 0; w < n; ++w)
        paths[v * n + w] = static_cast<std::uint8_t>(std::min(2, paths[v * n + w] + paths[c * n + w]));
    for (Vertex p : net.parents(v))
      if (--outdeg[p] == 0) order.push_back(p);
  }
  return std::none_of(paths.begin(), paths.end(), [](std::uint8_t k) { return k > 1; });
}

// Replaces the arc (parent, child) by parent -> w -> child for a fresh vertex w.
// The result has w as its last vertex; w breaks the network axioms on purpose, so
// the returned value is a raw spec.
inline NetworkSpec subdivide(const DirectedNetwork& net, Vertex parent, Vertex child,
                             std::string* new_name = nullptr) {
  const auto& ch = net.children(parent);
  if (!std::binary_search(ch.begin(), ch.end(), child))
    throw PreconditionError("subdivide: no arc " + net.name(parent) + " -> " + net.name(child));
  NetworkSpec s = net.spec();
  std::string w = net.fresh_name("w");
  s.vertices.push_back(w);
  auto it = std::find(s.arcs.begin(), s.arcs.end(), std::pair{net.name(parent), net.name(child)});
  *it = {net.name(parent), w};
  s.arcs.emplace_back(w, net.name(child));
  if (new_name) *new_name = w;
  return s;
}

// Removes a vertex of indegree 1 and outdegree 1, joining its parent to its child.
// Works on raw specs since subdivision results are not networks.
inline NetworkSpec suppress(const NetworkSpec& spec, const std::string& v) {
  std::vector<std::string> in, out;
  for (const auto& [p, c] : spec.arcs) {
    if (c == v) in.push_back(p);
    if (p == v) out.push_back(c);
  }
  if (std::find(spec.vertices.begin(), spec.vertices.end(), v) == spec.vertices.end())
    throw PreconditionError("suppress: unknown vertex '" + v + "'");
  if (in.size() != 1 || out.size() != 1)
    throw PreconditionError("suppress: '" + v + "' does not have indegree 1 and outdegree 1");
  NetworkSpec s;
  for (const auto& x : spec.vertices)
    if (x != v) s.vertices.push_back(x);
  bool placed = false;
  for (const auto& arc : spec.arcs) {
    if (arc.second == v && !placed) {
      s.arcs.emplace_back(in[0], out[0]);
      placed = true;
    } else if (arc.first != v && arc.second != v) {
      s.arcs.push_back(arc);
    }
  }
  s.leaves = spec.leaves;
  return s;
}

inline DirectedNetwork suppress(const DirectedNetwork& net, Vertex v) {
  return validate_network(suppress(net.spec(), net.name(v)));
}

}  // namespace arbnet
