#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "draft.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "labelled.hpp"

namespace arbnet {

namespace detail {

// Deletes roots with a single child and suppresses indegree-1/outdegree-1 vertices
// until neither kind remains.
inline void tidy(NetworkDraft& d) {
  for (bool changed = true; changed;) {
    changed = false;
    const std::vector<std::string> snapshot = d.vertices();
    for (const std::string& v : snapshot) {
      const std::size_t in = d.parents(v).size(), out = d.children(v).size();
      if (in == 0 && out == 1) {
        d.remove_vertex(v);
        changed = true;
        break;
      }
      if (in == 1 && out == 1) {
        d.suppress(v);
        changed = true;
        break;
      }
    }
  }
}

inline std::string renamed(const std::string& name, const std::set<std::string>& taken,
                           std::set<std::string>& used) {
  if (!taken.count(name) && !used.count(name)) {
    used.insert(name);
    return name;
  }
  for (std::size_t k = 1;; ++k) {
    std::string candidate = name + "_" + std::to_string(k);
    if (!taken.count(candidate) && !used.count(candidate)) {
      used.insert(candidate);
      return candidate;
    }
  }
}

inline std::string unused_name(const std::string& base, const std::set<std::string>& taken) {
  if (!taken.count(base)) return base;
  for (std::size_t k = 1;; ++k)
    if (!taken.count(base + std::to_string(k))) return base + std::to_string(k);
}

}  // namespace detail

// Places a new root labelled 0 above the first root of each input. Leaves of the
// second network come after those of the first; clashing internal ids of the
// second network get a "_k" suffix. Explains the disjoint union of both graphs.
inline LabelledArborealNetwork merge_disjoint(const LabelledArborealNetwork& a,
                                              const LabelledArborealNetwork& b) {
  const auto& na = a.network();
  const auto& nb = b.network();
  std::set<std::string> taken(na.names().begin(), na.names().end());
  for (Vertex l : nb.leaves())
    if (taken.count(nb.name(l)))
      throw PreconditionError("merge_disjoint: leaf '" + nb.name(l) + "' occurs in both networks");

  NetworkDraft d(a);
  std::set<std::string> used;
  std::map<std::string, std::string> rename;
  for (Vertex v = 0; v < nb.size(); ++v)
    rename[nb.name(v)] = nb.is_leaf(v) ? nb.name(v) : detail::renamed(nb.name(v), taken, used);
  for (Vertex v = 0; v < nb.size(); ++v) d.add_vertex(rename[nb.name(v)]);
  for (auto [p, c] : nb.arcs()) d.add_arc(rename[nb.name(p)], rename[nb.name(c)]);
  for (const auto& [name, value] : b.labels()) d.set_label(rename[name], value);
  for (std::size_t t = 0; t < nb.leaf_count(); ++t) d.set_leaf(nb.name(nb.leaf(t)), na.leaf_count() + t);

  std::set<std::string> all(d.vertices().begin(), d.vertices().end());
  const std::string top = detail::unused_name("top", all);
  d.add_vertex(top);
  d.add_arc(top, na.name(na.roots().front()));
  d.add_arc(top, rename[nb.name(nb.roots().front())]);
  d.set_label(top, 0);
  return LabelledArborealNetwork(d.build());
}

// Same, with a bare leaf as the second operand; it becomes the last leaf.
inline LabelledArborealNetwork merge_disjoint(const LabelledArborealNetwork& a,
                                              const std::string& leaf) {
  const auto& na = a.network();
  if (na.find(leaf)) throw PreconditionError("merge_disjoint: '" + leaf + "' already exists");
  NetworkDraft d(a);
  d.add_vertex(leaf);
  d.set_leaf(leaf, na.leaf_count());
  std::set<std::string> all(d.vertices().begin(), d.vertices().end());
  const std::string top = detail::unused_name("top", all);
  d.add_vertex(top);
  d.add_arc(top, na.name(na.roots().front()));
  d.add_arc(top, leaf);
  d.set_label(top, 0);
  return LabelledArborealNetwork(d.build());
}

// Restriction to the leaves mapped to `keep`, which must be a union of connected
// components of the explained graph. Leaves are renumbered by increasing old
// number, so the result explains induced_subgraph(C, sorted keep).
inline LabelledArborealNetwork restrict_to(const LabelledArborealNetwork& ln,
                                           std::vector<Vertex> keep) {
  const auto& net = ln.network();
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (keep.size() < 2) throw PreconditionError("restrict_to: need at least two leaves to keep");
  if (keep.back() >= net.leaf_count()) throw PreconditionError("restrict_to: unknown leaf");

  std::vector<char> in_keep(net.leaf_count(), 0);
  for (Vertex x : keep) in_keep[x] = 1;
  for (const auto& comp : connected_components(explained_graph(ln)))
    for (Vertex x : comp)
      if (in_keep[x] != in_keep[comp.front()])
        throw PreconditionError("restrict_to: leaf set is not a union of connected components");

  NetworkDraft d(ln);
  for (Vertex v = 0; v < net.size(); ++v) {
    bool hits = false;
    for (Vertex x : keep) hits = hits || net.is_ancestor(v, net.leaf(x));
    if (!hits) d.remove_vertex(net.name(v));
  }
  detail::tidy(d);
  std::map<std::string, std::size_t> leaves;
  for (std::size_t i = 0; i < keep.size(); ++i) leaves[net.name(net.leaf(keep[i]))] = i;
  d.set_leaf_map(std::move(leaves));
  return LabelledArborealNetwork(d.build(true));
}

// Deletes the leaf mapped to x (its parent needs outdegree >= 2) and tidies up.
// Leaves after x move down by one.
inline LabelledArborealNetwork remove_leaf(const LabelledArborealNetwork& ln, Vertex x) {
  const auto& net = ln.network();
  if (x >= net.leaf_count()) throw PreconditionError("remove_leaf: unknown leaf");
  if (net.leaf_count() < 3) throw PreconditionError("remove_leaf: result would have one leaf");
  const Vertex leaf = net.leaf(x);
  const Vertex parent = net.parents(leaf).front();
  if (net.outdegree(parent) < 2)
    throw PreconditionError("remove_leaf: parent of '" + net.name(leaf) + "' has outdegree 1");
  NetworkDraft d(ln);
  d.remove_vertex(net.name(leaf));
  detail::tidy(d);
  std::map<std::string, std::size_t> leaves;
  for (std::size_t t = 0; t < net.leaf_count(); ++t)
    if (t != x) leaves[net.name(net.leaf(t))] = t < x ? t : t - 1;
  d.set_leaf_map(std::move(leaves));
  return LabelledArborealNetwork(d.build(true));
}

// Renumbers leaves: taxon_of maps every leaf name to its new graph vertex.
inline LabelledArborealNetwork with_leaf_map(const LabelledArborealNetwork& ln,
                                             std::map<std::string, std::size_t> taxon_of) {
  NetworkDraft d(ln);
  d.set_leaf_map(std::move(taxon_of));
  return LabelledArborealNetwork(d.build());
}

}  // namespace arbnet
