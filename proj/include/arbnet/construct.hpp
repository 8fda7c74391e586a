#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "compose.hpp"
#include "draft.hpp"
#include "extension.hpp"
#include "graph.hpp"
#include "labelled.hpp"
#include "recognition.hpp"

namespace arbnet {

inline std::vector<std::string> default_leaf_names(std::size_t n) {
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = std::to_string(i);
  return names;
}

// Called after every iteration with the leaves added so far (in sequence order) and
// the current network, whose leaf i is prefix[i].
using ExplainObserver =
    std::function<void(const std::vector<Vertex>& prefix, const LabelledArborealNetwork& current)>;

// Network explaining a distance-hereditary graph, built along the extension
// sequence: v0 over the first two vertices, then for every later vertex the arc
// entering its anchor is subdivided by v<i>; a twin hangs below v<i> (label 1 for
// true twins), a pendant vertex gets a new root u<j> over v<i> labelled 1.
inline LabelledArborealNetwork explain_dh(const UndirectedGraph& g,
                                          std::vector<std::string> leaf_names = {},
                                          const ExplainObserver& observer = {}) {
  if (g.size() < 2) throw PreconditionError("explain_dh needs at least two vertices");
  if (leaf_names.empty()) leaf_names = default_leaf_names(g.size());
  if (leaf_names.size() != g.size())
    throw PreconditionError("explain_dh: one leaf name per vertex required");
  {
    std::set<std::string> distinct(leaf_names.begin(), leaf_names.end());
    if (distinct.size() != leaf_names.size())
      throw PreconditionError("explain_dh: leaf names must be distinct");
  }

  const ExtensionSequence seq = extension_sequence(g);
  NetworkDraft d;
  std::vector<Vertex> prefix;
  auto report = [&] {
    if (!observer) return;
    NetworkDraft copy = d;
    std::map<std::string, std::size_t> taxa;
    for (std::size_t i = 0; i < prefix.size(); ++i) taxa[leaf_names[prefix[i]]] = i;
    copy.set_leaf_map(std::move(taxa));
    observer(prefix, LabelledArborealNetwork(copy.build()));
  };
  auto add_leaf = [&](Vertex x) {
    if (d.has_vertex(leaf_names[x]))
      throw PreconditionError("explain_dh: leaf name '" + leaf_names[x] + "' clashes with an internal id");
    d.add_vertex(leaf_names[x]);
    d.set_leaf(leaf_names[x], x);
    prefix.push_back(x);
  };

  const Vertex x1 = seq[0].vertex, x2 = seq[1].vertex;
  d.add_vertex("v0");
  add_leaf(x1);
  add_leaf(x2);
  d.add_arc("v0", leaf_names[x1]);
  d.add_arc("v0", leaf_names[x2]);
  d.set_label("v0", g.adjacent(x1, x2) ? 1 : 0);
  report();

  std::size_t pendant_roots = 0;
  for (std::size_t i = 2; i < seq.size(); ++i) {
    const auto& step = seq[i];
    const std::string& anchor = leaf_names[step.anchor];
    const std::string v = "v" + std::to_string(i - 1);
    d.subdivide(d.parents(anchor).front(), anchor, v);
    add_leaf(step.vertex);
    if (step.kind == ExtensionKind::Pendant) {
      const std::string u = "u" + std::to_string(++pendant_roots);
      d.add_vertex(u);
      d.add_arc(u, v);
      d.add_arc(u, leaf_names[step.vertex]);
      d.set_label(u, 1);
    } else {
      d.add_arc(v, leaf_names[step.vertex]);
      d.set_label(v, step.kind == ExtensionKind::TrueTwin ? 1 : 0);
    }
    report();
  }
  return LabelledArborealNetwork(d.build());
}

// Labelled rooted tree of a cograph: disconnected parts hang below a 0-vertex,
// parts that are disconnected in the complement below a 1-vertex.
inline LabelledArborealNetwork cotree(const UndirectedGraph& g,
                                      std::vector<std::string> leaf_names = {}) {
  if (g.size() < 2) throw PreconditionError("cotree needs at least two vertices");
  if (leaf_names.empty()) leaf_names = default_leaf_names(g.size());
  if (auto w = find_induced_p4(g)) {
    std::string who;
    for (Vertex v : w->vertices) who += " " + std::to_string(v);
    throw NotCograph("graph is not a cograph (induced P4:" + who + ")");
  }
  NetworkDraft d;
  for (Vertex v = 0; v < g.size(); ++v) {
    d.add_vertex(leaf_names[v]);
    d.set_leaf(leaf_names[v], v);
  }
  std::size_t counter = 0;
  std::function<std::string(const std::vector<Vertex>&)> build = [&](const std::vector<Vertex>& s) {
    if (s.size() == 1) return leaf_names[s.front()];
    const auto sub = induced_subgraph(g, s);
    int label = 0;
    auto parts = connected_components(sub.graph);
    if (parts.size() == 1) {
      label = 1;
      parts = connected_components(complement(sub.graph));
    }
    const std::string node = "r" + std::to_string(counter++);
    d.add_vertex(node);
    d.set_label(node, label);
    for (const auto& part : parts) {
      std::vector<Vertex> original;
      for (Vertex i : part) original.push_back(sub.mapping[i]);
      d.add_arc(node, build(original));
    }
    return node;
  };
  std::vector<Vertex> all(g.size());
  for (Vertex v = 0; v < g.size(); ++v) all[v] = v;
  build(all);
  return LabelledArborealNetwork(d.build());
}

// Explains each connected component on its own and merges the pieces, with
// single-vertex components attached as bare leaves.
inline LabelledArborealNetwork explain_by_components(const UndirectedGraph& g,
                                                     std::vector<std::string> leaf_names = {}) {
  if (g.size() < 2) throw PreconditionError("explain_by_components needs at least two vertices");
  if (leaf_names.empty()) leaf_names = default_leaf_names(g.size());
  const auto comps = connected_components(g);
  std::optional<LabelledArborealNetwork> acc;
  std::vector<Vertex> singletons;
  std::vector<Vertex> order;
  for (const auto& comp : comps) {
    if (comp.size() == 1) {
      singletons.push_back(comp.front());
      continue;
    }
    const auto sub = induced_subgraph(g, comp);
    std::vector<std::string> names;
    for (Vertex v : comp) names.push_back(leaf_names[v]);
    auto piece = explain_dh(sub.graph, names);
    acc = acc ? merge_disjoint(*acc, piece) : piece;
    order.insert(order.end(), comp.begin(), comp.end());
  }
  if (!acc) return cotree(g, leaf_names);  // edgeless
  for (Vertex s : singletons) {
    acc = merge_disjoint(*acc, leaf_names[s]);
    order.push_back(s);
  }
  std::map<std::string, std::size_t> taxa;
  for (Vertex v : order) taxa[leaf_names[v]] = v;
  return with_leaf_map(*acc, std::move(taxa));
}

}  // namespace arbnet
