#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "compose.hpp"
#include "draft.hpp"
#include "errors.hpp"
#include "labelled.hpp"
#include "recognition.hpp"

namespace arbnet {

// Labelled network with a single root of outdegree 2 and exactly one cycle, whose
// top is that root. Paths are vertex lists from the root down to the cycle's
// hybrid; first_path starts at the root's smaller child.
class BasicGalledTree {
 public:
  explicit BasicGalledTree(LabelledNetwork ln) : ln_(std::move(ln)) {
    const auto& net = ln_.network();
    const auto roots = net.roots();
    if (roots.size() != 1) throw PreconditionError("basic galled tree needs exactly one root");
    root_ = roots.front();
    if (net.outdegree(root_) != 2) throw PreconditionError("root of a basic galled tree needs outdegree 2");
    const auto hybrids = net.hybrids();
    if (hybrids.size() != 1 || net.indegree(hybrids.front()) != 2)
      throw PreconditionError("basic galled tree needs exactly one vertex of indegree 2");
    hybrid_ = hybrids.front();
    if (net.arc_count() != net.size())
      throw PreconditionError("basic galled tree needs exactly one cycle");

    std::vector<std::vector<Vertex>> paths;
    for (Vertex p : net.parents(hybrid_)) {
      std::vector<Vertex> up{hybrid_, p};
      while (!net.is_root(up.back())) up.push_back(net.parents(up.back()).front());
      std::reverse(up.begin(), up.end());
      paths.push_back(std::move(up));
    }
    // Every vertex other than the hybrid has at most one parent, so both chains end
    // at the single root; they may still merge below it.
    std::set<Vertex> a(paths[0].begin() + 1, paths[0].end() - 1);
    for (std::size_t i = 1; i + 1 < paths[1].size(); ++i)
      if (a.count(paths[1][i])) throw PreconditionError("the cycle of a basic galled tree must start at the root");
    if (paths[0][1] > paths[1][1]) std::swap(paths[0], paths[1]);
    first_ = std::move(paths[0]);
    second_ = std::move(paths[1]);
  }

  const LabelledNetwork& labelled() const noexcept { return ln_; }
  const DirectedNetwork& network() const noexcept { return ln_.network(); }
  Vertex root() const noexcept { return root_; }
  Vertex hybrid() const noexcept { return hybrid_; }
  const std::vector<Vertex>& first_path() const noexcept { return first_; }
  const std::vector<Vertex>& second_path() const noexcept { return second_; }
  // Path lengths in arcs.
  std::size_t first_length() const noexcept { return first_.size() - 1; }
  std::size_t second_length() const noexcept { return second_.size() - 1; }

 private:
  LabelledNetwork ln_;
  Vertex root_ = 0;
  Vertex hybrid_ = 0;
  std::vector<Vertex> first_, second_;
};

inline UndirectedGraph explained_graph(const BasicGalledTree& bgt) {
  return explained_graph(bgt.labelled());
}

// New root labelled 0 over both roots of a two-root network.
inline BasicGalledTree two_root_to_basic_galled(const LabelledArborealNetwork& ln) {
  const auto& net = ln.network();
  const auto roots = net.roots();
  if (roots.size() != 2)
    throw PreconditionError("two_root_to_basic_galled: network has " + std::to_string(roots.size()) +
                            " roots, expected 2");
  NetworkDraft d(ln);
  std::set<std::string> all(net.names().begin(), net.names().end());
  const std::string top = detail::unused_name("top", all);
  d.add_vertex(top);
  d.add_arc(top, net.name(roots[0]));
  d.add_arc(top, net.name(roots[1]));
  d.set_label(top, 0);
  return BasicGalledTree(d.build());
}

inline LabelledArborealNetwork basic_galled_to_two_root(const BasicGalledTree& bgt) {
  if (bgt.labelled().label(bgt.root()) != 0)
    throw PreconditionError("basic_galled_to_two_root: root must be labelled 0");
  NetworkDraft d(bgt.labelled());
  d.remove_vertex(bgt.network().name(bgt.root()));
  return LabelledArborealNetwork(d.build());
}

enum class CycleShape { Weak, WellProportioned, Neither };

inline std::string to_string(CycleShape c) {
  switch (c) {
    case CycleShape::Weak: return "weak";
    case CycleShape::WellProportioned: return "well-proportioned";
    case CycleShape::Neither: return "neither";
  }
  return "?";
}

// Weak is checked first; (2,2) is weak and not well-proportioned.
inline CycleShape classify_cycle(std::size_t len1, std::size_t len2) {
  const std::size_t lo = std::min(len1, len2), hi = std::max(len1, len2);
  if (lo == 1 || (lo == 2 && hi == 2)) return CycleShape::Weak;
  if (hi >= 5 || lo >= 3) return CycleShape::WellProportioned;
  return CycleShape::Neither;
}

inline CycleShape classify_cycle(const BasicGalledTree& bgt) {
  return classify_cycle(bgt.first_length(), bgt.second_length());
}

// Rewires a 1-rooted basic galled tree whose cycle has side lengths 2 and 3 (or 2
// and 4) into one with root label 0 explaining the same graph. Only the label
// pattern root=1, first vertex of each side 0, second vertex of the longer side 1
// (and its third vertex 0 when present) is accepted, with the hybrid of outdegree 1
// and all other cycle vertices of outdegree 2.
// Already 0-rooted input is returned unchanged.
inline BasicGalledTree normalize_basic_to_zero(const BasicGalledTree& bgt) {
  const auto& ln = bgt.labelled();
  const auto& net = bgt.network();
  if (ln.label(bgt.root()) == 0) return bgt;
  if (classify_cycle(bgt) != CycleShape::Neither)
    throw PreconditionError("normalize_basic_to_zero: cycle is " + to_string(classify_cycle(bgt)) +
                            ", expected side lengths 2 and 3 or 2 and 4");
  const auto& shorter = bgt.first_length() == 2 ? bgt.first_path() : bgt.second_path();
  const auto& longer = bgt.first_length() == 2 ? bgt.second_path() : bgt.first_path();
  const Vertex top = bgt.root(), bottom = bgt.hybrid();
  const Vertex s1 = shorter[1], l1 = longer[1], l2 = longer[2];
  const std::optional<Vertex> l3 = longer.size() == 5 ? std::optional<Vertex>(longer[3]) : std::nullopt;

  if (net.outdegree(bottom) != 1) throw PreconditionError("normalize_basic_to_zero: hybrid needs outdegree 1");
  for (Vertex v : {s1, l1, l2})
    if (net.outdegree(v) != 2)
      throw PreconditionError("normalize_basic_to_zero: '" + net.name(v) + "' needs outdegree 2");
  if (l3 && net.outdegree(*l3) != 2)
    throw PreconditionError("normalize_basic_to_zero: '" + net.name(*l3) + "' needs outdegree 2");
  if (ln.label(s1) != 0 || ln.label(l1) != 0 || ln.label(l2) != 1 || (l3 && ln.label(*l3) != 0))
    throw PreconditionError("normalize_basic_to_zero: unsupported label pattern on the cycle");

  auto n = [&](Vertex v) { return net.name(v); };
  NetworkDraft d(ln);
  d.remove_arc(n(s1), n(bottom));
  d.remove_arc(n(top), n(l1));
  d.add_arc(n(top), n(bottom));
  d.add_arc(n(bottom), n(l2));
  d.add_arc(n(s1), n(l1));
  if (!l3) {
    d.remove_arc(n(l2), n(bottom));
  } else {
    d.remove_arc(n(l1), n(l2));
    d.remove_arc(n(l2), n(*l3));
    d.remove_arc(n(*l3), n(bottom));
    d.add_arc(n(l1), n(*l3));
    d.add_arc(n(*l3), n(l2));
    d.set_label(n(*l3), 1);
  }
  d.set_label(n(top), 0);
  d.set_label(n(s1), 1);
  d.set_label(n(bottom), 1);
  return BasicGalledTree(d.build(true));
}

enum class Verdict { Met, NotMet, Unevaluated };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Met: return "met";
    case Verdict::NotMet: return "not-met";
    case Verdict::Unevaluated: return "unevaluated";
  }
  return "?";
}

struct TwoRootReport {
  bool distance_hereditary = false;
  std::optional<Witness> obstruction;  // hole, house, gem or domino
  std::size_t non_cograph_components = 0;
  Verdict necessary = Verdict::NotMet;  // DH with exactly one non-cograph component
  Verdict galled_tree_explainable = Verdict::Unevaluated;  // never decided here
};

// Necessary conditions for a two-root explanation of a non-cograph.
inline TwoRootReport check_two_root_conditions(const UndirectedGraph& g) {
  if (is_cograph(g))
    throw PreconditionError("check_two_root_conditions: graph is a cograph (use a cotree)");
  TwoRootReport r;
  r.obstruction = find_dh_obstruction(g);
  r.distance_hereditary = !r.obstruction;
  for (const auto& comp : connected_components(g))
    if (!is_cograph(induced_subgraph(g, comp).graph)) ++r.non_cograph_components;
  r.necessary = r.distance_hereditary && r.non_cograph_components == 1 ? Verdict::Met : Verdict::NotMet;
  return r;
}

}  // namespace arbnet
