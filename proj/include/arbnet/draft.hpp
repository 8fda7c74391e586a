#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "labelled.hpp"
#include "network.hpp"

namespace arbnet {

// Mutable, unchecked network keyed by vertex name. Constructions edit a draft and
// certify the result through build(). Vertex and arc order is insertion order.
class NetworkDraft {
 public:
  NetworkDraft() = default;

  explicit NetworkDraft(const LabelledNetwork& ln) {
    const auto& net = ln.network();
    NetworkSpec s = net.spec();
    vertices_ = s.vertices;
    arcs_ = s.arcs;
    leaves_ = s.leaves;
    labels_ = ln.labels();
    counter_ = net.size();
  }

  bool has_vertex(const std::string& v) const {
    return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
  }
  bool has_arc(const std::string& p, const std::string& c) const {
    return std::find(arcs_.begin(), arcs_.end(), std::pair{p, c}) != arcs_.end();
  }

  void add_vertex(const std::string& v) {
    if (has_vertex(v)) throw PreconditionError("vertex '" + v + "' already exists");
    vertices_.push_back(v);
  }

  void remove_vertex(const std::string& v) {
    require(v);
    vertices_.erase(std::find(vertices_.begin(), vertices_.end(), v));
    std::erase_if(arcs_, [&](const auto& a) { return a.first == v || a.second == v; });
    labels_.erase(v);
    leaves_.erase(v);
  }

  void add_arc(const std::string& p, const std::string& c) {
    require(p);
    require(c);
    if (has_arc(p, c)) throw PreconditionError("arc " + p + " -> " + c + " already exists");
    arcs_.emplace_back(p, c);
  }

  void remove_arc(const std::string& p, const std::string& c) {
    auto it = std::find(arcs_.begin(), arcs_.end(), std::pair{p, c});
    if (it == arcs_.end()) throw PreconditionError("no arc " + p + " -> " + c);
    arcs_.erase(it);
  }

  std::vector<std::string> children(const std::string& v) const {
    std::vector<std::string> out;
    for (const auto& [p, c] : arcs_)
      if (p == v) out.push_back(c);
    return out;
  }
  std::vector<std::string> parents(const std::string& v) const {
    std::vector<std::string> out;
    for (const auto& [p, c] : arcs_)
      if (c == v) out.push_back(p);
    return out;
  }

  // Replaces (p,c) by p -> w -> c, keeping the position of the old arc.
  void subdivide(const std::string& p, const std::string& c, const std::string& w) {
    auto it = std::find(arcs_.begin(), arcs_.end(), std::pair{p, c});
    if (it == arcs_.end()) throw PreconditionError("subdivide: no arc " + p + " -> " + c);
    add_vertex(w);
    *it = {p, w};
    arcs_.emplace_back(w, c);
  }

  void suppress(const std::string& v) {
    auto in = parents(v), out = children(v);
    if (in.size() != 1 || out.size() != 1)
      throw PreconditionError("suppress: '" + v + "' does not have indegree 1 and outdegree 1");
    remove_vertex(v);
    add_arc(in[0], out[0]);
  }

  void set_label(const std::string& v, int value) {
    require(v);
    labels_[v] = value;
  }
  int label(const std::string& v) const {
    auto it = labels_.find(v);
    if (it == labels_.end()) throw PreconditionError("'" + v + "' carries no label");
    return it->second;
  }
  void set_leaf(const std::string& v, std::size_t taxon) {
    require(v);
    leaves_[v] = taxon;
  }
  const std::map<std::string, std::size_t>& leaf_map() const noexcept { return leaves_; }
  void set_leaf_map(std::map<std::string, std::size_t> m) { leaves_ = std::move(m); }

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }

  // Unused name of the form prefix<k>, k increasing across calls.
  std::string fresh(const std::string& prefix) {
    for (;; ++counter_)
      if (!has_vertex(prefix + std::to_string(counter_))) return prefix + std::to_string(counter_++);
  }

  NetworkSpec spec() const { return NetworkSpec{vertices_, arcs_, leaves_}; }

  // Certifies the draft. With drop_stale_labels, labels left on vertices that no
  // longer have outdegree >= 2 are discarded (restriction of the labelling).
  LabelledNetwork build(bool drop_stale_labels = false) const {
    DirectedNetwork net = validate_network(spec());
    std::map<std::string, int> labels = labels_;
    if (drop_stale_labels)
      std::erase_if(labels, [&](const auto& kv) { return !net.is_branching(net.at(kv.first)); });
    return LabelledNetwork(std::move(net), labels);
  }

 private:
  void require(const std::string& v) const {
    if (!has_vertex(v)) throw PreconditionError("unknown vertex '" + v + "'");
  }

  std::vector<std::string> vertices_;
  std::vector<std::pair<std::string, std::string>> arcs_;
  std::map<std::string, std::size_t> leaves_;
  std::map<std::string, int> labels_;
  std::size_t counter_ = 0;
};

}  // namespace arbnet
