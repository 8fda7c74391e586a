#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "recognition.hpp"

namespace arbnet {

enum class ExtensionKind { Initial, Pendant, FalseTwin, TrueTwin };

inline std::string to_string(ExtensionKind k) {
  switch (k) {
    case ExtensionKind::Initial: return "initial";
    case ExtensionKind::Pendant: return "pendant";
    case ExtensionKind::FalseTwin: return "false-twin";
    case ExtensionKind::TrueTwin: return "true-twin";
  }
  return "?";
}

// One one-vertex extension: `vertex` joins the graph as a pendant vertex of `anchor`
// or as a false / true twin of it. The anchor of the Initial step is ignored.
struct ExtensionStep {
  ExtensionKind kind;
  Vertex vertex;
  Vertex anchor = 0;

  friend bool operator==(const ExtensionStep&, const ExtensionStep&) = default;
};

using ExtensionSequence = std::vector<ExtensionStep>;

class NotDistanceHereditary : public Error {
 public:
  explicit NotDistanceHereditary(std::optional<Witness> witness)
      : Error("graph is not distance-hereditary" +
              (witness ? " (contains an induced " + to_string(witness->kind) + ")" : std::string())),
        witness_(std::move(witness)) {}
  const std::optional<Witness>& witness() const noexcept { return witness_; }

 private:
  std::optional<Witness> witness_;
};

namespace detail {

// Does `v` have the same neighbourhood as `w` among alive vertices, ignoring v and w?
inline bool same_alive_neighbourhood(const UndirectedGraph& g, const std::vector<char>& alive,
                                     Vertex v, Vertex w) {
  for (Vertex z = 0; z < g.size(); ++z) {
    if (!alive[z] || z == v || z == w) continue;
    if (g.adjacent(v, z) != g.adjacent(w, z)) return false;
  }
  return true;
}

inline std::optional<ExtensionStep> removable_step(const UndirectedGraph& g,
                                                   const std::vector<char>& alive, Vertex v) {
  std::size_t alive_degree = 0;
  Vertex neighbour = 0;
  for (Vertex w : g.neighbors(v))
    if (alive[w]) {
      ++alive_degree;
      neighbour = w;
    }
  if (alive_degree == 1) return ExtensionStep{ExtensionKind::Pendant, v, neighbour};
  for (Vertex w = 0; w < g.size(); ++w)
    if (alive[w] && w != v && !g.adjacent(v, w) && same_alive_neighbourhood(g, alive, v, w))
      return ExtensionStep{ExtensionKind::FalseTwin, v, w};
  for (Vertex w = 0; w < g.size(); ++w)
    if (alive[w] && w != v && g.adjacent(v, w) && same_alive_neighbourhood(g, alive, v, w))
      return ExtensionStep{ExtensionKind::TrueTwin, v, w};
  return std::nullopt;
}

}  // namespace detail

// Greedy reverse elimination. While two or more vertices remain, the highest-index
// vertex that is a pendant vertex or a twin of another remaining vertex is removed
// (pendant before false twin before true twin, lowest anchor first). The recorded
// steps, reversed, form the sequence, so low indices tend to come first.
inline ExtensionSequence extension_sequence(const UndirectedGraph& g) {
  if (g.size() == 0) throw PreconditionError("extension_sequence: empty graph");
  std::vector<char> alive(g.size(), 1);
  ExtensionSequence reversed;
  for (std::size_t remaining = g.size(); remaining > 1; --remaining) {
    std::optional<ExtensionStep> step;
    for (Vertex v = g.size(); v-- > 0 && !step;)
      if (alive[v]) step = detail::removable_step(g, alive, v);
    if (!step) throw NotDistanceHereditary(find_dh_obstruction(g));
    alive[step->vertex] = 0;
    reversed.push_back(*step);
  }
  for (Vertex v = 0; v < g.size(); ++v)
    if (alive[v]) reversed.push_back(ExtensionStep{ExtensionKind::Initial, v, v});
  return ExtensionSequence(reversed.rbegin(), reversed.rend());
}

// Applies the sequence. Vertex ids must be a permutation of [0, steps.size()).
inline UndirectedGraph replay(const ExtensionSequence& seq) {
  const std::size_t n = seq.size();
  UndirectedGraph g(n);
  std::vector<char> present(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = seq[i];
    if (s.vertex >= n)
      throw PreconditionError("replay: vertex " + std::to_string(s.vertex) + " out of range");
    if (present[s.vertex])
      throw PreconditionError("replay: vertex " + std::to_string(s.vertex) + " introduced twice");
    if ((i == 0) != (s.kind == ExtensionKind::Initial))
      throw PreconditionError("replay: the Initial step must come first and only first");
    if (s.kind != ExtensionKind::Initial && (s.anchor >= n || !present[s.anchor]))
      throw PreconditionError("replay: unknown anchor " + std::to_string(s.anchor) + " at step " +
                              std::to_string(i));
    switch (s.kind) {
      case ExtensionKind::Initial: break;
      case ExtensionKind::Pendant: g.add_edge(s.vertex, s.anchor); break;
      case ExtensionKind::TrueTwin:
        g.add_edge(s.vertex, s.anchor);
        [[fallthrough]];
      case ExtensionKind::FalseTwin: {
        std::vector<Vertex> nbrs = g.neighbors(s.anchor);
        for (Vertex z : nbrs)
          if (z != s.vertex) g.add_edge(s.vertex, z);
        break;
      }
    }
    present[s.vertex] = 1;
  }
  return g;
}

}  // namespace arbnet
