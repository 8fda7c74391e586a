#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "recognition.hpp"

namespace arbnet {

enum class Symbol : std::uint8_t { Zero, One, Absent };

inline std::string to_string(Symbol s) {
  switch (s) {
    case Symbol::Zero: return "0";
    case Symbol::One: return "1";
    case Symbol::Absent: return "absent";
  }
  return "?";
}

// Total symmetric map from pairs of distinct vertices of [0, n) to {0, 1, absent}.
class SymbolicMap {
 public:
  explicit SymbolicMap(std::size_t n, Symbol fill = Symbol::Absent) : n_(n), values_(n * n, fill) {}

  std::size_t size() const noexcept { return n_; }
  Symbol operator()(Vertex x, Vertex y) const {
    check(x, y);
    return values_[x * n_ + y];
  }
  void set(Vertex x, Vertex y, Symbol s) {
    check(x, y);
    values_[x * n_ + y] = values_[y * n_ + x] = s;
  }

  friend bool operator==(const SymbolicMap&, const SymbolicMap&) = default;

 private:
  void check(Vertex x, Vertex y) const {
    if (x >= n_ || y >= n_ || x == y) throw PreconditionError("symbolic map: bad pair");
  }
  std::size_t n_;
  std::vector<Symbol> values_;
};

inline void require_supergraph(const UndirectedGraph& g, const UndirectedGraph& gstar) {
  if (g.size() != gstar.size())
    throw PreconditionError("graph and supergraph must share the vertex set");
  for (auto [u, v] : g.edges())
    if (!gstar.adjacent(u, v))
      throw PreconditionError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                              "} is missing from the supergraph");
}

// 1 on edges of g, 0 on edges of gstar only, absent elsewhere.
inline SymbolicMap build_symbolic_map(const UndirectedGraph& g, const UndirectedGraph& gstar) {
  require_supergraph(g, gstar);
  SymbolicMap d(g.size());
  for (auto [u, v] : gstar.edges()) d.set(u, v, g.adjacent(u, v) ? Symbol::One : Symbol::Zero);
  return d;
}

// Pairs not mapped to absent.
inline UndirectedGraph support_graph(const SymbolicMap& d) {
  UndirectedGraph g(d.size());
  for (Vertex x = 0; x < d.size(); ++x)
    for (Vertex y = x + 1; y < d.size(); ++y)
      if (d(x, y) != Symbol::Absent) g.add_edge(x, y);
  return g;
}

using Quadruple = std::array<Vertex, 4>;

struct AxiomReport {
  bool a1 = true, a2 = true, a3 = true, a4 = true;
  std::vector<Vertex> a2_witness;  // (x,y,z)
  std::optional<Quadruple> a3_witness, a4_witness;
  bool all() const noexcept { return a1 && a2 && a3 && a4; }
};

namespace detail {

template <class F>
bool for_each_ordered_quadruple(std::size_t n, F f) {
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y) {
      if (y == x) continue;
      for (Vertex z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        for (Vertex u = 0; u < n; ++u) {
          if (u == x || u == y || u == z) continue;
          if (!f(Quadruple{x, y, z, u})) return false;
        }
      }
    }
  return true;
}

}  // namespace detail

// Evaluates the four representability conditions literally.
inline AxiomReport check_axioms_A(const SymbolicMap& d) {
  AxiomReport r;
  const std::size_t n = d.size();
  const auto support = support_graph(d);
  r.a1 = is_connected(support) && is_ptolemaic(support);

  for (Vertex x = 0; x < n && r.a2; ++x)
    for (Vertex y = x + 1; y < n && r.a2; ++y)
      for (Vertex z = y + 1; z < n && r.a2; ++z) {
        Symbol a = d(x, y), b = d(x, z), c = d(y, z);
        if (a != b && a != c && b != c && a != Symbol::Absent && b != Symbol::Absent &&
            c != Symbol::Absent) {
          r.a2 = false;
          r.a2_witness = {x, y, z};
        }
      }

  detail::for_each_ordered_quadruple(n, [&](const Quadruple& q) {
    auto [x, y, z, u] = q;
    const Symbol p = d(x, y);
    const Symbol s = d(y, u);
    if (p == d(y, z) && p == d(z, u) && s == d(u, x) && s == d(x, z) && p != s &&
        p != Symbol::Absent && s != Symbol::Absent) {
      r.a3 = false;
      r.a3_witness = q;
      return false;
    }
    return true;
  });

  detail::for_each_ordered_quadruple(n, [&](const Quadruple& q) {
    auto [x, y, z, u] = q;
    if (d(z, u) != Symbol::Absent) return true;
    for (Symbol s : {d(x, y), d(x, z), d(x, u), d(y, z), d(y, u)})
      if (s == Symbol::Absent) return true;
    if (d(x, z) != d(y, z) || d(x, u) != d(y, u)) {
      r.a4 = false;
      r.a4_witness = q;
      return false;
    }
    return true;
  });
  return r;
}

struct AsymmetricDiamond {
  Quadruple vertices;  // (x,y,z,u)
  // Edges of g among {x,u}, {y,u}, {x,y}; the eight combinations are the eight types.
  bool xu = false, yu = false, xy = false;
  // 1..8, as 1 + 4*xu + 2*yu + xy.
  int type() const noexcept { return 1 + 4 * xu + 2 * yu + xy; }
};

// Ordered (x,y,z,u) where gstar has every pair but {z,u}, g has {x,z} but not {y,z}.
inline std::optional<AsymmetricDiamond> find_asymmetric_diamond(const UndirectedGraph& g,
                                                                const UndirectedGraph& gstar) {
  require_supergraph(g, gstar);
  std::optional<AsymmetricDiamond> found;
  detail::for_each_ordered_quadruple(g.size(), [&](const Quadruple& q) {
    auto [x, y, z, u] = q;
    if (gstar.adjacent(z, u) || !gstar.adjacent(x, y) || !gstar.adjacent(x, z) ||
        !gstar.adjacent(x, u) || !gstar.adjacent(y, z) || !gstar.adjacent(y, u))
      return true;
    if (!g.adjacent(x, z) || g.adjacent(y, z)) return true;
    found = AsymmetricDiamond{q, g.adjacent(x, u), g.adjacent(y, u), g.adjacent(x, y)};
    return false;
  });
  return found;
}

// Four vertices forming an induced P4 in g (in path order) and a clique in gstar.
inline std::optional<Quadruple> find_p4_in_clique(const UndirectedGraph& g, const UndirectedGraph& gstar) {
  require_supergraph(g, gstar);
  const std::size_t n = g.size();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      if (!gstar.adjacent(a, b)) continue;
      for (Vertex c = b + 1; c < n; ++c) {
        if (!gstar.adjacent(a, c) || !gstar.adjacent(b, c)) continue;
        for (Vertex e = c + 1; e < n; ++e) {
          if (!gstar.adjacent(a, e) || !gstar.adjacent(b, e) || !gstar.adjacent(c, e)) continue;
          const Vertex four[] = {a, b, c, e};
          const auto sub = induced_subgraph(g, std::span<const Vertex>(four, 4));
          if (auto p = find_induced_p4(sub.graph)) {
            Quadruple q;
            for (std::size_t i = 0; i < 4; ++i) q[i] = sub.mapping[p->vertices[i]];
            return q;
          }
        }
      }
    }
  return std::nullopt;
}

struct CompatibilityReport {
  bool e1 = false, e2 = false, e3 = false;
  std::optional<Witness> e1_witness;  // obstruction in gstar when it is not Ptolemaic
  std::optional<Quadruple> e2_witness;
  std::optional<AsymmetricDiamond> e3_witness;
  std::optional<AxiomReport> axioms;
  bool compatible() const noexcept { return e1 && e2 && e3; }
};

// Whether some labelled arboreal network explains g with shared-ancestry graph gstar.
// g must be connected and distance-hereditary.
inline CompatibilityReport check_conditions_E(const UndirectedGraph& g, const UndirectedGraph& gstar,
                                              bool with_axioms = false) {
  require_supergraph(g, gstar);
  if (!is_connected(g)) throw PreconditionError("check_conditions_E: graph must be connected");
  if (!is_distance_hereditary(g))
    throw PreconditionError("check_conditions_E: graph must be distance-hereditary");
  CompatibilityReport r;
  r.e1_witness = find_ptolemaic_obstruction(gstar);
  r.e1 = is_connected(gstar) && !r.e1_witness;
  r.e2_witness = find_p4_in_clique(g, gstar);
  r.e2 = !r.e2_witness;
  r.e3_witness = find_asymmetric_diamond(g, gstar);
  r.e3 = !r.e3_witness;
  if (with_axioms) r.axioms = check_axioms_A(build_symbolic_map(g, gstar));
  return r;
}

}  // namespace arbnet
