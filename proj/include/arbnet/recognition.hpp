#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "families.hpp"
#include "graph.hpp"

namespace arbnet {

// Forbidden induced subgraphs reported as witnesses. `Cycle` is a chordless cycle
// of size 4 or more, `Hole` one of size 5 or more.
enum class ForbiddenKind { P4, Cycle, Hole, House, Gem, Domino };

inline std::string to_string(ForbiddenKind k) {
  switch (k) {
    case ForbiddenKind::P4: return "P4";
    case ForbiddenKind::Cycle: return "cycle";
    case ForbiddenKind::Hole: return "hole";
    case ForbiddenKind::House: return "house";
    case ForbiddenKind::Gem: return "gem";
    case ForbiddenKind::Domino: return "domino";
  }
  return "?";
}

// vertices[i] plays the role of vertex i of the kind's template (see families.hpp);
// P4 and cycles are listed in path / cycle order.
struct Witness {
  ForbiddenKind kind;
  std::vector<Vertex> vertices;

  friend bool operator==(const Witness&, const Witness&) = default;
};

inline UndirectedGraph witness_template(const Witness& w) {
  switch (w.kind) {
    case ForbiddenKind::P4: return families::path(4);
    case ForbiddenKind::Cycle:
    case ForbiddenKind::Hole: return families::cycle(w.vertices.size());
    case ForbiddenKind::House: return families::house();
    case ForbiddenKind::Gem: return families::gem();
    case ForbiddenKind::Domino: return families::domino();
  }
  return {};
}

// True iff extracting w.vertices from g reproduces the claimed subgraph exactly.
inline bool witness_replays(const UndirectedGraph& g, const Witness& w) {
  if (w.kind == ForbiddenKind::Cycle && w.vertices.size() < 4) return false;
  if (w.kind == ForbiddenKind::Hole && w.vertices.size() < 5) return false;
  auto t = witness_template(w);
  if (t.size() != w.vertices.size()) return false;
  for (Vertex v : w.vertices)
    if (v >= g.size()) return false;
  std::vector<Vertex> sorted = w.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  return induced_subgraph(g, w.vertices).graph == t;
}

// Induced P4 a-b-c-d, found through its middle edge b-c.
inline std::optional<Witness> find_induced_p4(const UndirectedGraph& g) {
  for (auto [b, c] : g.edges()) {
    for (Vertex a : g.neighbors(b)) {
      if (a == c || g.adjacent(a, c)) continue;
      for (Vertex d : g.neighbors(c)) {
        if (d == b || d == a || g.adjacent(d, b) || g.adjacent(a, d)) continue;
        return Witness{ForbiddenKind::P4, {a, b, c, d}};
      }
    }
  }
  return std::nullopt;
}

inline bool is_cograph(const UndirectedGraph& g) { return !find_induced_p4(g); }

namespace detail {

// Extends the induced path `path` (all vertices > path[0]) looking for a chordless
// cycle through path[0] with at least min_size vertices.
inline bool extend_induced_path(const UndirectedGraph& g, std::vector<Vertex>& path,
                                std::vector<char>& on_path, std::size_t min_size) {
  const Vertex start = path.front();
  const Vertex last = path.back();
  for (Vertex v : g.neighbors(last)) {
    if (v <= start || on_path[v]) continue;
    bool chord = false;
    for (std::size_t i = 1; i + 1 < path.size() && !chord; ++i) chord = g.adjacent(v, path[i]);
    if (chord) continue;
    bool closes = path.size() >= 2 && g.adjacent(v, start);
    if (closes) {
      if (path.size() + 1 >= min_size) {
        path.push_back(v);
        return true;
      }
      continue;
    }
    path.push_back(v);
    on_path[v] = 1;
    if (extend_induced_path(g, path, on_path, min_size)) return true;
    on_path[v] = 0;
    path.pop_back();
  }
  return false;
}

}  // namespace detail

// Chordless cycle with at least min_size (>= 4) vertices, in cycle order.
inline std::optional<Witness> find_induced_cycle(const UndirectedGraph& g, std::size_t min_size) {
  min_size = std::max<std::size_t>(min_size, 4);
  std::vector<char> on_path(g.size(), 0);
  for (Vertex s = 0; s < g.size(); ++s) {
    std::vector<Vertex> path{s};
    on_path[s] = 1;
    bool found = detail::extend_induced_path(g, path, on_path, min_size);
    std::fill(on_path.begin(), on_path.end(), 0);
    if (found)
      return Witness{path.size() >= 5 ? ForbiddenKind::Hole : ForbiddenKind::Cycle, path};
  }
  return std::nullopt;
}

inline bool is_chordal(const UndirectedGraph& g) { return !find_induced_cycle(g, 4); }
inline bool is_hole_free(const UndirectedGraph& g) { return !find_induced_cycle(g, 5); }

namespace detail {

// Exhaustive search for an induced copy of `pattern`; subsets are pre-pruned by
// edge count and degree sequence before permutations are tried.
inline std::optional<std::vector<Vertex>> find_induced_copy(const UndirectedGraph& g,
                                                            const UndirectedGraph& pattern) {
  const std::size_t k = pattern.size();
  if (g.size() < k) return std::nullopt;
  std::vector<std::size_t> pattern_degrees(k);
  for (Vertex v = 0; v < k; ++v) pattern_degrees[v] = pattern.degree(v);
  std::vector<std::size_t> sorted_pattern = pattern_degrees;
  std::sort(sorted_pattern.begin(), sorted_pattern.end());

  std::vector<Vertex> subset(k);
  std::iota(subset.begin(), subset.end(), 0);
  std::vector<std::size_t> deg(k), sorted_deg(k), perm(k);
  while (true) {
    std::size_t edges = 0;
    for (std::size_t i = 0; i < k; ++i) {
      deg[i] = 0;
      for (std::size_t j = 0; j < k; ++j)
        if (i != j && g.adjacent(subset[i], subset[j])) ++deg[i];
      edges += deg[i];
    }
    sorted_deg = deg;
    std::sort(sorted_deg.begin(), sorted_deg.end());
    if (edges / 2 == pattern.edge_count() && sorted_deg == sorted_pattern) {
      std::iota(perm.begin(), perm.end(), 0);
      do {
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i) {
          if (deg[perm[i]] != pattern_degrees[i]) ok = false;
          for (std::size_t j = i + 1; j < k && ok; ++j)
            ok = g.adjacent(subset[perm[i]], subset[perm[j]]) == pattern.adjacent(i, j);
        }
        if (ok) {
          std::vector<Vertex> mapped(k);
          for (std::size_t i = 0; i < k; ++i) mapped[i] = subset[perm[i]];
          return mapped;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    // next k-combination of [0, n)
    std::size_t i = k;
    while (i > 0 && subset[i - 1] == g.size() - k + i - 1) --i;
    if (i == 0) break;
    ++subset[i - 1];
    for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
  return std::nullopt;
}

}  // namespace detail

inline std::optional<Witness> find_gem(const UndirectedGraph& g) {
  if (auto m = detail::find_induced_copy(g, families::gem())) return Witness{ForbiddenKind::Gem, *m};
  return std::nullopt;
}

inline std::optional<Witness> find_house_gem_domino(const UndirectedGraph& g) {
  if (auto m = detail::find_induced_copy(g, families::house()))
    return Witness{ForbiddenKind::House, *m};
  if (auto w = find_gem(g)) return w;
  if (auto m = detail::find_induced_copy(g, families::domino()))
    return Witness{ForbiddenKind::Domino, *m};
  return std::nullopt;
}

// Hole first, then house / gem / domino.
inline std::optional<Witness> find_dh_obstruction(const UndirectedGraph& g) {
  if (auto w = find_induced_cycle(g, 5)) return w;
  return find_house_gem_domino(g);
}

inline bool is_distance_hereditary(const UndirectedGraph& g) { return !find_dh_obstruction(g); }

// Ptolemy's inequality over every 4-set of pairwise connected vertices. Returns a
// violating quadruple (x,y,z,t) with d(x,y)d(z,t) + d(x,t)d(y,z) < d(x,z)d(y,t).
inline std::optional<std::array<Vertex, 4>> find_ptolemy_violation(const UndirectedGraph& g) {
  const auto d = distance_matrix(g);
  const std::size_t n = g.size();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      if (!d.reachable(a, b)) continue;
      for (Vertex c = b + 1; c < n; ++c) {
        if (!d.reachable(a, c)) continue;
        for (Vertex e = c + 1; e < n; ++e) {
          if (!d.reachable(a, e)) continue;
          // The three ways of splitting {a,b,c,e} into two pairs.
          const std::size_t ab_ce = d.raw(a, b) * d.raw(c, e);
          const std::size_t ac_be = d.raw(a, c) * d.raw(b, e);
          const std::size_t ae_bc = d.raw(a, e) * d.raw(b, c);
          if (ab_ce + ae_bc < ac_be) return std::array<Vertex, 4>{a, b, c, e};
          if (ac_be + ae_bc < ab_ce) return std::array<Vertex, 4>{a, c, b, e};
          if (ab_ce + ac_be < ae_bc) return std::array<Vertex, 4>{a, b, e, c};
        }
      }
    }
  return std::nullopt;
}

inline bool satisfies_ptolemy_inequality(const UndirectedGraph& g) {
  return !find_ptolemy_violation(g);
}

// Chordal and gem-free.
inline std::optional<Witness> find_ptolemaic_obstruction(const UndirectedGraph& g) {
  if (auto w = find_induced_cycle(g, 4)) return w;
  return find_gem(g);
}

inline bool is_ptolemaic(const UndirectedGraph& g) { return !find_ptolemaic_obstruction(g); }

struct GraphClassReport {
  bool cograph = false;
  bool chordal = false;
  bool hole_free = false;
  bool ptolemaic = false;
  bool distance_hereditary = false;
  // One witness per false flag.
  std::optional<Witness> cograph_witness;
  std::optional<Witness> chordal_witness;
  std::optional<Witness> hole_witness;
  std::optional<Witness> ptolemaic_witness;
  std::optional<Witness> dh_witness;
};

inline GraphClassReport classify(const UndirectedGraph& g) {
  GraphClassReport r;
  r.cograph_witness = find_induced_p4(g);
  r.chordal_witness = find_induced_cycle(g, 4);
  r.hole_witness = find_induced_cycle(g, 5);
  r.ptolemaic_witness = r.chordal_witness ? r.chordal_witness : find_gem(g);
  r.dh_witness = r.hole_witness ? r.hole_witness : find_house_gem_domino(g);
  r.cograph = !r.cograph_witness;
  r.chordal = !r.chordal_witness;
  r.hole_free = !r.hole_witness;
  r.ptolemaic = !r.ptolemaic_witness;
  r.distance_hereditary = !r.dh_witness;
  return r;
}

}  // namespace arbnet
