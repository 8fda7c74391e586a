#pragma once

#include <chrono>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "compose.hpp"
#include "construct.hpp"
#include "galled.hpp"
#include "io.hpp"
#include "oracle.hpp"
#include "ptolemy.hpp"

namespace arbnet::oracle {

struct SuiteOptions {
  std::size_t max_n = 6;
  std::size_t relabelings = 1000;   // per network, connectivity suite
  std::size_t random_pairs = 500;   // lcc-root-count
  std::size_t random_two_root = 200;
  std::uint64_t seed = 20240901;
  std::size_t max_failures = 20;    // counterexamples kept in the report
  EnumerationBudget budget{};
};

struct SuiteReport {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  double seconds = 0;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"dh-equivalence", "ptolemaic-methods", "round-trip", "connectivity",
                                              "e-vs-a",         "two-root",          "lcc-root-count", "indcog"};
  return names;
}

namespace detail {

class Recorder {
 public:
  Recorder(SuiteReport& r, std::size_t cap) : r_(r), cap_(cap) {}
  void check(bool ok, const std::function<std::string()>& describe) {
    ++r_.checked;
    if (ok) return;
    r_.passed = false;
    if (r_.failures.size() < cap_) r_.failures.push_back(describe());
  }

 private:
  SuiteReport& r_;
  std::size_t cap_;
};

inline std::string g6(const UndirectedGraph& g) { return io::serialize_graph6(g); }

// Connectivity of the explained graph straight from an lca table, without building the graph.
inline bool explained_connected(const LcaTable& table, const std::vector<int>& label) {
  const std::size_t k = table.leaf_count();
  std::vector<std::size_t> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  std::size_t parts = k;
  for (Vertex a = 0; a < k; ++a)
    for (Vertex b = a + 1; b < k; ++b)
      if (auto u = table(a, b); u && label[*u] == 1) {
        auto ra = find(a), rb = find(b);
        if (ra != rb) {
          parent[ra] = rb;
          --parts;
        }
      }
  return parts == 1;
}

template <class F>
void for_each_dh_graph(std::size_t lo, std::size_t hi, F f) {
  for (std::size_t n = lo; n <= hi; ++n)
    enumerate_graphs(n, [&](const UndirectedGraph& g) {
      if (is_distance_hereditary(g)) f(g);
      return true;
    });
}

}  // namespace detail

inline SuiteReport run_suite(const std::string& name, const SuiteOptions& opt = {}) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw PreconditionError("unknown suite '" + name + "'");
  SuiteReport report;
  report.name = name;
  detail::Recorder rec(report, opt.max_failures);
  std::mt19937_64 rng(opt.seed);
  const auto started = std::chrono::steady_clock::now();
  using detail::g6;

  if (name == "dh-equivalence") {
    for (std::size_t n = 1; n <= opt.max_n; ++n)
      enumerate_graphs(n, [&](const UndirectedGraph& g) {
        std::optional<ExtensionSequence> seq;
        try {
          seq = extension_sequence(g);
        } catch (const NotDistanceHereditary&) {
        }
        const bool dh = is_distance_hereditary(g);
        rec.check(seq.has_value() == dh, [&] {
          return g6(g) + ": elimination " + (seq ? "succeeds" : "fails") + ", forbidden-subgraph test says " +
                 (dh ? "DH" : "not DH");
        });
        if (seq) rec.check(replay(*seq) == g, [&] { return g6(g) + ": replay differs from source"; });
        return true;
      });
  } else if (name == "ptolemaic-methods") {
    for (std::size_t n = 1; n <= opt.max_n; ++n)
      enumerate_graphs(n, [&](const UndirectedGraph& g) {
        if (!is_connected(g)) return true;
        const bool m1 = satisfies_ptolemy_inequality(g), m2 = is_ptolemaic(g);
        rec.check(m1 == m2, [&] { return g6(g) + ": inequality " + std::to_string(m1) + ", chordal+gem-free " +
                                         std::to_string(m2); });
        return true;
      });
  } else if (name == "round-trip") {
    detail::for_each_dh_graph(2, opt.max_n, [&](const UndirectedGraph& g) {
      const auto ln = explain_dh(g);
      const auto& net = ln.network();
      const bool ok = verify_explains(ln, g) && is_binary(net) && is_arboreal(net) && root_hybrid_equality(net);
      rec.check(ok, [&] { return g6(g) + ": explanation fails verification"; });
    });
  } else if (name == "connectivity") {
    detail::for_each_dh_graph(2, opt.max_n, [&](const UndirectedGraph& g) {
      const auto ln = explain_dh(g);
      const auto& net = ln.network();
      const LcaTable table(net);
      const auto branching = net.branching();
      const auto roots = net.roots();
      std::vector<int> label(net.size(), -1);
      std::bernoulli_distribution coin(0.5);
      for (std::size_t r = 0; r < opt.relabelings; ++r) {
        for (Vertex v : branching) label[v] = coin(rng);
        bool all_one = true;
        for (Vertex root : roots) all_one = all_one && label[root] == 1;
        const bool connected = detail::explained_connected(table, label);
        rec.check(connected == all_one, [&] {
          return g6(g) + ": connected=" + std::to_string(connected) + " but roots all 1=" + std::to_string(all_one);
        });
      }
    });
  } else if (name == "e-vs-a") {
    for (std::size_t n = 1; n <= std::min<std::size_t>(opt.max_n, 5); ++n)
      enumerate_graphs(n, [&](const UndirectedGraph& g) {
        if (!is_connected(g) || !is_distance_hereditary(g)) return true;
        // Supergraphs: every subset of the non-edges of g.
        std::vector<Edge> missing = complement(g).edges();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << missing.size()); ++mask) {
          UndirectedGraph gstar = g;
          for (std::size_t i = 0; i < missing.size(); ++i)
            if (mask >> i & 1) gstar.add_edge(missing[i].first, missing[i].second);
          const auto r = check_conditions_E(g, gstar, true);
          rec.check(r.compatible() == r.axioms->all(), [&] {
            return g6(g) + " in " + g6(gstar) + ": E=" + std::to_string(r.compatible()) +
                   " A=" + std::to_string(r.axioms->all());
          });
        }
        return true;
      });
    detail::for_each_dh_graph(2, opt.max_n, [&](const UndirectedGraph& g) {
      if (!is_connected(g)) return;
      const auto ln = explain_dh(g);
      const auto r = check_conditions_E(explained_graph(ln), shared_ancestry_graph(ln.network()));
      rec.check(r.compatible(), [&] { return g6(g) + ": explained and shared-ancestry graphs of its explanation are reported incompatible"; });
    });
  } else if (name == "two-root") {
    auto check = [&](const LabelledArborealNetwork& ln) {
      const auto c = explained_graph(ln);
      const auto bgt = two_root_to_basic_galled(ln);
      const auto back = basic_galled_to_two_root(bgt);
      rec.check(explained_graph(bgt) == c && back == ln, [&] {
        return io::serialize_network(ln) + "two-root transform does not round trip";
      });
      std::size_t non_cograph = 0;
      for (const auto& comp : connected_components(c))
        if (!is_cograph(induced_subgraph(c, comp).graph)) ++non_cograph;
      rec.check(is_distance_hereditary(c) && non_cograph <= 1, [&] {
        return g6(c) + ": explained by a two-root network but not DH with at most one non-cograph component";
      });
    };
    EnumerationBudget budget = opt.budget;
    budget.max_leaves = std::max<std::size_t>(budget.max_leaves, 4);
    for (std::size_t n = 2; n <= std::min<std::size_t>(opt.max_n, 4); ++n) {
      auto res = enumerate_arboreal_networks(n, budget, [&](const DirectedNetwork& net) {
        if (net.roots().size() != 2) return true;
        const auto branching = net.branching();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << branching.size()); ++mask) {
          std::map<std::string, int> labels;
          for (std::size_t i = 0; i < branching.size(); ++i) labels[net.name(branching[i])] = mask >> i & 1;
          check(LabelledArborealNetwork(net, labels));
        }
        return true;
      });
      rec.check(res.status == EnumerationStatus::Complete, [&] { return "enumeration truncated: " + res.reason; });
    }
    std::uniform_int_distribution<std::size_t> leaves(3, 8);
    for (std::size_t i = 0; i < opt.random_two_root; ++i)
      check(random_labelling(random_arboreal_network(leaves(rng), rng, 2), rng));
  } else if (name == "lcc-root-count") {
    std::uniform_int_distribution<std::size_t> size(2, 6);
    for (std::size_t i = 0; i < opt.random_pairs; ++i) {
      auto a = random_labelling(random_arboreal_network(size(rng), rng), rng);
      auto b = random_labelling(random_arboreal_network(size(rng), rng, 0, "b"), rng);

      const auto merged = merge_disjoint(a, b);
      const std::size_t ra = a.network().roots().size(), rb = b.network().roots().size();
      rec.check(merged.network().roots().size() == ra + rb - 1,
                [&] { return "root count " + std::to_string(merged.network().roots().size()) + " after merging " +
                             std::to_string(ra) + " and " + std::to_string(rb); });
      const auto ca = explained_graph(a), cb = explained_graph(b);
      rec.check(explained_graph(merged) == disjoint_union(ca, cb),
                [&] { return g6(ca) + " + " + g6(cb) + ": merged network explains something else"; });
      std::vector<Vertex> first(ca.size()), second(cb.size());
      std::iota(first.begin(), first.end(), 0);
      std::iota(second.begin(), second.end(), ca.size());
      rec.check(explained_graph(restrict_to(merged, first)) == ca &&
                    explained_graph(restrict_to(merged, second)) == cb,
                [&] { return g6(ca) + " + " + g6(cb) + ": restriction does not undo the merge"; });
    }
  } else if (name == "indcog") {
    detail::for_each_dh_graph(2, opt.max_n, [&](const UndirectedGraph& g) {
      const auto ln = explain_dh(g);
      const auto c = explained_graph(ln);
      for (Vertex v = 0; v < ln.network().size(); ++v) {
        const auto below = leaf_taxa_below(ln.network(), v);
        rec.check(is_cograph(induced_subgraph(c, below).graph), [&] {
          return g6(g) + ": leaves below " + ln.network().name(v) + " induce a P4";
        });
      }
    });
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace arbnet::oracle
