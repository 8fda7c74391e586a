// One PASS/FAIL line per acceptance criterion; exit status is the number of failures.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <arbnet/arbnet.hpp>

using namespace arbnet;
using namespace arbnet::families;

namespace {

struct Outcome {
  bool passed = true;
  std::size_t checked = 0;
  std::vector<std::string> failures;

  void check(bool ok, const std::function<std::string()>& what) {
    ++checked;
    if (ok) return;
    passed = false;
    if (failures.size() < 5) failures.push_back(what());
  }
};

int failed = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.passed = false;
    o.failures.push_back(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  char line[256];
  std::snprintf(line, sizeof line, "criterion %2d %s  %s (%zu checks, %.2f s)", id, o.passed ? "PASS" : "FAIL",
                title.c_str(), o.checked, secs);
  std::cout << line << "\n";
  for (const auto& f : o.failures) std::cout << "    " << f << "\n";
  std::cout.flush();
  if (!o.passed) ++failed;
}

Outcome from_suite(const std::string& name, const oracle::SuiteOptions& opt) {
  const auto r = oracle::run_suite(name, opt);
  Outcome o;
  o.passed = r.passed;
  o.checked = r.checked;
  o.failures.assign(r.failures.begin(), r.failures.begin() + std::min<std::size_t>(r.failures.size(), 5));
  return o;
}

template <class F>
void for_each_dh(std::size_t lo, std::size_t hi, F f) {
  for (std::size_t n = lo; n <= hi; ++n)
    oracle::enumerate_graphs(n, [&](const UndirectedGraph& g) {
      if (is_distance_hereditary(g)) f(g);
      return true;
    });
}

// Hangs a random labelled binary tree with k leaves below `parent`.
class Decorator {
 public:
  Decorator(NetworkSpec& spec, std::map<std::string, int>& labels, std::mt19937_64& rng)
      : spec_(spec), labels_(labels), rng_(rng) {}

  void hang(const std::string& parent, std::size_t k) { spec_.arcs.emplace_back(parent, grow(k)); }
  void hang_random(const std::string& parent) { hang(parent, std::uniform_int_distribution<std::size_t>(1, 3)(rng_)); }

 private:
  std::string grow(std::size_t k) {
    if (k == 1) {
      const std::string leaf = "x" + std::to_string(spec_.leaves.size());
      spec_.vertices.push_back(leaf);
      const std::size_t taxon = spec_.leaves.size();
      spec_.leaves[leaf] = taxon;
      return leaf;
    }
    const std::string v = "t" + std::to_string(next_++);
    spec_.vertices.push_back(v);
    labels_[v] = std::bernoulli_distribution(0.5)(rng_);
    const std::size_t left = std::uniform_int_distribution<std::size_t>(1, k - 1)(rng_);
    spec_.arcs.emplace_back(v, grow(left));
    spec_.arcs.emplace_back(v, grow(k - left));
    return v;
  }

  NetworkSpec& spec_;
  std::map<std::string, int>& labels_;
  std::mt19937_64& rng_;
  std::size_t next_ = 0;
};

// Root-labelled-1 basic galled tree with cycle sides 2 and 3 (long = false) or 2 and 4,
// the cycle labels the rewiring expects, and random subtrees hanging off the cycle.
LabelledNetwork decorated_cycle(bool long_side, std::mt19937_64& rng) {
  NetworkSpec spec;
  std::map<std::string, int> labels{{"root", 1}, {"s1", 0}, {"l1", 0}, {"l2", 1}};
  spec.vertices = {"root", "s1", "l1", "l2", "h"};
  spec.arcs = {{"root", "s1"}, {"root", "l1"}, {"s1", "h"}, {"l1", "l2"}};
  if (long_side) {
    spec.vertices.push_back("l3");
    labels["l3"] = 0;
    spec.arcs.emplace_back("l2", "l3");
    spec.arcs.emplace_back("l3", "h");
  } else {
    spec.arcs.emplace_back("l2", "h");
  }
  Decorator deco(spec, labels, rng);
  for (const char* v : {"s1", "l1", "l2"}) deco.hang_random(v);
  if (long_side) deco.hang_random("l3");
  deco.hang(std::string("h"), std::uniform_int_distribution<std::size_t>(1, 3)(rng));
  return LabelledNetwork(validate_network(spec), labels);
}

}  // namespace

int main() {
  oracle::SuiteOptions opt;  // n <= 6, 1000 relabelings, 500 pairs, 200 random two-root networks

  report(1, "extension sequence agrees with forbidden-subgraph DH test, n <= 6",
         [&] { return from_suite("dh-equivalence", opt); });

  report(2, "explain_dh output explains its input and is binary, arboreal, root/hybrid balanced",
         [&] { return from_suite("round-trip", opt); });

  report(3, "brute-force explainability matches DH on <= 4 vertices; gem, house, C5 unexplainable", [&] {
    Outcome o;
    oracle::EnumerationBudget budget;
    budget.max_leaves = 5;
    for (std::size_t n = 2; n <= 4; ++n)
      oracle::enumerate_graphs(n, [&](const UndirectedGraph& g) {
        const bool found = oracle::explainable_bruteforce(g, budget).explainable;
        o.check(found && is_distance_hereditary(g),
                [&] { return io::serialize_graph6(g) + ": explainable=" + std::to_string(found); });
        return true;
      });
    for (const auto& [name, g] : {std::pair{"gem", gem()}, std::pair{"house", house()}, std::pair{"C5", cycle(5)}}) {
      const auto r = oracle::explainable_bruteforce(g, budget);
      o.check(!r.explainable && !is_distance_hereditary(g),
              [&, name = name] { return std::string(name) + " reported explainable"; });
    }
    return o;
  });

  report(4, "Ptolemy inequality agrees with chordal and gem-free, connected n <= 6",
         [&] { return from_suite("ptolemaic-methods", opt); });

  report(5, "shared-ancestry graph is connected, Ptolemaic, contains C, equals C under all-1 labels", [&] {
    Outcome o;
    for_each_dh(2, 6, [&](const UndirectedGraph& g) {
      const auto ln = explain_dh(g);
      const auto a = shared_ancestry_graph(ln.network());
      const auto c = explained_graph(ln);
      o.check(is_connected(a) && is_ptolemaic(a), [&] { return io::serialize_graph6(g) + ": shared-ancestry graph not connected and Ptolemaic"; });
      bool contained = true;
      for (auto [u, v] : c.edges()) contained = contained && a.adjacent(u, v);
      o.check(contained, [&] { return io::serialize_graph6(g) + ": explained graph not inside the shared-ancestry graph"; });
      o.check(explained_graph(with_uniform_labels(ln, 1)) == a,
              [&] { return io::serialize_graph6(g) + ": all-1 labelling does not give the shared-ancestry graph"; });
    });
    return o;
  });

  report(6, "explained graph connected iff every root labelled 1 (1000 labellings per network)",
         [&] { return from_suite("connectivity", opt); });

  report(7, "merge adds roots minus one, restriction undoes merge (500 random pairs)",
         [&] { return from_suite("lcc-root-count", opt); });

  report(8, "leaves below any vertex induce a cograph in the explained graph",
         [&] { return from_suite("indcog", opt); });

  report(9, "compatibility conditions agree with symbolic-map axioms on all nested pairs, n <= 5",
         [&] { return from_suite("e-vs-a", opt); });

  report(10, "two-root <-> basic galled tree transforms are inverse and preserve the explained graph",
         [&] { return from_suite("two-root", opt); });

  report(11, "root-0 normalization preserves the explained graph (2+3 and 2+4 cycles, 25 decorations each)", [&] {
    Outcome o;
    std::mt19937_64 rng(opt.seed);
    for (bool long_side : {false, true})
      for (int i = 0; i < 25; ++i) {
        const BasicGalledTree bgt(decorated_cycle(long_side, rng));
        const auto out = normalize_basic_to_zero(bgt);
        o.check(out.labelled().label(out.root()) == 0 && explained_graph(out) == explained_graph(bgt), [&] {
          return std::string(long_side ? "2+4" : "2+3") + " decoration " + std::to_string(i) + " changed:\n" +
                 io::serialize_network(bgt.labelled());
        });
      }
    return o;
  });

  report(12, "serialize/parse round trips for 1000 networks and 1000 graphs", [&] {
    Outcome o;
    std::mt19937_64 rng(opt.seed + 12);
    std::uniform_int_distribution<std::size_t> leaves(2, 10), size(0, 14);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
      const LabelledNetwork ln = i % 2 ? LabelledNetwork(oracle::random_labelling(
                                              oracle::random_arboreal_network(leaves(rng), rng), rng))
                                       : LabelledNetwork(explain_dh(oracle::random_dh_graph(leaves(rng), rng)));
      const std::string text = io::serialize_network(ln);
      const auto back = io::parse_network(text);
      o.check(back == ln && io::serialize_network(back) == text, [&] { return "network differs:\n" + text; });
    }
    for (int i = 0; i < 1000; ++i) {
      const auto g = oracle::random_graph(size(rng), density(rng), rng);
      const std::string el = io::serialize_edge_list(g), g6 = io::serialize_graph6(g);
      const auto a = io::parse_graph(el), b = io::parse_graph(g6);
      o.check(a == g && b == g && io::serialize_edge_list(a) == el && io::serialize_graph6(b) == g6,
              [&] { return "graph differs: " + g6; });
    }
    return o;
  });

  std::cout << (failed ? std::to_string(failed) + " criteria failed\n" : "all criteria passed\n");
  return failed;
}
